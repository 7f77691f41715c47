#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "symlen/artin_schreier.hpp"
#include "symlen/field.hpp"
#include "symlen/linalg.hpp"

namespace symlen {

/// [alpha, beta)_{p,F} = F<x, y : x^p - x = alpha, y^p = beta, yx - xy = y>.
class SymbolAlgebra {
 public:
  /// Throws PreconditionError when beta is zero.
  SymbolAlgebra(FieldElement alpha, FieldElement beta);

  const FieldElement& alpha() const { return alpha_; }
  const FieldElement& beta() const { return beta_; }
  const FieldPtr& field() const { return alpha_.field(); }
  unsigned p() const { return field()->characteristic(); }

  /// F[x], the Artin-Schreier extension of the first slot.
  ArtinSchreierExtension first_slot_extension() const { return ArtinSchreierExtension(alpha_); }

  std::string to_string() const;
  friend bool operator==(const SymbolAlgebra& a, const SymbolAlgebra& b) = default;

 private:
  FieldElement alpha_;
  FieldElement beta_;
};

/// Ordered list of symbol algebras over one field. The empty product stands
/// for the split class.
class TensorProduct {
 public:
  explicit TensorProduct(FieldPtr field, std::vector<SymbolAlgebra> factors = {});
  /// Throws PreconditionError when `factors` is empty.
  explicit TensorProduct(std::vector<SymbolAlgebra> factors);

  const FieldPtr& field() const { return field_; }
  unsigned p() const { return field_->characteristic(); }
  std::size_t size() const { return factors_.size(); }
  bool empty() const { return factors_.empty(); }
  const std::vector<SymbolAlgebra>& factors() const { return factors_; }
  const SymbolAlgebra& operator[](std::size_t i) const { return factors_.at(i); }

  /// The factors at the given positions, in that order.
  TensorProduct select(std::span<const std::size_t> positions) const;

  /// "[a,b)*[c,d)"; "1" for the empty product.
  std::string to_string() const;
  friend bool operator==(const TensorProduct& a, const TensorProduct& b) {
    return *a.field_ == *b.field_ && a.factors_ == b.factors_;
  }

 private:
  FieldPtr field_;
  std::vector<SymbolAlgebra> factors_;
};

class AlgebraElement;

/// Structure constants of a tensor product of symbol algebras on the monomial
/// basis x_1^{e_1} y_1^{f_1} (x) ... (x) x_k^{e_k} y_k^{f_k}. A monomial is
/// indexed by sum_i (e_i p + f_i) p^{2(k-1-i)}, so index order is
/// lexicographic order on (e_1, f_1, ..., e_k, f_k).
class AlgebraHost : public std::enable_shared_from_this<AlgebraHost> {
 public:
  static constexpr std::uint32_t kMaxDimension = 6561;

  /// Throws PreconditionError beyond kMaxDimension or for an empty product.
  static std::shared_ptr<const AlgebraHost> create(TensorProduct algebra);

  const TensorProduct& algebra() const { return algebra_; }
  const FieldPtr& field() const { return algebra_.field(); }
  unsigned p() const { return p_; }
  std::size_t num_factors() const { return algebra_.size(); }
  std::uint32_t dimension() const { return dim_; }

  std::uint32_t index(std::span<const unsigned> exponents) const;
  /// (e_1, f_1, ..., e_k, f_k) of a monomial index.
  std::vector<unsigned> exponents(std::uint32_t index) const;

  AlgebraElement zero() const;
  AlgebraElement one() const;
  AlgebraElement scalar(const FieldElement& c) const;
  AlgebraElement monomial(std::uint32_t index, const FieldElement& c) const;
  /// x_i and y_i of factor i.
  AlgebraElement x(std::size_t factor) const;
  AlgebraElement y(std::size_t factor) const;
  /// f(x_i) for f in the first-slot extension of factor i.
  AlgebraElement from_ext(std::size_t factor, const ExtElement& f) const;

  /// Product of two basis monomials, accumulated into `out` scaled by c.
  void multiply_monomials(std::uint32_t a, std::uint32_t b, const FieldElement& c, SparseVector& out) const;

 private:
  explicit AlgebraHost(TensorProduct algebra);

  // Per factor: x^{e1} y^{f1} * x^{e2} y^{f2} = (sum_c coeff[c] x^c) y^{(f1+f2) mod p}.
  struct LocalProduct {
    std::vector<std::pair<unsigned, FieldElement>> x_terms;  // (c, coeff), coeff includes the beta wrap
    unsigned f;
  };

  TensorProduct algebra_;
  unsigned p_;
  std::uint32_t dim_;
  std::vector<std::vector<LocalProduct>> tables_;  // [factor][(e1 f1 e2 f2) packed]
};

using HostPtr = std::shared_ptr<const AlgebraHost>;

/// Element of a host algebra as a sparse coefficient vector on the monomial basis.
class AlgebraElement {
 public:
  AlgebraElement(HostPtr host, SparseVector coeffs);

  const HostPtr& host() const { return host_; }
  const SparseVector& coeffs() const { return coeffs_; }
  FieldElement coefficient(std::uint32_t index) const;
  bool is_zero() const { return coeffs_.empty(); }
  /// The value c when the element equals c * 1.
  std::optional<FieldElement> as_scalar() const;

  AlgebraElement& operator+=(const AlgebraElement& b);
  AlgebraElement& operator-=(const AlgebraElement& b);
  AlgebraElement operator-() const;
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  /// Throws PreconditionError on a host mismatch.
  friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);
  friend AlgebraElement operator*(const FieldElement& c, const AlgebraElement& a);
  AlgebraElement pow(unsigned e) const;

  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b);

  /// Terms like "(t+1)*x1*y2^2 + 3", or "0".
  std::string to_string() const;

 private:
  HostPtr host_;
  SparseVector coeffs_;
};

AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement commutator(const AlgebraElement& a, const AlgebraElement& b);
bool commute(const AlgebraElement& a, const AlgebraElement& b);

/// Image of a under the inclusion that sends factor i of a's host to factor
/// factor_map[i] of `target`. The factor presentations must agree.
AlgebraElement embed(const AlgebraElement& a, const HostPtr& target, std::span<const std::size_t> factor_map);

/// Generators X, Y claimed to present [claimed_alpha, claimed_beta) inside
/// their host.
struct SymbolCertificate {
  AlgebraElement X;
  AlgebraElement Y;
  FieldElement claimed_alpha;
  FieldElement claimed_beta;
};

struct PairCheck {
  bool ok = false;
  std::string diagnostic;  // empty when ok
  explicit operator bool() const { return ok; }
};

/// X^p - X = alpha, Y^p = beta, YX - XY = Y, and the unital subalgebra
/// generated by X and Y has dimension p^2.
PairCheck verify_symbol_pair(const SymbolCertificate& cert);

/// Dimension of the unital subalgebra generated by `gens`, by span closure.
std::size_t subalgebra_dimension(std::span<const AlgebraElement> gens);
std::size_t subalgebra_dimension(const HostPtr& host, std::span<const AlgebraElement> gens);

/// Basis of {a : a g = g a for all g in gens}.
std::vector<AlgebraElement> centralizer(const HostPtr& host, std::span<const AlgebraElement> gens);
/// Basis of the center of the host algebra.
std::vector<AlgebraElement> center(const HostPtr& host);

/// A linear condition map(X) = rhs on an unknown X of a host.
struct LinearCondition {
  std::function<AlgebraElement(const AlgebraElement&)> map;
  AlgebraElement rhs;
};

/// All X in the host satisfying every condition; nullopt when inconsistent.
std::optional<LinearSolution> solve_linear_conditions(const HostPtr& host, std::span<const LinearCondition> conditions);

/// Two-sided inverse via the linear system a b = 1; nullopt for a zero divisor.
std::optional<AlgebraElement> inverse(const AlgebraElement& a);
/// Left multiplication by a is singular.
bool is_zero_divisor(const AlgebraElement& a);

/// A nonzero zero divisor of [alpha, beta), searched through the norm
/// equation N(f) beta = c^p with witness f y - c (or f itself when c = 0).
/// Over F_q the search always succeeds. Elsewhere the coefficients of f are
/// polynomials in t of degree <= max_degree, and nullopt means the budget ran
/// out; it never proves the algebra nonsplit.
std::optional<AlgebraElement> find_zero_divisor(const SymbolAlgebra& a, unsigned max_degree = 2);

}  // namespace symlen
