#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "symlen/field.hpp"
#include "symlen/linkage.hpp"
#include "symlen/local_invariant.hpp"
#include "symlen/polynomial.hpp"
#include "symlen/search.hpp"
#include "symlen/symbol.hpp"

namespace symlen {

using Vector = std::vector<FieldElement>;

/// [a_1,b_1] + ... + [a_r,b_r] + <c_1,...,c_t> over a field of characteristic
/// 2, in the variables (u_1, v_1, ..., u_r, v_r, w_1, ..., w_t).
class QuadraticForm {
 public:
  using Pair = std::pair<FieldElement, FieldElement>;

  /// Throws UnsupportedFieldError outside characteristic 2.
  QuadraticForm(FieldPtr field, std::vector<Pair> pairs = {}, std::vector<FieldElement> diagonal = {});

  /// The hyperbolic plane [0,1].
  static QuadraticForm hyperbolic(FieldPtr field);

  const FieldPtr& field() const { return field_; }
  const std::vector<Pair>& pairs() const { return pairs_; }
  const std::vector<FieldElement>& diagonal() const { return diagonal_; }
  std::size_t dimension() const { return 2 * pairs_.size() + diagonal_.size(); }
  bool nonsingular() const { return diagonal_.empty(); }

  /// PreconditionError on a length mismatch.
  FieldElement evaluate(std::span<const FieldElement> x) const;
  /// b(x, y) = q(x + y) - q(x) - q(y).
  FieldElement polar(std::span<const FieldElement> x, std::span<const FieldElement> y) const;

  HomogeneousForm as_homogeneous() const;

  /// Orthogonal sum; pairs first, then the diagonal parts.
  friend QuadraticForm operator+(const QuadraticForm& a, const QuadraticForm& b);
  /// c * q, with every block rescaled by scale_pair.
  QuadraticForm scaled(const FieldElement& c) const;

  /// "[a,b]+[c,d]+<e>", "0" for the zero-dimensional form.
  std::string to_string() const;
  friend bool operator==(const QuadraticForm& a, const QuadraticForm& b) {
    return *a.field_ == *b.field_ && a.pairs_ == b.pairs_ && a.diagonal_ == b.diagonal_;
  }

 private:
  FieldPtr field_;
  std::vector<Pair> pairs_;
  std::vector<FieldElement> diagonal_;
};

/// c[a,b] is isometric to [a/c, bc] through (u, v) -> (cu, v).
QuadraticForm::Pair scale_pair(const FieldElement& c, const QuadraticForm::Pair& ab);

/// The restriction of q to the span of `vectors` (given in q's coordinates),
/// rewritten on a symplectic basis of the polar form. The basis is stored in
/// `basis` as rows e_1, f_1, e_2, f_2, ... with b(e_i, f_i) = 1, so the result is
/// [q(e_1), q(f_1)] + ... PreconditionError when the span is singular.
QuadraticForm restrict_to_span(const QuadraticForm& q, std::vector<Vector> vectors, std::vector<Vector>* basis = nullptr);

/// Exact isotropy verdict where one is available without search:
/// F_q((t)) nonsingular forms of dimension <= 4 (by the norm groups of the
/// block extensions) and of dimension >= 6 (declared u = 4). nullopt elsewhere.
std::optional<bool> decide_isotropy(const QuadraticForm& q);

/// A nontrivial zero, or nullopt when the form is anisotropic. Exhaustive over
/// F_q; over F_q((t)) the verdict of decide_isotropy is exact and a witness is
/// then searched; elsewhere the search is bounded. Throws BudgetExhausted when
/// no verdict or no witness is reached. Elements are rational functions, so an
/// isotropic local form such as [t^2,t] whose zeros all need an infinite power
/// series has no witness at any budget.
std::optional<Vector> is_isotropic(const QuadraticForm& q, const SearchBudget& budget = {});

struct WittDecomposition {
  QuadraticForm kernel;
  std::size_t witt_index = 0;
  /// Rows in the original coordinates: the kernel's symplectic basis, then a
  /// hyperbolic pair (x_i, y_i) with q(x_i) = q(y_i) = 0, b(x_i, y_i) = 1 per plane.
  std::vector<Vector> change_of_basis;
  /// False when a search ran out of budget; the kernel may then be isotropic.
  bool complete = true;
};

/// q = kernel + H + ... + H by repeatedly splitting off hyperbolic planes.
/// PreconditionError for singular forms.
WittDecomposition witt_decompose(const QuadraticForm& q, const SearchBudget& budget = {});

/// Checks the recorded basis change exactly: the rows form a basis, and q on
/// them has the values and polar products of kernel + m H.
bool verify_witt(const QuadraticForm& q, const WittDecomposition& w);

/// Class of an element in F / wp(F).
class ArfClass {
 public:
  explicit ArfClass(FieldElement representative);

  /// The canonical coset representative over F_q and F_q((t)); the raw sum over F_q(t).
  const FieldElement& representative() const { return rep_; }
  bool is_trivial() const;

  friend ArfClass operator+(const ArfClass& a, const ArfClass& b);
  friend bool operator==(const ArfClass& a, const ArfClass& b);
  std::string to_string() const { return rep_.to_string(); }

 private:
  FieldElement rep_;
};

/// Sum of a_i b_i modulo wp(F). PreconditionError for singular forms.
ArfClass arf(const QuadraticForm& q);

/// An isometric form whose blocks all have b_i != 0: [a,0] becomes [0,a]
/// by swapping u and v, and [0,0] becomes [0,1] through u -> u + v.
QuadraticForm normalize_blocks(const QuadraticForm& q);

/// E(q) = [a_1 b_1, b_r b_1) (x) ... (x) [a_{r-1} b_{r-1}, b_r b_{r-1}) after
/// normalize_blocks. PreconditionError unless q is nonsingular of dimension
/// >= 4 with trivial Arf invariant.
TensorProduct clifford(const QuadraticForm& q);

/// An anisotropic form of dimension u(F) with trivial Arf invariant: q itself
/// when its Arf invariant is trivial, otherwise the anisotropic part of
/// q + [delta, 1]. HypothesisError when the field does not declare u >= 4 and
/// I_q^3 = 0, or when q + [delta, 1] has Witt index 2.
QuadraticForm trivialize_arf(const QuadraticForm& q, const SearchBudget& budget = {});

/// [a_1 + ... + c_l, 1] + b_1[a_1, 1] + ... + d_l[c_l, 1], the quadratic form
/// of the characteristic-2 common-slot argument. Dividing the first
/// coordinate of each scaled block by its second slot turns a zero into a zero
/// of difference_form(a, b).
QuadraticForm char2_linkage_form(const TensorProduct& a, const TensorProduct& b);

/// common_slot for quaternion products, searching char2_linkage_form.
CommonSlot char2_common_slot(const TensorProduct& a, const TensorProduct& b, const SearchBudget& budget = {});

struct SharpnessWitness {
  QuadraticForm form;
  TensorProduct clifford;
  LocalInvariant invariant;
};

/// An anisotropic trivial-Arf form of dimension 2n and E of it, with E shown
/// nonsplit by the local invariant, so its symbol length is exactly n - 1.
/// Supported for n = 2 over F_q((t)), q even; UnsupportedFieldError beyond.
SharpnessWitness sharpness_witness(const FieldPtr& field, unsigned n, const SearchBudget& budget = {});

struct FormCensus {
  unsigned u = 0;      // largest anisotropic nonsingular dimension found
  unsigned u_hat = 0;  // largest anisotropic dimension found
  std::size_t forms_checked = 0;
};

/// Exhaustive census over F_q of every form [a_1,b_1] + ... + <c_1, ...> with
/// coefficients in F_q and dimension <= max_dim, isotropy by full enumeration.
FormCensus exhaustive_u_invariants(const FieldPtr& field, unsigned max_dim);

}  // namespace symlen
