#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "symlen/field.hpp"
#include "symlen/polynomial.hpp"

namespace symlen {

/// v^p - v.
FieldElement wp(const FieldElement& v);

/// All v in F_q with v^p - v = c (zero or p of them), in encoding order.
/// UnsupportedFieldError unless the field is finite.
std::vector<FieldElement> wp_solve(const FieldElement& c);

/// Some v in the field with v^p - v = c. Exact over F_q and F_q(t); over
/// F_q((t)) only rational preimages are found (use in_wp_image to decide).
std::optional<FieldElement> wp_preimage(const FieldElement& c);

/// Decides c in wp(F). F_q: exhaustive; F_q((t)): valuation criterion on the
/// reduced principal part; F_q(t): exact rational solve.
bool in_wp_image(const FieldElement& c);

/// Canonical representative of c + wp(F).
/// F_q: smallest element of {c - wp(v)} in encoding order.
/// F_q((t)): principal part with pole orders prime to p plus a canonical
/// constant; the positive-valuation part always lies in wp(F) and is dropped.
/// UnsupportedFieldError over F_q(t), where classes are compared through
/// wp_equivalent instead.
FieldElement wp_canonical(const FieldElement& c);

/// a - b in wp(F).
bool wp_equivalent(const FieldElement& a, const FieldElement& b);

class ExtElement;

/// K = F[x : x^p - x = alpha]; a field exactly when alpha is not in wp(F).
class ArtinSchreierExtension {
 public:
  explicit ArtinSchreierExtension(FieldElement alpha);

  const FieldElement& alpha() const { return alpha_; }
  const FieldPtr& field() const { return alpha_.field(); }
  unsigned degree() const { return alpha_.field()->characteristic(); }
  bool is_field() const;

  /// coeffs[i] multiplies x^i; shorter vectors are zero-padded to length p.
  ExtElement element(std::vector<FieldElement> coeffs) const;
  ExtElement scalar(const FieldElement& c) const;
  ExtElement x() const;

  friend bool operator==(const ArtinSchreierExtension& a, const ArtinSchreierExtension& b) {
    return a.alpha_ == b.alpha_;
  }

 private:
  FieldElement alpha_;
};

/// f = c_0 + c_1 x + ... + c_{p-1} x^{p-1} in K.
class ExtElement {
 public:
  ExtElement(ArtinSchreierExtension ext, std::vector<FieldElement> coeffs);

  const ArtinSchreierExtension& extension() const { return ext_; }
  const std::vector<FieldElement>& coeffs() const { return coeffs_; }
  const FieldElement& coefficient(unsigned i) const { return coeffs_.at(i); }
  bool is_zero() const;
  /// The constant when f lies in F.
  std::optional<FieldElement> as_scalar() const;

  ExtElement& operator+=(const ExtElement& b);
  ExtElement& operator-=(const ExtElement& b);
  friend ExtElement operator+(ExtElement a, const ExtElement& b) { return a += b; }
  friend ExtElement operator-(ExtElement a, const ExtElement& b) { return a -= b; }
  friend ExtElement operator*(const ExtElement& a, const ExtElement& b);
  friend ExtElement operator*(const FieldElement& c, const ExtElement& a);

  /// f(x + i), the image under the i-th power of the generator of Gal(K/F).
  ExtElement conjugate(unsigned i) const;

  friend bool operator==(const ExtElement& a, const ExtElement& b) {
    return a.ext_ == b.ext_ && a.coeffs_ == b.coeffs_;
  }

  std::string to_string() const;

 private:
  ArtinSchreierExtension ext_;
  std::vector<FieldElement> coeffs_;
};

/// N_{K/F}(f) as the product of the p conjugates f(x+i), i in F_p.
FieldElement as_norm(const ExtElement& f);

/// The degree-p norm form of K in the p coordinates (c_{p-1}, ..., c_1, c_0)
/// of f = sum c_i x^i. For p = 2 this is [alpha, 1] = alpha*u^2 + u*v + v^2
/// in the basis (x, 1).
HomogeneousForm norm_form(const ArtinSchreierExtension& ext);

/// Coordinates of f in the variable order of norm_form.
std::vector<FieldElement> norm_coordinates(const ExtElement& f);
/// Inverse of norm_coordinates.
ExtElement from_norm_coordinates(const ArtinSchreierExtension& ext, std::span<const FieldElement> coords);

}  // namespace symlen
