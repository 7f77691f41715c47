#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "symlen/galois_field.hpp"
#include "symlen/poly.hpp"

namespace symlen {

enum class FieldKind {
  kFinite,             // F_q
  kRationalFunctions,  // F_q(t)
  kLaurentLocal,       // F_q((t)), elements held as exact rational functions
};

/// A supported characteristic-p base field together with the hypotheses it
/// declares for the symbol-length machinery.
class Field {
 public:
  static std::shared_ptr<const Field> finite(GaloisField base, std::string generator_name = "z");
  static std::shared_ptr<const Field> rational_functions(GaloisField base, std::string variable_name = "t",
                                                         std::string generator_name = "z");
  static std::shared_ptr<const Field> laurent_local(GaloisField base, std::string variable_name = "t",
                                                    std::string generator_name = "z");

  FieldKind kind() const { return kind_; }
  const GaloisField& base() const { return base_; }
  unsigned characteristic() const { return base_.characteristic(); }
  const std::string& generator_name() const { return generator_name_; }
  const std::string& variable_name() const { return variable_name_; }
  bool is_finite() const { return kind_ == FieldKind::kFinite; }
  bool is_local() const { return kind_ == FieldKind::kLaurentLocal; }
  bool has_variable() const { return kind_ != FieldKind::kFinite; }

  /// Canonical descriptor text, e.g. "GF(2^2; z^2+z+1)((t))".
  std::string descriptor() const;

  /// Declared maximal dimension d of an anisotropic degree-p form:
  /// p for F_q (Chevalley-Warning), p^2 for F_q((t)); none for F_q(t).
  std::optional<unsigned> degree_bound() const;
  /// Declared u-invariant, characteristic 2 only: 2 for F_q, 4 for F_q((t)).
  std::optional<unsigned> u_invariant() const;
  /// Declared I_q^3 F = 0 (characteristic 2 finite and local fields).
  bool declares_iq3_zero() const;

  bool operator==(const Field& other) const;

 private:
  Field(FieldKind kind, GaloisField base, std::string generator_name, std::string variable_name);

  FieldKind kind_;
  GaloisField base_;
  std::string generator_name_;
  std::string variable_name_;
};

using FieldPtr = std::shared_ptr<const Field>;

/// Exact element of a Field: a reduced fraction num/den of polynomials in t
/// over F_q with monic denominator (constant for F_q). The stored form is
/// canonical, so equality is bitwise equality of the representation.
class FieldElement {
 public:
  using Elem = GaloisField::Elem;

  FieldElement() = default;

  static FieldElement zero(FieldPtr field);
  static FieldElement one(FieldPtr field);
  static FieldElement from_int(FieldPtr field, long long value);
  static FieldElement from_base(FieldPtr field, Elem value);
  static FieldElement from_poly(FieldPtr field, poly::Poly numerator);
  static FieldElement from_fraction(FieldPtr field, poly::Poly numerator, poly::Poly denominator);
  /// The variable t; UnsupportedFieldError over F_q.
  static FieldElement variable(FieldPtr field);
  /// The class of z in F_q.
  static FieldElement generator(FieldPtr field);

  const FieldPtr& field() const { return field_; }
  bool valid() const { return field_ != nullptr; }
  const poly::Poly& numerator() const { return num_; }
  poly::Poly denominator() const { return den_.empty() ? poly::Poly{1} : den_; }
  bool is_polynomial() const { return den_.empty(); }

  bool is_zero() const { return num_.empty(); }
  bool is_one() const { return den_.empty() && poly::is_one(num_); }
  /// The value as an element of F_q when it is a constant.
  std::optional<Elem> as_constant() const;

  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& b);
  FieldElement& operator-=(const FieldElement& b);
  FieldElement& operator*=(const FieldElement& b);
  FieldElement& operator/=(const FieldElement& b);
  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }

  /// Throws PreconditionError for zero.
  FieldElement inverse() const;
  FieldElement pow(long long e) const;
  /// v^p.
  FieldElement frobenius() const;
  /// The Artin-Schreier operator v^p - v.
  FieldElement wp() const;
  /// The element r with r^p = *this, when one exists in the field.
  std::optional<FieldElement> pth_root() const;
  /// d/dt; zero over F_q.
  FieldElement derivative() const;
  /// t-adic valuation; throws PreconditionError for zero.
  int valuation() const;

  std::string to_string() const;
  /// True when to_string() needs no parentheses as a factor.
  bool is_atomic() const;

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  /// Fixed total order on representations (denominator, then numerator).
  friend std::strong_ordering operator<=>(const FieldElement& a, const FieldElement& b);

  std::size_t hash() const;

 private:
  FieldElement(FieldPtr field, poly::Poly num, poly::Poly den);
  void check_same_field(const FieldElement& b) const;
  void reduce();
  const GaloisField& gf() const { return field_->base(); }

  FieldPtr field_;
  poly::Poly num_;
  poly::Poly den_;  // empty means 1
};

/// Laurent expansion at t = 0: coeffs[i] multiplies t^(valuation + i).
struct LaurentExpansion {
  int valuation = 0;
  std::vector<GaloisField::Elem> coeffs;  // empty for zero

  GaloisField::Elem coefficient(int exponent) const;
};

/// Expansion of a rational function up to and including t^max_exponent.
LaurentExpansion laurent_expand(const FieldElement& a, int max_exponent);

std::ostream& operator<<(std::ostream& os, const FieldElement& a);

}  // namespace symlen

template <>
struct std::hash<symlen::FieldElement> {
  std::size_t operator()(const symlen::FieldElement& a) const { return a.hash(); }
};
