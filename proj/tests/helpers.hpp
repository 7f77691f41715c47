#pragma once

#include <random>

#include "symlen/field.hpp"

namespace symlen::testing {

inline FieldPtr gf2() { return Field::finite(GaloisField::prime(2)); }
inline FieldPtr gf3() { return Field::finite(GaloisField::prime(3)); }
inline FieldPtr gf4() { return Field::finite(GaloisField(2, {1, 1, 1})); }
inline FieldPtr gf2_local() { return Field::laurent_local(GaloisField::prime(2)); }
inline FieldPtr gf3_local() { return Field::laurent_local(GaloisField::prime(3)); }
inline FieldPtr gf4_local() { return Field::laurent_local(GaloisField(2, {1, 1, 1})); }
inline FieldPtr gf2_rational() { return Field::rational_functions(GaloisField::prime(2)); }
inline FieldPtr gf3_rational() { return Field::rational_functions(GaloisField::prime(3)); }

inline FieldElement t_of(const FieldPtr& f) { return FieldElement::variable(f); }
inline FieldElement c(const FieldPtr& f, long long v) { return FieldElement::from_int(f, v); }

/// Random element: constant over F_q, otherwise a small Laurent polynomial
/// with an occasional (1 + t) denominator.
inline FieldElement random_element(const FieldPtr& f, std::mt19937_64& rng, int max_degree = 2) {
  const auto q = f->base().order();
  std::uniform_int_distribution<std::uint32_t> coeff(0, q - 1);
  if (f->is_finite()) return FieldElement::from_base(f, coeff(rng));
  poly::Poly num;
  for (int i = 0; i <= max_degree; ++i) num.push_back(coeff(rng));
  poly::normalize(num);
  std::uniform_int_distribution<int> shape(0, 5);
  const int s = shape(rng);
  poly::Poly den{1};
  if (s == 0) den = {0, 1};
  if (s == 1) den = {1, 1};
  return FieldElement::from_fraction(f, num, den);
}

inline FieldElement random_nonzero(const FieldPtr& f, std::mt19937_64& rng, int max_degree = 2) {
  for (;;) {
    FieldElement a = random_element(f, rng, max_degree);
    if (!a.is_zero()) return a;
  }
}

}  // namespace symlen::testing
