#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "symlen/galois_field.hpp"

/// Dense univariate polynomials over a GaloisField. A polynomial is a plain
/// coefficient vector, lowest degree first, with no trailing zeros; the zero
/// polynomial is empty. All functions take the coefficient field explicitly.
namespace symlen::poly {

using Elem = GaloisField::Elem;
using Poly = std::vector<Elem>;

inline void normalize(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}
inline int degree(const Poly& a) { return static_cast<int>(a.size()) - 1; }
inline bool is_zero(const Poly& a) { return a.empty(); }
inline bool is_one(const Poly& a) { return a.size() == 1 && a[0] == 1; }
inline Elem lead(const Poly& a) { return a.empty() ? 0 : a.back(); }
inline Poly constant(Elem c) { return c == 0 ? Poly{} : Poly{c}; }

/// Index of the lowest nonzero coefficient; 0 for the zero polynomial.
std::size_t valuation(const Poly& a);

Poly add(const GaloisField& f, const Poly& a, const Poly& b);
Poly sub(const GaloisField& f, const Poly& a, const Poly& b);
Poly neg(const GaloisField& f, const Poly& a);
Poly mul(const GaloisField& f, const Poly& a, const Poly& b);
Poly scale(const GaloisField& f, const Poly& a, Elem c);
Poly pow(const GaloisField& f, const Poly& a, unsigned e);
/// Multiply by t^k.
Poly shift(const Poly& a, std::size_t k);
/// Divide by t^k; the low k coefficients must be zero.
Poly unshift(const Poly& a, std::size_t k);
Poly truncate(Poly a, std::size_t n);

/// Quotient and remainder; throws PreconditionError when b is zero.
std::pair<Poly, Poly> divmod(const GaloisField& f, const Poly& a, const Poly& b);
Poly exact_div(const GaloisField& f, const Poly& a, const Poly& b);
Poly monic(const GaloisField& f, const Poly& a);
/// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const GaloisField& f, const Poly& a, const Poly& b);
Poly derivative(const GaloisField& f, const Poly& a);
Elem evaluate(const GaloisField& f, const Poly& a, Elem x);

/// Power series inverse of a modulo t^n; requires a(0) != 0.
Poly series_inverse(const GaloisField& f, const Poly& a, std::size_t n);

/// The polynomial b with b^p = a, when it exists.
std::optional<Poly> pth_root(const GaloisField& f, const Poly& a);

/// Total order: by degree, then coefficients from the top down.
int compare(const Poly& a, const Poly& b);

std::string to_string(const GaloisField& f, const Poly& a, const std::string& generator_name,
                      const std::string& variable_name);
/// True when to_string(a) needs no parentheses as a factor.
bool is_atomic(const GaloisField& f, const Poly& a);

}  // namespace symlen::poly
