#pragma once

#include <cstdint>
#include <random>

#include "symlen/field.hpp"
#include "symlen/symbol.hpp"

namespace symlen {

/// Seeded draws used by the audits and the command line. Draws reduce raw
/// engine output directly, so a seed gives the same values on every platform.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  /// Uniform in [0, n).
  std::uint64_t below(std::uint64_t n) { return rng_() % n; }
  bool coin() { return below(2) == 1; }

  /// A constant over F_q; elsewhere a polynomial of degree <= max_degree in
  /// t, divided by t or by t + 1 one time in six each.
  FieldElement element(const FieldPtr& f, int max_degree = 2);
  FieldElement nonzero(const FieldPtr& f, int max_degree = 2);
  SymbolAlgebra symbol(const FieldPtr& f, int max_degree = 2);
  TensorProduct product(const FieldPtr& f, std::size_t k, int max_degree = 2);

 private:
  std::mt19937_64 rng_;
};

}  // namespace symlen
