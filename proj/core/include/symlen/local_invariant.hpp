#pragma once

#include <string>

#include "symlen/field.hpp"
#include "symlen/symbol.hpp"

namespace symlen {

/// Brauer class of a symbol algebra over F_q((t)) as an element of
/// (1/p)Z/Z, held as its numerator in [0, p).
struct LocalInvariant {
  unsigned value = 0;
  unsigned p = 2;

  bool is_zero() const { return value == 0; }
  friend LocalInvariant operator+(LocalInvariant a, LocalInvariant b);
  friend bool operator==(const LocalInvariant& a, const LocalInvariant& b) = default;
  /// "0" or "k/p".
  std::string to_string() const;
};

enum class ResidueMode {
  kDirect,   // residue of alpha * dbeta / beta as given
  kReduced,  // alpha first replaced by its reduced wp-coset representative
};

/// Res_{t=0}(a) of a rational function, as an element of F_q.
GaloisField::Elem residue_at_zero(const FieldElement& a);

/// Tr_{F_q/F_p} Res_{t=0}(alpha dbeta / beta). UnsupportedFieldError unless
/// the field is F_q((t)).
LocalInvariant invariant(const SymbolAlgebra& a, ResidueMode mode = ResidueMode::kDirect);

/// Sum of the factor invariants; 0 for the empty product.
LocalInvariant total_invariant(const TensorProduct& t, ResidueMode mode = ResidueMode::kDirect);

}  // namespace symlen
