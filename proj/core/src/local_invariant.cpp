#include "symlen/local_invariant.hpp"

#include "symlen/artin_schreier.hpp"
#include "symlen/errors.hpp"

namespace symlen {

LocalInvariant operator+(LocalInvariant a, LocalInvariant b) {
  if (a.p != b.p) throw PreconditionError("adding invariants of different characteristics");
  return {(a.value + b.value) % a.p, a.p};
}

std::string LocalInvariant::to_string() const {
  if (value == 0) return "0";
  return std::to_string(value) + "/" + std::to_string(p);
}

GaloisField::Elem residue_at_zero(const FieldElement& a) { return laurent_expand(a, -1).coefficient(-1); }

LocalInvariant invariant(const SymbolAlgebra& a, ResidueMode mode) {
  const FieldPtr& field = a.field();
  if (!field->is_local()) {
    throw UnsupportedFieldError("local invariants need a Laurent-series field, not " + field->descriptor());
  }
  const unsigned p = field->characteristic();
  const FieldElement alpha = mode == ResidueMode::kReduced ? wp_canonical(a.alpha()) : a.alpha();
  const FieldElement dlog = a.beta().derivative() / a.beta();
  if (alpha.is_zero() || dlog.is_zero()) return {0, p};
  return {field->base().trace(residue_at_zero(alpha * dlog)), p};
}

LocalInvariant total_invariant(const TensorProduct& t, ResidueMode mode) {
  LocalInvariant sum{0, t.p()};
  for (const auto& a : t.factors()) sum = sum + invariant(a, mode);
  if (!t.field()->is_local()) {
    throw UnsupportedFieldError("local invariants need a Laurent-series field, not " + t.field()->descriptor());
  }
  return sum;
}

}  // namespace symlen
