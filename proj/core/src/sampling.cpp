#include "symlen/sampling.hpp"

namespace symlen {

FieldElement Sampler::element(const FieldPtr& f, int max_degree) {
  const std::uint32_t q = f->base().order();
  if (f->is_finite()) return FieldElement::from_base(f, static_cast<GaloisField::Elem>(below(q)));
  poly::Poly num;
  for (int i = 0; i <= max_degree; ++i) num.push_back(static_cast<GaloisField::Elem>(below(q)));
  poly::normalize(num);
  poly::Poly den{1};
  switch (below(6)) {
    case 0:
      den = {0, 1};
      break;
    case 1:
      den = {1, 1};
      break;
    default:
      break;
  }
  return FieldElement::from_fraction(f, std::move(num), std::move(den));
}

FieldElement Sampler::nonzero(const FieldPtr& f, int max_degree) {
  for (;;) {
    FieldElement a = element(f, max_degree);
    if (!a.is_zero()) return a;
  }
}

SymbolAlgebra Sampler::symbol(const FieldPtr& f, int max_degree) {
  FieldElement alpha = element(f, max_degree);
  return SymbolAlgebra(std::move(alpha), nonzero(f, max_degree));
}

TensorProduct Sampler::product(const FieldPtr& f, std::size_t k, int max_degree) {
  std::vector<SymbolAlgebra> factors;
  for (std::size_t i = 0; i < k; ++i) factors.push_back(symbol(f, max_degree));
  return TensorProduct(f, std::move(factors));
}

}  // namespace symlen
