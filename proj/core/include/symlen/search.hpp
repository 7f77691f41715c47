#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "symlen/field.hpp"
#include "symlen/polynomial.hpp"

namespace symlen {

/// Limits for isotropic-vector searches over infinite fields. After clearing
/// denominators, every coordinate is a polynomial in t over F_q of degree at
/// most D; D runs from 0 up to max_degree. max_table caps the number of
/// half-vectors tabulated at one degree.
struct SearchBudget {
  unsigned max_degree = 6;
  std::size_t max_table = std::size_t{1} << 18;
};

/// A nontrivial zero of a homogeneous form.
///
/// Over F_q the enumeration is exhaustive over projective points in
/// lexicographic order of the raw field codes, so nullopt proves
/// anisotropy. Over F_q(t) and F_q((t)) the variables are split into two
/// halves along the form's block structure and the search meets in the
/// middle: values of the left half are tabulated, the right half is enumerated
/// in rank order and the first match wins. Throws BudgetExhausted when no zero
/// exists within the budget.
std::optional<std::vector<FieldElement>> find_isotropic(const HomogeneousForm& form, const SearchBudget& budget = {});

/// Number of candidate vectors of a search: q^n over F_q, otherwise the sum
/// over the two halves of q^{(D+1) n_half} at the given degree.
double search_space_size(const HomogeneousForm& form, unsigned degree);

}  // namespace symlen
