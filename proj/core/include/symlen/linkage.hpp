#pragma once

#include <optional>
#include <string>
#include <vector>

#include "symlen/polynomial.hpp"
#include "symlen/rewrite.hpp"
#include "symlen/search.hpp"
#include "symlen/symbol.hpp"

namespace symlen {

/// A point (u, v, f_1, ..., f_k) of F + F + F[x_1] + ... + F[x_k].
struct SlotVector {
  FieldElement u;
  FieldElement v;
  std::vector<ExtElement> f;

  /// The zero vector for a presentation.
  static SlotVector zero(const TensorProduct& t);
  bool is_zero() const;
};

/// phi(u, v, f) = u^p (a_1 + ... + a_k) - u^{p-1} v + v^p + sum_i N(f_i) b_i
/// as a degree-p form in 2 + kp variables: u, v, then the norm coordinates
/// (c_{p-1}, ..., c_0) of each f_i.
class PhiForm {
 public:
  explicit PhiForm(TensorProduct host);

  const TensorProduct& host() const { return host_; }
  const HomogeneousForm& form() const { return form_; }
  /// Variable names u, v, f1_1, f1_0, ...
  const std::vector<std::string>& names() const { return names_; }

  FieldElement evaluate(const SlotVector& w) const;
  std::vector<FieldElement> coordinates(const SlotVector& w) const;
  SlotVector slot_vector(std::span<const FieldElement> coords) const;

 private:
  TensorProduct host_;
  HomogeneousForm form_;
  std::vector<std::string> names_;
};

PhiForm build_phi(const TensorProduct& t);

/// The defining expression of phi computed through as_norm.
FieldElement phi_value(const TensorProduct& t, const SlotVector& w);

/// phi_A(u, v, f) - phi_B(u, 0, f') in 2 + (k + l) p variables: u, v, the
/// coordinates of f, then those of f'.
HomogeneousForm difference_form(const TensorProduct& a, const TensorProduct& b);

/// A presentation rewritten by a certified trace.
struct Rewritten {
  TensorProduct result;
  RewriteTrace trace;
};

/// Makes the first slot of the first factor phi(1, v/u, f/u). Requires u != 0.
Rewritten apply_case_a(const TensorProduct& t, const SlotVector& w);

/// With u = 0: moves the factors with f_i != 0 to the front (stable order),
/// then makes the second slot of the first factor sum_{i<=t} N(f_i) b_i + v^p.
/// PreconditionError names the offending partial sum when one vanishes.
Rewritten apply_case_b(const TensorProduct& t, const SlotVector& w);

/// A presentation whose first factor is split, with a zero divisor of that
/// factor in its own algebra.
struct SplitFirst {
  TensorProduct result;
  RewriteTrace trace;
  AlgebraElement witness;
};

/// Rewrites t so its first factor is a matrix algebra, given a nontrivial
/// zero of phi. PreconditionError when w is zero or phi(w) != 0.
SplitFirst split_first_factor(const TensorProduct& t, const SlotVector& w);

enum class Side { kLeft, kRight };
std::string_view side_name(Side s);

struct CommonSlot {
  Side side;
  Rewritten a;
  Rewritten b;
};

/// Rewrites A and B so their first factors share the first slot (Left) or
/// the second slot (Right). A zero of the difference form with u != 0 gives
/// Left; with u = 0 the second slots are matched; a vanishing phi or psi
/// splits a first factor, which is then presented as [other first slot, 1).
/// Throws BudgetExhausted from the search.
CommonSlot common_slot(const TensorProduct& a, const TensorProduct& b, const SearchBudget& budget = {});

/// The cases that need no search: equal first or second slots, or a first
/// factor whose splitness is visible (finite field, zero local invariant,
/// alpha in wp(F), beta a p-th power).
std::optional<CommonSlot> common_slot_shortcut(const TensorProduct& a, const TensorProduct& b);

/// common_slot continued from a given nontrivial zero of difference_form(a, b).
CommonSlot common_slot_at(const TensorProduct& a, const TensorProduct& b, std::span<const FieldElement> zero);

struct Reduction {
  TensorProduct result;
  RewriteTrace trace;
  /// Length the field's declared hypotheses guarantee.
  std::size_t bound = 0;
  /// Set when a search ran out of budget; result and trace are then partial.
  std::optional<std::string> budget_exhausted;
};

/// ceil((d-1)/p) - 1 from the declared degree bound, or u/2 - 1 in
/// characteristic 2 when that is smaller. HypothesisError when the field
/// declares neither.
std::size_t symbol_length_bound(const Field& field);

/// Shortens t by linking its first factor with the rest and merging the
/// common slot, dropping split factors, until the length is at most the
/// declared bound.
Reduction reduce_symbol_length(const TensorProduct& t, const SearchBudget& budget = {});

}  // namespace symlen
