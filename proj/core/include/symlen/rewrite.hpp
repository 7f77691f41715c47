#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "symlen/artin_schreier.hpp"
#include "symlen/local_invariant.hpp"
#include "symlen/symbol.hpp"

namespace symlen {

enum class Rule {
  kScaleSecond,        // [a,b) -> [a, N(f) b)
  kAddBetaToAlpha,     // [a,b) -> [a+b, b)
  kAddWpToAlpha,       // [a,b) -> [a + v^p - v, b)
  kAddPthPowerToBeta,  // [a,b) -> [a', b + v^p)
  kSplitRecognize,     // split [a,b) -> [target, 1), or dropped
  kTransferAlpha,      // [a,b) (x) [c,d) -> [a+c, b) (x) [c, d/b)
  kMergeSlots,         // [a,b) (x) [c,d) -> [a+c, b+d) (x) C
  kMergeSameAlpha,     // [a,b) (x) [a,d) -> [a, bd)
  kMergeSameBeta,      // [a,b) (x) [c,b) -> [a+c, b)
  kReorder,            // permutation of the factors; certified on the moved ones
};

std::string_view rule_name(Rule r);
/// Inverse of rule_name; nullopt for unknown names.
std::optional<Rule> rule_from_name(std::string_view name);
/// Number of factors a rule consumes (0 for kReorder, which takes them all).
std::size_t rule_arity(Rule r);

/// Generators of the outputs inside the algebra of the consumed factors:
/// one pair per output factor, then one per dropped split factor. Pairs of
/// kSplitRecognize are replaced by a zero divisor of the consumed factor.
struct Certificate {
  HostPtr host;
  std::vector<SymbolCertificate> pairs;
  std::optional<AlgebraElement> zero_divisor;
};

/// Every pair verifies, pairs mutually commute, the pair count equals the
/// number of host factors (so together they generate the host), and every
/// dropped pair presents a split algebra ([0,b) or [a,1)).
PairCheck verify_certificate(const Certificate& cert, std::size_t num_outputs);

struct RuleApplication {
  std::vector<SymbolAlgebra> outputs;
  std::vector<SymbolAlgebra> dropped;
  std::optional<Certificate> certificate;
};

// Single rules on presentations, each returning certified outputs.
RuleApplication scale_second_slot(const SymbolAlgebra& a, const ExtElement& f);
RuleApplication add_beta_to_alpha(const SymbolAlgebra& a);
RuleApplication add_wp_to_alpha(const SymbolAlgebra& a, const FieldElement& v);
RuleApplication add_pth_power_to_beta(const SymbolAlgebra& a, const FieldElement& v);
RuleApplication transfer_alpha(const SymbolAlgebra& a, const SymbolAlgebra& b);
RuleApplication merge_slots(const SymbolAlgebra& a, const SymbolAlgebra& b);
RuleApplication merge_same_alpha(const SymbolAlgebra& a, const SymbolAlgebra& b);
RuleApplication merge_same_beta(const SymbolAlgebra& a, const SymbolAlgebra& b);
/// Replaces a split algebra by [target, 1), or drops it when target is
/// absent. Splitness is certified by `witness` (a zero divisor in the
/// single-factor host), else by the local invariant, else by
/// find_zero_divisor; PreconditionError when none of these succeeds.
RuleApplication split_recognize(const SymbolAlgebra& a, const std::optional<FieldElement>& target,
                                const std::optional<AlgebraElement>& witness = std::nullopt);

/// Rule-specific parameters of a step. `factors` are positions in the
/// presentation before the step.
struct StepParams {
  std::vector<std::size_t> factors;
  std::vector<FieldElement> f;  // coefficients of f in F[x] (kScaleSecond)
  std::optional<FieldElement> v;
  std::vector<std::size_t> permutation;  // new position i holds old factor permutation[i]
  std::optional<FieldElement> target;
};

struct RewriteStep {
  Rule rule;
  StepParams params;
  TensorProduct before;
  TensorProduct after;
  std::optional<Certificate> certificate;
  std::optional<LocalInvariant> invariant_before;
  std::optional<LocalInvariant> invariant_after;
};

using RewriteTrace = std::vector<RewriteStep>;

/// Applies one rule inside a presentation. Consumed factors are replaced in
/// place by the outputs; a second consumed factor with no output left is
/// removed. Over F_q((t)) the total invariants before and after are
/// recorded.
RewriteStep apply_step(const TensorProduct& t, Rule rule, const StepParams& params,
                       const std::optional<AlgebraElement>& witness = std::nullopt);

/// Re-applies a recorded step to its `before` and checks the result matches
/// `after`. The recorded zero divisor, if any, is reused as the witness.
bool replay_step(const RewriteStep& step);

/// Each step's before equals the previous step's after (the first equals `start`).
bool chain_consistent(const TensorProduct& start, const RewriteTrace& trace);

/// Re-expresses a trace on T as a trace on prefix (x) T (x) suffix.
RewriteTrace lift_trace(const RewriteTrace& trace, const TensorProduct& prefix, const TensorProduct& suffix);

/// Verifies a step's certificate. With `full_host`, the certified pairs are
/// embedded into the algebra of the whole `before` presentation alongside the
/// untouched generators, and the complete generating set is checked there.
PairCheck verify_step(const RewriteStep& step, bool full_host = false);

/// Concatenation of two presentations over the same field.
TensorProduct concat(const TensorProduct& a, const TensorProduct& b);

}  // namespace symlen
