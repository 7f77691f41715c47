#include "symlen/rule_audit.hpp"

#include <algorithm>
#include <numeric>

#include "symlen/artin_schreier.hpp"
#include "symlen/errors.hpp"
#include "symlen/sampling.hpp"

namespace symlen {

namespace {

constexpr std::size_t kContextDimension = 81;
constexpr std::size_t kKeptFailures = 5;

constexpr Rule kAudited[] = {Rule::kScaleSecond,   Rule::kAddBetaToAlpha, Rule::kAddWpToAlpha,
                             Rule::kAddPthPowerToBeta, Rule::kSplitRecognize, Rule::kTransferAlpha,
                             Rule::kMergeSlots,    Rule::kMergeSameAlpha, Rule::kMergeSameBeta,
                             Rule::kReorder};

std::size_t host_dimension(unsigned p, std::size_t k) {
  std::size_t d = 1;
  for (std::size_t i = 0; i < 2 * k; ++i) d *= p;
  return d;
}

struct Instance {
  TensorProduct presentation;
  StepParams params;
};

std::vector<SymbolAlgebra> replaced(const TensorProduct& t, std::size_t i, SymbolAlgebra a) {
  auto f = t.factors();
  f[i] = std::move(a);
  return f;
}

// A split symbol in one of a few visibly split shapes.
SymbolAlgebra split_symbol(const FieldPtr& f, Sampler& s) {
  switch (s.below(3)) {
    case 0:
      return SymbolAlgebra(wp(s.element(f, 1)), s.nonzero(f));
    case 1:
      return SymbolAlgebra(s.element(f), s.nonzero(f, 1).frobenius());
    default:
      return SymbolAlgebra(FieldElement::zero(f), s.nonzero(f));
  }
}

Instance make_instance(const FieldPtr& f, Rule rule, std::size_t k, Sampler& s) {
  TensorProduct t = s.product(f, k);
  const std::size_t i = s.below(k);
  std::size_t j = k > 1 ? s.below(k - 1) : 0;
  if (j >= i) ++j;
  StepParams params;
  const std::size_t arity = rule_arity(rule);
  if (arity == 1) params.factors = {i};
  if (arity == 2) params.factors = {i, j};
  const unsigned p = f->characteristic();
  switch (rule) {
    case Rule::kScaleSecond: {
      const auto ext = t[i].first_slot_extension();
      for (;;) {
        std::vector<FieldElement> c;
        for (unsigned e = 0; e < p; ++e) c.push_back(s.element(f, 1));
        if (!as_norm(ext.element(c)).is_zero()) {
          params.f = std::move(c);
          break;
        }
      }
      break;
    }
    case Rule::kAddWpToAlpha:
      params.v = s.element(f);
      break;
    case Rule::kAddPthPowerToBeta:
      do {
        params.v = s.element(f, 1);
      } while ((t[i].beta() + params.v->frobenius()).is_zero());
      break;
    case Rule::kSplitRecognize:
      t = TensorProduct(f, replaced(t, i, split_symbol(f, s)));
      if (s.coin()) params.target = s.element(f);
      break;
    case Rule::kMergeSlots:
      while ((t[i].beta() + t[j].beta()).is_zero()) t = TensorProduct(f, replaced(t, j, s.symbol(f)));
      break;
    case Rule::kMergeSameAlpha:
      t = TensorProduct(f, replaced(t, j, SymbolAlgebra(t[i].alpha(), s.nonzero(f))));
      break;
    case Rule::kMergeSameBeta:
      t = TensorProduct(f, replaced(t, j, SymbolAlgebra(s.element(f), t[i].beta())));
      break;
    case Rule::kReorder: {
      params.permutation.resize(k);
      std::iota(params.permutation.begin(), params.permutation.end(), std::size_t{0});
      for (std::size_t a = k; a > 1; --a) std::swap(params.permutation[a - 1], params.permutation[s.below(a)]);
      break;
    }
    default:
      break;
  }
  return {std::move(t), std::move(params)};
}

}  // namespace

bool RuleAudit::ok() const {
  return std::all_of(tallies.begin(), tallies.end(), [](const RuleTally& t) { return t.failed == 0; });
}

RuleAudit audit_rules(const FieldPtr& field, std::size_t samples, std::uint64_t seed) {
  RuleAudit audit;
  const unsigned p = field->characteristic();
  std::size_t k_context = 1;
  while (host_dimension(p, k_context + 1) <= kContextDimension) ++k_context;
  Sampler sampler(seed);
  for (Rule rule : kAudited) {
    RuleTally tally;
    tally.rule = rule;
    const std::size_t arity = std::max<std::size_t>(rule_arity(rule), 1);
    const std::size_t k_max = std::max(arity, k_context);
    for (std::size_t n = 0; n < samples; ++n) {
      const std::size_t k = arity + sampler.below(k_max - arity + 1);
      const Instance inst = make_instance(field, rule, k, sampler);
      std::string failure;
      try {
        const RewriteStep step = apply_step(inst.presentation, rule, inst.params);
        const bool full = host_dimension(p, k) <= AlgebraHost::kMaxDimension;
        if (!step.certificate && rule != Rule::kReorder) {
          failure = "no certificate";
        } else if (const auto check = verify_step(step, full); !check.ok) {
          failure = "certificate: " + check.diagnostic;
        } else if (!replay_step(step)) {
          failure = "replay differs";
        } else if (step.invariant_before && !(*step.invariant_before == *step.invariant_after)) {
          failure = "invariant " + step.invariant_before->to_string() + " became " + step.invariant_after->to_string();
        }
        if (failure.empty()) {
          if (full) {
            ++tally.full_host;
            tally.largest_host = std::max(tally.largest_host, host_dimension(p, k));
          }
          if (step.invariant_before) ++tally.invariant_checked;
        }
      } catch (const Error& e) {
        failure = e.what();
      }
      if (failure.empty()) {
        ++tally.passed;
      } else {
        ++tally.failed;
        if (tally.failures.size() < kKeptFailures) tally.failures.push_back(inst.presentation.to_string() + ": " + failure);
      }
    }
    audit.tallies.push_back(std::move(tally));
  }
  return audit;
}

}  // namespace symlen
