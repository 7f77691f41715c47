#include "symlen/rewrite.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "symlen/errors.hpp"

namespace symlen {

namespace {

constexpr std::array<std::pair<Rule, std::string_view>, 10> kRuleNames{{
    {Rule::kScaleSecond, "ScaleSecond"},
    {Rule::kAddBetaToAlpha, "AddBetaToAlpha"},
    {Rule::kAddWpToAlpha, "AddWpToAlpha"},
    {Rule::kAddPthPowerToBeta, "AddPthPowerToBeta"},
    {Rule::kSplitRecognize, "SplitRecognize"},
    {Rule::kTransferAlpha, "TransferAlpha"},
    {Rule::kMergeSlots, "MergeSlots"},
    {Rule::kMergeSameAlpha, "MergeSameAlpha"},
    {Rule::kMergeSameBeta, "MergeSameBeta"},
    {Rule::kReorder, "Reorder"},
}};

HostPtr host_of(std::vector<SymbolAlgebra> factors) {
  FieldPtr field = factors.front().field();
  return AlgebraHost::create(TensorProduct(field, std::move(factors)));
}

bool presents_split(const SymbolCertificate& c) { return c.claimed_alpha.is_zero() || c.claimed_beta.is_one(); }

// y^{-1} = beta^{-1} y^{p-1}.
AlgebraElement y_inverse(const HostPtr& h, std::size_t factor) {
  const SymbolAlgebra& a = h->algebra()[factor];
  return a.beta().inverse() * h->y(factor).pow(a.p() - 1);
}

// An X with U X - X U = U that commutes with `commuting`; the solution
// with every free coordinate zero.
AlgebraElement companion(const HostPtr& h, const AlgebraElement& u, const std::vector<AlgebraElement>& commuting) {
  std::vector<LinearCondition> conditions;
  conditions.push_back({[&u](const AlgebraElement& x) { return commutator(u, x); }, u});
  for (const auto& g : commuting) {
    conditions.push_back({[g](const AlgebraElement& x) { return commutator(x, g); }, h->zero()});
  }
  const auto sol = solve_linear_conditions(h, conditions);
  if (!sol) throw Error("no companion generator: UX - XU = U has no solution");
  return AlgebraElement(h, sol->particular);
}

FieldElement first_slot_of(const AlgebraElement& x) {
  const auto s = (x.pow(x.host()->p()) - x).as_scalar();
  if (!s) throw Error("companion generator does not satisfy a scalar Artin-Schreier equation");
  return *s;
}

}  // namespace

std::string_view rule_name(Rule r) {
  for (const auto& [rule, name] : kRuleNames) {
    if (rule == r) return name;
  }
  return "?";
}

std::optional<Rule> rule_from_name(std::string_view name) {
  for (const auto& [rule, n] : kRuleNames) {
    if (n == name) return rule;
  }
  return std::nullopt;
}

std::size_t rule_arity(Rule r) {
  switch (r) {
    case Rule::kTransferAlpha:
    case Rule::kMergeSlots:
    case Rule::kMergeSameAlpha:
    case Rule::kMergeSameBeta:
      return 2;
    case Rule::kReorder:
      return 0;
    default:
      return 1;
  }
}

PairCheck verify_certificate(const Certificate& cert, std::size_t num_outputs) {
  PairCheck r;
  if (cert.pairs.empty()) {
    if (cert.host->num_factors() != 1) {
      r.diagnostic = "split certificate must concern a single factor";
      return r;
    }
    if (cert.zero_divisor) {
      if (!is_zero_divisor(*cert.zero_divisor)) {
        r.diagnostic = "claimed zero divisor is invertible";
        return r;
      }
    } else {
      const SymbolAlgebra& a = cert.host->algebra()[0];
      if (!a.field()->is_local() || !invariant(a).is_zero()) {
        r.diagnostic = "no zero divisor and no vanishing local invariant";
        return r;
      }
    }
    r.ok = true;
    return r;
  }
  if (cert.pairs.size() != cert.host->num_factors()) {
    r.diagnostic = "certificate has " + std::to_string(cert.pairs.size()) + " pairs for " +
                   std::to_string(cert.host->num_factors()) + " factors";
    return r;
  }
  for (std::size_t i = 0; i < cert.pairs.size(); ++i) {
    const auto check = verify_symbol_pair(cert.pairs[i]);
    if (!check) {
      r.diagnostic = "pair " + std::to_string(i) + ": " + check.diagnostic;
      return r;
    }
    if (i >= num_outputs && !presents_split(cert.pairs[i])) {
      r.diagnostic = "dropped pair " + std::to_string(i) + " does not present a split algebra";
      return r;
    }
  }
  for (std::size_t i = 0; i < cert.pairs.size(); ++i) {
    for (std::size_t j = i + 1; j < cert.pairs.size(); ++j) {
      for (const auto* a : {&cert.pairs[i].X, &cert.pairs[i].Y}) {
        for (const auto* b : {&cert.pairs[j].X, &cert.pairs[j].Y}) {
          if (!commute(*a, *b)) {
            r.diagnostic = "pairs " + std::to_string(i) + " and " + std::to_string(j) + " do not commute";
            return r;
          }
        }
      }
    }
  }
  r.ok = true;
  return r;
}

// ---------------------------------------------------------------------------
// Rules

RuleApplication scale_second_slot(const SymbolAlgebra& a, const ExtElement& f) {
  if (!(f.extension().alpha() == a.alpha())) throw PreconditionError("f must lie in F[x] of this algebra");
  const FieldElement n = as_norm(f);
  if (n.is_zero()) throw PreconditionError("scale_second_slot needs an element of nonzero norm");
  const SymbolAlgebra out(a.alpha(), n * a.beta());
  const HostPtr h = host_of({a});
  RuleApplication r{{out}, {}, Certificate{h, {{h->x(0), h->from_ext(0, f) * h->y(0), out.alpha(), out.beta()}}, {}}};
  return r;
}

RuleApplication add_beta_to_alpha(const SymbolAlgebra& a) {
  const SymbolAlgebra out(a.alpha() + a.beta(), a.beta());
  const HostPtr h = host_of({a});
  return {{out}, {}, Certificate{h, {{h->x(0) + h->y(0), h->y(0), out.alpha(), out.beta()}}, {}}};
}

RuleApplication add_wp_to_alpha(const SymbolAlgebra& a, const FieldElement& v) {
  const SymbolAlgebra out(a.alpha() + wp(v), a.beta());
  const HostPtr h = host_of({a});
  return {{out}, {}, Certificate{h, {{h->x(0) + h->scalar(v), h->y(0), out.alpha(), out.beta()}}, {}}};
}

RuleApplication add_pth_power_to_beta(const SymbolAlgebra& a, const FieldElement& v) {
  const FieldElement beta = a.beta() + v.frobenius();
  if (beta.is_zero()) throw PreconditionError("add_pth_power_to_beta: beta + v^p is zero");
  const HostPtr h = host_of({a});
  if (v.is_zero()) return {{a}, {}, Certificate{h, {{h->x(0), h->y(0), a.alpha(), a.beta()}}, {}}};
  const AlgebraElement y = h->y(0) + h->scalar(v);
  const AlgebraElement x = companion(h, y, {});
  const SymbolAlgebra out(first_slot_of(x), beta);
  return {{out}, {}, Certificate{h, {{x, y, out.alpha(), out.beta()}}, {}}};
}

RuleApplication transfer_alpha(const SymbolAlgebra& a, const SymbolAlgebra& b) {
  const SymbolAlgebra first(a.alpha() + b.alpha(), a.beta());
  const SymbolAlgebra second(b.alpha(), b.beta() / a.beta());
  const HostPtr h = host_of({a, b});
  const AlgebraElement u = y_inverse(h, 0) * h->y(1);
  return {{first, second},
          {},
          Certificate{h,
                      {{h->x(0) + h->x(1), h->y(0), first.alpha(), first.beta()},
                       {h->x(1), u, second.alpha(), second.beta()}},
                      {}}};
}

RuleApplication merge_slots(const SymbolAlgebra& a, const SymbolAlgebra& b) {
  const FieldElement beta = a.beta() + b.beta();
  if (beta.is_zero()) throw PreconditionError("merge_slots: beta + delta is zero");
  const SymbolAlgebra first(a.alpha() + b.alpha(), beta);
  const HostPtr h = host_of({a, b});
  const AlgebraElement x1 = h->x(0) + h->x(1);
  const AlgebraElement y1 = h->y(0) + h->y(1);
  const AlgebraElement u = y_inverse(h, 0) * h->y(1);
  const AlgebraElement xc = companion(h, u, {x1, y1});
  const SymbolAlgebra second(first_slot_of(xc), b.beta() / a.beta());
  return {{first, second},
          {},
          Certificate{h, {{x1, y1, first.alpha(), first.beta()}, {xc, u, second.alpha(), second.beta()}}, {}}};
}

RuleApplication merge_same_alpha(const SymbolAlgebra& a, const SymbolAlgebra& b) {
  if (!(a.alpha() == b.alpha())) throw PreconditionError("merge_same_alpha: first slots differ");
  const SymbolAlgebra out(a.alpha(), a.beta() * b.beta());
  const SymbolAlgebra split(FieldElement::zero(a.field()), b.beta());
  const HostPtr h = host_of({a, b});
  return {{out},
          {split},
          Certificate{h,
                      {{h->x(0), h->y(0) * h->y(1), out.alpha(), out.beta()},
                       {h->x(1) - h->x(0), h->y(1), split.alpha(), split.beta()}},
                      {}}};
}

RuleApplication merge_same_beta(const SymbolAlgebra& a, const SymbolAlgebra& b) {
  if (!(a.beta() == b.beta())) throw PreconditionError("merge_same_beta: second slots differ");
  const SymbolAlgebra out(a.alpha() + b.alpha(), a.beta());
  const SymbolAlgebra split(b.alpha(), FieldElement::one(a.field()));
  const HostPtr h = host_of({a, b});
  return {{out},
          {split},
          Certificate{h,
                      {{h->x(0) + h->x(1), h->y(0), out.alpha(), out.beta()},
                       {h->x(1), y_inverse(h, 0) * h->y(1), split.alpha(), split.beta()}},
                      {}}};
}

RuleApplication split_recognize(const SymbolAlgebra& a, const std::optional<FieldElement>& target,
                                const std::optional<AlgebraElement>& witness) {
  const HostPtr h = host_of({a});
  Certificate cert{h, {}, {}};
  if (witness) {
    cert.zero_divisor = embed(*witness, h, std::vector<std::size_t>{0});
  } else if (a.field()->is_local() && invariant(a).is_zero()) {
    // The oracle certifies.
  } else if (auto w = find_zero_divisor(a)) {
    cert.zero_divisor = *w;
  } else {
    throw PreconditionError("split_recognize: cannot certify that " + a.to_string() + " is split");
  }
  if (!verify_certificate(cert, 0)) throw PreconditionError("split_recognize: witness is not a zero divisor");
  RuleApplication r;
  if (target) {
    r.outputs.emplace_back(*target, FieldElement::one(a.field()));
  } else {
    r.dropped.push_back(a);
  }
  r.certificate = std::move(cert);
  return r;
}

// ---------------------------------------------------------------------------
// Steps

TensorProduct concat(const TensorProduct& a, const TensorProduct& b) {
  if (!(*a.field() == *b.field())) throw PreconditionError("concatenating presentations over different fields");
  std::vector<SymbolAlgebra> f = a.factors();
  f.insert(f.end(), b.factors().begin(), b.factors().end());
  return TensorProduct(a.field(), std::move(f));
}

namespace {

void check_positions(const TensorProduct& t, const StepParams& params, std::size_t arity) {
  if (params.factors.size() != arity) {
    throw PreconditionError("rule expects " + std::to_string(arity) + " factor positions");
  }
  for (std::size_t i : params.factors) {
    if (i >= t.size()) throw PreconditionError("factor position " + std::to_string(i) + " out of range");
  }
  if (arity == 2 && params.factors[0] == params.factors[1]) throw PreconditionError("factor positions must differ");
}

const FieldElement& need(const std::optional<FieldElement>& v, const char* what) {
  if (!v) throw PreconditionError(std::string("missing parameter ") + what);
  return *v;
}

// Positions a permutation does not fix, in increasing order.
std::vector<std::size_t> moved_positions(const std::vector<std::size_t>& permutation) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < permutation.size(); ++i) {
    if (permutation[i] != i) out.push_back(i);
  }
  return out;
}

// Where each consumed factor's output lands after the splice (outputs beyond
// the second consumed slot never occur).
std::vector<std::size_t> output_positions(const RewriteStep& step, std::size_t num_outputs) {
  const auto& pos = step.params.factors;
  if (num_outputs == 0) return {};
  if (num_outputs == 2 || pos.size() == 1) return std::vector<std::size_t>(pos.begin(), pos.begin() + num_outputs);
  return {pos[0] - (pos[1] < pos[0] ? 1 : 0)};
}

}  // namespace

RewriteStep apply_step(const TensorProduct& t, Rule rule, const StepParams& params,
                       const std::optional<AlgebraElement>& witness) {
  RewriteStep step{rule, params, t, t, std::nullopt, std::nullopt, std::nullopt};
  if (rule == Rule::kReorder) {
    std::vector<std::size_t> sorted = params.permutation;
    std::sort(sorted.begin(), sorted.end());
    std::vector<std::size_t> identity(t.size());
    std::iota(identity.begin(), identity.end(), std::size_t{0});
    if (sorted != identity) throw PreconditionError("reorder needs a permutation of the factor positions");
    step.after = t.select(params.permutation);
    const auto moved = moved_positions(params.permutation);
    std::uint64_t dim = 1;
    for (std::size_t i = 0; i < moved.size(); ++i) dim *= std::uint64_t{t.p()} * t.p();
    if (!moved.empty() && dim <= AlgebraHost::kMaxDimension) {
      const HostPtr h = AlgebraHost::create(t.select(moved));
      Certificate cert{h, {}, {}};
      for (std::size_t j : moved) {
        const std::size_t src = params.permutation[j];
        const auto local = static_cast<std::size_t>(std::lower_bound(moved.begin(), moved.end(), src) - moved.begin());
        cert.pairs.push_back({h->x(local), h->y(local), t[src].alpha(), t[src].beta()});
      }
      step.certificate = std::move(cert);
    }
  } else {
    const std::size_t arity = rule_arity(rule);
    check_positions(t, params, arity);
    const SymbolAlgebra& a = t[params.factors[0]];
    RuleApplication app;
    switch (rule) {
      case Rule::kScaleSecond:
        app = scale_second_slot(a, a.first_slot_extension().element(params.f));
        break;
      case Rule::kAddBetaToAlpha:
        app = add_beta_to_alpha(a);
        break;
      case Rule::kAddWpToAlpha:
        app = add_wp_to_alpha(a, need(params.v, "v"));
        break;
      case Rule::kAddPthPowerToBeta:
        app = add_pth_power_to_beta(a, need(params.v, "v"));
        break;
      case Rule::kSplitRecognize:
        app = split_recognize(a, params.target, witness);
        break;
      case Rule::kTransferAlpha:
        app = transfer_alpha(a, t[params.factors[1]]);
        break;
      case Rule::kMergeSlots:
        app = merge_slots(a, t[params.factors[1]]);
        break;
      case Rule::kMergeSameAlpha:
        app = merge_same_alpha(a, t[params.factors[1]]);
        break;
      case Rule::kMergeSameBeta:
        app = merge_same_beta(a, t[params.factors[1]]);
        break;
      case Rule::kReorder:
        break;
    }
    std::vector<std::optional<SymbolAlgebra>> slots(t.factors().begin(), t.factors().end());
    for (std::size_t i = 0; i < arity; ++i) {
      if (i < app.outputs.size()) {
        slots[params.factors[i]] = app.outputs[i];
      } else {
        slots[params.factors[i]].reset();
      }
    }
    std::vector<SymbolAlgebra> after;
    for (auto& s : slots) {
      if (s) after.push_back(std::move(*s));
    }
    step.after = TensorProduct(t.field(), std::move(after));
    step.certificate = std::move(app.certificate);
  }
  if (t.field()->is_local()) {
    step.invariant_before = total_invariant(step.before);
    step.invariant_after = total_invariant(step.after);
  }
  return step;
}

bool replay_step(const RewriteStep& step) {
  std::optional<AlgebraElement> witness;
  if (step.certificate) witness = step.certificate->zero_divisor;
  try {
    return apply_step(step.before, step.rule, step.params, witness).after == step.after;
  } catch (const PreconditionError&) {
    return false;
  }
}

bool chain_consistent(const TensorProduct& start, const RewriteTrace& trace) {
  const TensorProduct* prev = &start;
  for (const auto& s : trace) {
    if (!(s.before == *prev)) return false;
    prev = &s.after;
  }
  return true;
}

RewriteTrace lift_trace(const RewriteTrace& trace, const TensorProduct& prefix, const TensorProduct& suffix) {
  RewriteTrace out;
  out.reserve(trace.size());
  const std::size_t offset = prefix.size();
  for (const auto& s : trace) {
    RewriteStep r = s;
    for (auto& i : r.params.factors) i += offset;
    if (s.rule == Rule::kReorder) {
      std::vector<std::size_t> perm(prefix.size());
      std::iota(perm.begin(), perm.end(), std::size_t{0});
      for (std::size_t i : s.params.permutation) perm.push_back(i + offset);
      for (std::size_t i = 0; i < suffix.size(); ++i) perm.push_back(offset + s.before.size() + i);
      r.params.permutation = std::move(perm);
    }
    r.before = concat(concat(prefix, s.before), suffix);
    r.after = concat(concat(prefix, s.after), suffix);
    if (r.before.field()->is_local()) {
      r.invariant_before = total_invariant(r.before);
      r.invariant_after = total_invariant(r.after);
    }
    out.push_back(std::move(r));
  }
  return out;
}

PairCheck verify_step(const RewriteStep& step, bool full_host) {
  PairCheck r;
  std::vector<std::size_t> consumed = step.params.factors;
  if (step.rule == Rule::kReorder) {
    consumed = moved_positions(step.params.permutation);
    if (consumed.empty()) {
      r.ok = step.after == step.before;
      if (!r.ok) r.diagnostic = "identity reorder changed the presentation";
      return r;
    }
  }
  if (!step.certificate) {
    r.diagnostic = "step carries no certificate";
    return r;
  }
  const Certificate& cert = *step.certificate;
  // The certificate host must be the consumed factors.
  if (!(cert.host->algebra() == step.before.select(consumed))) {
    r.diagnostic = "certificate host differs from the consumed factors";
    return r;
  }
  std::size_t num_outputs = cert.pairs.size();
  if (step.rule == Rule::kMergeSameAlpha || step.rule == Rule::kMergeSameBeta) num_outputs = 1;
  if (step.rule == Rule::kSplitRecognize) num_outputs = step.params.target ? 1 : 0;
  const auto base = verify_certificate(cert, num_outputs);
  if (!base) return base;
  // Claimed presentations must be the recorded outputs.
  if (step.rule == Rule::kReorder) {
    for (std::size_t i = 0; i < cert.pairs.size(); ++i) {
      const SymbolAlgebra claimed(cert.pairs[i].claimed_alpha, cert.pairs[i].claimed_beta);
      if (!(step.after[consumed[i]] == claimed)) {
        r.diagnostic = "certificate pair " + std::to_string(i) + " does not match the reordered factor";
        return r;
      }
    }
  } else if (step.rule == Rule::kSplitRecognize) {
    if (step.params.target &&
        !(step.after[step.params.factors[0]] == SymbolAlgebra(*step.params.target, FieldElement::one(step.before.field())))) {
      r.diagnostic = "split factor was not replaced by [target, 1)";
      return r;
    }
  } else {
    const auto pos = output_positions(step, num_outputs);
    for (std::size_t i = 0; i < pos.size(); ++i) {
      const SymbolAlgebra claimed(cert.pairs[i].claimed_alpha, cert.pairs[i].claimed_beta);
      if (!(step.after[pos[i]] == claimed)) {
        r.diagnostic = "certificate pair " + std::to_string(i) + " does not match the output presentation";
        return r;
      }
    }
  }
  if (!full_host || cert.pairs.empty()) {
    r.ok = true;
    return r;
  }
  // Embed into the full algebra together with the untouched generators.
  const HostPtr full = AlgebraHost::create(step.before);
  Certificate whole{full, {}, {}};
  for (const auto& pair : cert.pairs) {
    whole.pairs.push_back({embed(pair.X, full, consumed), embed(pair.Y, full, consumed), pair.claimed_alpha,
                           pair.claimed_beta});
  }
  for (std::size_t j = 0; j < step.before.size(); ++j) {
    if (std::find(consumed.begin(), consumed.end(), j) != consumed.end()) continue;
    whole.pairs.push_back({full->x(j), full->y(j), step.before[j].alpha(), step.before[j].beta()});
  }
  // Dropped pairs sit among the certified pairs; untouched ones are not split claims.
  const auto check = verify_certificate(whole, whole.pairs.size());
  if (!check) {
    r.diagnostic = "full host: " + check.diagnostic;
    return r;
  }
  r.ok = true;
  return r;
}

}  // namespace symlen
