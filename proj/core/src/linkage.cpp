#include "symlen/linkage.hpp"

#include <algorithm>
#include <numeric>

#include "symlen/errors.hpp"
#include "symlen/local_invariant.hpp"

namespace symlen {

namespace {

Polynomial shifted(const Polynomial& p, std::size_t num_vars, std::size_t offset) {
  Polynomial out(p.field(), num_vars);
  for (const auto& [e, c] : p.terms()) {
    Polynomial::Exponents ex(num_vars, 0);
    std::copy(e.begin(), e.end(), ex.begin() + static_cast<std::ptrdiff_t>(offset));
    out.add_term(ex, c);
  }
  return out;
}

Polynomial monomial(const FieldElement& c, std::size_t num_vars, std::initializer_list<std::pair<std::size_t, unsigned>> powers) {
  Polynomial out(c.field(), num_vars);
  Polynomial::Exponents ex(num_vars, 0);
  for (const auto& [var, e] : powers) ex[var] = e;
  out.add_term(ex, c);
  return out;
}

// u^p a - u^{p-1} v + v^p + sum_i b_i N(f_i), with the f-blocks starting at `offset`.
Polynomial phi_polynomial(const TensorProduct& t, std::size_t num_vars, std::size_t offset, bool with_v) {
  const FieldPtr& field = t.field();
  const unsigned p = t.p();
  FieldElement alpha_sum = FieldElement::zero(field);
  for (const auto& a : t.factors()) alpha_sum += a.alpha();
  Polynomial out = monomial(alpha_sum, num_vars, {{0, p}});
  if (with_v) {
    out += monomial(-FieldElement::one(field), num_vars, {{0, p - 1}, {1, 1}});
    out += monomial(FieldElement::one(field), num_vars, {{1, p}});
  }
  for (std::size_t i = 0; i < t.size(); ++i) {
    const auto nf = norm_form(t[i].first_slot_extension());
    out += t[i].beta() * shifted(nf.polynomial(), num_vars, offset + i * p);
  }
  return out;
}

std::vector<ExtElement> decode_blocks(const TensorProduct& t, std::span<const FieldElement> coords) {
  const unsigned p = t.p();
  std::vector<ExtElement> f;
  f.reserve(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) {
    f.push_back(from_norm_coordinates(t[i].first_slot_extension(), coords.subspan(i * p, p)));
  }
  return f;
}

bool all_zero(const std::vector<ExtElement>& f) {
  return std::all_of(f.begin(), f.end(), [](const ExtElement& e) { return e.is_zero(); });
}

// Accumulates certified steps on a presentation.
class Tracer {
 public:
  explicit Tracer(TensorProduct t) : cur_(std::move(t)) {}

  const TensorProduct& current() const { return cur_; }

  void run(Rule rule, StepParams params, const std::optional<AlgebraElement>& witness = std::nullopt) {
    RewriteStep step = apply_step(cur_, rule, params, witness);
    cur_ = step.after;
    trace_.push_back(std::move(step));
  }

  void append(const RewriteTrace& steps) {
    for (const auto& s : steps) {
      if (!(s.before == cur_)) throw Error("internal: trace does not continue the current presentation");
      cur_ = s.after;
      trace_.push_back(s);
    }
  }

  Rewritten finish() && { return {std::move(cur_), std::move(trace_)}; }
  RewriteTrace& trace() { return trace_; }

 private:
  TensorProduct cur_;
  RewriteTrace trace_;
};

StepParams at(std::vector<std::size_t> factors) {
  StepParams p;
  p.factors = std::move(factors);
  return p;
}

AlgebraElement zero_divisor_of(const SymbolAlgebra& a) {
  auto w = find_zero_divisor(a, 0);
  if (!w) throw Error("internal: no zero divisor for " + a.to_string());
  return *w;
}

// Either a case (b) rewrite or, when one of its conditions fails, a
// presentation with a split first factor.
struct SecondSlotChain {
  std::optional<Rewritten> rewritten;
  std::optional<SplitFirst> split;
};

SecondSlotChain second_slot_chain(const TensorProduct& t, const SlotVector& w, bool allow_split) {
  if (!w.u.is_zero()) throw PreconditionError("second-slot rewrite needs u = 0");
  if (w.f.size() != t.size()) throw PreconditionError("slot vector has the wrong number of blocks");
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (!w.f[i].is_zero()) order.push_back(i);
  }
  const std::size_t count = order.size();
  if (count == 0) throw PreconditionError("second-slot rewrite needs some f_i != 0");
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (w.f[i].is_zero()) order.push_back(i);
  }
  Tracer tr(t);
  std::vector<ExtElement> f;
  for (std::size_t i : order) f.push_back(w.f[i]);
  bool identity = true;
  for (std::size_t i = 0; i < order.size(); ++i) identity = identity && order[i] == i;
  if (!identity) {
    StepParams p;
    p.permutation = order;
    tr.run(Rule::kReorder, p);
  }
  auto split_here = [&](AlgebraElement witness) {
    SecondSlotChain out;
    auto done = std::move(tr).finish();
    out.split = SplitFirst{std::move(done.result), std::move(done.trace), std::move(witness)};
    return out;
  };

  std::vector<FieldElement> norms;
  for (std::size_t i = 0; i < count; ++i) {
    norms.push_back(as_norm(f[i]));
    if (!norms.back().is_zero()) continue;
    if (!allow_split) {
      throw PreconditionError("N(f_" + std::to_string(order[i] + 1) + ") = 0 for a nonzero f_" +
                              std::to_string(order[i] + 1));
    }
    // f_i(x_i) is a zero divisor; bring that factor to the front.
    if (i != 0) {
      StepParams p;
      p.permutation.resize(t.size());
      std::iota(p.permutation.begin(), p.permutation.end(), std::size_t{0});
      std::swap(p.permutation[0], p.permutation[i]);
      tr.run(Rule::kReorder, p);
    }
    const SymbolAlgebra& first = tr.current()[0];
    const HostPtr h = AlgebraHost::create(TensorProduct(first.field(), {first}));
    return split_here(h->from_ext(0, f[i]));
  }
  for (std::size_t i = 0; i < count; ++i) {
    if (norms[i].is_one()) continue;
    StepParams p = at({i});
    p.f = f[i].coeffs();
    tr.run(Rule::kScaleSecond, p);
  }
  FieldElement sum = tr.current()[0].beta();
  for (std::size_t s = 1; s < count; ++s) {
    const FieldElement next = sum + tr.current()[s].beta();
    if (next.is_zero()) {
      if (!allow_split) throw PreconditionError("partial sum s = " + std::to_string(s + 1) + " vanishes");
      // [a', S) (x) [a_s, -S) = [a_s + a', -S) (x) [a', -1).
      tr.run(Rule::kTransferAlpha, at({s, 0}));
      return split_here(zero_divisor_of(tr.current()[0]));
    }
    tr.run(Rule::kMergeSlots, at({0, s}));
    sum = next;
  }
  const FieldElement total = sum + w.v.frobenius();
  if (total.is_zero()) {
    if (!allow_split) throw PreconditionError("sum of N(f_i) b_i + v^p vanishes");
    return split_here(zero_divisor_of(tr.current()[0]));
  }
  if (!w.v.is_zero()) {
    StepParams p = at({0});
    p.v = w.v;
    tr.run(Rule::kAddPthPowerToBeta, p);
  }
  if (!(tr.current()[0].beta() == total)) throw Error("internal: second slot differs from the target");
  SecondSlotChain out;
  out.rewritten = std::move(tr).finish();
  return out;
}

// Replaces the split first factor by [target, 1).
Rewritten retarget(const TensorProduct& start, SplitFirst s, const FieldElement& target) {
  Tracer tr(start);
  tr.append(s.trace);
  StepParams p = at({0});
  p.target = target;
  tr.run(Rule::kSplitRecognize, p, s.witness);
  return std::move(tr).finish();
}

Rewritten unchanged(const TensorProduct& t) { return {t, {}}; }

// Splitness visible without a search.
bool evidently_split(const SymbolAlgebra& a) {
  if (a.alpha().is_zero() || a.beta().is_one()) return true;
  const Field& f = *a.field();
  if (f.is_finite()) return true;
  if (f.is_local()) return invariant(a).is_zero();
  return a.beta().pth_root().has_value() || in_wp_image(a.alpha());
}

}  // namespace

SlotVector SlotVector::zero(const TensorProduct& t) {
  SlotVector w{FieldElement::zero(t.field()), FieldElement::zero(t.field()), {}};
  for (const auto& a : t.factors()) w.f.push_back(a.first_slot_extension().scalar(FieldElement::zero(t.field())));
  return w;
}

bool SlotVector::is_zero() const { return u.is_zero() && v.is_zero() && all_zero(f); }

PhiForm::PhiForm(TensorProduct host)
    : host_(std::move(host)),
      form_(phi_polynomial(host_, 2 + host_.size() * host_.p(), 2, true), host_.p()) {
  names_ = {"u", "v"};
  for (std::size_t i = 0; i < host_.size(); ++i) {
    for (unsigned j = host_.p(); j-- > 0;) names_.push_back("f" + std::to_string(i + 1) + "_" + std::to_string(j));
  }
}

std::vector<FieldElement> PhiForm::coordinates(const SlotVector& w) const {
  if (w.f.size() != host_.size()) throw PreconditionError("slot vector has the wrong number of blocks");
  std::vector<FieldElement> out{w.u, w.v};
  for (const auto& f : w.f) {
    const auto c = norm_coordinates(f);
    out.insert(out.end(), c.begin(), c.end());
  }
  return out;
}

SlotVector PhiForm::slot_vector(std::span<const FieldElement> coords) const {
  if (coords.size() != form_.dimension()) throw PreconditionError("coordinate vector has the wrong length");
  return {coords[0], coords[1], decode_blocks(host_, coords.subspan(2))};
}

FieldElement PhiForm::evaluate(const SlotVector& w) const {
  const auto c = coordinates(w);
  return form_.evaluate(c);
}

PhiForm build_phi(const TensorProduct& t) { return PhiForm(t); }

FieldElement phi_value(const TensorProduct& t, const SlotVector& w) {
  const unsigned p = t.p();
  FieldElement alpha_sum = FieldElement::zero(t.field());
  for (const auto& a : t.factors()) alpha_sum += a.alpha();
  FieldElement out = w.u.pow(p) * alpha_sum - w.u.pow(p - 1) * w.v + w.v.pow(p);
  for (std::size_t i = 0; i < t.size(); ++i) out += as_norm(w.f.at(i)) * t[i].beta();
  return out;
}

HomogeneousForm difference_form(const TensorProduct& a, const TensorProduct& b) {
  if (!(*a.field() == *b.field())) throw PreconditionError("presentations over different fields");
  const std::size_t n = 2 + (a.size() + b.size()) * a.p();
  Polynomial poly = phi_polynomial(a, n, 2, true) - phi_polynomial(b, n, 2 + a.size() * a.p(), false);
  return HomogeneousForm(std::move(poly), a.p());
}

Rewritten apply_case_a(const TensorProduct& t, const SlotVector& w) {
  if (w.u.is_zero()) throw PreconditionError("case (a) needs u != 0");
  if (w.f.size() != t.size()) throw PreconditionError("slot vector has the wrong number of blocks");
  const FieldElement inv = w.u.inverse();
  Tracer tr(t);
  FieldElement target = FieldElement::zero(t.field());
  for (std::size_t i = 0; i < t.size(); ++i) {
    const ExtElement g = inv * w.f[i];
    const FieldElement n = as_norm(g);
    target += t[i].alpha() + n * t[i].beta();
    if (n.is_zero()) continue;
    if (!n.is_one()) {
      StepParams p = at({i});
      p.f = g.coeffs();
      tr.run(Rule::kScaleSecond, p);
    }
    tr.run(Rule::kAddBetaToAlpha, at({i}));
  }
  for (std::size_t i = 1; i < t.size(); ++i) tr.run(Rule::kTransferAlpha, at({0, i}));
  const FieldElement v = w.v * inv;
  if (!v.is_zero()) {
    StepParams p = at({0});
    p.v = v;
    tr.run(Rule::kAddWpToAlpha, p);
  }
  target += wp(v);
  if (!(tr.current()[0].alpha() == target)) throw Error("internal: first slot differs from phi(1, v/u, f/u)");
  return std::move(tr).finish();
}

Rewritten apply_case_b(const TensorProduct& t, const SlotVector& w) {
  return std::move(*second_slot_chain(t, w, false).rewritten);
}

SplitFirst split_first_factor(const TensorProduct& t, const SlotVector& w) {
  if (w.is_zero()) throw PreconditionError("need a nontrivial zero of phi");
  if (!phi_value(t, w).is_zero()) throw PreconditionError("slot vector is not a zero of phi");
  if (!w.u.is_zero()) {
    Rewritten r = apply_case_a(t, w);
    AlgebraElement witness = zero_divisor_of(r.result[0]);
    return {std::move(r.result), std::move(r.trace), std::move(witness)};
  }
  auto chain = second_slot_chain(t, w, true);
  if (!chain.split) throw Error("internal: a zero of phi with u = 0 did not split a factor");
  return std::move(*chain.split);
}

std::string_view side_name(Side s) { return s == Side::kLeft ? "left" : "right"; }

std::optional<CommonSlot> common_slot_shortcut(const TensorProduct& a, const TensorProduct& b) {
  if (a.empty() || b.empty()) throw PreconditionError("common_slot needs two nonempty presentations");
  if (!(*a.field() == *b.field())) throw PreconditionError("presentations over different fields");
  if (a[0].alpha() == b[0].alpha()) return CommonSlot{Side::kLeft, unchanged(a), unchanged(b)};
  if (a[0].beta() == b[0].beta()) return CommonSlot{Side::kRight, unchanged(a), unchanged(b)};
  auto left_by_split = [](const TensorProduct& t, const FieldElement& target) {
    Tracer tr(t);
    StepParams p = at({0});
    p.target = target;
    tr.run(Rule::kSplitRecognize, p);
    return std::move(tr).finish();
  };
  if (evidently_split(a[0])) return CommonSlot{Side::kLeft, left_by_split(a, b[0].alpha()), unchanged(b)};
  if (evidently_split(b[0])) return CommonSlot{Side::kLeft, unchanged(a), left_by_split(b, a[0].alpha())};
  return std::nullopt;
}

CommonSlot common_slot_at(const TensorProduct& a, const TensorProduct& b, std::span<const FieldElement> z) {
  const std::size_t p = a.p();
  if (z.size() != 2 + (a.size() + b.size()) * p) throw PreconditionError("zero has the wrong number of coordinates");
  if (!difference_form(a, b).evaluate(z).is_zero()) throw PreconditionError("vector is not a zero of the difference form");
  SlotVector wa{z[0], z[1], decode_blocks(a, z.subspan(2, a.size() * p))};
  SlotVector wb{z[0], FieldElement::zero(a.field()), decode_blocks(b, z.subspan(2 + a.size() * p))};
  if (wa.is_zero() && all_zero(wb.f)) throw PreconditionError("need a nontrivial zero");

  if (!wa.u.is_zero()) {
    Rewritten ra = apply_case_a(a, wa);
    Rewritten rb = apply_case_a(b, wb);
    if (!(ra.result[0].alpha() == rb.result[0].alpha())) throw Error("internal: case (a) slots disagree");
    return {Side::kLeft, std::move(ra), std::move(rb)};
  }
  if (all_zero(wb.f)) {
    return {Side::kLeft, retarget(a, split_first_factor(a, wa), b[0].alpha()), unchanged(b)};
  }
  if (all_zero(wa.f)) {
    // psi(0, -v, f') = 0.
    wb.v = -wa.v;
    return {Side::kLeft, unchanged(a), retarget(b, split_first_factor(b, wb), a[0].alpha())};
  }
  auto ca = second_slot_chain(a, wa, true);
  if (ca.split) return {Side::kLeft, retarget(a, std::move(*ca.split), b[0].alpha()), unchanged(b)};
  auto cb = second_slot_chain(b, wb, true);
  if (cb.split) return {Side::kLeft, unchanged(a), retarget(b, std::move(*cb.split), a[0].alpha())};
  if (!(ca.rewritten->result[0].beta() == cb.rewritten->result[0].beta())) {
    throw Error("internal: case (b) slots disagree");
  }
  return {Side::kRight, std::move(*ca.rewritten), std::move(*cb.rewritten)};
}

CommonSlot common_slot(const TensorProduct& a, const TensorProduct& b, const SearchBudget& budget) {
  if (auto shortcut = common_slot_shortcut(a, b)) return std::move(*shortcut);
  const auto zero = find_isotropic(difference_form(a, b), budget);
  if (!zero) throw Error("internal: the difference form is anisotropic");
  return common_slot_at(a, b, *zero);
}

std::size_t symbol_length_bound(const Field& field) {
  std::optional<std::size_t> bound;
  const unsigned p = field.characteristic();
  if (const auto d = field.degree_bound(); d && *d > 1) bound = (*d - 1 + p - 1) / p - 1;
  if (const auto u = field.u_invariant(); u && p == 2) {
    const std::size_t b = *u / 2 - 1;
    bound = bound ? std::min(*bound, b) : b;
  }
  if (!bound) throw HypothesisError("field " + field.descriptor() + " declares no degree bound or u-invariant");
  return *bound;
}

Reduction reduce_symbol_length(const TensorProduct& t, const SearchBudget& budget) {
  Reduction out{t, {}, symbol_length_bound(*t.field()), std::nullopt};
  const unsigned p = t.p();
  const std::size_t d = t.field()->degree_bound().value_or(p * p);
  // Fewest partners l with (1 + l) p >= d - 1.
  const std::size_t partners = std::max<std::size_t>(1, (d - 1 + p - 1) / p - 1);
  Tracer tr(t);
  auto drop_split = [&] {
    for (std::size_t i = tr.current().size(); i-- > 0;) {
      if (evidently_split(tr.current()[i])) tr.run(Rule::kSplitRecognize, at({i}));
    }
  };
  drop_split();
  try {
    while (tr.current().size() > out.bound) {
      const TensorProduct& cur = tr.current();
      if (cur.size() == 1) {
        const PhiForm phi(cur);
        const auto zero = find_isotropic(phi.form(), budget);
        if (!zero) break;
        const SplitFirst s = split_first_factor(cur, phi.slot_vector(*zero));
        tr.append(s.trace);
        tr.run(Rule::kSplitRecognize, at({0}), s.witness);
        continue;
      }
      const std::size_t l = std::min(partners, cur.size() - 1);
      std::vector<std::size_t> head{0}, mid(l), tail(cur.size() - 1 - l);
      std::iota(mid.begin(), mid.end(), std::size_t{1});
      std::iota(tail.begin(), tail.end(), 1 + l);
      const TensorProduct a = cur.select(head), b = cur.select(mid), rest = cur.select(tail);
      const CommonSlot cs = common_slot(a, b, budget);
      tr.append(lift_trace(cs.a.trace, TensorProduct(cur.field()), concat(b, rest)));
      tr.append(lift_trace(cs.b.trace, cs.a.result, rest));
      tr.run(cs.side == Side::kLeft ? Rule::kMergeSameAlpha : Rule::kMergeSameBeta, at({0, 1}));
      drop_split();
    }
  } catch (const BudgetExhausted& e) {
    out.budget_exhausted = e.what();
  }
  auto done = std::move(tr).finish();
  out.result = std::move(done.result);
  out.trace = std::move(done.trace);
  return out;
}

}  // namespace symlen
