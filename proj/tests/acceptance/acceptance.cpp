// Acceptance run: one PASS/FAIL line per criterion, exit status 1 when any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "symlen/errors.hpp"
#include "symlen/linkage.hpp"
#include "symlen/local_invariant.hpp"
#include "symlen/parse.hpp"
#include "symlen/quadform.hpp"
#include "symlen/rule_audit.hpp"
#include "symlen/sampling.hpp"
#include "symlen/search.hpp"

namespace symlen {
namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void check(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (notes.size() < 12) notes.push_back("failed: " + what);
    }
  }
  void note(std::string s) { notes.push_back(std::move(s)); }
};

std::string str(std::size_t n) { return std::to_string(n); }

FieldPtr field(const char* d) { return parse_field(d); }

// Every step has a verifying certificate (an identity reorder has none), the
// chain is unbroken and recorded invariants agree.
bool certified(const TensorProduct& start, const RewriteTrace& trace, std::string* why = nullptr) {
  if (!chain_consistent(start, trace)) {
    if (why) *why = "broken chain";
    return false;
  }
  for (const auto& s : trace) {
    const auto check = verify_step(s);
    if (!check.ok) {
      if (why) *why = std::string(rule_name(s.rule)) + ": " + check.diagnostic;
      return false;
    }
    if (s.invariant_before && s.invariant_after && !(*s.invariant_before == *s.invariant_after)) {
      if (why) *why = std::string(rule_name(s.rule)) + ": invariant moved";
      return false;
    }
  }
  return true;
}

SlotVector random_slot_vector(Sampler& s, const TensorProduct& t) {
  const FieldPtr& f = t.field();
  SlotVector w{s.element(f), s.element(f), {}};
  for (const auto& a : t.factors()) {
    std::vector<FieldElement> coeffs;
    for (unsigned j = 0; j < t.p(); ++j) coeffs.push_back(s.element(f, 1));
    w.f.push_back(a.first_slot_extension().element(coeffs));
  }
  return w;
}

// Rewrite rules over F_4((t)) and F_3((t)).
Outcome rules_preserve_invariant() {
  Outcome o;
  for (const char* d : {"GF(2^2; z^2+z+1)((t))", "GF(3)((t))"}) {
    const auto audit = audit_rules(field(d), 200, 20240601);
    std::size_t largest = 0;
    std::size_t instances = 0;
    for (const auto& t : audit.tallies) {
      largest = std::max(largest, t.largest_host);
      instances += t.passed + t.failed;
      if (t.rule != Rule::kReorder) {
        o.check(t.invariant_checked == t.passed + t.failed, std::string(d) + " " + std::string(rule_name(t.rule)) +
                                                                ": invariant not compared on every instance");
      }
      for (const auto& f : t.failures) o.check(false, std::string(d) + " " + std::string(rule_name(t.rule)) + ": " + f);
      o.check(t.failed == 0, std::string(d) + " " + std::string(rule_name(t.rule)));
    }
    o.note(std::string(d) + ": " + str(audit.tallies.size()) + " rules, " + str(instances) +
           " instances, largest host " + str(largest));
  }
  return o;
}

// Case a (u != 0), case b (u = 0) and case c (phi(w) = 0) of the slot rewriting.
Outcome slot_cases() {
  Outcome o;
  struct Setting {
    const char* field;
    std::size_t max_k;
  };
  Sampler s(7);
  for (const Setting st : {Setting{"GF(2)", 3}, Setting{"GF(4)", 3}, Setting{"GF(3)", 2}}) {
    const auto F = field(st.field);
    const auto one = FieldElement::one(F);
    std::size_t degenerate = 0;
    for (std::size_t k = 1; k <= st.max_k; ++k) {
      // (a)
      for (int i = 0; i < 100; ++i) {
        const auto T = s.product(F, k);
        auto w = random_slot_vector(s, T);
        if (w.u.is_zero()) w.u = one;
        const auto r = apply_case_a(T, w);
        SlotVector scaled = w;
        scaled.u = one;
        scaled.v = w.v / w.u;
        for (auto& f : scaled.f) f = w.u.inverse() * f;
        o.check(r.result[0].alpha() == phi_value(T, scaled), std::string(st.field) + " case a slot");
        o.check(certified(T, r.trace), std::string(st.field) + " case a trace");
      }
      // (b)
      for (int done = 0; done < 100;) {
        const auto T = s.product(F, k);
        auto w = random_slot_vector(s, T);
        w.u = FieldElement::zero(F);
        if (w.f[0].is_zero()) w.f[0] = T[0].first_slot_extension().scalar(one);
        FieldElement predicted = w.v.pow(T.p());
        for (std::size_t i = 0; i < k; ++i) {
          if (!w.f[i].is_zero()) predicted += as_norm(w.f[i]) * T[i].beta();
        }
        try {
          const auto r = apply_case_b(T, w);
          o.check(r.result[0].beta() == predicted, std::string(st.field) + " case b slot");
          o.check(certified(T, r.trace), std::string(st.field) + " case b trace");
          ++done;
        } catch (const PreconditionError&) {
          ++degenerate;  // a partial sum vanished
        }
      }
      // (c)
      for (int i = 0; i < 100; ++i) {
        const auto T = s.product(F, k);
        const PhiForm phi(T);
        const auto z = find_isotropic(phi.form());
        if (!z) {
          o.check(false, std::string(st.field) + " phi without a zero");
          continue;
        }
        const auto r = split_first_factor(T, phi.slot_vector(*z));
        o.check(!r.witness.is_zero() && is_zero_divisor(r.witness), std::string(st.field) + " case c witness");
        o.check(r.witness.host()->algebra()[0] == r.result[0], std::string(st.field) + " case c witness host");
        o.check(certified(T, r.trace), std::string(st.field) + " case c trace");
      }
    }
    o.note(std::string(st.field) + ": k <= " + str(st.max_k) + ", 100 vectors per case and k, " + str(degenerate) +
           " degenerate case-b draws redrawn");
  }
  return o;
}

// phi has degree p in 2 + kp > p variables, so it has a nontrivial zero over F_q.
Outcome phi_isotropic_over_finite_fields() {
  Outcome o;
  Sampler s(11);
  for (const char* d : {"GF(2)", "GF(4)", "GF(3)"}) {
    const auto F = field(d);
    const std::size_t max_k = F->characteristic() == 2 ? 3 : 2;
    for (int i = 0; i < 100; ++i) {
      const auto T = s.product(F, 1 + i % max_k);
      const auto phi = build_phi(T);
      const auto z = find_isotropic(phi.form());
      bool ok = z.has_value();
      if (ok) {
        const auto w = phi.slot_vector(*z);
        ok = !w.is_zero() && phi.evaluate(w).is_zero() && phi_value(T, w).is_zero();
      }
      o.check(ok, std::string(d) + " " + T.to_string());
    }
  }
  o.note("300 configurations searched exhaustively");
  return o;
}

// Quaternion products of length <= 4 over F_2((t)) reduce to length <= 1.
Outcome local_quaternion_reduction() {
  Outcome o;
  const auto F = field("GF(2)((t))");
  Sampler s(2024);
  std::size_t lengths[2] = {0, 0};
  std::size_t steps = 0;
  for (int i = 0; i < 100; ++i) {
    const auto T = s.product(F, 1 + i % 4);
    const auto r = reduce_symbol_length(T);
    if (r.budget_exhausted) {
      o.check(false, T.to_string() + ": " + *r.budget_exhausted);
      continue;
    }
    std::string why;
    o.check(r.result.size() <= 1, T.to_string() + " reduced to " + r.result.to_string());
    o.check(total_invariant(r.result) == total_invariant(T), T.to_string() + " invariant");
    o.check(certified(T, r.trace, &why), T.to_string() + " trace " + why);
    if (r.result.size() <= 1) ++lengths[r.result.size()];
    steps += r.trace.size();
  }
  o.note("100 products, " + str(lengths[0]) + " split, " + str(lengths[1]) + " of length 1, " + str(steps) + " certified steps");
  return o;
}

// Over F_4 every product splits, each dropped factor with a zero divisor.
Outcome finite_field_reduction() {
  Outcome o;
  const auto F = field("GF(4)");
  Sampler s(4);
  std::size_t witnesses = 0;
  for (int i = 0; i < 60; ++i) {
    const auto T = s.product(F, 1 + i % 3);
    const auto r = reduce_symbol_length(T);
    o.check(!r.budget_exhausted && r.result.empty(), T.to_string() + " reduced to " + r.result.to_string());
    std::string why;
    o.check(certified(T, r.trace, &why), T.to_string() + " trace " + why);
    for (const auto& step : r.trace) {
      if (step.rule != Rule::kSplitRecognize) continue;
      const bool ok = step.certificate && step.certificate->zero_divisor && !step.certificate->zero_divisor->is_zero() &&
                      is_zero_divisor(*step.certificate->zero_divisor);
      o.check(ok, T.to_string() + " split step without a zero divisor");
      witnesses += ok;
    }
  }
  o.note("60 products, " + str(witnesses) + " zero divisors checked");
  return o;
}

// Pairs of quaternion algebras over F_2((t)) get a common slot.
Outcome local_common_slot() {
  Outcome o;
  const auto F = field("GF(2)((t))");
  Sampler s(99);
  std::size_t sides[2] = {0, 0};
  for (int i = 0; i < 100; ++i) {
    const auto A = s.product(F, 1);
    const auto B = s.product(F, 1);
    try {
      const auto cs = common_slot(A, B);
      const bool shared = cs.side == Side::kLeft ? cs.a.result[0].alpha() == cs.b.result[0].alpha()
                                                 : cs.a.result[0].beta() == cs.b.result[0].beta();
      const std::string pair = A.to_string() + " / " + B.to_string();
      o.check(shared, pair + " no shared slot");
      o.check(certified(A, cs.a.trace) && certified(B, cs.b.trace), pair + " trace");
      o.check(total_invariant(cs.a.result) == total_invariant(A) && total_invariant(cs.b.result) == total_invariant(B),
              pair + " invariant");
      ++sides[cs.side == Side::kLeft ? 0 : 1];
    } catch (const BudgetExhausted& e) {
      o.check(false, A.to_string() + " / " + B.to_string() + ": " + e.what());
    }
  }
  o.note("100 pairs, " + str(sides[0]) + " left, " + str(sides[1]) + " right");
  return o;
}

QuadraticForm random_form(Sampler& s, const FieldPtr& f, std::size_t planes) {
  std::vector<QuadraticForm::Pair> pairs;
  for (std::size_t i = 0; i < planes; ++i) pairs.emplace_back(s.element(f, 1), s.element(f, 1));
  return QuadraticForm(f, std::move(pairs));
}

Outcome quadratic_forms() {
  Outcome o;
  Sampler s(5);
  std::size_t witt_checked = 0;
  std::size_t witt_incomplete = 0;
  for (const char* d : {"GF(2)", "GF(4)", "GF(2)((t))"}) {
    const auto F = field(d);
    for (int i = 0; i < 40; ++i) {
      const auto q = random_form(s, F, 1 + i % 3);
      std::vector<Vector> rows;
      for (std::size_t r = 0; r < q.dimension(); ++r) {
        Vector v;
        for (std::size_t c = 0; c < q.dimension(); ++c) v.push_back(s.element(F, 1));
        rows.push_back(std::move(v));
      }
      QuadraticForm moved(F);
      try {
        moved = restrict_to_span(q, rows);
      } catch (const PreconditionError&) {
        continue;  // dependent rows
      }
      if (moved.dimension() != q.dimension()) continue;
      const auto w = witt_decompose(q);
      const auto wm = witt_decompose(moved);
      if (!w.complete || !wm.complete) {
        ++witt_incomplete;
        continue;
      }
      ++witt_checked;
      const auto again = witt_decompose(w.kernel);
      o.check(verify_witt(q, w) && verify_witt(moved, wm), q.to_string() + " basis change");
      o.check(again.witt_index == 0 && again.kernel == w.kernel, q.to_string() + " not idempotent");
      o.check(w.witt_index == wm.witt_index && w.kernel.dimension() == wm.kernel.dimension(),
              q.to_string() + " vs " + moved.to_string() + " Witt index");
      o.check(arf(q) == arf(moved), q.to_string() + " vs " + moved.to_string() + " Arf");
    }
  }
  o.note("Witt decomposition: " + str(witt_checked) + " forms and their base changes, " + str(witt_incomplete) +
         " skipped without a rational witness");

  const auto L4 = field("GF(2^2; z^2+z+1)((t))");
  for (int i = 0; i < 100; ++i) {
    const auto a = random_form(s, L4, 1 + i % 2);
    const auto b = random_form(s, L4, 1 + i % 3);
    o.check(arf(a + b) == arf(a) + arf(b), "Arf of " + a.to_string() + " + " + b.to_string());
  }
  o.note("Arf additivity: 100 pairs over " + L4->descriptor());

  const auto census = exhaustive_u_invariants(field("GF(2)"), 4);
  o.check(census.u == 2, "u(F_2) = " + str(census.u));
  o.note(std::string("u(F_2) = 2: ") + (census.u == 2 ? "PASS" : "FAIL") + ", measured " + str(census.u) + " over " +
         str(census.forms_checked) + " forms");
  // The claimed value of the largest anisotropic dimension over F_2, singular forms allowed.
  const bool u_hat_claim = census.u_hat == 3;
  o.check(u_hat_claim, "u_hat(F_2) = 3 claimed, measured " + str(census.u_hat));
  o.note(std::string("u_hat(F_2) = 3: ") + (u_hat_claim ? "PASS" : "FAIL") + ", measured " + str(census.u_hat) +
         "; <1,1,1> = (x+y+z)^2 and every 3-dimensional form has a zero");

  const auto L = field("GF(2)((t))");
  const auto t = FieldElement::variable(L);
  const auto one = FieldElement::one(L);
  const QuadraticForm norm(L, {{one, one}, scale_pair(t, {one, one})});
  const auto trivial = trivialize_arf(norm);
  const bool anisotropic = decide_isotropy(trivial) == std::optional<bool>(false) && !is_isotropic(trivial).has_value();
  o.check(trivial.dimension() == 4 && arf(trivial).is_trivial() && anisotropic,
          "trivialize_arf gave " + trivial.to_string());
  o.note("trivialize_arf: " + trivial.to_string() + ", anisotropic with trivial Arf invariant");

  const auto sharp = sharpness_witness(L, 2);
  o.check(sharp.invariant.to_string() == "1/2" && sharp.clifford.size() == 1,
          "sharpness invariant " + sharp.invariant.to_string());
  o.note("sharpness: " + sharp.form.to_string() + " -> " + sharp.clifford.to_string() + ", invariant " +
         sharp.invariant.to_string());
  return o;
}

Outcome local_invariant_checks() {
  Outcome o;
  const auto L = field("GF(2)((t))");
  const auto t = FieldElement::variable(L);
  const auto one = FieldElement::one(L);
  o.check(invariant(SymbolAlgebra(one, t)) == (LocalInvariant{1, 2}), "[1,t) is not 1/2");

  // Units of F_2((t)) are norms from the unramified F_4((t)), whose norms have
  // even valuation, so [1, t^m u) is split exactly when m is even.
  Sampler s(8);
  for (int i = 0; i < 100; ++i) {
    const int m = static_cast<int>(s.below(9)) - 4;
    const FieldElement unit = one + t * t * s.element(L, 3);
    const SymbolAlgebra a(one, t.pow(m) * unit);
    const unsigned expected = static_cast<unsigned>(m < 0 ? -m : m) % 2;
    o.check(invariant(a) == (LocalInvariant{expected, 2}), a.to_string() + " valuation parity");
  }

  std::size_t samples = 0;
  for (const char* d : {"GF(2)((t))", "GF(2^2; z^2+z+1)((t))", "GF(3)((t))"}) {
    const auto F = field(d);
    for (int i = 0; i < 500; ++i) {
      const auto a = s.element(F);
      const auto a2 = s.element(F);
      const auto b = s.nonzero(F);
      const auto b2 = s.nonzero(F);
      const auto ab = invariant(SymbolAlgebra(a, b));
      o.check(invariant(SymbolAlgebra(a + a2, b)) == ab + invariant(SymbolAlgebra(a2, b)),
              "first slot " + a.to_string() + ", " + a2.to_string() + ", " + b.to_string());
      o.check(invariant(SymbolAlgebra(a, b * b2)) == ab + invariant(SymbolAlgebra(a, b2)),
              "second slot " + a.to_string() + ", " + b.to_string() + ", " + b2.to_string());
      o.check(invariant(SymbolAlgebra(a, b), ResidueMode::kReduced) == ab, "reduced residue " + a.to_string());
      ++samples;
    }
  }
  o.note("bilinearity: " + str(samples) + " samples over three local fields");
  return o;
}

struct Criterion {
  int number;
  const char* name;
  double limit_seconds;
  std::function<Outcome()> run;
};

}  // namespace
}  // namespace symlen

int main() {
  using namespace symlen;
  const std::vector<Criterion> criteria{
      {1, "rewrite rules keep the invariant and carry verified certificates", 120, rules_preserve_invariant},
      {2, "slot rewriting cases a, b and c give the predicted slots", 0, slot_cases},
      {3, "phi is isotropic over finite fields", 0, phi_isotropic_over_finite_fields},
      {4, "quaternion products over F_2((t)) reduce to length <= 1", 300, local_quaternion_reduction},
      {5, "products over F_4 reduce to the split class", 0, finite_field_reduction},
      {6, "quaternion pairs over F_2((t)) share a slot", 0, local_common_slot},
      {7, "quadratic form invariants", 180, quadratic_forms},
      {8, "local invariant values and bilinearity", 0, local_invariant_checks},
  };
  bool all = true;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.check(false, std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0 && seconds > c.limit_seconds) {
      o.check(false, "took " + std::to_string(seconds) + " s, limit " + std::to_string(c.limit_seconds) + " s");
    }
    all = all && o.pass;
    std::printf("criterion %d: %s  %s (%.1f s)\n", c.number, o.pass ? "PASS" : "FAIL", c.name, seconds);
    for (const auto& n : o.notes) std::printf("    %s\n", n.c_str());
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
