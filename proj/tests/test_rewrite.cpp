#include "symlen/rewrite.hpp"

#include <gtest/gtest.h>

#include "helpers.hpp"
#include "symlen/errors.hpp"

namespace symlen {
namespace {

using testing::c;
using testing::gf2;
using testing::gf2_local;
using testing::gf3;
using testing::gf3_local;
using testing::random_element;
using testing::random_nonzero;
using testing::t_of;

void expect_certified(const RuleApplication& app, std::size_t outputs) {
  ASSERT_TRUE(app.certificate);
  const auto check = verify_certificate(*app.certificate, outputs);
  EXPECT_TRUE(check.ok) << check.diagnostic;
}

TEST(RuleNames, RoundTrip) {
  for (Rule r : {Rule::kScaleSecond, Rule::kAddBetaToAlpha, Rule::kAddWpToAlpha, Rule::kAddPthPowerToBeta,
                 Rule::kSplitRecognize, Rule::kTransferAlpha, Rule::kMergeSlots, Rule::kMergeSameAlpha,
                 Rule::kMergeSameBeta, Rule::kReorder}) {
    EXPECT_EQ(rule_from_name(rule_name(r)), r);
  }
  EXPECT_FALSE(rule_from_name("Nope"));
}

TEST(Rules, AddBetaToAlphaOverLocalField) {
  const auto F = gf2_local();
  const auto t = t_of(F);
  const SymbolAlgebra a(t.inverse(), t);
  const auto app = add_beta_to_alpha(a);
  ASSERT_EQ(app.outputs.size(), 1u);
  EXPECT_EQ(app.outputs[0], SymbolAlgebra(t.inverse() + t, t));
  expect_certified(app, 1);
  EXPECT_EQ(invariant(a), invariant(app.outputs[0]));
}

TEST(Rules, ScaleSecondByNorm) {
  const auto F = gf3_local();
  const auto t = t_of(F);
  const SymbolAlgebra a(t.inverse(), t);
  const auto ext = a.first_slot_extension();
  const auto f = ext.element({c(F, 1), c(F, 1), FieldElement::zero(F)});
  const auto app = scale_second_slot(a, f);
  EXPECT_EQ(app.outputs[0].beta(), as_norm(f) * t);
  expect_certified(app, 1);
  EXPECT_EQ(invariant(a), invariant(app.outputs[0]));
}

TEST(Rules, AddPthPowerToBetaGivesScalarAlpha) {
  for (const auto& F : {gf2_local(), gf3_local()}) {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 20; ++i) {
      const SymbolAlgebra a(random_element(F, rng), random_nonzero(F, rng));
      const auto v = random_element(F, rng, 1);
      if ((a.beta() + v.frobenius()).is_zero()) continue;
      const auto app = add_pth_power_to_beta(a, v);
      expect_certified(app, 1);
      EXPECT_EQ(invariant(a), invariant(app.outputs[0])) << a.to_string() << " v=" << v.to_string();
    }
  }
}

TEST(Rules, TwoFactorRulesPreserveTotalInvariant) {
  for (const auto& F : {gf2_local(), gf3_local()}) {
    std::mt19937_64 rng(F->characteristic());
    int checked = 0;
    for (int i = 0; i < 200; ++i) {
      const SymbolAlgebra a(random_element(F, rng), random_nonzero(F, rng));
      const SymbolAlgebra b(random_element(F, rng), random_nonzero(F, rng));
      const auto total = invariant(a) + invariant(b);
      const auto transfer = transfer_alpha(a, b);
      EXPECT_EQ(invariant(transfer.outputs[0]) + invariant(transfer.outputs[1]), total);
      if (!(a.beta() + b.beta()).is_zero()) {
        const auto merged = merge_slots(a, b);
        EXPECT_EQ(invariant(merged.outputs[0]) + invariant(merged.outputs[1]), total);
        if (i < 20) expect_certified(merged, 2);
      }
      if (i < 20) expect_certified(transfer, 2);
      ++checked;
    }
    EXPECT_EQ(checked, 200);
  }
}

TEST(Rules, MergeSameSlots) {
  const auto F = gf3_local();
  const auto t = t_of(F);
  const SymbolAlgebra a(t.inverse(), t);
  const SymbolAlgebra b(t.inverse(), t + c(F, 1));
  const auto app = merge_same_alpha(a, b);
  ASSERT_EQ(app.outputs.size(), 1u);
  ASSERT_EQ(app.dropped.size(), 1u);
  EXPECT_EQ(app.outputs[0], SymbolAlgebra(t.inverse(), t * (t + c(F, 1))));
  expect_certified(app, 1);

  const SymbolAlgebra d(c(F, 1) + t.inverse().frobenius(), t);
  const auto beta = merge_same_beta(a, d);
  EXPECT_EQ(beta.outputs[0], SymbolAlgebra(a.alpha() + d.alpha(), t));
  expect_certified(beta, 1);
  EXPECT_THROW(merge_same_alpha(a, d), PreconditionError);
}

TEST(Rules, SplitRecognizeFiniteField) {
  const auto F = gf3();
  const SymbolAlgebra a(c(F, 1), c(F, 2));
  const auto app = split_recognize(a, std::nullopt);
  EXPECT_TRUE(app.outputs.empty());
  ASSERT_TRUE(app.certificate->zero_divisor);
  expect_certified(app, 0);
}

TEST(Rules, SplitRecognizeRejectsDivisionAlgebra) {
  const auto F = gf2_local();
  const auto t = t_of(F);
  EXPECT_THROW(split_recognize(SymbolAlgebra(c(F, 1), t), std::nullopt), PreconditionError);
}

TEST(Steps, SpliceKeepsOrderAndRecordsInvariants) {
  const auto F = gf2_local();
  const auto t = t_of(F);
  const TensorProduct T(F, {SymbolAlgebra(t.inverse(), t), SymbolAlgebra(c(F, 1), t), SymbolAlgebra(t.inverse(), t)});
  StepParams params;
  params.factors = {2, 0};
  const auto step = apply_step(T, Rule::kMergeSameAlpha, params);
  ASSERT_EQ(step.after.size(), 2u);
  EXPECT_EQ(step.after[0], SymbolAlgebra(c(F, 1), t));
  EXPECT_EQ(step.after[1], SymbolAlgebra(t.inverse(), t * t));
  ASSERT_TRUE(step.invariant_before && step.invariant_after);
  EXPECT_EQ(*step.invariant_before, *step.invariant_after);
  EXPECT_TRUE(replay_step(step));
  const auto local = verify_step(step);
  EXPECT_TRUE(local.ok) << local.diagnostic;
  const auto full = verify_step(step, true);
  EXPECT_TRUE(full.ok) << full.diagnostic;
}

TEST(Steps, FullHostVerificationOfEveryRule) {
  const auto F = gf2_local();
  const auto t = t_of(F);
  const TensorProduct T(F, {SymbolAlgebra(t.inverse(), t), SymbolAlgebra(c(F, 1), t + c(F, 1)),
                            SymbolAlgebra(t, t.inverse())});
  std::vector<std::pair<Rule, StepParams>> cases;
  StepParams one;
  one.factors = {1};
  cases.emplace_back(Rule::kAddBetaToAlpha, one);
  StepParams wp = one;
  wp.v = t.inverse();
  cases.emplace_back(Rule::kAddWpToAlpha, wp);
  cases.emplace_back(Rule::kAddPthPowerToBeta, wp);
  StepParams scale = one;
  scale.f = {c(F, 1), c(F, 1)};
  cases.emplace_back(Rule::kScaleSecond, scale);
  StepParams two;
  two.factors = {0, 2};
  cases.emplace_back(Rule::kTransferAlpha, two);
  cases.emplace_back(Rule::kMergeSlots, two);
  StepParams reorder;
  reorder.permutation = {2, 0, 1};
  cases.emplace_back(Rule::kReorder, reorder);
  for (const auto& [rule, params] : cases) {
    const auto step = apply_step(T, rule, params);
    const auto check = verify_step(step, true);
    EXPECT_TRUE(check.ok) << rule_name(rule) << ": " << check.diagnostic;
    EXPECT_TRUE(replay_step(step)) << rule_name(rule);
    EXPECT_EQ(*step.invariant_before, *step.invariant_after) << rule_name(rule);
  }
}

TEST(Steps, TamperedOutputFailsVerification) {
  const auto F = gf2_local();
  const auto t = t_of(F);
  const TensorProduct T(F, {SymbolAlgebra(t.inverse(), t)});
  StepParams params;
  params.factors = {0};
  auto step = apply_step(T, Rule::kAddBetaToAlpha, params);
  step.after = TensorProduct(F, {SymbolAlgebra(t.inverse(), t)});
  EXPECT_FALSE(verify_step(step).ok);
  EXPECT_FALSE(replay_step(step));
}

TEST(Steps, LiftTraceAddsContext) {
  const auto F = gf2_local();
  const auto t = t_of(F);
  const TensorProduct T(F, {SymbolAlgebra(t.inverse(), t), SymbolAlgebra(t.inverse(), t)});
  StepParams params;
  params.factors = {0, 1};
  const RewriteTrace trace{apply_step(T, Rule::kMergeSameAlpha, params)};
  const TensorProduct prefix(F, {SymbolAlgebra(c(F, 1), t)});
  const TensorProduct suffix(F, {SymbolAlgebra(t, t)});
  const auto lifted = lift_trace(trace, prefix, suffix);
  ASSERT_EQ(lifted.size(), 1u);
  EXPECT_TRUE(chain_consistent(concat(concat(prefix, T), suffix), lifted));
  EXPECT_TRUE(replay_step(lifted[0]));
  EXPECT_EQ(lifted[0].params.factors, (std::vector<std::size_t>{1, 2}));
}

TEST(Steps, LiftedReorderStaysCertified) {
  const auto F = gf2_local();
  const auto t = t_of(F);
  const TensorProduct T(F, {SymbolAlgebra(t.inverse(), t), SymbolAlgebra(c(F, 1), t)});
  StepParams params;
  params.permutation = {1, 0};
  const RewriteTrace trace{apply_step(T, Rule::kReorder, params)};
  const TensorProduct context(F, {SymbolAlgebra(t, t + c(F, 1))});
  const auto lifted = lift_trace(trace, context, context);
  EXPECT_EQ(lifted[0].params.permutation, (std::vector<std::size_t>{0, 2, 1, 3}));
  EXPECT_TRUE(replay_step(lifted[0]));
  const auto check = verify_step(lifted[0], true);
  EXPECT_TRUE(check.ok) << check.diagnostic;
}

TEST(Steps, RejectsBadPositions) {
  const auto F = gf3();
  const TensorProduct T(F, {SymbolAlgebra(c(F, 1), c(F, 1))});
  StepParams params;
  params.factors = {3};
  EXPECT_THROW(apply_step(T, Rule::kAddBetaToAlpha, params), PreconditionError);
  params.factors = {0, 0};
  EXPECT_THROW(apply_step(T, Rule::kMergeSlots, params), PreconditionError);
  StepParams perm;
  perm.permutation = {1};
  EXPECT_THROW(apply_step(T, Rule::kReorder, perm), PreconditionError);
}

TEST(Rules, MergeSlotsOverRationalFunctions) {
  const auto F = testing::gf2_rational();
  const auto t = t_of(F);
  const auto app = merge_slots(SymbolAlgebra(t, t + c(F, 1)), SymbolAlgebra(c(F, 1), t));
  expect_certified(app, 2);
  EXPECT_EQ(app.outputs[0], SymbolAlgebra(t + c(F, 1), c(F, 1)));
}

}  // namespace
}  // namespace symlen
