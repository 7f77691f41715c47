#include <gtest/gtest.h>

#include "helpers.hpp"
#include "symlen/errors.hpp"

namespace symlen {
namespace {

using testing::c;
using testing::t_of;

TEST(FieldElement, CanonicalFractions) {
  auto f = testing::gf2_rational();
  const auto t = t_of(f);
  const auto a = (t * t + t) / (t * t);  // (t+1)/t
  EXPECT_EQ(a, (t + c(f, 1)) / t);
  EXPECT_EQ(a.denominator(), (poly::Poly{0, 1}));
  EXPECT_EQ(a.to_string(), "(t+1)/t");
}

TEST(FieldElement, FieldAxiomsOnRandomSamples) {
  std::mt19937_64 rng(7);
  for (const auto& f : {testing::gf4_local(), testing::gf3_rational()}) {
    for (int i = 0; i < 300; ++i) {
      const auto a = testing::random_element(f, rng);
      const auto b = testing::random_element(f, rng);
      const auto d = testing::random_nonzero(f, rng);
      EXPECT_EQ((a + b) * d, a * d + b * d);
      EXPECT_EQ(a * b, b * a);
      EXPECT_EQ((a / d) * d, a);
      EXPECT_EQ(a - a, FieldElement::zero(f));
    }
  }
}

TEST(FieldElement, FrobeniusIsAdditive) {
  std::mt19937_64 rng(11);
  for (const auto& f : {testing::gf4_local(), testing::gf3_local()}) {
    for (int i = 0; i < 200; ++i) {
      const auto a = testing::random_element(f, rng);
      const auto b = testing::random_element(f, rng);
      EXPECT_EQ((a + b).wp(), a.wp() + b.wp());
    }
  }
}

TEST(FieldElement, Valuation) {
  auto f = testing::gf2_local();
  const auto t = t_of(f);
  EXPECT_EQ(t.valuation(), 1);
  EXPECT_EQ((c(f, 1) / (t * t + t)).valuation(), -1);
  EXPECT_THROW((void)FieldElement::zero(f).valuation(), PreconditionError);
}

TEST(FieldElement, LaurentExpansionOfGeometricSeries) {
  auto f = testing::gf2_local();
  const auto t = t_of(f);
  const auto ex = laurent_expand(c(f, 1) / (t * (c(f, 1) + t)), 3);
  EXPECT_EQ(ex.valuation, -1);
  for (int e = -1; e <= 3; ++e) EXPECT_EQ(ex.coefficient(e), 1u) << e;
}

TEST(FieldElement, Derivative) {
  auto f = testing::gf3_rational();
  const auto t = t_of(f);
  EXPECT_EQ((t * t * t).derivative(), FieldElement::zero(f));
  EXPECT_EQ((c(f, 1) / t).derivative(), -(c(f, 1) / (t * t)));
}

TEST(FieldElement, PthRoot) {
  auto f = testing::gf4_local();
  const auto t = t_of(f);
  const auto z = FieldElement::generator(f);
  const auto a = (z * t + c(f, 1)) / (t * t);
  EXPECT_EQ(a.frobenius().pth_root(), a);
  EXPECT_FALSE(t.pth_root().has_value());
}

TEST(FieldElement, RejectsVariableOverFiniteField) {
  EXPECT_THROW((void)t_of(testing::gf2()), UnsupportedFieldError);
  EXPECT_THROW((void)(c(testing::gf2(), 1) / FieldElement::zero(testing::gf2())), PreconditionError);
}

TEST(Field, DeclaredHypotheses) {
  EXPECT_EQ(testing::gf2()->degree_bound(), 2u);
  EXPECT_EQ(testing::gf2()->u_invariant(), 2u);
  EXPECT_EQ(testing::gf3_local()->degree_bound(), 9u);
  EXPECT_FALSE(testing::gf3_local()->u_invariant().has_value());
  EXPECT_EQ(testing::gf2_local()->u_invariant(), 4u);
  EXPECT_TRUE(testing::gf4_local()->declares_iq3_zero());
  EXPECT_FALSE(testing::gf2_rational()->degree_bound().has_value());
  EXPECT_FALSE(testing::gf2_rational()->declares_iq3_zero());
}

TEST(Field, Descriptor) {
  EXPECT_EQ(testing::gf2()->descriptor(), "GF(2)");
  EXPECT_EQ(testing::gf4_local()->descriptor(), "GF(2^2; z^2+z+1)((t))");
  EXPECT_EQ(testing::gf3_rational()->descriptor(), "GF(3)(t)");
}

}  // namespace
}  // namespace symlen
