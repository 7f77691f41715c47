#include <gtest/gtest.h>

#include "helpers.hpp"
#include "symlen/artin_schreier.hpp"
#include "symlen/errors.hpp"

namespace symlen {
namespace {

using testing::c;
using testing::t_of;

TEST(Wp, Examples) {
  auto f4 = testing::gf4();
  const auto g = FieldElement::generator(f4);
  EXPECT_EQ(wp(FieldElement::zero(f4)), FieldElement::zero(f4));
  EXPECT_EQ(wp(g), c(f4, 1));
  EXPECT_EQ(wp(c(testing::gf3(), 2)), FieldElement::zero(testing::gf3()));
}

TEST(WpSolve, Examples) {
  auto f2 = testing::gf2();
  EXPECT_EQ(wp_solve(c(f2, 0)), (std::vector<FieldElement>{c(f2, 0), c(f2, 1)}));
  EXPECT_TRUE(wp_solve(c(f2, 1)).empty());
  auto f4 = testing::gf4();
  const auto g = FieldElement::generator(f4);
  EXPECT_EQ(wp_solve(c(f4, 1)), (std::vector<FieldElement>{g, g + c(f4, 1)}));
  EXPECT_THROW(wp_solve(c(testing::gf2_local(), 1)), UnsupportedFieldError);
}

TEST(WpSolve, SolutionCountIsZeroOrP) {
  for (const auto& f : {testing::gf3(), testing::gf4(), Field::finite(GaloisField::with_default_modulus(3, 2))}) {
    for (GaloisField::Elem a = 0; a < f->base().order(); ++a) {
      const auto n = wp_solve(FieldElement::from_base(f, a)).size();
      EXPECT_TRUE(n == 0 || n == f->characteristic());
    }
  }
}

TEST(WpCanonical, FiniteCosets) {
  auto f4 = testing::gf4();
  const auto g = FieldElement::generator(f4);
  // wp(F_4) = {0, 1}: cosets {0,1} and {g, g+1}.
  EXPECT_EQ(wp_canonical(c(f4, 1)), c(f4, 0));
  EXPECT_EQ(wp_canonical(g + c(f4, 1)), g);
  EXPECT_EQ(wp_canonical(c(testing::gf2(), 1)), c(testing::gf2(), 1));
}

TEST(WpCanonical, LocalFoldsPolesDivisibleByP) {
  auto f = testing::gf2_local();
  const auto t = t_of(f);
  const auto one = c(f, 1);
  // 1/t^2 == 1/t, t == 0, 1/(1+t) == 1.
  EXPECT_EQ(wp_canonical(one / (t * t)), one / t);
  EXPECT_EQ(wp_canonical(t), FieldElement::zero(f));
  EXPECT_EQ(wp_canonical(one / (one + t)), one);
  EXPECT_TRUE(in_wp_image(one / (t * t) + one / t));
  EXPECT_FALSE(in_wp_image(one / t));
}

TEST(WpCanonical, InvariantUnderWpShifts) {
  std::mt19937_64 rng(3);
  for (const auto& f : {testing::gf4_local(), testing::gf3_local()}) {
    for (int i = 0; i < 200; ++i) {
      const auto a = testing::random_element(f, rng);
      const auto v = testing::random_element(f, rng);
      EXPECT_EQ(wp_canonical(a), wp_canonical(a + wp(v)));
      EXPECT_TRUE(wp_equivalent(a, a + wp(v)));
    }
  }
}

TEST(WpPreimage, RationalFunctions) {
  std::mt19937_64 rng(5);
  for (const auto& f : {testing::gf2_rational(), testing::gf3_rational(), testing::gf4_local()}) {
    for (int i = 0; i < 100; ++i) {
      const auto v = testing::random_element(f, rng);
      const auto pre = wp_preimage(wp(v));
      ASSERT_TRUE(pre.has_value());
      EXPECT_EQ(wp(*pre), wp(v));
    }
  }
  auto f = testing::gf2_rational();
  EXPECT_FALSE(wp_preimage(t_of(f)).has_value());
  EXPECT_FALSE(in_wp_image(c(f, 1)));
  EXPECT_THROW(wp_canonical(t_of(f)), UnsupportedFieldError);
}

TEST(AsNorm, Examples) {
  auto f = testing::gf3_rational();
  const auto t = t_of(f);
  ArtinSchreierExtension k(t);
  EXPECT_EQ(as_norm(k.scalar(c(f, 2) * t)), (c(f, 2) * t).pow(3));
  EXPECT_EQ(as_norm(k.x()), t);

  auto f2 = testing::gf2_local();
  const auto alpha = c(f2, 1) / t_of(f2);
  ArtinSchreierExtension k2(alpha);
  const auto u = t_of(f2) + c(f2, 1);
  const auto v = t_of(f2) * t_of(f2);
  EXPECT_EQ(as_norm(k2.element({v, u})), alpha * u * u + u * v + v * v);
}

TEST(AsNorm, MultiplicativeAndMatchesNormForm) {
  std::mt19937_64 rng(13);
  for (const auto& f : {testing::gf4_local(), testing::gf3_local(), testing::gf3()}) {
    ArtinSchreierExtension k(testing::random_element(f, rng));
    const auto form = norm_form(k);
    for (int i = 0; i < 1000; ++i) {
      std::vector<FieldElement> a, b;
      for (unsigned j = 0; j < k.degree(); ++j) {
        a.push_back(testing::random_element(f, rng, 1));
        b.push_back(testing::random_element(f, rng, 1));
      }
      const auto fa = k.element(a);
      const auto fb = k.element(b);
      EXPECT_EQ(as_norm(fa * fb), as_norm(fa) * as_norm(fb));
      if (i < 200) {
        const auto coords = norm_coordinates(fa);
        EXPECT_EQ(form.evaluate(coords), as_norm(fa));
        EXPECT_EQ(from_norm_coordinates(k, coords), fa);
      }
    }
  }
}

TEST(NormForm, QuadraticShape) {
  auto f = testing::gf2();
  ArtinSchreierExtension k(FieldElement::zero(f));
  const auto form = norm_form(k);
  EXPECT_EQ(form.dimension(), 2u);
  const std::vector<FieldElement> iso{c(f, 1), c(f, 0)};
  EXPECT_TRUE(form.evaluate(iso).is_zero());
  EXPECT_EQ(form.to_string({"u", "v"}), "u*v + v^2");
}

TEST(ArtinSchreierExtension, FieldIffNormAnisotropic) {
  auto f = testing::gf4();
  for (GaloisField::Elem a = 0; a < 4; ++a) {
    ArtinSchreierExtension k(FieldElement::from_base(f, a));
    bool has_zero = false;
    for (GaloisField::Elem u = 0; u < 4; ++u) {
      for (GaloisField::Elem v = 0; v < 4; ++v) {
        if (u == 0 && v == 0) continue;
        has_zero |= as_norm(k.element({FieldElement::from_base(f, v), FieldElement::from_base(f, u)})).is_zero();
      }
    }
    EXPECT_EQ(k.is_field(), !has_zero) << a;
  }
}

TEST(ExtElement, ConjugationIsGaloisAction) {
  auto f = testing::gf3_local();
  ArtinSchreierExtension k(c(f, 1) / t_of(f));
  const auto x = k.x();
  EXPECT_EQ(x.conjugate(1), x + k.scalar(c(f, 1)));
  EXPECT_EQ(x * x * x - x, k.scalar(k.alpha()));
  const auto g = k.element({t_of(f), c(f, 2), c(f, 1)});
  EXPECT_EQ((g * g).conjugate(2), g.conjugate(2) * g.conjugate(2));
}

}  // namespace
}  // namespace symlen
