#include <gtest/gtest.h>

#include "helpers.hpp"
#include "symlen/errors.hpp"
#include "symlen/search.hpp"

namespace symlen {
namespace {

using testing::c;

HomogeneousForm quadratic(const FieldPtr& f, std::size_t n,
                          const std::vector<std::tuple<std::size_t, std::size_t, FieldElement>>& terms) {
  Polynomial poly(f, n);
  for (const auto& [i, j, coeff] : terms) {
    Polynomial::Exponents e(n, 0);
    e[i] += 1;
    e[j] += 1;
    poly.add_term(e, coeff);
  }
  return HomogeneousForm(poly, 2);
}

TEST(FindIsotropic, AnisotropicBinaryOverF2) {
  auto f = testing::gf2();
  const auto form = quadratic(f, 2, {{0, 0, c(f, 1)}, {0, 1, c(f, 1)}, {1, 1, c(f, 1)}});
  EXPECT_FALSE(find_isotropic(form).has_value());
}

TEST(FindIsotropic, FirstProjectivePointInLexOrder) {
  auto f = testing::gf3();
  // x0^2 - x1^2: zeros (1,1), (1,2); (0,0,1) for the unused third variable comes first.
  const auto form = quadratic(f, 3, {{0, 0, c(f, 1)}, {1, 1, c(f, 2)}});
  const auto z = find_isotropic(form);
  ASSERT_TRUE(z.has_value());
  EXPECT_EQ(*z, (std::vector<FieldElement>{c(f, 0), c(f, 0), c(f, 1)}));
}

TEST(FindIsotropic, ChevalleyWarningOverFiniteFields) {
  std::mt19937_64 rng(43);
  for (const auto& f : {testing::gf2(), testing::gf4(), testing::gf3()}) {
    const unsigned p = f->characteristic();
    for (int trial = 0; trial < 30; ++trial) {
      const std::size_t n = p + 1;
      Polynomial poly(f, n);
      // Random degree-p form.
      std::vector<unsigned> e(n, 0);
      std::function<void(std::size_t, unsigned)> fill = [&](std::size_t i, unsigned left) {
        if (i + 1 == n) {
          e[i] = left;
          poly.add_term(e, testing::random_element(f, rng));
          return;
        }
        for (unsigned k = 0; k <= left; ++k) {
          e[i] = k;
          fill(i + 1, left - k);
        }
      };
      fill(0, p);
      if (poly.is_zero()) continue;
      const HomogeneousForm form(poly, p);
      const auto z = find_isotropic(form);
      ASSERT_TRUE(z.has_value());
      EXPECT_TRUE(form.evaluate(*z).is_zero());
    }
  }
}

TEST(FindIsotropic, LocalDimensionSixQuadraticForm) {
  std::mt19937_64 rng(47);
  auto f = testing::gf2_local();
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<std::tuple<std::size_t, std::size_t, FieldElement>> terms;
    for (std::size_t b = 0; b < 3; ++b) {
      terms.emplace_back(2 * b, 2 * b, testing::random_element(f, rng, 1));
      terms.emplace_back(2 * b, 2 * b + 1, testing::random_nonzero(f, rng, 1));
      terms.emplace_back(2 * b + 1, 2 * b + 1, testing::random_element(f, rng, 1));
    }
    const auto form = quadratic(f, 6, terms);
    const auto z = find_isotropic(form);
    ASSERT_TRUE(z.has_value());
    EXPECT_TRUE(form.evaluate(*z).is_zero());
    bool nonzero = false;
    for (const auto& x : *z) nonzero |= !x.is_zero();
    EXPECT_TRUE(nonzero);
  }
}

TEST(FindIsotropic, BudgetExhaustedOnAnisotropicLocalForm) {
  auto f = testing::gf2_local();
  const auto t = testing::t_of(f);
  // [1,1] + t[1,1] is anisotropic over F_2((t)).
  const auto form = quadratic(f, 4, {{0, 0, c(f, 1)}, {0, 1, c(f, 1)}, {1, 1, c(f, 1)},
                                     {2, 2, t}, {2, 3, t}, {3, 3, t}});
  EXPECT_THROW(find_isotropic(form, SearchBudget{3, 1 << 12}), BudgetExhausted);
}

TEST(FindIsotropic, RationalCoefficientsAreCleared) {
  auto f = testing::gf3_rational();
  const auto t = testing::t_of(f);
  const auto form = quadratic(f, 2, {{0, 0, c(f, 1) / t}, {1, 1, -(t / (t * t))}});
  const auto z = find_isotropic(form);
  ASSERT_TRUE(z.has_value());
  EXPECT_TRUE(form.evaluate(*z).is_zero());
}

}  // namespace
}  // namespace symlen
