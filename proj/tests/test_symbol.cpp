#include <gtest/gtest.h>

#include "helpers.hpp"
#include "symlen/errors.hpp"
#include "symlen/symbol.hpp"

namespace symlen {
namespace {

using testing::c;
using testing::t_of;

HostPtr host_of(std::vector<SymbolAlgebra> factors) { return AlgebraHost::create(TensorProduct(std::move(factors))); }

TEST(Multiply, DefiningRelations) {
  auto f = testing::gf3_local();
  const auto alpha = t_of(f);
  const auto beta = c(f, 1) / t_of(f);
  auto h = host_of({SymbolAlgebra(alpha, beta)});
  const auto x = h->x(0);
  const auto y = h->y(0);
  EXPECT_EQ(y * x, x * y + y);
  EXPECT_EQ(x.pow(3), x + h->scalar(alpha));
  EXPECT_EQ(y.pow(3), h->scalar(beta));
}

TEST(Multiply, SumSquareInQuaternions) {
  auto f = testing::gf2_local();
  const auto alpha = t_of(f) + c(f, 1);
  const auto beta = t_of(f);
  auto h = host_of({SymbolAlgebra(alpha, beta)});
  const auto s = h->x(0) + h->y(0);
  EXPECT_EQ(s * s, s + h->scalar(alpha + beta));
}

TEST(Multiply, AssociativeOnRandomTriples) {
  std::mt19937_64 rng(17);
  for (const auto& f : {testing::gf2_local(), testing::gf3_local()}) {
    for (unsigned k : {1u, 2u}) {
      std::vector<SymbolAlgebra> factors;
      for (unsigned i = 0; i < k; ++i) {
        factors.emplace_back(testing::random_element(f, rng, 1), testing::random_nonzero(f, rng, 1));
      }
      auto h = host_of(factors);
      const int trials = f->characteristic() == 3 && k == 2 ? 150 : 1000;
      auto random_elem = [&] {
        SparseVector v;
        std::uniform_int_distribution<std::uint32_t> idx(0, h->dimension() - 1);
        for (int j = 0; j < 3; ++j) v[idx(rng)] = testing::random_element(f, rng, 1);
        return AlgebraElement(h, v);
      };
      for (int i = 0; i < trials; ++i) {
        const auto a = random_elem();
        const auto b = random_elem();
        const auto d = random_elem();
        ASSERT_EQ((a * b) * d, a * (b * d)) << h->algebra().to_string();
      }
    }
  }
}

TEST(VerifySymbolPair, Examples) {
  auto f = testing::gf2_local();
  const auto alpha = c(f, 1);
  const auto beta = t_of(f);
  const auto gamma = t_of(f) + c(f, 1);
  const auto delta = t_of(f) * t_of(f);
  auto h1 = host_of({SymbolAlgebra(alpha, beta)});
  EXPECT_TRUE(verify_symbol_pair({h1->x(0), h1->y(0), alpha, beta}));
  const auto bad = verify_symbol_pair({h1->x(0), h1->y(0), alpha, beta + c(f, 1)});
  EXPECT_FALSE(bad);
  EXPECT_NE(bad.diagnostic.find("Y^p"), std::string::npos);

  auto h2 = host_of({SymbolAlgebra(alpha, beta), SymbolAlgebra(gamma, delta)});
  EXPECT_TRUE(verify_symbol_pair({h2->x(0) + h2->x(1), h2->y(0), alpha + gamma, beta}));
  EXPECT_TRUE(commute(h2->x(0) + h2->x(1), h2->x(1)));
  EXPECT_FALSE(commute(h2->x(0), h2->y(0)));
}

TEST(VerifySymbolPair, ConstructedAlgebrasVerify) {
  std::mt19937_64 rng(19);
  for (const auto& f : {testing::gf3_rational(), testing::gf4_local()}) {
    for (int i = 0; i < 50; ++i) {
      SymbolAlgebra a(testing::random_element(f, rng), testing::random_nonzero(f, rng));
      auto h = host_of({a});
      EXPECT_TRUE(verify_symbol_pair({h->x(0), h->y(0), a.alpha(), a.beta()}));
    }
  }
}

TEST(SubalgebraDimension, Examples) {
  auto f = testing::gf2_local();
  auto h = host_of({SymbolAlgebra(c(f, 1), t_of(f)), SymbolAlgebra(t_of(f), t_of(f) + c(f, 1))});
  const std::vector<AlgebraElement> unit{h->one()};
  EXPECT_EQ(subalgebra_dimension(h, unit), 1u);
  const std::vector<AlgebraElement> first{h->x(0), h->y(0)};
  EXPECT_EQ(subalgebra_dimension(h, first), 4u);
  const std::vector<AlgebraElement> mixed{h->x(0) + h->x(1), h->y(0)};
  EXPECT_EQ(subalgebra_dimension(h, mixed), 4u);
}

TEST(Inverse, YInverseTimesW) {
  auto f = testing::gf3_rational();
  const auto t = t_of(f);
  auto h = host_of({SymbolAlgebra(t, t + c(f, 1)), SymbolAlgebra(t * t, t)});
  const auto yinv = inverse(h->y(0));
  ASSERT_TRUE(yinv.has_value());
  EXPECT_EQ(*yinv * h->y(0), h->one());
  EXPECT_EQ(*yinv, (c(f, 1) / (t + c(f, 1))) * h->y(0).pow(2));
  EXPECT_TRUE(commute(h->y(0), *yinv * h->y(1)));
}

TEST(Center, IsScalarsForDivisionAlgebra) {
  auto f = testing::gf2_local();
  auto h = host_of({SymbolAlgebra(c(f, 1), t_of(f))});
  const auto z = center(h);
  ASSERT_EQ(z.size(), 1u);
  EXPECT_TRUE(z[0].as_scalar().has_value());
  auto h2 = host_of({SymbolAlgebra(c(f, 1), t_of(f)), SymbolAlgebra(t_of(f), c(f, 1) / t_of(f))});
  EXPECT_EQ(center(h2).size(), 1u);
}

TEST(Embed, PreservesProducts) {
  auto f = testing::gf2_local();
  SymbolAlgebra a(c(f, 1), t_of(f));
  SymbolAlgebra b(t_of(f), t_of(f) + c(f, 1));
  auto small = host_of({a, b});
  auto big = host_of({b, SymbolAlgebra(c(f, 0), c(f, 1)), a});
  const std::vector<std::size_t> map{2, 0};
  const auto u = small->x(0) + small->y(1);
  const auto v = small->y(0) * small->x(1);
  EXPECT_EQ(embed(u * v, big, map), embed(u, big, map) * embed(v, big, map));
  EXPECT_EQ(embed(small->x(0), big, map), big->x(2));
}

TEST(FindZeroDivisor, Examples) {
  auto f = testing::gf4();
  const auto g = FieldElement::generator(f);
  for (GaloisField::Elem b = 1; b < 4; ++b) {
    SymbolAlgebra a(c(f, 1), FieldElement::from_base(f, b));
    auto w = find_zero_divisor(a);
    ASSERT_TRUE(w.has_value());
    EXPECT_TRUE(is_zero_divisor(*w));
  }
  auto loc = testing::gf2_local();
  auto split = find_zero_divisor(SymbolAlgebra(c(loc, 0), t_of(loc)));
  ASSERT_TRUE(split.has_value());
  EXPECT_TRUE(is_zero_divisor(*split));
  EXPECT_FALSE(find_zero_divisor(SymbolAlgebra(c(loc, 1), t_of(loc))).has_value());
  // [1, 1+t): 1+t = N(x + ...)? The norm search finds N(f)(1+t) a square.
  auto w = find_zero_divisor(SymbolAlgebra(t_of(loc), t_of(loc) + c(loc, 1)));
  if (w) EXPECT_TRUE(is_zero_divisor(*w));
  (void)g;
}

TEST(SymbolAlgebra, RejectsZeroBeta) {
  auto f = testing::gf2();
  EXPECT_THROW(SymbolAlgebra(c(f, 1), c(f, 0)), PreconditionError);
  EXPECT_THROW(host_of({SymbolAlgebra(c(f, 1), c(f, 1)), SymbolAlgebra(c(f, 1), c(f, 1)), SymbolAlgebra(c(f, 1), c(f, 1)),
                        SymbolAlgebra(c(f, 1), c(f, 1)), SymbolAlgebra(c(f, 1), c(f, 1)), SymbolAlgebra(c(f, 1), c(f, 1)),
                        SymbolAlgebra(c(f, 1), c(f, 1))}),
               PreconditionError);
}

}  // namespace
}  // namespace symlen
