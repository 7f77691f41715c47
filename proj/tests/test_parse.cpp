#include "symlen/parse.hpp"

#include <gtest/gtest.h>

#include "helpers.hpp"
#include "symlen/errors.hpp"

namespace symlen {
namespace {

using testing::c;
using testing::gf2_local;
using testing::gf4;
using testing::random_element;
using testing::t_of;

TEST(ParseField, Descriptors) {
  EXPECT_EQ(parse_field("GF(2)")->descriptor(), "GF(2)");
  EXPECT_EQ(parse_field(" GF( 3 ) ( t ) ")->descriptor(), "GF(3)(t)");
  EXPECT_EQ(parse_field("GF(2)((t))")->descriptor(), "GF(2)((t))");
  EXPECT_EQ(parse_field("GF(2^2; z^2+z+1)((t))")->descriptor(), "GF(2^2; z^2+z+1)((t))");
  EXPECT_TRUE(*parse_field("GF(4)") == *gf4());
  EXPECT_TRUE(*parse_field("GF(2^2)") == *gf4());
  EXPECT_EQ(parse_field("GF(3^2; z^2+1)")->base().order(), 9u);
  EXPECT_EQ(parse_field("GF(2)((s))")->variable_name(), "s");
  EXPECT_TRUE(parse_field("GF(5)((t))")->is_local());
}

TEST(ParseField, DescriptorRoundTrip) {
  for (const char* d : {"GF(2)", "GF(3)(t)", "GF(2^3; z^3+z+1)", "GF(3^2; z^2+z+2)((t))", "GF(7)((t))"}) {
    EXPECT_EQ(parse_field(parse_field(d)->descriptor())->descriptor(), parse_field(d)->descriptor()) << d;
  }
}

void expect_parse_error(auto&& f, std::size_t line, std::size_t column) {
  try {
    f();
    ADD_FAILURE() << "no ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), line) << e.what();
    EXPECT_EQ(e.column(), column) << e.what();
  }
}

TEST(ParseField, Errors) {
  expect_parse_error([] { parse_field("GF(6)"); }, 1, 4);
  expect_parse_error([] { parse_field("GF(4^2)"); }, 1, 4);
  expect_parse_error([] { parse_field("GF(2^2; z^2+1)"); }, 1, 9);
  expect_parse_error([] { parse_field("GF(2^3; z^2+z+1)"); }, 1, 9);
  expect_parse_error([] { parse_field("GF(2)((t)"); }, 1, 9);
  expect_parse_error([] { parse_field("GF(2)(z)"); }, 1, 7);
  expect_parse_error([] { parse_field("GF(2) x"); }, 1, 7);
  expect_parse_error([] { parse_field("QQ"); }, 1, 1);
  expect_parse_error([] { parse_field("GF(2)\n  ((t)"); }, 2, 6);
}

TEST(ParseElement, Arithmetic) {
  const auto L = gf2_local();
  const auto t = t_of(L);
  EXPECT_EQ(parse_element(L, "t^2+t+1"), t * t + t + c(L, 1));
  EXPECT_EQ(parse_element(L, "(t^2+1)/(t+1)"), t + c(L, 1));
  EXPECT_EQ(parse_element(L, "t^-3"), t.pow(-3));
  EXPECT_EQ(parse_element(L, "3t"), t);
  EXPECT_EQ(parse_element(L, "-t"), t);
  EXPECT_EQ(parse_element(L, "t (t+1)"), t * t + t);
  EXPECT_EQ(parse_element(L, "1/t/t"), t.pow(-2));
  const auto F4 = gf4();
  const auto z = FieldElement::generator(F4);
  EXPECT_EQ(parse_element(F4, "z^2"), z + c(F4, 1));
  EXPECT_EQ(parse_element(F4, "(z+1)*z"), c(F4, 1));
  const auto L3 = parse_field("GF(3^2; z^2+1)((t))");
  EXPECT_EQ(parse_element(L3, "(t^2+z)/(t+1)").to_string(), "(t^2+z)/(t+1)");
  EXPECT_EQ(parse_element(L3, "z^2"), c(L3, -1));
}

TEST(ParseElement, RoundTripsThroughToString) {
  for (const char* d : {"GF(2)((t))", "GF(3)(t)", "GF(2^2; z^2+z+1)((t))", "GF(3^2; z^2+1)(t)", "GF(5)"}) {
    const auto F = parse_field(d);
    std::mt19937_64 rng(F->base().order());
    for (int i = 0; i < 300; ++i) {
      const auto a = random_element(F, rng, 3);
      ASSERT_EQ(parse_element(F, a.to_string()), a) << d << ": " << a.to_string();
    }
  }
}

TEST(ParseElement, Errors) {
  const auto L = gf2_local();
  expect_parse_error([&] { parse_element(L, "t+"); }, 1, 3);
  expect_parse_error([&] { parse_element(L, "1/(t+t)"); }, 1, 2);
  expect_parse_error([&] { parse_element(L, "x+1"); }, 1, 1);
  expect_parse_error([&] { parse_element(L, "z"); }, 1, 1);
  expect_parse_error([&] { parse_element(L, "(t+1"); }, 1, 5);
  expect_parse_error([&] { parse_element(L, "0^-1"); }, 1, 2);
  expect_parse_error([&] { parse_element(L, "t^99999"); }, 1, 2);
  expect_parse_error([&] { parse_element(gf4(), "t"); }, 1, 1);
}

TEST(ParseProduct, Symbols) {
  const auto L = gf2_local();
  const auto t = t_of(L);
  const auto p = parse_product(L, "[1,t)*[1,t+1)*[1,t^2+t)");
  ASSERT_EQ(p.size(), 3u);
  EXPECT_EQ(p[2], SymbolAlgebra(c(L, 1), t * t + t));
  EXPECT_EQ(p.to_string(), "[1,t)*[1,t+1)*[1,t^2+t)");
  EXPECT_TRUE(parse_product(L, "1").empty());
  EXPECT_EQ(parse_product(L, "[(t+1)/t, (t))").to_string(), "[(t+1)/t,t)");
  EXPECT_EQ(parse_product(L, p.to_string()), p);
}

TEST(ParseProduct, Errors) {
  const auto L = gf2_local();
  expect_parse_error([&] { parse_product(L, "[1,0)"); }, 1, 4);
  expect_parse_error([&] { parse_product(L, "[1,t]"); }, 1, 5);
  expect_parse_error([&] { parse_product(L, "[1,t)*"); }, 1, 7);
  expect_parse_error([&] { parse_product(L, "[1,t)\n*[1;t)"); }, 2, 4);
}

TEST(ParseForm, Forms) {
  const auto L = gf2_local();
  const auto t = t_of(L);
  const auto q = parse_form(L, "[1,1]+<t,1>+[t,1/t]");
  ASSERT_EQ(q.pairs().size(), 2u);
  EXPECT_EQ(q.pairs()[1], (QuadraticForm::Pair{t, t.inverse()}));
  EXPECT_EQ(q.diagonal(), (std::vector<FieldElement>{t, c(L, 1)}));
  EXPECT_EQ(parse_form(L, "0").dimension(), 0u);
  EXPECT_EQ(parse_form(L, q.to_string()), q);
  expect_parse_error([&] { parse_form(L, "[1,1]+"); }, 1, 7);
  expect_parse_error([&] { parse_form(parse_field("GF(3)"), "[1,1]"); }, 1, 1);
}

}  // namespace
}  // namespace symlen
