#include "symlen/rule_audit.hpp"

#include <gtest/gtest.h>

#include "helpers.hpp"
#include "symlen/parse.hpp"
#include "symlen/sampling.hpp"

namespace symlen {
namespace {

void expect_clean(const RuleAudit& audit, std::size_t samples) {
  EXPECT_EQ(audit.tallies.size(), 10u);
  for (const auto& t : audit.tallies) {
    EXPECT_EQ(t.passed, samples) << rule_name(t.rule);
    EXPECT_EQ(t.failed, 0u) << rule_name(t.rule) << ": " << (t.failures.empty() ? "" : t.failures.front());
  }
  EXPECT_TRUE(audit.ok());
}

TEST(RuleAudit, LocalFieldsKeepTheInvariant) {
  for (const char* d : {"GF(2)((t))", "GF(3)((t))", "GF(2^2; z^2+z+1)((t))"}) {
    const auto audit = audit_rules(parse_field(d), 25, 1);
    expect_clean(audit, 25);
    for (const auto& t : audit.tallies) EXPECT_EQ(t.invariant_checked, 25u) << d << " " << rule_name(t.rule);
  }
}

TEST(RuleAudit, CertificatesOverOtherFields) {
  for (const char* d : {"GF(3)(t)", "GF(2)(t)", "GF(4)", "GF(5)"}) {
    const auto audit = audit_rules(parse_field(d), 15, 2);
    expect_clean(audit, 15);
    for (const auto& t : audit.tallies) EXPECT_EQ(t.invariant_checked, 0u);
  }
}

TEST(RuleAudit, ContextReachesDimension81) {
  const auto audit = audit_rules(parse_field("GF(2)((t))"), 30, 3);
  std::size_t largest = 0;
  for (const auto& t : audit.tallies) largest = std::max(largest, t.largest_host);
  EXPECT_EQ(largest, 64u);
  const auto audit3 = audit_rules(parse_field("GF(3)((t))"), 10, 3);
  EXPECT_EQ(audit3.tallies.front().largest_host, 81u);
}

TEST(RuleAudit, EmptyAndDeterministic) {
  const auto f = parse_field("GF(3)((t))");
  const auto empty = audit_rules(f, 0, 9);
  EXPECT_TRUE(empty.ok());
  for (const auto& t : empty.tallies) EXPECT_EQ(t.passed + t.failed, 0u);
  const auto a = audit_rules(f, 5, 9);
  const auto b = audit_rules(f, 5, 9);
  for (std::size_t i = 0; i < a.tallies.size(); ++i) EXPECT_EQ(a.tallies[i].full_host, b.tallies[i].full_host);
}

TEST(Sampler, SeededDraws) {
  const auto f = parse_field("GF(2)((t))");
  Sampler a(4);
  Sampler b(4);
  for (int i = 0; i < 50; ++i) ASSERT_EQ(a.product(f, 2), b.product(f, 2));
  EXPECT_FALSE(Sampler(5).product(f, 3) == Sampler(6).product(f, 3));
}

}  // namespace
}  // namespace symlen
