#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "symlen/field.hpp"
#include "symlen/rewrite.hpp"

namespace symlen {

struct RuleTally {
  Rule rule;
  std::size_t passed = 0;
  std::size_t failed = 0;
  /// Instances whose certificate was checked inside the whole presentation.
  std::size_t full_host = 0;
  /// Instances with the local invariant compared before and after.
  std::size_t invariant_checked = 0;
  std::size_t largest_host = 0;
  std::vector<std::string> failures;  // the first few diagnostics
};

struct RuleAudit {
  std::vector<RuleTally> tallies;
  bool ok() const;
};

/// Every rule is applied to `samples` seeded random presentations, inside a
/// context of extra factors while the whole algebra stays within dimension
/// 81. Each step must carry a certificate that verifies, replay to the same
/// result and, over F_q((t)), keep the total invariant.
RuleAudit audit_rules(const FieldPtr& field, std::size_t samples, std::uint64_t seed);

}  // namespace symlen
