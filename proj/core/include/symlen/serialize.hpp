#pragma once

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "symlen/rewrite.hpp"
#include "symlen/symbol.hpp"

namespace symlen {

using Json = nlohmann::json;

/// {"field": descriptor, "p": p, "factors": [{"alpha": ..., "beta": ...}]}.
Json presentation_to_json(const TensorProduct& t);
TensorProduct presentation_from_json(const Json& j);

/// {"e1f0e0f1": coefficient, ...}: one key per nonzero monomial, exponents
/// (e_i, f_i) of x_i^{e_i} y_i^{f_i} listed per factor.
Json element_to_json(const AlgebraElement& a);
AlgebraElement element_from_json(const HostPtr& host, const Json& j);

/// {"rule", "params", "before", "after", "certificate"?,
///  "oracle_invariant_before"?, "oracle_invariant_after"?}.
Json step_to_json(const RewriteStep& step);
RewriteStep step_from_json(const Json& j);

Json trace_to_json(const RewriteTrace& trace);
/// SchemaError on anything the schema does not allow; ParseError from the
/// element and field grammars inside it.
RewriteTrace trace_from_json(const Json& j);

/// Pretty-printed with sorted keys, so equal traces give identical bytes.
std::string dump_json(const Json& j);
/// ParseError with the line and column of malformed JSON.
Json load_json(std::string_view text);

struct ReplayReport {
  bool ok = true;
  std::size_t steps = 0;
  std::string diagnostic;  // first failure, empty when ok
};

/// Re-applies every step from its recorded parameters, checks the chain and
/// every certificate.
ReplayReport replay_trace(const RewriteTrace& trace);

}  // namespace symlen
