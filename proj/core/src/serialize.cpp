#include "symlen/serialize.hpp"

#include <cctype>
#include <map>

#include "symlen/errors.hpp"
#include "symlen/parse.hpp"

namespace symlen {

namespace {

using FieldCache = std::map<std::string, FieldPtr, std::less<>>;

const Json& member(const Json& j, const char* key) {
  if (!j.is_object()) throw SchemaError(std::string("expected an object holding '") + key + "'");
  const auto it = j.find(key);
  if (it == j.end()) throw SchemaError(std::string("missing '") + key + "'");
  return *it;
}

const std::string& text(const Json& j, const char* what) {
  if (!j.is_string()) throw SchemaError(std::string(what) + " must be a string");
  return j.get_ref<const std::string&>();
}

std::size_t index(const Json& j, const char* what) {
  if (!j.is_number_unsigned()) throw SchemaError(std::string(what) + " must be a nonnegative integer");
  return j.get<std::size_t>();
}

FieldPtr field_of(const std::string& descriptor, FieldCache& cache) {
  if (const auto it = cache.find(descriptor); it != cache.end()) return it->second;
  FieldPtr f = parse_field(descriptor);
  cache.emplace(descriptor, f);
  return f;
}

FieldElement element(const FieldPtr& f, const Json& j, const char* what) { return parse_element(f, text(j, what)); }

TensorProduct presentation(const Json& j, FieldCache& cache) {
  const FieldPtr f = field_of(text(member(j, "field"), "field"), cache);
  const Json& p = member(j, "p");
  if (!p.is_number_unsigned() || p.get<unsigned>() != f->characteristic()) {
    throw SchemaError("'p' does not match the field " + f->descriptor());
  }
  const Json& factors = member(j, "factors");
  if (!factors.is_array()) throw SchemaError("'factors' must be an array");
  std::vector<SymbolAlgebra> out;
  for (const auto& s : factors) {
    FieldElement beta = element(f, member(s, "beta"), "beta");
    if (beta.is_zero()) throw SchemaError("a second slot is zero");
    out.emplace_back(element(f, member(s, "alpha"), "alpha"), std::move(beta));
  }
  return TensorProduct(f, std::move(out));
}

std::string monomial_key(const AlgebraHost& host, std::uint32_t idx) {
  const auto e = host.exponents(idx);
  std::string key;
  for (std::size_t i = 0; i < e.size(); i += 2) key += "e" + std::to_string(e[i]) + "f" + std::to_string(e[i + 1]);
  return key;
}

std::vector<unsigned> parse_monomial_key(const std::string& key, const AlgebraHost& host) {
  std::vector<unsigned> e;
  std::size_t i = 0;
  auto number = [&](char tag) {
    if (i >= key.size() || key[i] != tag) throw SchemaError("bad monomial key '" + key + "'");
    ++i;
    const std::size_t start = i;
    unsigned v = 0;
    while (i < key.size() && std::isdigit(static_cast<unsigned char>(key[i]))) v = v * 10 + static_cast<unsigned>(key[i++] - '0');
    if (i == start || v >= host.p()) throw SchemaError("bad monomial key '" + key + "'");
    e.push_back(v);
  };
  while (i < key.size()) {
    number('e');
    number('f');
  }
  if (e.size() != 2 * host.num_factors()) throw SchemaError("monomial key '" + key + "' has the wrong number of factors");
  return e;
}

Json invariant_json(const LocalInvariant& inv) { return inv.value; }

std::optional<LocalInvariant> invariant_from(const Json& j, const char* key, unsigned p) {
  const auto it = j.find(key);
  if (it == j.end()) return std::nullopt;
  const std::size_t v = index(*it, key);
  if (v >= p) throw SchemaError(std::string(key) + " out of range");
  return LocalInvariant{static_cast<unsigned>(v), p};
}

Json certificate_json(const Certificate& c) {
  Json out;
  out["host"] = presentation_to_json(c.host->algebra());
  Json pairs = Json::array();
  for (const auto& s : c.pairs) {
    pairs.push_back({{"X", element_to_json(s.X)},
                     {"Y", element_to_json(s.Y)},
                     {"alpha", s.claimed_alpha.to_string()},
                     {"beta", s.claimed_beta.to_string()}});
  }
  out["pairs"] = std::move(pairs);
  if (c.zero_divisor) out["zero_divisor"] = element_to_json(*c.zero_divisor);
  return out;
}

Certificate certificate_from(const Json& j, FieldCache& cache) {
  Certificate c;
  TensorProduct host = presentation(member(j, "host"), cache);
  if (host.empty()) throw SchemaError("a certificate host is empty");
  try {
    c.host = AlgebraHost::create(std::move(host));
  } catch (const PreconditionError& e) {
    throw SchemaError(std::string("certificate host: ") + e.what());
  }
  const FieldPtr& f = c.host->field();
  const Json& pairs = member(j, "pairs");
  if (!pairs.is_array()) throw SchemaError("'pairs' must be an array");
  for (const auto& s : pairs) {
    c.pairs.push_back({element_from_json(c.host, member(s, "X")), element_from_json(c.host, member(s, "Y")),
                       element(f, member(s, "alpha"), "alpha"), element(f, member(s, "beta"), "beta")});
  }
  if (const auto it = j.find("zero_divisor"); it != j.end()) c.zero_divisor = element_from_json(c.host, *it);
  return c;
}

RewriteStep step(const Json& j, FieldCache& cache) {
  const std::string& name = text(member(j, "rule"), "rule");
  const auto rule = rule_from_name(name);
  if (!rule) throw SchemaError("unknown rule '" + name + "'");
  TensorProduct before = presentation(member(j, "before"), cache);
  TensorProduct after = presentation(member(j, "after"), cache);
  const FieldPtr f = before.field();
  StepParams params;
  const Json& p = member(j, "params");
  if (!p.is_object()) throw SchemaError("'params' must be an object");
  if (const auto it = p.find("factors"); it != p.end()) {
    for (const auto& i : *it) params.factors.push_back(index(i, "factor position"));
  }
  if (const auto it = p.find("f"); it != p.end()) {
    for (const auto& c : *it) params.f.push_back(element(f, c, "f"));
  }
  if (const auto it = p.find("v"); it != p.end()) params.v = element(f, *it, "v");
  if (const auto it = p.find("permutation"); it != p.end()) {
    for (const auto& i : *it) params.permutation.push_back(index(i, "permutation entry"));
  }
  if (const auto it = p.find("target"); it != p.end()) params.target = element(f, *it, "target");
  RewriteStep out{*rule, std::move(params), std::move(before), std::move(after), std::nullopt, std::nullopt, std::nullopt};
  if (const auto it = j.find("certificate"); it != j.end()) out.certificate = certificate_from(*it, cache);
  out.invariant_before = invariant_from(j, "oracle_invariant_before", f->characteristic());
  out.invariant_after = invariant_from(j, "oracle_invariant_after", f->characteristic());
  return out;
}

}  // namespace

Json presentation_to_json(const TensorProduct& t) {
  Json factors = Json::array();
  for (const auto& a : t.factors()) factors.push_back({{"alpha", a.alpha().to_string()}, {"beta", a.beta().to_string()}});
  return {{"field", t.field()->descriptor()}, {"p", t.p()}, {"factors", std::move(factors)}};
}

TensorProduct presentation_from_json(const Json& j) {
  FieldCache cache;
  return presentation(j, cache);
}

Json element_to_json(const AlgebraElement& a) {
  Json out = Json::object();
  for (const auto& [idx, c] : a.coeffs()) out[monomial_key(*a.host(), idx)] = c.to_string();
  return out;
}

AlgebraElement element_from_json(const HostPtr& host, const Json& j) {
  if (!j.is_object()) throw SchemaError("an algebra element must be an object");
  SparseVector coeffs;
  for (const auto& [key, value] : j.items()) {
    const auto e = parse_monomial_key(key, *host);
    FieldElement c = element(host->field(), value, "coefficient");
    if (!c.is_zero()) coeffs[host->index(e)] = std::move(c);
  }
  return AlgebraElement(host, std::move(coeffs));
}

Json step_to_json(const RewriteStep& s) {
  Json params = Json::object();
  if (!s.params.factors.empty()) params["factors"] = s.params.factors;
  if (!s.params.f.empty()) {
    Json f = Json::array();
    for (const auto& c : s.params.f) f.push_back(c.to_string());
    params["f"] = std::move(f);
  }
  if (s.params.v) params["v"] = s.params.v->to_string();
  if (!s.params.permutation.empty()) params["permutation"] = s.params.permutation;
  if (s.params.target) params["target"] = s.params.target->to_string();
  Json out{{"rule", std::string(rule_name(s.rule))},
           {"params", std::move(params)},
           {"before", presentation_to_json(s.before)},
           {"after", presentation_to_json(s.after)}};
  if (s.certificate) out["certificate"] = certificate_json(*s.certificate);
  if (s.invariant_before) out["oracle_invariant_before"] = invariant_json(*s.invariant_before);
  if (s.invariant_after) out["oracle_invariant_after"] = invariant_json(*s.invariant_after);
  return out;
}

RewriteStep step_from_json(const Json& j) {
  FieldCache cache;
  return step(j, cache);
}

Json trace_to_json(const RewriteTrace& trace) {
  Json out = Json::array();
  for (const auto& s : trace) out.push_back(step_to_json(s));
  return out;
}

RewriteTrace trace_from_json(const Json& j) {
  if (!j.is_array()) throw SchemaError("a trace must be an array of steps");
  FieldCache cache;
  RewriteTrace out;
  for (const auto& s : j) out.push_back(step(s, cache));
  return out;
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

Json load_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError("malformed JSON", line, column);
  }
}

ReplayReport replay_trace(const RewriteTrace& trace) {
  ReplayReport r;
  if (trace.empty()) return r;
  auto fail = [&](std::size_t i, const std::string& why) {
    r.ok = false;
    r.diagnostic = "step " + std::to_string(i) + " (" + std::string(rule_name(trace[i].rule)) + "): " + why;
    return r;
  };
  for (std::size_t i = 0; i < trace.size(); ++i) {
    const RewriteStep& s = trace[i];
    if (i > 0 && !(s.before == trace[i - 1].after)) return fail(i, "does not continue from the previous step");
    if (!replay_step(s)) return fail(i, "re-application does not reproduce the recorded result");
    if (s.certificate) {
      const auto check = verify_step(s);
      if (!check.ok) return fail(i, "certificate: " + check.diagnostic);
    }
    if (s.invariant_before && s.invariant_after && !(*s.invariant_before == *s.invariant_after)) {
      return fail(i, "recorded invariants differ");
    }
    ++r.steps;
  }
  return r;
}

}  // namespace symlen
