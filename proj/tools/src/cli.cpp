#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <sstream>

#include "symlen/errors.hpp"
#include "symlen/linkage.hpp"
#include "symlen/local_invariant.hpp"
#include "symlen/parse.hpp"
#include "symlen/quadform.hpp"
#include "symlen/rule_audit.hpp"
#include "symlen/serialize.hpp"

namespace symlen::cli {

namespace {

struct Options {
  std::string field;
  std::string first;
  std::string second;
  unsigned budget = SearchBudget{}.max_degree;
  std::uint64_t seed = 1;
  std::size_t samples = 100;
  unsigned n = 2;
  std::string trace_json;
  bool json = false;
};

class Command {
 public:
  Command(const Options& opt, std::ostream& out) : opt_(opt), out_(out) {}

  SearchBudget budget() const { return {.max_degree = opt_.budget}; }
  const std::string& input(std::size_t i) const { return i == 0 ? opt_.first : opt_.second; }

  // Human-readable lines are collected and printed unless --json is set.
  void line(const std::string& s) { text_ << s << "\n"; }
  void finish(const Json& j) {
    if (opt_.json) {
      out_ << dump_json(j);
    } else {
      out_ << text_.str();
    }
  }

  void write_trace(const Json& trace) const {
    if (opt_.trace_json.empty()) return;
    std::ofstream file(opt_.trace_json, std::ios::binary);
    if (!file) throw PreconditionError("cannot write " + opt_.trace_json);
    file << dump_json(trace);
  }

 private:
  const Options& opt_;
  std::ostream& out_;
  std::ostringstream text_;
};

Json invariant_json(const LocalInvariant& inv) { return {{"invariant", inv.value}, {"p", inv.p}}; }

int reduce(const Options& opt, std::ostream& out, std::ostream& err) {
  Command cmd(opt, out);
  const FieldPtr field = parse_field(opt.field);
  const TensorProduct t = parse_product(field, cmd.input(0));
  const Reduction r = reduce_symbol_length(t, cmd.budget());
  cmd.write_trace(trace_to_json(r.trace));
  Json j{{"input", t.to_string()},
         {"result", r.result.to_string()},
         {"length", r.result.size()},
         {"bound", r.bound},
         {"steps", r.trace.size()}};
  cmd.line("result: " + r.result.to_string());
  cmd.line("length: " + std::to_string(r.result.size()) + " (bound " + std::to_string(r.bound) + ")");
  cmd.line("steps: " + std::to_string(r.trace.size()));
  if (field->is_local()) {
    const auto inv = total_invariant(r.result);
    j["invariant"] = invariant_json(inv);
    cmd.line("invariant: " + inv.to_string());
  }
  if (r.budget_exhausted) {
    j["budget_exhausted"] = *r.budget_exhausted;
    cmd.line("partial: " + *r.budget_exhausted);
  }
  cmd.finish(j);
  if (r.budget_exhausted) {
    err << "budget exhausted: " << *r.budget_exhausted << "\n";
    return kBudgetExhausted;
  }
  return kOk;
}

int common_slot_cmd(const Options& opt, std::ostream& out) {
  Command cmd(opt, out);
  const FieldPtr field = parse_field(opt.field);
  const TensorProduct a = parse_product(field, cmd.input(0));
  const TensorProduct b = parse_product(field, cmd.input(1));
  const CommonSlot r = common_slot(a, b, cmd.budget());
  cmd.write_trace({{"a", trace_to_json(r.a.trace)}, {"b", trace_to_json(r.b.trace)}});
  const std::string side(side_name(r.side));
  cmd.line("side: " + side);
  cmd.line("a: " + r.a.result.to_string());
  cmd.line("b: " + r.b.result.to_string());
  cmd.finish({{"side", side},
              {"a", r.a.result.to_string()},
              {"b", r.b.result.to_string()},
              {"steps", {r.a.trace.size(), r.b.trace.size()}}});
  return kOk;
}

int invariant_cmd(const Options& opt, std::ostream& out) {
  Command cmd(opt, out);
  const FieldPtr field = parse_field(opt.field);
  const TensorProduct t = parse_product(field, cmd.input(0));
  const auto inv = total_invariant(t);
  cmd.line(inv.to_string());
  cmd.finish(invariant_json(inv));
  return kOk;
}

Json rows_json(const std::vector<Vector>& rows) {
  Json out = Json::array();
  for (const auto& r : rows) {
    Json row = Json::array();
    for (const auto& c : r) row.push_back(c.to_string());
    out.push_back(std::move(row));
  }
  return out;
}

int witt_cmd(const Options& opt, std::ostream& out, std::ostream& err) {
  Command cmd(opt, out);
  const FieldPtr field = parse_field(opt.field);
  const QuadraticForm q = parse_form(field, cmd.input(0));
  const WittDecomposition w = witt_decompose(q, cmd.budget());
  const bool verified = verify_witt(q, w);
  cmd.line("kernel: " + w.kernel.to_string());
  cmd.line("witt index: " + std::to_string(w.witt_index));
  cmd.line(std::string("basis change: ") + (verified ? "verified" : "FAILED"));
  if (!w.complete) cmd.line("partial: the kernel may still be isotropic");
  cmd.finish({{"kernel", w.kernel.to_string()},
              {"witt_index", w.witt_index},
              {"complete", w.complete},
              {"verified", verified},
              {"change_of_basis", rows_json(w.change_of_basis)}});
  if (!verified) return kCheckFailed;
  if (!w.complete) {
    err << "budget exhausted: no witness for the remaining kernel\n";
    return kBudgetExhausted;
  }
  return kOk;
}

int arf_cmd(const Options& opt, std::ostream& out) {
  Command cmd(opt, out);
  const FieldPtr field = parse_field(opt.field);
  const ArfClass a = arf(parse_form(field, cmd.input(0)));
  cmd.line(a.to_string());
  cmd.finish({{"arf", a.to_string()}, {"trivial", a.is_trivial()}});
  return kOk;
}

int clifford_cmd(const Options& opt, std::ostream& out) {
  Command cmd(opt, out);
  const FieldPtr field = parse_field(opt.field);
  const TensorProduct e = clifford(parse_form(field, cmd.input(0)));
  cmd.line(e.to_string());
  Json j{{"clifford", e.to_string()}};
  if (field->is_local()) {
    const auto inv = total_invariant(e);
    j["invariant"] = invariant_json(inv);
    cmd.line("invariant: " + inv.to_string());
  }
  cmd.finish(j);
  return kOk;
}

int sharpness_cmd(const Options& opt, std::ostream& out) {
  Command cmd(opt, out);
  const FieldPtr field = parse_field(opt.field);
  const SharpnessWitness w = sharpness_witness(field, opt.n, cmd.budget());
  cmd.line("form: " + w.form.to_string());
  cmd.line("clifford: " + w.clifford.to_string());
  cmd.line("invariant: " + w.invariant.to_string());
  cmd.line("symbol length: " + std::to_string(opt.n - 1));
  cmd.finish({{"form", w.form.to_string()},
              {"clifford", w.clifford.to_string()},
              {"invariant", invariant_json(w.invariant)},
              {"symbol_length", opt.n - 1}});
  return kOk;
}

int verify_lemmas(const Options& opt, std::ostream& out) {
  Command cmd(opt, out);
  const FieldPtr field = parse_field(opt.field);
  const RuleAudit audit = audit_rules(field, opt.samples, opt.seed);
  cmd.line("field: " + field->descriptor() + "  samples: " + std::to_string(opt.samples) +
           "  seed: " + std::to_string(opt.seed));
  Json rules = Json::array();
  char buf[160];
  std::snprintf(buf, sizeof buf, "%-18s %7s %7s %10s %10s", "rule", "passed", "failed", "full-host", "invariant");
  cmd.line(buf);
  for (const auto& t : audit.tallies) {
    std::snprintf(buf, sizeof buf, "%-18s %7zu %7zu %10zu %10zu", std::string(rule_name(t.rule)).c_str(), t.passed,
                  t.failed, t.full_host, t.invariant_checked);
    cmd.line(buf);
    for (const auto& f : t.failures) cmd.line("  " + f);
    rules.push_back({{"rule", std::string(rule_name(t.rule))},
                     {"passed", t.passed},
                     {"failed", t.failed},
                     {"full_host", t.full_host},
                     {"invariant_checked", t.invariant_checked},
                     {"failures", t.failures}});
  }
  cmd.line(audit.ok() ? "all rules pass" : "FAILURES");
  cmd.finish({{"field", field->descriptor()}, {"samples", opt.samples}, {"seed", opt.seed}, {"rules", rules}, {"ok", audit.ok()}});
  return audit.ok() ? kOk : kCheckFailed;
}

int replay_cmd(const Options& opt, std::ostream& out) {
  Command cmd(opt, out);
  std::ifstream file(cmd.input(0), std::ios::binary);
  if (!file) throw PreconditionError("cannot read " + cmd.input(0));
  std::stringstream buf;
  buf << file.rdbuf();
  const Json doc = load_json(buf.str());
  // A bare trace, or an object of named traces as written by common-slot.
  std::vector<std::pair<std::string, Json>> traces;
  if (doc.is_object()) {
    for (const auto& [k, v] : doc.items()) traces.emplace_back(k, v);
  } else {
    traces.emplace_back("trace", doc);
  }
  bool ok = true;
  Json report = Json::object();
  for (const auto& [name, j] : traces) {
    const RewriteTrace trace = trace_from_json(j);
    const ReplayReport r = replay_trace(trace);
    ok = ok && r.ok;
    const std::string last = trace.empty() ? "-" : trace.back().after.to_string();
    cmd.line(name + ": " + (r.ok ? "ok, " + std::to_string(r.steps) + " steps, result " + last : "FAILED " + r.diagnostic));
    report[name] = {{"ok", r.ok}, {"steps", r.steps}, {"diagnostic", r.diagnostic}};
  }
  cmd.finish(report);
  return ok ? kOk : kCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app("Symbol length reduction for p-algebras and characteristic-2 quadratic forms", "symlen");
  app.require_subcommand(1);
  Options opt;

  auto field_opt = [&](CLI::App* sub) {
    sub->add_option("--field", opt.field, "field descriptor, e.g. \"GF(2)((t))\" or \"GF(2^2; z^2+z+1)\"")->required();
  };
  auto budget_opt = [&](CLI::App* sub) {
    sub->add_option("--budget", opt.budget, "largest coefficient degree the searches enumerate")->capture_default_str();
  };
  auto json_opt = [&](CLI::App* sub) { sub->add_flag("--json", opt.json, "print the result as JSON"); };
  auto trace_opt = [&](CLI::App* sub) {
    sub->add_option("--trace-json", opt.trace_json, "write the rewrite trace to this file");
  };

  auto* reduce_cmd = app.add_subcommand("reduce", "shorten a tensor product of symbols");
  field_opt(reduce_cmd);
  budget_opt(reduce_cmd);
  trace_opt(reduce_cmd);
  json_opt(reduce_cmd);
  reduce_cmd->add_option("product", opt.first, "e.g. \"[1,t)*[1,t+1)\"")->required();

  auto* slot_cmd = app.add_subcommand("common-slot", "rewrite two products so their first factors share a slot");
  field_opt(slot_cmd);
  budget_opt(slot_cmd);
  trace_opt(slot_cmd);
  json_opt(slot_cmd);
  slot_cmd->add_option("a", opt.first, "first product")->required();
  slot_cmd->add_option("b", opt.second, "second product")->required();

  auto* inv_cmd = app.add_subcommand("invariant", "local invariant of a product over F_q((t))");
  field_opt(inv_cmd);
  json_opt(inv_cmd);
  inv_cmd->add_option("product", opt.first)->required();

  auto* witt = app.add_subcommand("witt", "Witt decomposition of a nonsingular form");
  field_opt(witt);
  budget_opt(witt);
  json_opt(witt);
  witt->add_option("form", opt.first, "e.g. \"[1,1]+[0,t]\"")->required();

  auto* arf_sub = app.add_subcommand("arf", "Arf invariant of a nonsingular form");
  field_opt(arf_sub);
  json_opt(arf_sub);
  arf_sub->add_option("form", opt.first)->required();

  auto* cliff = app.add_subcommand("clifford", "Clifford invariant of a trivial-Arf form as a product of quaternions");
  field_opt(cliff);
  json_opt(cliff);
  cliff->add_option("form", opt.first)->required();

  auto* sharp = app.add_subcommand("sharpness", "anisotropic form whose Clifford invariant needs n-1 symbols");
  field_opt(sharp);
  budget_opt(sharp);
  json_opt(sharp);
  sharp->add_option("--n", opt.n, "half the form dimension")->capture_default_str();

  auto* lemmas = app.add_subcommand("verify-lemmas", "audit every rewrite rule on seeded random instances");
  field_opt(lemmas);
  json_opt(lemmas);
  lemmas->add_option("--samples", opt.samples, "instances per rule")->capture_default_str();
  lemmas->add_option("--seed", opt.seed, "random seed")->capture_default_str();

  auto* replay = app.add_subcommand("replay", "re-check a trace written by --trace-json");
  json_opt(replay);
  replay->add_option("path", opt.first)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (reduce_cmd->parsed()) return reduce(opt, out, err);
    if (slot_cmd->parsed()) return common_slot_cmd(opt, out);
    if (inv_cmd->parsed()) return invariant_cmd(opt, out);
    if (witt->parsed()) return witt_cmd(opt, out, err);
    if (arf_sub->parsed()) return arf_cmd(opt, out);
    if (cliff->parsed()) return clifford_cmd(opt, out);
    if (sharp->parsed()) return sharpness_cmd(opt, out);
    if (lemmas->parsed()) return verify_lemmas(opt, out);
    if (replay->parsed()) return replay_cmd(opt, out);
  } catch (const BudgetExhausted& e) {
    err << "budget exhausted: " << e.what() << "\n";
    return kBudgetExhausted;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace symlen::cli
