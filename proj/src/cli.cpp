/*
 * Copyright 2026 The fuzzypref Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "fuzzypref/cli.hpp"

#include <charconv>
#include <ostream>

#include <CLI11.hpp>

#include "fuzzypref/closure.hpp"
#include "fuzzypref/extension.hpp"
#include "fuzzypref/io.hpp"
#include "fuzzypref/oracle.hpp"

namespace fuzzypref::cli {

namespace {

struct Options {
  std::string tnorm;  // empty: take it from the input file, else godel
  std::string format = "table";

  std::string input;
  std::string second_input;
  std::string variant;
  std::string property;
  std::string sense = "star";
  std::string relation_class = "r3";
  std::string order = "lex";
  std::uint64_t seed = 0;

  std::size_t size = 2;
  std::string values = "0,0.5,1";
  double step = 0.25;
  std::uint64_t cap = std::uint64_t{1} << 25;
};

// Reports a bad flag value; mapped to exit code 2.
class UsageError : public Error {
 public:
  using Error::Error;
};

TNormId resolve_tnorm(const Options& o, const std::optional<TNormId>& from_file) {
  if (!o.tnorm.empty()) return parse_tnorm(o.tnorm);
  return from_file.value_or(TNormId::godel);
}

bool json_output(const Options& o) { return o.format == "json"; }

void print_relation(std::ostream& out, const Options& o, const FuzzyRelation& r, TNormId t) {
  if (json_output(o)) {
    out << dump_json(relation_to_json(r, t), 2) << '\n';
  } else {
    out << format_table(r);
  }
}

Json violation_json(const Violation& v, const Universe& u) {
  Json j;
  j["kind"] = std::string(to_string(v.kind));
  j["pair"] = {u.label(v.row), u.label(v.col)};
  j["value"] = v.value;
  j["bound"] = v.bound;
  j["message"] = describe(v, u);
  return j;
}

int print_verdict(std::ostream& out, const Options& o, const std::string& what, TNormId t,
                  const Verdict& verdict, const Universe& u) {
  if (json_output(o)) {
    Json j;
    j["property"] = what;
    j["tnorm"] = std::string(to_string(t));
    j["verdict"] = verdict.holds;
    if (verdict.violation) j["violation"] = violation_json(*verdict.violation, u);
    out << dump_json(j, 2) << '\n';
  } else {
    out << what << ": " << (verdict.holds ? "true" : "false") << '\n';
    if (verdict.violation) out << "  violated: " << describe(*verdict.violation, u) << '\n';
  }
  return verdict.holds ? kExitOk : kExitFalse;
}

int cmd_closure(const Options& o, std::ostream& out) {
  auto doc = load_relation(o.input);
  const TNormId t = resolve_tnorm(o, doc.tnorm);
  print_relation(out, o, transitive_closure(doc.relation, t), t);
  return kExitOk;
}

int cmd_cclosure(const Options& o, std::ostream& out) {
  auto doc = load_relation(o.input);
  const TNormId t = resolve_tnorm(o, doc.tnorm);
  const ClosureVariant v = parse_closure_variant(o.variant);
  if (v == ClosureVariant::godel_star && t != TNormId::godel) {
    throw UsageError("--variant star requires --tnorm godel (got " +
                     std::string(to_string(t)) + ")");
  }
  print_relation(out, o, consistent_closure(doc.relation, t, v), t);
  return kExitOk;
}

int cmd_check(const Options& o, std::ostream& out) {
  auto doc = load_relation(o.input);
  const TNormId t = resolve_tnorm(o, doc.tnorm);
  const FuzzyRelation& r = doc.relation;
  if (o.property == "consistent") {
    return print_verdict(out, o, o.property, t, check_star_consistent(r, t), r.universe());
  }
  bool holds = false;
  if (o.property == "reflexive") holds = is_reflexive(r);
  else if (o.property == "irreflexive") holds = is_irreflexive(r);
  else if (o.property == "transitive") holds = is_transitive(r, t);
  else if (o.property == "total") holds = is_total(r);
  else if (o.property == "strongly-total") holds = is_strongly_total(r);
  return print_verdict(out, o, o.property, t, Verdict{holds, std::nullopt}, r.universe());
}

int cmd_compat(const Options& o, std::ostream& out) {
  auto rdoc = load_relation(o.input);
  auto qdoc = load_relation(o.second_input);
  const TNormId t = resolve_tnorm(o, rdoc.tnorm ? rdoc.tnorm : qdoc.tnorm);
  const Verdict v = o.sense == "asym"
                        ? check_compatible_extension_asym(rdoc.relation, qdoc.relation, t)
                        : check_star_compatible_extension(rdoc.relation, qdoc.relation, t);
  const std::string what = o.sense == "asym" ? "compatible extension (asymmetric part)"
                                             : "star-compatible extension";
  return print_verdict(out, o, what, t, v, rdoc.relation.universe());
}

int cmd_extend(const Options& o, std::ostream& out) {
  auto doc = load_relation(o.input);
  const TNormId t = resolve_tnorm(o, doc.tnorm);
  const RelationClass c = parse_relation_class(o.relation_class);
  TotalizeOptions topt;
  topt.order = o.order == "random" ? ArcOrder::seeded_random : ArcOrder::lexicographic;
  topt.seed = o.seed;
  const ExtensionReport report = totalize(doc.relation, t, c, topt);
  if (json_output(o)) {
    out << dump_json(to_json(report, t, c), 2) << '\n';
  } else {
    out << format_table(report.result);
    out << "inserted arcs:";
    if (report.inserted_arcs.empty()) out << " (none)";
    for (const auto& [x, y] : report.inserted_arcs) out << " (" << x << "," << y << ")";
    out << '\n';
    out << "iterations: " << report.iterations << '\n';
    out << "verified_total: " << std::boolalpha << report.verified_total << '\n';
    out << "verified_transitive: " << report.verified_transitive << '\n';
    out << "verified_star_compatible: " << report.verified_star_compatible << '\n';
    out << "verified_class_member: " << report.verified_class_member << '\n';
    out << "converged: " << report.converged << std::noboolalpha << '\n';
  }
  return report.all_verified() ? kExitOk : kExitFalse;
}

double parse_grid_value(std::string_view s) {
  const auto slash = s.find('/');
  const auto number = [&](std::string_view part) {
    double v = 0.0;
    auto res = std::from_chars(part.data(), part.data() + part.size(), v);
    if (res.ec != std::errc{} || res.ptr != part.data() + part.size()) {
      throw UsageError("--values: '" + std::string(s) + "' is not a number or fraction");
    }
    return v;
  };
  if (slash == std::string_view::npos) return number(s);
  const double den = number(s.substr(slash + 1));
  if (den == 0.0) throw UsageError("--values: zero denominator in '" + std::string(s) + "'");
  return number(s.substr(0, slash)) / den;
}

std::vector<double> parse_grid_values(const std::string& text) {
  std::vector<double> out;
  std::string_view rest = text;
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    out.push_back(parse_grid_value(rest.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return out;
}

int cmd_oracle(const Options& o, std::ostream& out) {
  const TNormId t = o.tnorm.empty() ? TNormId::godel : parse_tnorm(o.tnorm);
  GridSpec grid{o.size, parse_grid_values(o.values), o.cap};
  OracleReport report;
  if (o.property == "least-closure") {
    if (t != TNormId::godel) throw UsageError("--property least-closure requires --tnorm godel");
    report = verify_least_consistent_closure(grid);
  } else if (o.property == "duggan-crisp") {
    report = verify_crisp_duggan_intersection(parse_relation_class(o.relation_class));
  } else if (o.property == "consistency-equiv") {
    report = verify_consistency_equivalence(grid, t);
  } else {
    report = verify_adjunction_grid(t, o.step);
  }
  if (json_output(o)) {
    out << dump_json(to_json(report), 2) << '\n';
  } else {
    out << "property: " << report.property << '\n';
    if (report.tnorm) out << "tnorm: " << to_string(*report.tnorm) << '\n';
    if (report.relation_class) out << "class: " << to_string(*report.relation_class) << '\n';
    out << "instances_checked: " << report.instances_checked << '\n';
    if (report.instances_skipped) out << "instances_skipped: " << report.instances_skipped << '\n';
    out << "violations: " << report.violations << '\n';
    if (report.first_counterexample) {
      out << "first_counterexample: " << dump_json(*report.first_counterexample) << '\n';
    }
    out << "result: " << (report.passed() ? "PASS" : "FAIL") << '\n';
  }
  return report.passed() ? kExitOk : kExitFalse;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Fuzzy preference relations: closures, consistency, extensions"};
  app.name(args.empty() ? "fuzzypref" : args.front());
  app.require_subcommand(1);
  app.fallthrough();

  const std::vector<std::string> tnorms = {"godel", "lukasiewicz", "product"};
  app.add_option("--tnorm", o.tnorm, "t-norm: godel, lukasiewicz or product")
      ->check(CLI::IsMember(tnorms));
  app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"table", "json"}));

  auto* closure = app.add_subcommand("closure", "print the transitive closure T(R)");
  closure->add_option("relation", o.input, "relation file (.json or .csv)")->required();

  auto* cclosure = app.add_subcommand("cclosure", "print a consistent closure of R");
  cclosure->add_option("--variant", o.variant, "delta, nabla or star")
      ->required()
      ->check(CLI::IsMember({"delta", "nabla", "star"}));
  cclosure->add_option("relation", o.input, "relation file")->required();

  auto* check = app.add_subcommand("check", "test a structural property of R");
  check->add_option("--property", o.property)
      ->required()
      ->check(CLI::IsMember(
          {"reflexive", "irreflexive", "transitive", "total", "strongly-total", "consistent"}));
  check->add_option("relation", o.input, "relation file")->required();

  auto* compat = app.add_subcommand("compat", "is Q a compatible extension of R?");
  compat->add_option("--sense", o.sense, "star (residuum) or asym (asymmetric part)")
      ->check(CLI::IsMember({"star", "asym"}));
  compat->add_option("relation", o.input, "R")->required();
  compat->add_option("extension", o.second_input, "Q")->required();

  auto* extend = app.add_subcommand("extend", "totalize a transitive relation within a class");
  extend->add_option("--class", o.relation_class, "r1, r2, r3 or any")
      ->check(CLI::IsMember({"r1", "r2", "r3", "any"}));
  extend->add_option("--order", o.order, "arc order: lex or random")
      ->check(CLI::IsMember({"lex", "random"}));
  extend->add_option("--seed", o.seed, "seed for --order random");
  extend->add_option("relation", o.input, "relation file")->required();

  auto* oracle = app.add_subcommand("oracle", "run an exhaustive verification sweep");
  oracle->add_option("--property", o.property)
      ->required()
      ->check(CLI::IsMember({"least-closure", "duggan-crisp", "consistency-equiv", "adjunction"}));
  oracle->add_option("--size", o.size, "universe size of the grid (2 or 3)");
  oracle->add_option("--values", o.values, "grid degrees, e.g. 0,1/2,1");
  oracle->add_option("--step", o.step, "adjunction grid step (must divide 1)");
  oracle->add_option("--class", o.relation_class, "class for duggan-crisp")
      ->check(CLI::IsMember({"r1", "r2", "r3", "any"}));
  oracle->add_option("--cap", o.cap, "maximum number of grid relations");

  std::vector<std::string> argv_store = args.empty() ? std::vector<std::string>{"fuzzypref"} : args;
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (closure->parsed()) return cmd_closure(o, out);
    if (cclosure->parsed()) return cmd_cclosure(o, out);
    if (check->parsed()) return cmd_check(o, out);
    if (compat->parsed()) return cmd_compat(o, out);
    if (extend->parsed()) return cmd_extend(o, out);
    if (oracle->parsed()) return cmd_oracle(o, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace fuzzypref::cli
