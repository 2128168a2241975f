// Copyright 2026 The jbtk Authors
// SPDX-License-Identifier: Apache-2.0

#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "demo.hpp"
#include "format.hpp"
#include "jbtk/errors.hpp"
#include "jbtk/json_io.hpp"
#include "jbtk/maps.hpp"
#include "suites.hpp"

namespace jbtk::cli {

namespace {

struct CommonOptions {
  int trials = 100;
  std::uint64_t seed = 0;
  double tol = 1e-9;
  bool json = false;

  SamplingOptions sampling() const {
    SamplingOptions o;
    o.trials = trials;
    o.seed = seed;
    o.tol.zero_tol = tol;
    return o;
  }
};

// CLI11 silently skips an environment value that fails validation, so the
// variables are checked up front and a bad value is a usage error.
void check_environment() {
  const auto check = [](const char* name, auto parse) {
    const char* raw = std::getenv(name);
    if (raw == nullptr) return;
    const std::string value(raw);
    std::size_t used = 0;
    bool ok = !value.empty();
    try {
      ok = ok && parse(value, used) && used == value.size();
    } catch (const std::exception&) {
      ok = false;
    }
    if (!ok) throw InputError(std::string(name) + ": invalid value \"" + value + "\"");
  };
  check("JBTK_TRIALS", [](const std::string& v, std::size_t& used) { return std::stoi(v, &used) >= 0; });
  check("JBTK_SEED", [](const std::string& v, std::size_t& used) {
    return v.front() != '-' && (std::stoull(v, &used), true);
  });
  check("JBTK_TOL", [](const std::string& v, std::size_t& used) {
    const double t = std::stod(v, &used);
    return std::isfinite(t) && t > 0;
  });
}

void add_common(CLI::App* cmd, CommonOptions& c, bool with_json) {
  cmd->add_option("--trials", c.trials, "random trials per sampled check")
      ->envname("JBTK_TRIALS")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  cmd->add_option("--seed", c.seed, "base seed")->envname("JBTK_SEED")->capture_default_str();
  cmd->add_option("--tol", c.tol, "zero tolerance")->envname("JBTK_TOL")->check(CLI::PositiveNumber)->capture_default_str();
  if (with_json) cmd->add_flag("--json", c.json, "emit JSON");
}

// "id=outcome,id=outcome"
std::map<std::string, Outcome> parse_expect(const std::string& spec) {
  static const std::vector<std::string> ids = {"bergmann-zero",     "bp-preserver", "extreme-preserver",
                                               "jordan-star-hom",   "strong-bp",    "strong-regularity",
                                               "triple-hom",        "unitary-identities"};
  std::map<std::string, Outcome> out;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw InputError("--expect: \"" + item + "\" is not id=outcome");
    const std::string id = item.substr(0, eq), value = item.substr(eq + 1);
    if (std::find(ids.begin(), ids.end(), id) == ids.end()) throw InputError("--expect: unknown predicate \"" + id + "\"");
    if (value == "pass")
      out[id] = Outcome::pass;
    else if (value == "fail")
      out[id] = Outcome::fail;
    else if (value == "inapplicable")
      out[id] = Outcome::inapplicable;
    else
      throw InputError("--expect: outcome must be pass, fail or inapplicable, got \"" + value + "\"");
  }
  return out;
}

std::string witness_text(const std::vector<Element>& w) {
  if (w.empty()) return "";
  std::string s = w.size() == 1 ? "x=" : "(x,y,z)=(";
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? ", " : "") + format_element(w[i]);
  return w.size() == 1 ? s : s + ")";
}

void print_report(const LinearMap& t, const ClassificationReport& r, std::ostream& out) {
  out << "map: " << format_space(t.domain()) << " -> " << format_space(t.codomain()) << "\n";
  out << "seed " << r.options.seed << ", trials " << r.options.trials << ", tol " << format_residual(r.options.tol.zero_tol) << "\n";
  for (const auto& v : r.verdicts) {
    out << "  " << v.predicate << ": " << to_string(v.outcome) << " [" << to_string(v.kind) << "] residual "
        << format_residual(v.worst_residual);
    if (v.kind == CheckKind::sampled) out << " (" << v.probes << " probes, " << v.trials << " trials)";
    if (!v.witness.empty()) out << " witness " << witness_text(v.witness);
    out << "\n";
    if (!v.detail.empty() && v.failed()) out << "      " << v.detail << "\n";
  }
  if (r.identities) {
    const auto& id = *r.identities;
    out << "  unitary-identities: " << to_string(id.outcome) << " (first " << format_residual(id.first_order)
        << ", second " << format_residual(id.second_order) << ", partial " << format_residual(id.partial) << ")";
    if (!id.detail.empty()) out << " " << id.detail;
    out << "\n";
  }
  if (r.factorization) {
    const auto& f = *r.factorization;
    auto yn = [](bool b) { return b ? "yes" : "no"; };
    out << "factorization T = v S, v = T(1):\n"
        << "  v extreme " << yn(f.v_extreme) << ", unitary " << yn(f.v_unitary) << ", self-adjoint unitary "
        << yn(f.v_self_adjoint_unitary) << ", isometry " << yn(f.v_isometry) << ", coisometry "
        << yn(f.v_coisometry) << "\n"
        << "  S = v* T Jordan *-hom: " << to_string(f.left_jordan.outcome) << ", ||T - vS|| "
        << format_residual(f.left_reconstruction) << "\n"
        << "  S1 = T v* Jordan *-hom: " << to_string(f.right_jordan.outcome) << ", ||T - S1 v|| "
        << format_residual(f.right_reconstruction) << "\n"
        << "  range residuals: T " << format_residual(f.t_range_residual) << ", S "
        << format_residual(f.s_range_residual) << "\n"
        << "  prime alternative: " << to_string(f.prime) << "\n";
  } else if (!r.factorization_error.empty()) {
    out << "factorization refused: " << r.factorization_error << "\n";
  }
  if (r.alarms.empty()) {
    out << "alarms: none\n";
  } else {
    for (const auto& a : r.alarms) out << "ALARM: " << a << "\n";
  }
}

int cmd_check(const std::string& file, const std::string& expect, const CommonOptions& c, std::ostream& out,
              std::ostream& err) {
  const auto expected = parse_expect(expect);
  const LinearMap t = load_map(read_json_file(file));
  const ClassificationReport report = classify(t, c.sampling());

  if (c.json) {
    Json j = to_json(report);
    j["map"] = {{"source", file}, {"domain", to_json(t.domain())}, {"codomain", to_json(t.codomain())}};
    out << j.dump(2) << "\n";
  } else {
    print_report(t, report, out);
  }
  if (!report.alarms.empty()) return kConsistency;

  int code = kOk;
  for (const auto& [id, want] : expected) {
    Outcome got;
    if (id == "unitary-identities")
      got = report.identities ? report.identities->outcome : Outcome::inapplicable;
    else
      got = report.find(id)->outcome;
    if (got != want) {
      err << "expectation failed: " << id << " expected " << to_string(want) << ", got " << to_string(got) << "\n";
      code = kFailure;
    }
  }
  return code;
}

int cmd_verify(const std::string& suite, const CommonOptions& c, std::ostream& out) {
  SuiteConfig cfg;
  cfg.trials = c.trials;
  cfg.seed = c.seed;
  cfg.tol.zero_tol = c.tol;
  const auto results = run_suite(suite, cfg);
  const auto failed = std::count_if(results.begin(), results.end(), [](const Assertion& a) { return !a.passed; });

  if (c.json) {
    Json list = Json::array();
    for (const auto& a : results) list.push_back(to_json(a));
    out << Json{{"suite", suite}, {"seed", c.seed}, {"trials", c.trials}, {"tol", c.tol},
                {"assertions", list}, {"failed", failed}}
               .dump(2)
        << "\n";
  } else {
    for (const auto& a : results) {
      out << (a.passed ? "PASS " : "FAIL ") << a.id << "  residual " << format_residual(a.residual) << " tol "
          << format_residual(a.tolerance) << " (" << a.instances << " instances)  " << a.anchor << "\n";
      if (!a.note.empty()) out << "      " << a.note << "\n";
      if (!a.passed) out << "      witness: " << a.witness << "\n";
    }
    out << results.size() << " assertions, " << failed << " failed\n";
  }
  return failed == 0 ? kOk : kFailure;
}

int cmd_generate(const std::string& spec, std::ostream& out) {
  const Json j = !spec.empty() && spec.front() == '{' ? parse_json(spec, "<spec>") : read_json_file(spec);
  out << to_json(map_from_generator(j)).dump() << "\n";
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"jbtk: linear preservers between matrix JB*-triples", "jbtk"};
  app.require_subcommand(1);

  CommonOptions common;
  std::string file, expect, suite, demo, spec;

  auto* check = app.add_subcommand("check", "classify a linear map given as JSON (map or generator spec)");
  check->add_option("map", file, "JSON file")->required();
  check->add_option("--expect", expect, "comma-separated id=outcome pins, e.g. strong-bp=fail");
  add_common(check, common, true);

  auto* verify = app.add_subcommand("verify", "run a seeded property suite");
  verify->add_option("suite", suite, "identities | regularity | preservers | remarks | all")
      ->required()
      ->check(CLI::IsMember(suite_names()));
  add_common(verify, common, true);

  auto* demo_cmd = app.add_subcommand("demo", "walk through a counterexample map");
  demo_cmd->add_option("name", demo, "remark-5-8 | remark-5-9")->required()->check(CLI::IsMember(demo_names()));
  add_common(demo_cmd, common, false);

  auto* gen = app.add_subcommand("generate", "print the map JSON for a generator spec");
  gen->add_option("spec", spec, "inline JSON or a file")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    check_environment();
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*check) return cmd_check(file, expect, common, out, err);
    if (*verify) return cmd_verify(suite, common, out);
    if (*demo_cmd) {
      run_demo(demo, common.sampling(), out);
      return kOk;
    }
    if (*gen) return cmd_generate(spec, out);
  } catch (const ConsistencyError& e) {
    err << "internal consistency error: " << e.what() << "\n";
    return kConsistency;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const SpaceMismatch& e) {
    err << "dimension mismatch: " << e.what() << "\n";
    return kUsage;
  } catch (const InfeasibleRecipe& e) {
    err << "infeasible generator: " << e.what() << "\n";
    return kUsage;
  } catch (const Json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kUsage;
}

}  // namespace jbtk::cli
