// Copyright 2026 the qaskit authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "qaskit/json_io.hpp"

namespace {

using qaskit::AccessStructure;
using qaskit::Json;
using qaskit::Mask;
using qaskit::OracleConfig;
using qaskit::Scheme2Config;
using qaskit::VerifyOptions;

constexpr int kExitPass = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;

struct Report {
  Json body;
  int exit_code = kExitPass;
};

AccessStructure load(const std::string& path) {
  auto loaded = qaskit::load_structure(path);
  for (const auto& warning : loaded.warnings) {
    std::cerr << "warning: " << warning << "\n";
  }
  return loaded.structure;
}

Report run_validate(const std::string& path) {
  const auto gamma = load(path);
  const auto report = qaskit::validate_quantum(gamma);
  Json body;
  body["operation"] = "validate";
  body["input"] = qaskit::structure_to_json(gamma);
  body["valid"] = report.valid;
  if (report.witness) {
    Json witness = Json::array();
    witness.push_back(qaskit::set_to_json(gamma.universe(), report.witness->first));
    witness.push_back(qaskit::set_to_json(gamma.universe(), report.witness->second));
    body["disjoint_pair"] = std::move(witness);
  } else {
    body["disjoint_pair"] = nullptr;
  }
  return {std::move(body), report.valid ? kExitPass : kExitVerificationFailure};
}

Report run_closure(const std::string& path, const std::string& set_expr) {
  const auto gamma = load(path);
  const Mask set = gamma.universe().parse_set_expr(set_expr);
  Json contained = Json::array();
  for (Mask a : gamma.minimal_sets()) {
    if (qaskit::is_subset(a, set)) contained.push_back(qaskit::set_to_json(gamma.universe(), a));
  }
  Json body;
  body["operation"] = "closure";
  body["input"] = qaskit::structure_to_json(gamma);
  body["set"] = qaskit::set_to_json(gamma.universe(), set);
  body["authorized"] = gamma.is_authorized(set);
  body["containing_minimal_sets"] = std::move(contained);
  return {std::move(body), kExitPass};
}

Report run_maximalize(const std::string& path, bool all, const std::string& policy) {
  const auto gamma = load(path);
  Json body;
  if (all) {
    const auto extensions = qaskit::all_maximal_extensions(gamma);
    Json results = Json::array();
    for (const auto& ext : extensions) results.push_back(qaskit::structure_to_json(ext));
    body["operation"] = "maximalize_all";
    body["input"] = qaskit::structure_to_json(gamma);
    body["count"] = extensions.size();
    body["results"] = std::move(results);
  } else {
    const auto policy_value = policy == "largest" ? qaskit::ExtendPolicy::kLargestFirst
                                                  : qaskit::ExtendPolicy::kSmallestFirst;
    const auto extended = qaskit::extend_to_maximal(gamma, policy_value);
    body["operation"] = "maximalize";
    body["input"] = qaskit::structure_to_json(gamma);
    body["policy"] = policy == "largest" ? "largest_first" : "smallest_first";
    body["steps"] = qaskit::sets_to_json(gamma.universe(), extended.added);
    body["result"] = qaskit::structure_to_json(extended.result);
  }
  return {std::move(body), kExitPass};
}

Report run_minmax(const std::string& path) {
  const auto gamma = load(path);
  const auto extended = qaskit::covering_maximal_extension(gamma);
  const auto reduced = qaskit::reduce_to_minmax(extended.result);
  Json steps = Json::array();
  for (const auto& step : reduced.steps) {
    Json entry;
    entry["pivot"] = qaskit::set_to_json(gamma.universe(), step.pivot);
    entry["replaced"] = qaskit::sets_to_json(gamma.universe(), step.replaced);
    entry["deleted"] = step.deleted ? qaskit::set_to_json(gamma.universe(), *step.deleted)
                                    : Json(nullptr);
    steps.push_back(std::move(entry));
  }
  Json body;
  body["operation"] = "minmax";
  body["input"] = qaskit::structure_to_json(gamma);
  body["extension_added"] = qaskit::sets_to_json(gamma.universe(), extended.added);
  body["maximal"] = qaskit::structure_to_json(extended.result);
  body["steps"] = std::move(steps);
  body["result"] = qaskit::structure_to_json(reduced.result);
  body["is_minimal_maximal"] = qaskit::is_minmax(reduced.result);
  return {std::move(body), kExitPass};
}

Report run_grow(const std::string& path, const std::string& player, const std::string& pivot) {
  const auto gamma = load(path);
  std::optional<Mask> pivot_mask;
  if (!pivot.empty()) pivot_mask = gamma.universe().parse_set_expr(pivot);
  const auto grown = qaskit::grow_minmax(gamma, player, pivot_mask);
  Json body;
  body["operation"] = "grow";
  body["input"] = qaskit::structure_to_json(gamma);
  body["new_player"] = player;
  body["pivot"] = qaskit::set_to_json(gamma.universe(), grown.pivot);
  body["result"] = qaskit::structure_to_json(grown.result);
  return {std::move(body), kExitPass};
}

OracleConfig make_oracle(const std::string& kind, int max_weight) {
  OracleConfig config;
  config.kind = kind == "unanimity" ? OracleConfig::Kind::kUnanimity
                                    : OracleConfig::Kind::kBundled;
  config.max_weight = max_weight;
  return config;
}

Json oracle_to_json(const OracleConfig& config) {
  Json out;
  out["kind"] = config.kind == OracleConfig::Kind::kUnanimity ? "unanimity" : "bundled";
  out["max_weight"] = config.max_weight;
  out["max_threshold"] = config.max_threshold;
  return out;
}

Report run_decompose(const std::string& path, const std::string& oracle, int max_weight) {
  const auto gamma = load(path);
  const auto config = make_oracle(oracle, max_weight);
  const auto decomposition = qaskit::optimal_decomposition(gamma, config);
  Json body;
  body["operation"] = "decompose";
  body["input"] = qaskit::structure_to_json(gamma);
  body["oracle"] = oracle_to_json(config);
  body["decomposition"] = qaskit::decomposition_to_json(decomposition);
  return {std::move(body), kExitPass};
}

Report run_synth(const std::string& path, int scheme, bool trivial, bool verify,
                 std::int64_t sim_budget, const std::string& oracle, int max_weight) {
  const auto gamma = load(path);
  const auto config = make_oracle(oracle, max_weight);
  Json body;
  body["operation"] = "synth";
  body["scheme"] = scheme;
  body["input"] = qaskit::structure_to_json(gamma);
  int exit_code = kExitPass;
  if (scheme == 1) {
    const auto plan = qaskit::build_scheme1(gamma, config);
    body["plan"] = qaskit::scheme1_plan_to_json(plan);
    if (verify) {
      const auto verification = qaskit::verify_scheme1(plan);
      Json v;
      v["pass"] = verification.pass;
      v["combinatorial_ok"] = verification.combinatorial_ok;
      v["classical_ok"] = verification.classical_ok;
      v["violations"] = qaskit::sets_to_json(gamma.universe(), verification.violations);
      body["verification"] = std::move(v);
      if (!verification.pass) exit_code = kExitVerificationFailure;
    }
  } else {
    Scheme2Config scheme_config{config, trivial};
    const auto cs = qaskit::build_scheme2(gamma, scheme_config);
    body["trivial"] = trivial;
    body["plan"] = qaskit::concat_scheme_to_json(cs);
    if (verify) {
      VerifyOptions options;
      options.sim_support_budget = sim_budget;
      const auto verification = qaskit::verify_scheme2(cs, options);
      body["verification"] = qaskit::scheme2_verification_to_json(gamma.universe(), verification);
      if (!verification.pass) exit_code = kExitVerificationFailure;
    }
  }
  return {std::move(body), exit_code};
}

Report run_simverify(const std::string& path) {
  const auto loaded = qaskit::load_scheme(path);
  const auto verification = qaskit::verify_structure(loaded.scheme, loaded.structure);
  Json body;
  body["operation"] = "simverify";
  body["scheme"] = qaskit::scheme_instance_to_json(loaded.scheme);
  body["structure"] = qaskit::structure_to_json(loaded.structure);
  body["verification"] = qaskit::verification_to_json(loaded.structure.universe(), verification);
  return {std::move(body), verification.pass ? kExitPass : kExitVerificationFailure};
}

Report run_compare(const std::string& path, const std::string& oracle, int max_weight) {
  const auto gamma = load(path);
  const auto comparison = qaskit::resource_compare(gamma, make_oracle(oracle, max_weight));
  Json body;
  body["operation"] = "compare";
  body["input"] = qaskit::structure_to_json(gamma);
  body["comparison"] = qaskit::resource_comparison_to_json(comparison);
  return {std::move(body), kExitPass};
}

int run_repro(const std::string& data_dir, const std::string& out_dir) {
  namespace fs = std::filesystem;
  struct Case {
    std::string name;
    std::function<Report()> run;
  };
  const std::string ex1 = data_dir + "/example1.json";
  const std::string ex2 = data_dir + "/example2_maximal.json";
  const std::string tbl5 = data_dir + "/table1_n5_threshold.json";
  const std::vector<Case> cases = {
      {"example1_maximalize_all", [&] { return run_maximalize(ex1, true, "smallest"); }},
      {"example2_minmax", [&] { return run_minmax(ex2); }},
      {"example3_decompose", [&] { return run_decompose(ex1, "bundled", 5); }},
      {"example3_synth2", [&] { return run_synth(ex1, 2, false, true, 250000, "bundled", 5); }},
      {"example3_synth2_trivial",
       [&] { return run_synth(ex1, 2, true, true, 250000, "bundled", 5); }},
      {"example3_compare", [&] { return run_compare(ex1, "bundled", 5); }},
      {"table1_n5_compare", [&] { return run_compare(tbl5, "bundled", 5); }},
      {"table1_n6_compare", [&] { return run_compare(ex2, "bundled", 5); }},
  };

  bool all_pass = true;
  for (const auto& c : cases) {
    const Report report = c.run();
    const std::string actual = qaskit::dump_report(report.body);
    const std::string expected_path = data_dir + "/expected/" + c.name + ".json";
    std::ifstream in(expected_path);
    if (!in) throw std::runtime_error("missing expected report '" + expected_path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    const bool match = buffer.str() == actual && report.exit_code == kExitPass;
    std::cout << (match ? "[PASS] " : "[FAIL] ") << c.name << "\n";
    if (!match) {
      all_pass = false;
      if (!out_dir.empty()) {
        fs::create_directories(out_dir);
        std::ofstream out(out_dir + "/" + c.name + ".json");
        out << actual;
        std::cout << "       actual report written to " << out_dir << "/" << c.name << ".json\n";
      }
    }
  }
  return all_pass ? kExitPass : kExitVerificationFailure;
}

void emit(const Report& report, const std::string& out_file) {
  const std::string text = qaskit::dump_report(report.body);
  if (out_file.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_file);
    if (!out) throw std::runtime_error("cannot write '" + out_file + "'");
    out << text;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qaskit - quantum access structure toolkit"};
  app.require_subcommand(1);
  app.fallthrough(true);

  int jobs = 1;
  app.add_option("--jobs", jobs, "worker threads for parallel sweeps")->capture_default_str();

  std::string out_file;
  app.add_option("--out", out_file, "write the JSON report to a file instead of stdout");

  std::string in_path;
  std::string set_expr;
  std::string policy = "smallest";
  std::string pivot;
  std::string player;
  std::string oracle = "bundled";
  std::string data_dir = "data";
  std::string out_dir;
  int scheme = 2;
  int max_weight = 5;
  bool all = false;
  bool trivial = false;
  bool no_verify = false;
  std::int64_t sim_budget = 250000;

  auto* validate = app.add_subcommand("validate", "check the no-cloning validity of a structure");
  validate->add_option("input", in_path, "access structure JSON")->required();

  auto* closure = app.add_subcommand("closure", "membership of a set in the monotone closure");
  closure->add_option("input", in_path)->required();
  closure->add_option("--set", set_expr, "comma-separated player names")->required();

  auto* maximalize = app.add_subcommand("maximalize", "extend to a maximal structure");
  maximalize->add_option("input", in_path)->required();
  maximalize->add_flag("--all", all, "enumerate every maximal extension");
  maximalize->add_option("--policy", policy, "greedy candidate policy")
      ->check(CLI::IsMember({"smallest", "largest"}))
      ->capture_default_str();

  auto* minmax = app.add_subcommand("minmax", "reduce to a minimal maximal structure");
  minmax->add_option("input", in_path)->required();

  auto* grow = app.add_subcommand("grow", "add a player to a minimal maximal structure");
  grow->add_option("input", in_path)->required();
  grow->add_option("--player", player, "name of the new player")->required();
  grow->add_option("--pivot", pivot, "minimal set receiving the new player");

  auto* decompose = app.add_subcommand("decompose", "optimal realizable decomposition");
  decompose->add_option("input", in_path)->required();
  decompose->add_option("--max-weight", max_weight, "per-player weight bound")
      ->capture_default_str();
  decompose->add_option("--oracle", oracle, "realizability oracle")
      ->check(CLI::IsMember({"bundled", "unanimity"}))
      ->capture_default_str();

  auto* synth = app.add_subcommand("synth", "assemble a secret sharing scheme");
  synth->add_option("input", in_path)->required();
  synth->add_option("--scheme", scheme, "1 (registers) or 2 (concatenation)")
      ->check(CLI::IsMember({1, 2}))
      ->capture_default_str();
  synth->add_flag("--trivial", trivial, "use the trivial all-singletons decomposition");
  synth->add_flag("--no-verify", no_verify, "skip the verification pass");
  synth->add_option("--sim-budget", sim_budget, "support cap for sub-scheme simulation")
      ->capture_default_str();
  synth->add_option("--max-weight", max_weight)->capture_default_str();
  synth->add_option("--oracle", oracle)
      ->check(CLI::IsMember({"bundled", "unanimity"}))
      ->capture_default_str();

  auto* simverify = app.add_subcommand("simverify", "simulate a scheme against its structure");
  simverify->add_option("input", in_path, "scheme JSON")->required();

  auto* compare = app.add_subcommand("compare", "optimal vs trivial resource comparison");
  compare->add_option("input", in_path)->required();
  compare->add_option("--max-weight", max_weight)->capture_default_str();
  compare->add_option("--oracle", oracle)
      ->check(CLI::IsMember({"bundled", "unanimity"}))
      ->capture_default_str();

  auto* repro = app.add_subcommand("repro-paper",
                                   "re-run the bundled reference cases and diff the reports");
  repro->add_option("--data-dir", data_dir, "directory with inputs and expected reports")
      ->capture_default_str();
  repro->add_option("--out-dir", out_dir, "where to write mismatching reports");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return kExitUsage;
  }

  try {
    auto lim = qaskit::limits();
    lim.jobs = std::max(1, jobs);
    qaskit::set_limits(lim);

    Report report;
    if (*validate) report = run_validate(in_path);
    else if (*closure) report = run_closure(in_path, set_expr);
    else if (*maximalize) report = run_maximalize(in_path, all, policy);
    else if (*minmax) report = run_minmax(in_path);
    else if (*grow) report = run_grow(in_path, player, pivot);
    else if (*decompose) report = run_decompose(in_path, oracle, max_weight);
    else if (*synth) report = run_synth(in_path, scheme, trivial, !no_verify, sim_budget,
                                        oracle, max_weight);
    else if (*simverify) report = run_simverify(in_path);
    else if (*compare) report = run_compare(in_path, oracle, max_weight);
    else if (*repro) return run_repro(data_dir, out_dir);
    else return kExitUsage;

    emit(report, out_file);
    return report.exit_code;
  } catch (const qaskit::SizeLimitError& e) {
    std::cerr << "error (size limit): " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error (invalid input): " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
