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

#include "qaskit/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>

namespace qaskit {

namespace {

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  Json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::parse_error& e) {
    throw std::runtime_error("malformed JSON in '" + path + "': " + e.what());
  }
  return doc;
}

}  // namespace

LoadedStructure structure_from_json(const Json& doc) {
  if (!doc.contains("players") || !doc.contains("minimal_authorized_sets")) {
    throw std::runtime_error(
        "access structure document needs 'players' and 'minimal_authorized_sets'");
  }
  Universe universe(doc.at("players").get<std::vector<std::string>>());
  std::vector<Mask> family;
  std::vector<std::string> warnings;
  for (const auto& entry : doc.at("minimal_authorized_sets")) {
    const Mask set = universe.parse_set(entry.get<std::vector<std::string>>());
    if (std::find(family.begin(), family.end(), set) != family.end()) {
      warnings.push_back("duplicate set " + universe.set_label(set) + " dropped");
      continue;
    }
    family.push_back(set);
  }
  return {AccessStructure::minimize(std::move(universe), std::move(family)),
          std::move(warnings)};
}

LoadedStructure load_structure(const std::string& path) {
  return structure_from_json(load_json_file(path));
}

Json set_to_json(const Universe& universe, Mask set) {
  return Json(universe.set_names(set));
}

Json sets_to_json(const Universe& universe, const std::vector<Mask>& sets) {
  Json out = Json::array();
  for (Mask a : sets) out.push_back(set_to_json(universe, a));
  return out;
}

Json structure_to_json(const AccessStructure& gamma) {
  Json out;
  out["players"] = gamma.universe().labels();
  out["minimal_authorized_sets"] = sets_to_json(gamma.universe(), gamma.minimal_sets());
  return out;
}

Json witness_to_json(const Universe& universe, const BundledThreshold& witness) {
  Json weights;
  for (int p = 0; p < universe.size(); ++p) {
    if (witness.weights[p] > 0) weights[universe.label(p)] = witness.weights[p];
  }
  Json out;
  out["weights"] = std::move(weights);
  out["threshold"] = witness.threshold;
  out["total_shares"] = witness.total_shares;
  out["field"] = witness.field_order;
  return out;
}

Json decomposition_to_json(const Decomposition& decomposition) {
  Json blocks = Json::array();
  for (const auto& block : decomposition.blocks) {
    Json entry;
    entry["structure"] = structure_to_json(block.structure);
    entry["witness"] = block.witness
                           ? witness_to_json(block.structure.universe(), *block.witness)
                           : Json(nullptr);
    blocks.push_back(std::move(entry));
  }
  Json out;
  out["l"] = decomposition.l();
  out["blocks"] = std::move(blocks);
  out["total_witness_shares"] = decomposition.total_witness_shares();
  return out;
}

Json scheme_instance_to_json(const SchemeInstance& scheme) {
  Json bundling;
  for (int p = 0; p < scheme.universe.size(); ++p) {
    if (!scheme.player_shares[p].empty()) {
      bundling[scheme.universe.label(p)] = scheme.player_shares[p];
    }
  }
  Json out;
  out["q"] = scheme.q;
  out["k"] = scheme.threshold;
  out["points"] = scheme.points;
  out["players"] = scheme.universe.labels();
  out["bundling"] = std::move(bundling);
  out["discarded"] = scheme.discarded;
  return out;
}

SchemeInstance scheme_instance_from_json(const Json& doc) {
  Universe universe(doc.at("players").get<std::vector<std::string>>());
  SchemeInstance scheme{doc.at("q").get<int>(),
                        doc.at("k").get<int>(),
                        doc.at("points").get<std::vector<int>>(),
                        universe,
                        {},
                        {}};
  scheme.player_shares.assign(universe.size(), {});
  for (const auto& [name, shares] : doc.at("bundling").items()) {
    scheme.player_shares[universe.index_of(name)] = shares.get<std::vector<int>>();
  }
  if (doc.contains("discarded")) {
    scheme.discarded = doc.at("discarded").get<std::vector<int>>();
  }
  scheme.validate();
  return scheme;
}

LoadedScheme load_scheme(const std::string& path) {
  const Json doc = load_json_file(path);
  auto scheme = scheme_instance_from_json(doc);
  if (!doc.contains("structure")) {
    throw std::runtime_error("scheme document needs a 'structure' to verify against");
  }
  auto loaded = structure_from_json(doc.at("structure"));
  if (!(loaded.structure.universe() == scheme.universe)) {
    throw std::runtime_error("scheme and structure player lists differ");
  }
  return {std::move(scheme), std::move(loaded.structure)};
}

Json scheme_file_json(const SchemeInstance& scheme, const AccessStructure& gamma) {
  Json out = scheme_instance_to_json(scheme);
  out["structure"] = structure_to_json(gamma);
  return out;
}

Json concat_scheme_to_json(const ConcatScheme& cs) {
  const Universe& universe = cs.gamma.universe();
  Json out;
  out["gamma"] = structure_to_json(cs.gamma);
  out["minimal_maximal"] = structure_to_json(cs.minmax);
  out["decomposition"] = decomposition_to_json(cs.decomposition);
  out["minmax_witness"] =
      cs.minmax_witness ? witness_to_json(universe, *cs.minmax_witness) : Json(nullptr);
  Json outer;
  outer["k"] = cs.outer.k;
  outer["shares"] = cs.outer.shares;
  outer["field"] = cs.outer.field;
  out["outer"] = std::move(outer);
  out["routing"] = cs.routing;

  // Per-player register contents across all sub-schemes that carry a witness.
  Json registers;
  auto add_scheme = [&](const std::string& name, const std::optional<BundledThreshold>& w) {
    if (!w) return;
    const auto scheme = make_scheme_instance(universe, *w);
    for (int p = 0; p < universe.size(); ++p) {
      if (scheme.player_shares[p].empty()) continue;
      Json entry;
      entry["subscheme"] = name;
      entry["shares"] = scheme.player_shares[p];
      registers[universe.label(p)].push_back(std::move(entry));
    }
  };
  for (std::size_t i = 0; i < cs.decomposition.blocks.size(); ++i) {
    add_scheme("block" + std::to_string(i + 1), cs.decomposition.blocks[i].witness);
  }
  add_scheme("minmax", cs.minmax_witness);
  out["registers"] = std::move(registers);
  out["diagram"] = render_scheme2(cs);
  return out;
}

Json verification_to_json(const Universe& universe, const StructureVerification& v) {
  Json subsets = Json::array();
  for (const auto& check : v.checks) {
    Json entry;
    entry["players"] = set_to_json(universe, check.players);
    entry["authorized"] = check.authorized;
    entry["check"] = check.authorized ? "recoverable" : "secret_free";
    entry["residual"] = check.residual;
    entry["pass"] = check.pass;
    subsets.push_back(std::move(entry));
  }
  Json out;
  out["pass"] = v.pass;
  out["violations"] = sets_to_json(universe, v.violations);
  out["subsets"] = std::move(subsets);
  return out;
}

Json scheme2_verification_to_json(const Universe& universe, const Scheme2Verification& v) {
  Json sims = Json::array();
  for (const auto& sim : v.simulations) {
    Json entry;
    entry["target"] = sim.target;
    entry["status"] = sim.status;
    entry["detail"] = sim.detail;
    sims.push_back(std::move(entry));
  }
  Json out;
  out["pass"] = v.pass;
  out["share_flow_ok"] = v.share_flow_ok;
  out["missing_minimal_sets"] = sets_to_json(universe, v.missing_minimal_sets);
  out["extra_minimal_sets"] = sets_to_json(universe, v.extra_minimal_sets);
  out["simulations"] = std::move(sims);
  return out;
}

Json resource_comparison_to_json(const ResourceComparison& rc) {
  auto report = [](const ResourceReport& r) {
    Json out;
    Json outer;
    outer["k"] = r.outer.k;
    outer["shares"] = r.outer.shares;
    outer["field"] = r.outer.field;
    out["outer"] = std::move(outer);
    out["block_shares"] = r.block_shares;
    out["total_shares"] = r.total_shares;
    out["verification_count"] = r.verification_count;
    return out;
  };
  Json out;
  out["optimal"] = report(rc.optimal);
  out["trivial"] = report(rc.trivial);
  out["maximal"] = structure_to_json(rc.maximal);
  out["minimal_maximal"] = structure_to_json(rc.minimal_maximal);
  return out;
}

Json scheme1_plan_to_json(const Scheme1Plan& plan) {
  const Universe& universe = plan.gamma.universe();
  Json registers;
  for (int p = 0; p < universe.size(); ++p) {
    if (plan.registers[p].empty()) continue;
    Json entries = Json::array();
    for (const auto& reg : plan.registers[p]) {
      Json entry;
      entry["block"] = reg.block + 1;
      entry["shares"] = reg.shares;
      entries.push_back(std::move(entry));
    }
    registers[universe.label(p)] = std::move(entries);
  }
  Json out;
  out["gamma"] = structure_to_json(plan.gamma);
  out["decomposition"] = decomposition_to_json(plan.decomposition);
  out["registers"] = std::move(registers);
  return out;
}

std::string dump_report(const Json& report) { return report.dump(2) + "\n"; }

}  // namespace qaskit
