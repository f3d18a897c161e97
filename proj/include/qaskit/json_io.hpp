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

#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "qaskit/scheme.hpp"

namespace qaskit {

// JSON schemas.  Insertion order is preserved (ordered_json) and all lists
// are canonically ordered, so identical inputs produce byte-identical output.
//
// Access structure document:
//   { "players": ["P1", ...],
//     "minimal_authorized_sets": [["P1","P2"], ...] }
// Unknown player names are an error; duplicate sets are dropped with a warning.

using Json = nlohmann::ordered_json;

struct LoadedStructure {
  AccessStructure structure;
  std::vector<std::string> warnings;
};

LoadedStructure structure_from_json(const Json& doc);
LoadedStructure load_structure(const std::string& path);

Json structure_to_json(const AccessStructure& gamma);

// Player-name arrays for a list of masks, canonical order.
Json sets_to_json(const Universe& universe, const std::vector<Mask>& sets);
Json set_to_json(const Universe& universe, Mask set);

Json witness_to_json(const Universe& universe, const BundledThreshold& witness);
Json decomposition_to_json(const Decomposition& decomposition);

// Scheme instance document:
//   { "q": 11, "k": 5, "points": [...], "players": [...],
//     "bundling": {"P1": [0,1,2], ...}, "discarded": [...],
//     "structure": {access structure document} }
Json scheme_instance_to_json(const SchemeInstance& scheme);
SchemeInstance scheme_instance_from_json(const Json& doc);

struct LoadedScheme {
  SchemeInstance scheme;
  AccessStructure structure;
};

LoadedScheme load_scheme(const std::string& path);
Json scheme_file_json(const SchemeInstance& scheme, const AccessStructure& gamma);

Json concat_scheme_to_json(const ConcatScheme& cs);
Json verification_to_json(const Universe& universe, const StructureVerification& v);
Json scheme2_verification_to_json(const Universe& universe, const Scheme2Verification& v);
Json resource_comparison_to_json(const ResourceComparison& rc);
Json scheme1_plan_to_json(const Scheme1Plan& plan);

std::string dump_report(const Json& report);  // 2-space indent + newline

}  // namespace qaskit
