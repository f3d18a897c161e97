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

#include <doctest.h>

#include "qaskit/json_io.hpp"
#include "test_helpers.hpp"

using namespace qaskit;
using namespace qaskit::testing;

TEST_CASE("structure documents round-trip") {
  auto g = five_player_gamma();
  auto doc = structure_to_json(g);
  auto loaded = structure_from_json(doc);
  CHECK(loaded.structure == g);
  CHECK(loaded.warnings.empty());
}

TEST_CASE("duplicate sets warn, unknown players fail") {
  Json doc;
  doc["players"] = Json::array({"P1", "P2", "P3"});
  doc["minimal_authorized_sets"] =
      Json::array({Json::array({"P1", "P2"}), Json::array({"P2", "P1"})});
  auto loaded = structure_from_json(doc);
  CHECK(loaded.structure.r() == 1);
  REQUIRE(loaded.warnings.size() == 1);
  CHECK(loaded.warnings[0].find("duplicate") != std::string::npos);

  doc["minimal_authorized_sets"] = Json::array({Json::array({"P1", "P9"})});
  CHECK_THROWS_AS(structure_from_json(doc), std::invalid_argument);

  Json incomplete;
  incomplete["players"] = Json::array({"P1"});
  CHECK_THROWS_AS(structure_from_json(incomplete), std::runtime_error);
}

TEST_CASE("serialized structures are canonical regardless of input order") {
  Json doc;
  doc["players"] = Json::array({"P1", "P2", "P3", "P4", "P5"});
  doc["minimal_authorized_sets"] = Json::array({
      Json::array({"P2", "P3", "P4"}),
      Json::array({"P1", "P2"}),
      Json::array({"P2", "P3", "P5"}),
      Json::array({"P1", "P4", "P5"}),
  });
  auto loaded = structure_from_json(doc);
  CHECK(dump_report(structure_to_json(loaded.structure)) ==
        dump_report(structure_to_json(five_player_gamma())));
}

TEST_CASE("scheme documents round-trip") {
  auto block = structure(5, {set({1, 2}), set({1, 4, 5})});
  auto witness = recognize_bundled_threshold(block);
  REQUIRE(witness.has_value());
  auto scheme = make_scheme_instance(block.universe(), *witness);

  auto doc = scheme_file_json(scheme, block);
  auto text = dump_report(doc);
  auto parsed = Json::parse(text);
  auto scheme2 = scheme_instance_from_json(parsed);
  CHECK(scheme2.q == scheme.q);
  CHECK(scheme2.threshold == scheme.threshold);
  CHECK(scheme2.points == scheme.points);
  CHECK(scheme2.player_shares == scheme.player_shares);
  CHECK(scheme2.discarded == scheme.discarded);
  CHECK(dump_report(scheme_instance_to_json(scheme2)) ==
        dump_report(scheme_instance_to_json(scheme)));
}

TEST_CASE("reports are byte-stable across repeated dumps") {
  auto rc = resource_compare(five_player_gamma());
  CHECK(dump_report(resource_comparison_to_json(rc)) ==
        dump_report(resource_comparison_to_json(resource_compare(five_player_gamma()))));
}
