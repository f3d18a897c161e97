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

#include "qaskit/decomp.hpp"
#include "test_helpers.hpp"

using namespace qaskit;
using namespace qaskit::testing;

namespace {

std::vector<int> weight_list(const BundledThreshold& w) { return w.weights; }

}  // namespace

TEST_CASE("bundled witness for the first worked block") {
  auto block = structure(5, {set({1, 2}), set({1, 4, 5})});
  auto witness = recognize_bundled_threshold(block);
  REQUIRE(witness.has_value());
  CHECK(weight_list(*witness) == std::vector<int>{3, 2, 0, 1, 1});
  CHECK(witness->threshold == 5);
  CHECK(witness->total_shares == 7);
  CHECK(witness->field_order == 11);
  CHECK(witness->total_shares <= 2 * witness->threshold - 1);
  CHECK(induced_structure(block.universe(), witness->weights, witness->threshold) == block);
}

TEST_CASE("unanimity witness for a single set") {
  auto block = structure(3, {set({1, 2, 3})});
  auto witness = recognize_bundled_threshold(block);
  REQUIRE(witness.has_value());
  CHECK(weight_list(*witness) == std::vector<int>{1, 1, 1});
  CHECK(witness->threshold == 3);
  CHECK(witness->total_shares == 3);
}

TEST_CASE("unit threshold witness for 2-of-3") {
  auto witness = recognize_bundled_threshold(threshold_structure(2, 3));
  REQUIRE(witness.has_value());
  CHECK(weight_list(*witness) == std::vector<int>{1, 1, 1});
  CHECK(witness->threshold == 2);
  CHECK(witness->total_shares == 3);
  CHECK(witness->field_order == 3);
}

TEST_CASE("the whole five-player structure is not bundled realizable") {
  CHECK_FALSE(recognize_bundled_threshold(five_player_gamma()).has_value());
}

TEST_CASE("minimal maximal witness uses nine shares") {
  auto witness = recognize_bundled_threshold(five_player_maximal());
  REQUIRE(witness.has_value());
  CHECK(witness->threshold == 5);
  CHECK(witness->total_shares == 9);
  CHECK(weight_list(*witness) == std::vector<int>{3, 2, 2, 1, 1});
  CHECK(witness->field_order == 11);
}

TEST_CASE("returned witnesses always re-derive the block") {
  TestRng rng(2024);
  for (int round = 0; round < 30; ++round) {
    const int n = 3 + int(rng.below(4));
    auto g = random_valid_structure(rng, n);
    SubfamilyOracle oracle(g, {});
    const std::uint32_t full = (std::uint32_t{1} << g.r()) - 1;
    for (std::uint32_t t = 1; t <= full; ++t) {
      const auto& witness = oracle.realize(t);
      if (!witness) continue;
      CHECK(witness->total_shares <= 2 * witness->threshold - 1);
      CHECK(induced_structure(g.universe(), witness->weights, witness->threshold) ==
            oracle.subfamily(t));
    }
  }
}

TEST_CASE("realizable subfamily table for the five-player structure") {
  SubfamilyOracle oracle(five_player_gamma(), {});
  auto table = enumerate_realizable_subfamilies(oracle);
  REQUIRE(table.size() == 16);
  for (int i = 0; i < 4; ++i) CHECK(table[std::size_t{1} << i]);  // singletons
  // Sorted minimal sets: P1P2, P2P3P4, P2P3P5, P1P4P5 -> the worked blocks
  // are indices {0,3} and {1,2}.
  CHECK(table[0b1001]);
  CHECK(table[0b0110]);
  CHECK_FALSE(table[0b1111]);
}

TEST_CASE("subfamily enumeration surfaces the r bound") {
  std::vector<Mask> sets;
  for (int i = 2; i <= 18; ++i) sets.push_back(set({1}) | (Mask{1} << (i - 1)));
  auto hub = AccessStructure::minimize(players(18), sets);
  REQUIRE(hub.r() == 17);
  SubfamilyOracle oracle(hub, {});
  CHECK_THROWS_AS(enumerate_realizable_subfamilies(oracle), SizeLimitError);
  CHECK_THROWS_AS(optimal_decomposition(oracle), SizeLimitError);
}

TEST_CASE("optimal decomposition of the worked structure") {
  auto decomposition = optimal_decomposition(five_player_gamma());
  REQUIRE(decomposition.l() == 2);
  CHECK(decomposition.blocks[0].structure ==
        structure(5, {set({1, 2}), set({1, 4, 5})}));
  CHECK(decomposition.blocks[1].structure ==
        structure(5, {set({2, 3, 4}), set({2, 3, 5})}));
  for (const auto& block : decomposition.blocks) {
    REQUIRE(block.witness.has_value());
  }
  CHECK(decomposition.total_witness_shares() == 13);
}

TEST_CASE("degenerate decompositions") {
  CHECK(optimal_decomposition(threshold_structure(2, 3)).l() == 1);
  CHECK(optimal_decomposition(structure(3, {set({1, 2, 3})})).l() == 1);
}

TEST_CASE("decomposition blocks partition the minimal sets") {
  TestRng rng(77);
  for (int round = 0; round < 25; ++round) {
    const int n = 3 + int(rng.below(4));
    auto g = random_valid_structure(rng, n);
    auto decomposition = optimal_decomposition(g);
    std::uint32_t covered = 0;
    for (std::uint32_t mask : decomposition.block_index_masks) {
      CHECK((covered & mask) == 0);
      covered |= mask;
    }
    CHECK(covered == (std::uint32_t{1} << g.r()) - 1);
  }
}

TEST_CASE("DP minimum matches restricted-growth enumeration") {
  TestRng rng(31337);
  for (int round = 0; round < 25; ++round) {
    const int n = 3 + int(rng.below(4));
    auto g = random_valid_structure(rng, n);
    SubfamilyOracle oracle(g, {});
    auto decomposition = optimal_decomposition(oracle);
    CHECK(decomposition.l() == min_partition_by_enumeration(oracle));
  }
  SubfamilyOracle worked(five_player_gamma(), {});
  CHECK(optimal_decomposition(worked).l() == min_partition_by_enumeration(worked));
}

TEST_CASE("weaker oracles never decrease the optimum") {
  TestRng rng(4242);
  OracleConfig unanimity;
  unanimity.kind = OracleConfig::Kind::kUnanimity;
  for (int round = 0; round < 15; ++round) {
    const int n = 3 + int(rng.below(4));
    auto g = random_valid_structure(rng, n);
    const int l_bundled = optimal_decomposition(g).l();
    const int l_unanimity = optimal_decomposition(g, unanimity).l();
    CHECK(l_bundled <= l_unanimity);
    CHECK(l_unanimity == g.r());  // unanimity realizes singletons only
  }
}

TEST_CASE("trivial decomposition uses singleton blocks") {
  auto decomposition = trivial_decomposition(five_player_gamma());
  REQUIRE(decomposition.l() == 4);
  // ((2,2)) for the pair, ((3,3)) for each triple.
  std::vector<int> shares;
  for (const auto& block : decomposition.blocks) {
    REQUIRE(block.witness.has_value());
    shares.push_back(block.witness->total_shares);
  }
  CHECK(shares == std::vector<int>{2, 3, 3, 3});
}
