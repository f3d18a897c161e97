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

#include "qaskit/access_structure.hpp"
#include "test_helpers.hpp"

using namespace qaskit;
using namespace qaskit::testing;

TEST_CASE("minimize absorbs supersets and deduplicates") {
  auto g = structure(3, {set({1, 2}), set({1, 2, 3}), set({1, 2})});
  CHECK(g.minimal_sets() == std::vector<Mask>{set({1, 2})});

  auto antichain = structure(3, {set({1, 2})});
  CHECK(antichain.minimal_sets() == std::vector<Mask>{set({1, 2})});
}

TEST_CASE("minimize is order independent and canonical") {
  auto a = five_player_gamma();
  auto b = structure(5, {set({2, 3, 4}), set({2, 3, 5}), set({1, 4, 5}), set({1, 2})});
  CHECK(a == b);
  CHECK(a.r() == 4);
  CHECK(std::is_sorted(a.minimal_sets().begin(), a.minimal_sets().end()));
  // Idempotence.
  CHECK(AccessStructure::minimize(a.universe(), a.minimal_sets()) == a);
}

TEST_CASE("minimize rejects bad families") {
  CHECK_THROWS_WITH_AS(structure(3, {}), "no authorized sets", std::invalid_argument);
  CHECK_THROWS_AS(structure(3, {Mask{0}}), std::invalid_argument);
  CHECK_THROWS_AS(structure(2, {set({3})}), std::invalid_argument);
}

TEST_CASE("universe label handling") {
  auto u = players(3);
  CHECK(u.index_of("P2") == 1);
  CHECK_THROWS_AS(u.index_of("P9"), std::invalid_argument);
  CHECK(u.parse_set_expr("P1,P3") == set({1, 3}));
  CHECK(u.set_label(set({1, 3})) == "P1P3");
  CHECK_THROWS_AS(Universe({"A", "A"}), std::invalid_argument);
  CHECK_THROWS_AS(Universe(std::vector<std::string>(25, "x")), SizeLimitError);
}

TEST_CASE("is_authorized checks closure membership") {
  auto g = five_player_gamma();
  CHECK(g.is_authorized(set({1, 2, 3})));
  CHECK_FALSE(g.is_authorized(set({1, 3})));
  CHECK_FALSE(g.is_authorized(0));
}

TEST_CASE("is_authorized is monotone on random structures") {
  TestRng rng(41);
  for (int round = 0; round < 40; ++round) {
    const int n = 3 + int(rng.below(5));
    auto g = random_valid_structure(rng, n);
    for (int i = 0; i < 50; ++i) {
      const Mask a = Mask(rng.next()) & g.universe().full_mask();
      const Mask b = a | (Mask(rng.next()) & g.universe().full_mask());
      if (g.is_authorized(a)) CHECK(g.is_authorized(b));
    }
  }
}

TEST_CASE("validate_quantum reports a disjoint witness") {
  CHECK(validate_quantum(five_player_gamma()).valid);
  CHECK(validate_quantum(structure(1, {set({1})})).valid);

  auto bad = structure(4, {set({1, 2}), set({3, 4})});
  auto report = validate_quantum(bad);
  REQUIRE_FALSE(report.valid);
  CHECK(report.witness == std::pair(set({1, 2}), set({3, 4})));
  CHECK_THROWS_AS(require_valid_quantum(bad), std::invalid_argument);
}

TEST_CASE("unauthorized split of the five-player structure") {
  auto split = unauthorized_split(five_player_gamma());
  const std::vector<Mask> expected_a2{set({1, 3}),    set({2, 4}),    set({1, 3, 4}),
                                      set({2, 5}),    set({1, 3, 5}), set({2, 4, 5})};
  auto sorted = expected_a2;
  std::sort(sorted.begin(), sorted.end());
  CHECK(split.a2 == sorted);
}

TEST_CASE("full threshold structure has an empty a2") {
  auto g = threshold_structure(3, 5);
  auto split = unauthorized_split(g);
  CHECK(split.a2.empty());
  // Independent sweep: every non-closure subset is disjoint from some
  // minimal set.
  int unauthorized = 0;
  for (Mask a = 1; a <= g.universe().full_mask(); ++a) {
    if (!g.is_authorized(a)) ++unauthorized;
  }
  CHECK(int(split.a1.size()) == unauthorized);
}

TEST_CASE("two-player singleton split lands in a2") {
  auto g = structure(2, {set({1, 2})});
  auto split = unauthorized_split(g);
  CHECK(split.a1.empty());
  CHECK(split.a2 == std::vector<Mask>{set({1}), set({2})});
}

TEST_CASE("unauthorized split partitions and a2 is complement closed") {
  TestRng rng(99);
  for (int round = 0; round < 30; ++round) {
    const int n = 3 + int(rng.below(4));
    auto g = random_valid_structure(rng, n);
    auto split = unauthorized_split(g);
    const Mask full = g.universe().full_mask();

    std::vector<char> seen(full + 1, 0);
    for (Mask a : split.a1) seen[a] = 1;
    for (Mask a : split.a2) {
      CHECK_FALSE(seen[a]);
      seen[a] = 2;
    }
    for (Mask a = 1; a <= full; ++a) {
      CHECK((seen[a] != 0) == !g.is_authorized(a));
    }
    for (Mask a : split.a2) {
      CHECK(std::binary_search(split.a2.begin(), split.a2.end(), full & ~a));
    }
  }
}

TEST_CASE("valid structures never authorize a set and its complement") {
  TestRng rng(7);
  for (int round = 0; round < 30; ++round) {
    const int n = 3 + int(rng.below(5));
    auto g = random_valid_structure(rng, n);
    const Mask full = g.universe().full_mask();
    for (Mask a = 1; a < full; ++a) {
      const bool both = g.is_authorized(a) && g.is_authorized(full & ~a);
      CHECK_FALSE(both);
    }
  }
}

TEST_CASE("is_maximal on the worked structures") {
  CHECK_FALSE(is_maximal(five_player_gamma()));
  CHECK(is_maximal(five_player_maximal()));
  CHECK(is_maximal(five_player_maximal_wide()));
  CHECK(is_maximal(triangle_3()));
  CHECK(is_maximal(six_player_maximal()));
}

TEST_CASE("is_maximal agrees with the exactly-one-complement oracle") {
  TestRng rng(1234);
  for (int round = 0; round < 60; ++round) {
    const int n = 3 + int(rng.below(5));
    auto g = random_valid_structure(rng, n);
    const Mask full = g.universe().full_mask();
    bool oracle = true;
    for (Mask a = 1; a < full; ++a) {
      const Mask comp = full & ~a;
      if (a > comp) continue;
      if (g.is_authorized(a) == g.is_authorized(comp)) oracle = false;
    }
    CHECK(is_maximal(g) == oracle);
  }
}

TEST_CASE("limit overrides parse key=value lists") {
  Limits base;
  auto lim = parse_limits("support=500,enum_players=10,jobs=3", base);
  CHECK(lim.support == 500);
  CHECK(lim.enum_players == 10);
  CHECK(lim.jobs == 3);
  CHECK(lim.max_players == base.max_players);
  CHECK_THROWS_AS(parse_limits("bogus=1", base), std::invalid_argument);
  CHECK_THROWS_AS(parse_limits("support", base), std::invalid_argument);
}

TEST_CASE("enumeration ops surface the player bound") {
  std::vector<std::string> labels;
  for (int i = 0; i < 21; ++i) labels.push_back("q" + std::to_string(i));
  auto g = AccessStructure::minimize(Universe(labels), {Mask{1}});
  CHECK_THROWS_AS(unauthorized_split(g), SizeLimitError);
  CHECK_THROWS_AS(is_maximal(g), SizeLimitError);
}
