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

#include <optional>
#include <utility>
#include <vector>

#include "qaskit/player_set.hpp"

namespace qaskit {

// An access structure over a player universe, stored as the antichain of its
// minimal authorized sets.  Construction always minimizes: supersets are
// absorbed, duplicates dropped, and the result is sorted by bitmask value so
// equal structures compare equal and render identically.
//
// The monotone closure is never materialized; membership queries walk the
// antichain.
class AccessStructure {
 public:
  // Inclusion-minimal, deduplicated, canonically ordered family.
  // Throws std::invalid_argument for an empty family ("no authorized sets")
  // or for an empty member set.
  static AccessStructure minimize(Universe universe, std::vector<Mask> family);

  const Universe& universe() const { return universe_; }
  const std::vector<Mask>& minimal_sets() const { return minimal_; }
  int r() const { return static_cast<int>(minimal_.size()); }
  int n() const { return universe_.size(); }

  // True iff some minimal set is contained in `a` (monotone closure member).
  bool is_authorized(Mask a) const;

  // Union of all minimal sets: the players that actually participate.
  Mask covered_players() const;
  bool covers_universe() const { return covered_players() == universe_.full_mask(); }

  // True iff every minimal set of `other` is authorized here, i.e. the
  // monotone closure of `other` is contained in ours (same universe assumed).
  bool closure_contains(const AccessStructure& other) const;

  bool operator==(const AccessStructure& other) const {
    return universe_ == other.universe_ && minimal_ == other.minimal_;
  }

 private:
  AccessStructure(Universe universe, std::vector<Mask> minimal)
      : universe_(std::move(universe)), minimal_(std::move(minimal)) {}

  Universe universe_;
  std::vector<Mask> minimal_;
};

// Outcome of the pairwise-intersection (no-cloning) check.  Failure carries a
// witnessing disjoint pair of minimal sets.
struct ValidityReport {
  bool valid = true;
  std::optional<std::pair<Mask, Mask>> witness;
};

ValidityReport validate_quantum(const AccessStructure& gamma);

// Throws std::invalid_argument when gamma fails validate_quantum.
void require_valid_quantum(const AccessStructure& gamma);

// The non-empty unauthorized sets, split into those disjoint from at least
// one minimal authorized set (a1) and those meeting all of them (a2).  Both
// lists are sorted by bitmask value.  a2 is closed under complement.
struct UnauthorizedSplit {
  std::vector<Mask> a1;
  std::vector<Mask> a2;
};

// Enumerates all 2^n subsets; throws SizeLimitError above limits().enum_players.
UnauthorizedSplit unauthorized_split(const AccessStructure& gamma);

// True iff for every non-empty proper subset exactly one of the subset and
// its complement is authorized (equivalently: a2 above is empty).
bool is_maximal(const AccessStructure& gamma);

}  // namespace qaskit
