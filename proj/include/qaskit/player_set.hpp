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

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "qaskit/limits.hpp"

namespace qaskit {

// A set of players, encoded as a bitmask over the positions of a Universe.
// Player i of the universe corresponds to bit (1u << i).
using Mask = std::uint32_t;

inline int set_size(Mask a) { return std::popcount(a); }
inline bool is_subset(Mask a, Mask b) { return (a & ~b) == 0; }
inline bool is_proper_subset(Mask a, Mask b) { return a != b && is_subset(a, b); }
inline bool intersects(Mask a, Mask b) { return (a & b) != 0; }

// Ordered table of player labels.  All set operations are relative to a
// universe; complements in particular are taken against full_mask().
class Universe {
 public:
  explicit Universe(std::vector<std::string> labels);

  int size() const { return static_cast<int>(labels_.size()); }
  Mask full_mask() const { return size() == 32 ? ~Mask{0} : (Mask{1} << size()) - 1; }
  Mask complement(Mask a) const { return full_mask() & ~a; }

  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int i) const { return labels_.at(i); }

  // Index of a player label; throws std::invalid_argument for unknown names.
  int index_of(const std::string& name) const;
  bool has(const std::string& name) const;

  // Mask from a list of player names (throws on unknown names).
  Mask parse_set(const std::vector<std::string>& names) const;
  // Mask from a comma-separated list, e.g. "P1,P3".
  Mask parse_set_expr(const std::string& expr) const;

  // Player names of a mask, in universe order.
  std::vector<std::string> set_names(Mask a) const;
  // Compact rendering, e.g. "P1P2" ("{}" for the empty set).
  std::string set_label(Mask a) const;

  // Universe extended by one new player (throws if the name already exists).
  Universe with_player(const std::string& name) const;

  bool operator==(const Universe& other) const { return labels_ == other.labels_; }

 private:
  std::vector<std::string> labels_;
};

}  // namespace qaskit
