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

#include "qaskit/access_structure.hpp"

#include <algorithm>
#include <stdexcept>

namespace qaskit {

AccessStructure AccessStructure::minimize(Universe universe, std::vector<Mask> family) {
  if (family.empty()) throw std::invalid_argument("no authorized sets");
  const Mask full = universe.full_mask();
  for (Mask a : family) {
    if (a == 0) throw std::invalid_argument("authorized sets must be non-empty");
    if ((a & ~full) != 0) throw std::invalid_argument("set uses players outside the universe");
  }
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());

  std::vector<Mask> minimal;
  for (Mask a : family) {
    bool dominated = false;
    for (Mask b : family) {
      if (b != a && is_subset(b, a)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) minimal.push_back(a);
  }
  return AccessStructure(std::move(universe), std::move(minimal));
}

bool AccessStructure::is_authorized(Mask a) const {
  for (Mask b : minimal_) {
    if (is_subset(b, a)) return true;
  }
  return false;
}

Mask AccessStructure::covered_players() const {
  Mask m = 0;
  for (Mask a : minimal_) m |= a;
  return m;
}

bool AccessStructure::closure_contains(const AccessStructure& other) const {
  for (Mask a : other.minimal_) {
    if (!is_authorized(a)) return false;
  }
  return true;
}

ValidityReport validate_quantum(const AccessStructure& gamma) {
  const auto& sets = gamma.minimal_sets();
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = i + 1; j < sets.size(); ++j) {
      if (!intersects(sets[i], sets[j])) {
        return {false, std::make_pair(sets[i], sets[j])};
      }
    }
  }
  return {true, std::nullopt};
}

void require_valid_quantum(const AccessStructure& gamma) {
  auto report = validate_quantum(gamma);
  if (!report.valid) {
    throw std::invalid_argument(
        "not a valid quantum access structure: disjoint authorized sets " +
        gamma.universe().set_label(report.witness->first) + " and " +
        gamma.universe().set_label(report.witness->second));
  }
}

namespace {

void check_enum_bound(const AccessStructure& gamma) {
  if (gamma.n() > limits().enum_players) {
    throw SizeLimitError("subset enumeration over " + std::to_string(gamma.n()) +
                         " players exceeds the bound of " +
                         std::to_string(limits().enum_players));
  }
}

}  // namespace

UnauthorizedSplit unauthorized_split(const AccessStructure& gamma) {
  check_enum_bound(gamma);
  const Mask full = gamma.universe().full_mask();
  UnauthorizedSplit split;
  for (Mask a = 1; a <= full; ++a) {
    if (gamma.is_authorized(a)) continue;
    bool disjoint_from_some = false;
    for (Mask b : gamma.minimal_sets()) {
      if (!intersects(a, b)) {
        disjoint_from_some = true;
        break;
      }
    }
    (disjoint_from_some ? split.a1 : split.a2).push_back(a);
  }
  return split;
}

bool is_maximal(const AccessStructure& gamma) {
  check_enum_bound(gamma);
  const Mask full = gamma.universe().full_mask();
  for (Mask a = 1; a <= full; ++a) {
    const Mask comp = full & ~a;
    if (a > comp) continue;  // visit each complement pair once
    if (gamma.is_authorized(a) == gamma.is_authorized(comp)) return false;
  }
  return true;
}

}  // namespace qaskit
