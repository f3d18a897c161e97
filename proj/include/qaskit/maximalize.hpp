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
#include <string>
#include <utility>
#include <vector>

#include "qaskit/access_structure.hpp"

namespace qaskit {

// Constructive procedures between general, maximal, and minimal maximal
// quantum access structures.

// Complement pairs {B, complement(B)} with both members unauthorized.  Empty
// exactly when the structure is maximal.  Each pair is ordered (smaller mask
// first) and the list is sorted by that representative.
std::vector<std::pair<Mask, Mask>> candidate_pairs(const AccessStructure& gamma);

enum class ExtendPolicy {
  kSmallestFirst,  // fewest players, lowest bitmask tie-break (default)
  kLargestFirst,   // most players, lowest bitmask tie-break
};

struct ExtendResult {
  AccessStructure result;
  std::vector<Mask> added;  // replay log, in addition order
};

// Repeatedly authorizes one both-unauthorized candidate (re-minimizing after
// each addition) until no candidate pair remains.  The result is maximal and
// its closure contains the input's closure.  Candidates whose absorption
// would uncover a player are deferred until no alternative remains, so
// player coverage survives whenever some maximal extension preserves it.
ExtendResult extend_to_maximal(const AccessStructure& gamma,
                               ExtendPolicy policy = ExtendPolicy::kSmallestFirst);

// Every non-constant self-dual monotone family over the universe -- these are
// exactly the maximal quantum access structures.  Canonically sorted.
// Bounded by limits().extension_players.
std::vector<AccessStructure> enumerate_maximal_structures(const Universe& universe);

// All maximal structures reachable from gamma by authorizing additional sets
// while keeping gamma's minimal sets minimal (no added set absorbs them).
// Equivalently: maximal families whose minimal sets contain gamma's.
std::vector<AccessStructure> all_maximal_extensions(const AccessStructure& gamma);

struct CoveringExtension {
  AccessStructure result;
  std::vector<Mask> added;   // greedy replay log, or the new sets on fallback
  bool exhaustive_fallback = false;
};

// Maximal extension that keeps every player of the universe covered.  The
// greedy path is used when it succeeds; otherwise (the greedy can strand a
// player by absorbing its only minimal sets) the seeded enumeration picks the
// smallest covering family whose closure contains gamma's.  Throws when no
// covering maximal extension exists at all.
CoveringExtension covering_maximal_extension(const AccessStructure& gamma,
                                             ExtendPolicy policy = ExtendPolicy::kSmallestFirst);

// One replacement step: the minimal sets containing `pivot` collapse to it
// and the pivot's complement is dropped from the family.
struct ReduceStep {
  Mask pivot;
  std::vector<Mask> replaced;
  std::optional<Mask> deleted;
};

struct ReduceResult {
  AccessStructure result;
  std::vector<ReduceStep> steps;
};

// Candidate pivots for a reduction step: intersections of two or more minimal
// sets with at least two players, canonicalized to the intersection of every
// minimal set containing them.  Ordered by (number of containing sets
// descending, bitmask ascending) -- the order reduce_to_minmax tries them in.
std::vector<Mask> reduction_candidates(const AccessStructure& gamma);

// Applies the replacement step for `pivot` and validates the outcome: the new
// family must be a valid quantum access structure, still maximal, cover the
// same players, and have strictly fewer minimal sets.  nullopt otherwise.
std::optional<AccessStructure> try_reduction_step(const AccessStructure& gamma,
                                                  Mask pivot);

bool has_reduction_step(const AccessStructure& gamma);

// Greedily applies valid reduction steps (in reduction_candidates order,
// rolling back candidates that fail validation) until none remains.  Input
// must be maximal.  The fixpoint usually has one minimal set per covered
// player; a few large families admit no valid step at all and come back
// unchanged, so callers that need a minimal maximal result must check
// is_minmax on it.
ReduceResult reduce_to_minmax(const AccessStructure& gamma);

// Maximal, with exactly one minimal set per player and every player covered.
bool is_minmax(const AccessStructure& gamma);

struct GrowResult {
  AccessStructure result;
  Mask pivot;  // in the input universe
};

// Extends a minimal maximal structure by one player: the pivot minimal set A
// gains the new player, and complement(A) + new player joins the family.
// A pivot is admissible when every proper subset of complement(A) is disjoint
// from some other minimal set and the grown family is again minimal maximal.
// With no explicit pivot, minimal sets are tried in bitmask order.  Throws
// std::invalid_argument listing the pivots tried when none is admissible.
GrowResult grow_minmax(const AccessStructure& gamma, const std::string& new_player,
                       std::optional<Mask> pivot = std::nullopt);

struct CorollaryReport {
  int r = 0;
  int n = 0;
  bool r_ge_n = false;
  bool r_strictly_greater = false;
  bool minimal_maximal = false;  // the r == n case, flagged separately
};

// Reports how the minimal-set count of a maximal structure relates to the
// player count.  Input must be maximal.
CorollaryReport check_corollary(const AccessStructure& gamma);

// Minimum image of the minimal-set list over all player permutations; two
// structures are isomorphic iff their canonical forms coincide.  Intended for
// small universes (cost n!).
std::vector<Mask> canonical_form(const AccessStructure& gamma);

bool isomorphic(const AccessStructure& a, const AccessStructure& b);

}  // namespace qaskit
