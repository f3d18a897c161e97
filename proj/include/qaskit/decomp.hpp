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

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "qaskit/access_structure.hpp"

namespace qaskit {

// A weighted ((k, m)) threshold witness: player p holds weights[p] shares of
// an underlying ((k, 2k-1)) scheme and the shares beyond m are discarded.
// Witnesses are the realizability certificates for decomposition blocks.
struct BundledThreshold {
  Mask participants = 0;
  std::vector<int> weights;  // per player index; 0 for non-participants
  int threshold = 0;         // k
  int total_shares = 0;      // m = sum of weights, m <= 2k-1
  int field_order = 0;       // smallest prime >= 2k-1

  int code_shares() const { return 2 * threshold - 1; }
  int weight_of(Mask a) const;
};

// Minimal sets of {A : weight(A) >= k} over the participants of `weights`.
AccessStructure induced_structure(const Universe& universe,
                                  const std::vector<int>& weights, int threshold);

struct OracleConfig {
  enum class Kind { kBundled, kUnanimity };
  Kind kind = Kind::kBundled;
  int max_weight = 5;     // per-player weight bound W
  int max_threshold = 25;  // k bound K
};

// Searches weight vectors (ascending total, then lexicographic per player)
// for a bundled threshold whose induced minimal sets equal the block's.
// Every returned witness is re-validated against the block before returning;
// absence within bounds is a normal outcome, not an error.
std::optional<BundledThreshold> recognize_bundled_threshold(
    const AccessStructure& block, const OracleConfig& config = {});

// Realizability oracle over subfamilies of one structure's minimal sets,
// memoized by index subset.  Subfamilies are addressed by bitmask over
// {0..r-1} in canonical minimal-set order.
class SubfamilyOracle {
 public:
  SubfamilyOracle(const AccessStructure& gamma, OracleConfig config);

  const AccessStructure& gamma() const { return gamma_; }
  const OracleConfig& config() const { return config_; }

  AccessStructure subfamily(std::uint32_t index_mask) const;
  const std::optional<BundledThreshold>& realize(std::uint32_t index_mask) const;
  bool realizable(std::uint32_t index_mask) const { return realize(index_mask).has_value(); }

 private:
  AccessStructure gamma_;
  OracleConfig config_;
  mutable std::unordered_map<std::uint32_t, std::optional<BundledThreshold>> memo_;
};

// Realizability of every non-empty index subset, as a bitset indexed by
// subset mask.  Realizability is not assumed hereditary.  Bounded by
// limits().subfamily_r.
std::vector<bool> enumerate_realizable_subfamilies(const SubfamilyOracle& oracle);

struct DecompositionBlock {
  AccessStructure structure;
  std::optional<BundledThreshold> witness;
};

// A partition of the minimal sets into realizable blocks.
struct Decomposition {
  std::vector<DecompositionBlock> blocks;
  std::vector<std::uint32_t> block_index_masks;  // over minimal-set indices
  int l() const { return static_cast<int>(blocks.size()); }
  int total_witness_shares() const;
};

// Exact minimum-block partition of the minimal sets into oracle-realizable
// blocks, by dynamic programming over index subsets (each block contains the
// lowest unplaced index).  Ties on l are broken towards fewer total witness
// shares, then lowest block mask, so results are deterministic.  The trivial
// all-singletons partition guarantees l <= r.
Decomposition optimal_decomposition(const SubfamilyOracle& oracle);

// Convenience overload building the oracle internally.
Decomposition optimal_decomposition(const AccessStructure& gamma,
                                    const OracleConfig& config = {});

// The trivial decomposition: one singleton block per minimal set.
Decomposition trivial_decomposition(const AccessStructure& gamma,
                                    const OracleConfig& config = {});

}  // namespace qaskit
