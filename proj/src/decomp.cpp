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

#include "qaskit/decomp.hpp"

#include <algorithm>
#include <stdexcept>

#include "qaskit/qsim.hpp"

namespace qaskit {

int BundledThreshold::weight_of(Mask a) const {
  int w = 0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (a & (Mask{1} << i)) w += weights[i];
  }
  return w;
}

AccessStructure induced_structure(const Universe& universe,
                                  const std::vector<int>& weights, int threshold) {
  Mask participants = 0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] > 0) participants |= Mask{1} << i;
  }
  std::vector<Mask> authorized;
  for (Mask s = participants;; s = (s - 1) & participants) {
    int w = 0;
    for (int i = 0; i < universe.size(); ++i) {
      if (s & (Mask{1} << i)) w += weights[i];
    }
    if (w >= threshold) authorized.push_back(s);
    if (s == 0) break;
  }
  return AccessStructure::minimize(universe, authorized);
}

namespace {

// Weight-vector search for one block.  Vectors are visited by ascending total
// then lexicographically per participant, so the first hit is the canonical
// minimal-share witness.  For each vector the only viable threshold is the
// minimum block-set weight: smaller k only tightens the no-cloning bound
// m <= 2k-1, and exactness already forces k above every non-block weight.
class WitnessSearch {
 public:
  WitnessSearch(const AccessStructure& block, const OracleConfig& config)
      : block_(block), config_(config) {
    participants_ = block.covered_players();
    for (int i = 0; i < block.n(); ++i) {
      if (participants_ & (Mask{1} << i)) players_.push_back(i);
    }
    const int p = static_cast<int>(players_.size());
    // Subset indices below are packed over the participant list.
    contains_block_set_.assign(std::size_t{1} << p, false);
    for (Mask packed = 0; packed < (Mask{1} << p); ++packed) {
      Mask unpacked = 0;
      for (int j = 0; j < p; ++j) {
        if (packed & (Mask{1} << j)) unpacked |= Mask{1} << players_[j];
      }
      for (Mask b : block_.minimal_sets()) {
        if (is_subset(b, unpacked)) {
          contains_block_set_[packed] = true;
          break;
        }
      }
    }
  }

  std::optional<BundledThreshold> run() {
    const int p = static_cast<int>(players_.size());
    if (p > limits().oracle_participants) return std::nullopt;
    const int max_total = p * config_.max_weight;
    std::vector<int> w(p, 1);
    for (int total = p; total <= max_total; ++total) {
      if (compose(w, 0, total)) return found_;
    }
    return std::nullopt;
  }

 private:
  // Enumerates weight compositions of `remaining` over positions >= pos.
  bool compose(std::vector<int>& w, std::size_t pos, int remaining) {
    const int left = static_cast<int>(w.size() - pos);
    if (remaining < left || remaining > left * config_.max_weight) return false;
    if (pos + 1 == w.size()) {
      w[pos] = remaining;
      return check(w);
    }
    for (int v = 1; v <= std::min(config_.max_weight, remaining - (left - 1)); ++v) {
      w[pos] = v;
      if (compose(w, pos + 1, remaining - v)) return true;
    }
    return false;
  }

  bool check(const std::vector<int>& w) {
    const int p = static_cast<int>(players_.size());
    std::vector<int> full_weights(block_.n(), 0);
    for (int j = 0; j < p; ++j) full_weights[players_[j]] = w[j];

    auto weight_of = [&](Mask a) {
      int total = 0;
      for (Mask bits = a; bits;) {
        const Mask low = bits & (0 - bits);
        bits ^= low;
        total += full_weights[std::countr_zero(low)];
      }
      return total;
    };

    int k = 0;
    bool first = true;
    for (Mask b : block_.minimal_sets()) {
      const int wb = weight_of(b);
      k = first ? wb : std::min(k, wb);
      first = false;
    }
    if (k < 1 || k > config_.max_threshold) return false;

    int total = 0;
    for (int v : w) total += v;
    if (total > 2 * k - 1) return false;

    // Minimality: dropping any player from a block set must fall below k.
    for (Mask b : block_.minimal_sets()) {
      const int wb = weight_of(b);
      for (Mask bits = b; bits;) {
        const Mask low = bits & (0 - bits);
        bits ^= low;
        if (wb - full_weights[std::countr_zero(low)] >= k) return false;
      }
    }

    // Exactness: every subset reaching k must contain a block set.
    std::vector<int> subset_weight(std::size_t{1} << p, 0);
    for (Mask packed = 1; packed < (Mask{1} << p); ++packed) {
      const Mask low = packed & (0 - packed);
      subset_weight[packed] = subset_weight[packed ^ low] + w[std::countr_zero(low)];
      if (subset_weight[packed] >= k && !contains_block_set_[packed]) return false;
    }

    BundledThreshold witness;
    witness.participants = participants_;
    witness.weights = full_weights;
    witness.threshold = k;
    witness.total_shares = total;
    witness.field_order = next_prime(std::max(2, 2 * k - 1));
    // Validate by re-deriving the induced antichain before accepting.
    if (!(induced_structure(block_.universe(), full_weights, k) == block_)) return false;
    found_ = witness;
    return true;
  }

  const AccessStructure& block_;
  OracleConfig config_;
  Mask participants_ = 0;
  std::vector<int> players_;
  std::vector<bool> contains_block_set_;
  std::optional<BundledThreshold> found_;
};

}  // namespace

std::optional<BundledThreshold> recognize_bundled_threshold(const AccessStructure& block,
                                                            const OracleConfig& config) {
  require_valid_quantum(block);
  return WitnessSearch(block, config).run();
}

SubfamilyOracle::SubfamilyOracle(const AccessStructure& gamma, OracleConfig config)
    : gamma_(gamma), config_(config) {}

AccessStructure SubfamilyOracle::subfamily(std::uint32_t index_mask) const {
  std::vector<Mask> sets;
  for (int i = 0; i < gamma_.r(); ++i) {
    if (index_mask & (std::uint32_t{1} << i)) sets.push_back(gamma_.minimal_sets()[i]);
  }
  return AccessStructure::minimize(gamma_.universe(), sets);
}

const std::optional<BundledThreshold>& SubfamilyOracle::realize(std::uint32_t index_mask) const {
  auto it = memo_.find(index_mask);
  if (it != memo_.end()) return it->second;
  std::optional<BundledThreshold> witness;
  if (config_.kind == OracleConfig::Kind::kUnanimity) {
    if (std::popcount(index_mask) == 1) {
      const Mask set = gamma_.minimal_sets()[std::countr_zero(index_mask)];
      BundledThreshold w;
      w.participants = set;
      w.weights.assign(gamma_.n(), 0);
      for (int i = 0; i < gamma_.n(); ++i) {
        if (set & (Mask{1} << i)) w.weights[i] = 1;
      }
      w.threshold = set_size(set);
      w.total_shares = w.threshold;
      w.field_order = next_prime(std::max(2, 2 * w.threshold - 1));
      witness = w;
    }
  } else {
    witness = recognize_bundled_threshold(subfamily(index_mask), config_);
  }
  return memo_.emplace(index_mask, std::move(witness)).first->second;
}

std::vector<bool> enumerate_realizable_subfamilies(const SubfamilyOracle& oracle) {
  const int r = oracle.gamma().r();
  if (r > limits().subfamily_r) {
    throw SizeLimitError("subfamily enumeration over r=" + std::to_string(r) +
                         " minimal sets exceeds the bound of " +
                         std::to_string(limits().subfamily_r));
  }
  std::vector<bool> realizable(std::size_t{1} << r, false);
  for (std::uint32_t t = 1; t < (std::uint32_t{1} << r); ++t) {
    realizable[t] = oracle.realizable(t);
  }
  return realizable;
}

int Decomposition::total_witness_shares() const {
  int total = 0;
  for (const auto& block : blocks) {
    if (block.witness) total += block.witness->total_shares;
  }
  return total;
}

Decomposition optimal_decomposition(const SubfamilyOracle& oracle) {
  const int r = oracle.gamma().r();
  if (r > limits().subfamily_r) {
    throw SizeLimitError("decomposition over r=" + std::to_string(r) +
                         " minimal sets exceeds the bound of " +
                         std::to_string(limits().subfamily_r));
  }
  const std::uint32_t full = (std::uint32_t{1} << r) - 1;
  constexpr int kInf = 1 << 28;
  // dp value: (block count, total witness shares); choice: the block that
  // contains the lowest unplaced minimal set.
  std::vector<std::pair<int, int>> dp(full + 1, {kInf, kInf});
  std::vector<std::uint32_t> choice(full + 1, 0);
  dp[0] = {0, 0};
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    const std::uint32_t low = mask & (0 - mask);
    for (std::uint32_t sub = mask;; sub = (sub - 1) & mask) {
      if (sub & low) {
        const auto& witness = oracle.realize(sub);
        if (witness) {
          const auto& rest = dp[mask ^ sub];
          if (rest.first < kInf) {
            std::pair<int, int> cand{rest.first + 1, rest.second + witness->total_shares};
            if (cand < dp[mask] || (cand == dp[mask] && sub < choice[mask])) {
              dp[mask] = cand;
              choice[mask] = sub;
            }
          }
        }
      }
      if (sub == 0) break;
    }
  }
  if (dp[full].first >= kInf) {
    // Unreachable with the bundled oracle (singletons always realize), but a
    // pluggable oracle could reject singletons.
    throw std::invalid_argument("no decomposition: some minimal set is unrealizable alone");
  }

  Decomposition out;
  for (std::uint32_t mask = full; mask;) {
    const std::uint32_t block_mask = choice[mask];
    out.block_index_masks.push_back(block_mask);
    out.blocks.push_back({oracle.subfamily(block_mask), oracle.realize(block_mask)});
    mask ^= block_mask;
  }
  return out;
}

Decomposition optimal_decomposition(const AccessStructure& gamma, const OracleConfig& config) {
  require_valid_quantum(gamma);
  SubfamilyOracle oracle(gamma, config);
  return optimal_decomposition(oracle);
}

Decomposition trivial_decomposition(const AccessStructure& gamma, const OracleConfig& config) {
  require_valid_quantum(gamma);
  SubfamilyOracle oracle(gamma, config);
  Decomposition out;
  for (int i = 0; i < gamma.r(); ++i) {
    const std::uint32_t mask = std::uint32_t{1} << i;
    out.block_index_masks.push_back(mask);
    out.blocks.push_back({oracle.subfamily(mask), oracle.realize(mask)});
  }
  return out;
}

}  // namespace qaskit
