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

#include "qaskit/maximalize.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace qaskit {

std::vector<std::pair<Mask, Mask>> candidate_pairs(const AccessStructure& gamma) {
  require_valid_quantum(gamma);
  const Mask full = gamma.universe().full_mask();
  std::vector<std::pair<Mask, Mask>> pairs;
  for (Mask a : unauthorized_split(gamma).a2) {
    const Mask comp = full & ~a;
    if (a < comp) pairs.emplace_back(a, comp);
  }
  std::sort(pairs.begin(), pairs.end());
  return pairs;
}

ExtendResult extend_to_maximal(const AccessStructure& gamma, ExtendPolicy policy) {
  require_valid_quantum(gamma);
  AccessStructure current = gamma;
  std::vector<Mask> added;
  for (;;) {
    auto split = unauthorized_split(current);
    if (split.a2.empty()) break;
    // Every member of a2 meets all minimal sets and is unauthorized, so any
    // of them is addable.  Adding a candidate below an existing minimal set
    // absorbs that set on re-minimization, which can leave a player with no
    // minimal set; such candidates are deferred unless nothing else is left.
    const Mask covered = current.covered_players();
    auto coverage_after = [&](Mask c) {
      Mask m = c;
      for (Mask a : current.minimal_sets()) {
        if (!is_subset(c, a)) m |= a;
      }
      return m;
    };
    auto better = [&](Mask c, Mask best) {
      return policy == ExtendPolicy::kSmallestFirst
                 ? std::pair(set_size(c), c) < std::pair(set_size(best), best)
                 : std::pair(-set_size(c), c) < std::pair(-set_size(best), best);
    };
    std::optional<Mask> covering_pick;
    std::optional<Mask> any_pick;
    for (Mask c : split.a2) {
      if (!any_pick || better(c, *any_pick)) any_pick = c;
      if (coverage_after(c) == covered && (!covering_pick || better(c, *covering_pick))) {
        covering_pick = c;
      }
    }
    const Mask pick = covering_pick.value_or(*any_pick);
    added.push_back(pick);
    auto family = current.minimal_sets();
    family.push_back(pick);
    current = AccessStructure::minimize(current.universe(), family);
  }
  return {current, added};
}

namespace {

// Backtracking enumeration of the non-constant self-dual monotone families
// over a fixed universe.  Subset status is decided pairwise (a vs complement)
// with monotonicity propagated eagerly; every leaf is a maximal structure.
class SelfDualSearch {
 public:
  explicit SelfDualSearch(const Universe& universe)
      : universe_(universe), full_(universe.full_mask()), status_(full_ + 1, 0) {
    for (Mask a = 1; a < full_; ++a) {
      const Mask comp = full_ & ~a;
      if (std::pair(set_size(a), a) < std::pair(set_size(comp), comp)) {
        reps_.push_back(a);
      }
    }
    std::sort(reps_.begin(), reps_.end(), [](Mask a, Mask b) {
      return std::pair(set_size(a), a) < std::pair(set_size(b), b);
    });
    std::vector<Mask> seed_trail;
    if (!assign(0, -1, seed_trail)) {
      throw std::logic_error("empty set could not be marked unauthorized");
    }
  }

  // Marks a set authorized before the search starts (for seeded enumeration).
  bool force_authorized(Mask a) {
    std::vector<Mask> trail;
    return assign(a, +1, trail);
  }

  std::vector<std::vector<Mask>> run() {
    std::vector<std::vector<Mask>> out;
    dfs(0, out);
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  bool assign(Mask a, int value, std::vector<Mask>& trail) {
    std::vector<std::pair<Mask, int>> work{{a, value}};
    while (!work.empty()) {
      auto [m, v] = work.back();
      work.pop_back();
      if (status_[m] == v) continue;
      if (status_[m] == -v) return false;
      status_[m] = static_cast<int8_t>(v);
      trail.push_back(m);
      work.emplace_back(full_ & ~m, -v);
      if (v > 0) {
        const Mask rest = full_ & ~m;
        for (Mask sub = rest; sub; sub = (sub - 1) & rest) work.emplace_back(m | sub, +1);
      } else if (m != 0) {
        for (Mask sub = (m - 1) & m;; sub = (sub - 1) & m) {
          work.emplace_back(sub, -1);
          if (sub == 0) break;
        }
      }
    }
    return true;
  }

  void dfs(std::size_t i, std::vector<std::vector<Mask>>& out) {
    while (i < reps_.size() && status_[reps_[i]] != 0) ++i;
    if (i == reps_.size()) {
      out.push_back(extract_minimal());
      return;
    }
    for (int v : {+1, -1}) {
      std::vector<Mask> trail;
      if (assign(reps_[i], v, trail)) dfs(i + 1, out);
      for (Mask m : trail) status_[m] = 0;
    }
  }

  std::vector<Mask> extract_minimal() const {
    std::vector<Mask> minimal;
    for (Mask a = 1; a <= full_; ++a) {
      if (status_[a] <= 0) continue;
      bool is_min = true;
      for (Mask bits = a; bits;) {
        const Mask low = bits & (0 - bits);
        bits ^= low;
        if (status_[a ^ low] > 0) {
          is_min = false;
          break;
        }
      }
      if (is_min) minimal.push_back(a);
    }
    return minimal;
  }

  const Universe& universe_;
  Mask full_;
  std::vector<int8_t> status_;
  std::vector<Mask> reps_;
};

void check_extension_bound(int n) {
  if (n > limits().extension_players) {
    throw SizeLimitError("exhaustive enumeration over " + std::to_string(n) +
                         " players exceeds the bound of " +
                         std::to_string(limits().extension_players));
  }
}

}  // namespace

std::vector<AccessStructure> enumerate_maximal_structures(const Universe& universe) {
  check_extension_bound(universe.size());
  SelfDualSearch search(universe);
  std::vector<AccessStructure> out;
  for (auto& family : search.run()) {
    out.push_back(AccessStructure::minimize(universe, std::move(family)));
  }
  return out;
}

namespace {

// Every maximal family whose closure contains gamma's, canonically sorted.
std::vector<std::vector<Mask>> closure_superfamilies(const AccessStructure& gamma) {
  SelfDualSearch search(gamma.universe());
  for (Mask a : gamma.minimal_sets()) {
    if (!search.force_authorized(a)) {
      throw std::logic_error("valid structure could not seed the enumeration");
    }
  }
  return search.run();
}

}  // namespace

std::vector<AccessStructure> all_maximal_extensions(const AccessStructure& gamma) {
  require_valid_quantum(gamma);
  check_extension_bound(gamma.n());
  std::vector<AccessStructure> out;
  for (auto& family : closure_superfamilies(gamma)) {
    // Extensions keep the given minimal sets minimal; families in which an
    // added set absorbs one of them are maximal but not extensions.
    const bool keeps = std::includes(family.begin(), family.end(),
                                     gamma.minimal_sets().begin(),
                                     gamma.minimal_sets().end());
    if (keeps) out.push_back(AccessStructure::minimize(gamma.universe(), std::move(family)));
  }
  return out;
}

CoveringExtension covering_maximal_extension(const AccessStructure& gamma,
                                             ExtendPolicy policy) {
  const Mask full = gamma.universe().full_mask();
  auto greedy = extend_to_maximal(gamma, policy);
  if (greedy.result.covered_players() == full) {
    return {std::move(greedy.result), std::move(greedy.added), false};
  }
  check_extension_bound(gamma.n());
  std::vector<Mask> best;
  for (auto& family : closure_superfamilies(gamma)) {
    Mask covered = 0;
    for (Mask a : family) covered |= a;
    if (covered != full) continue;
    if (best.empty() ||
        std::pair(family.size(), family) < std::pair(best.size(), best)) {
      best = std::move(family);
    }
  }
  if (best.empty()) {
    throw std::invalid_argument("no covering maximal extension exists");
  }
  auto result = AccessStructure::minimize(gamma.universe(), best);
  std::vector<Mask> added;
  for (Mask a : result.minimal_sets()) {
    const auto& original = gamma.minimal_sets();
    if (std::find(original.begin(), original.end(), a) == original.end()) {
      added.push_back(a);
    }
  }
  return {std::move(result), std::move(added), true};
}

std::vector<Mask> reduction_candidates(const AccessStructure& gamma) {
  const auto& sets = gamma.minimal_sets();
  // Canonical pivot for an intersection I: the intersection of every minimal
  // set containing I.  The closure below reaches every subfamily intersection.
  auto canonicalize = [&](Mask i) {
    Mask b = gamma.universe().full_mask();
    int count = 0;
    for (Mask a : sets) {
      if (is_subset(i, a)) {
        b &= a;
        ++count;
      }
    }
    return std::pair(b, count);
  };

  std::set<Mask> seen;
  std::vector<Mask> queue;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = i + 1; j < sets.size(); ++j) {
      const Mask inter = sets[i] & sets[j];
      if (set_size(inter) < 2) continue;
      const Mask b = canonicalize(inter).first;
      if (seen.insert(b).second) queue.push_back(b);
    }
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Mask c = queue[head];
    for (Mask a : sets) {
      const Mask inter = c & a;
      if (set_size(inter) < 2) continue;
      const Mask b = canonicalize(inter).first;
      if (seen.insert(b).second) queue.push_back(b);
    }
  }

  std::vector<std::pair<std::pair<int, Mask>, Mask>> ordered;
  for (Mask b : queue) {
    const int count = canonicalize(b).second;
    if (count >= 2) ordered.push_back({{-count, b}, b});
  }
  std::sort(ordered.begin(), ordered.end());
  std::vector<Mask> out;
  for (auto& [key, b] : ordered) out.push_back(b);
  return out;
}

std::optional<AccessStructure> try_reduction_step(const AccessStructure& gamma, Mask pivot) {
  if (set_size(pivot) < 2) return std::nullopt;
  const Mask comp = gamma.universe().complement(pivot);
  std::vector<Mask> family{pivot};
  int replaced = 0;
  Mask common = gamma.universe().full_mask();
  for (Mask a : gamma.minimal_sets()) {
    if (is_subset(pivot, a)) {
      ++replaced;
      common &= a;
      continue;
    }
    if (a == comp) continue;  // the pivot's complement leaves the family
    family.push_back(a);
  }
  if (replaced < 2) return std::nullopt;
  if (common != pivot) return std::nullopt;  // pivot must be a subfamily intersection
  auto next = AccessStructure::minimize(gamma.universe(), family);
  if (!validate_quantum(next).valid) return std::nullopt;
  if (next.covered_players() != gamma.covered_players()) return std::nullopt;
  if (next.r() >= gamma.r()) return std::nullopt;
  if (!is_maximal(next)) return std::nullopt;
  return next;
}

bool has_reduction_step(const AccessStructure& gamma) {
  for (Mask pivot : reduction_candidates(gamma)) {
    if (try_reduction_step(gamma, pivot)) return true;
  }
  return false;
}

ReduceResult reduce_to_minmax(const AccessStructure& gamma) {
  if (!is_maximal(gamma)) {
    throw std::invalid_argument("reduce_to_minmax requires a maximal structure");
  }
  AccessStructure current = gamma;
  std::vector<ReduceStep> steps;
  for (;;) {
    bool progressed = false;
    for (Mask pivot : reduction_candidates(current)) {
      auto next = try_reduction_step(current, pivot);
      if (!next) continue;
      ReduceStep step;
      step.pivot = pivot;
      for (Mask a : current.minimal_sets()) {
        if (is_subset(pivot, a)) step.replaced.push_back(a);
      }
      const Mask comp = current.universe().complement(pivot);
      const auto& sets = current.minimal_sets();
      if (std::find(sets.begin(), sets.end(), comp) != sets.end()) step.deleted = comp;
      steps.push_back(std::move(step));
      current = std::move(*next);
      progressed = true;
      break;
    }
    if (!progressed) break;
  }
  return {current, steps};
}

bool is_minmax(const AccessStructure& gamma) {
  return gamma.r() == gamma.n() && gamma.covers_universe() && is_maximal(gamma);
}

GrowResult grow_minmax(const AccessStructure& gamma, const std::string& new_player,
                       std::optional<Mask> pivot) {
  if (!is_minmax(gamma)) {
    throw std::invalid_argument("grow_minmax requires a minimal maximal structure");
  }
  const Universe grown = gamma.universe().with_player(new_player);
  const Mask new_bit = Mask{1} << gamma.n();
  const Mask old_full = gamma.universe().full_mask();

  // A pivot A must leave, for every proper subset B of its old-universe
  // complement, some other minimal set disjoint from B.
  auto admissible = [&](Mask a) {
    const Mask comp = old_full & ~a;
    if (comp == 0) return true;
    for (Mask b = (comp - 1) & comp;; b = (b - 1) & comp) {
      bool ok = false;
      for (Mask other : gamma.minimal_sets()) {
        if (other != a && !intersects(other, b)) {
          ok = true;
          break;
        }
      }
      if (!ok) return false;
      if (b == 0) break;
    }
    return true;
  };

  auto build = [&](Mask a) {
    std::vector<Mask> family;
    for (Mask s : gamma.minimal_sets()) family.push_back(s == a ? (s | new_bit) : s);
    family.push_back((old_full & ~a) | new_bit);
    return AccessStructure::minimize(grown, family);
  };

  std::vector<Mask> tried;
  std::vector<Mask> order;
  if (pivot) {
    const auto& sets = gamma.minimal_sets();
    if (std::find(sets.begin(), sets.end(), *pivot) == sets.end()) {
      throw std::invalid_argument("pivot " + gamma.universe().set_label(*pivot) +
                                  " is not a minimal authorized set");
    }
    order.push_back(*pivot);
  } else {
    order = gamma.minimal_sets();
  }

  for (Mask a : order) {
    tried.push_back(a);
    if (!admissible(a)) continue;
    auto grown_structure = build(a);
    if (is_minmax(grown_structure)) return {grown_structure, a};
  }

  std::string msg = "no admissible pivot for growing by '" + new_player + "'; tried:";
  for (Mask a : tried) msg += " " + gamma.universe().set_label(a);
  throw std::invalid_argument(msg);
}

CorollaryReport check_corollary(const AccessStructure& gamma) {
  if (!is_maximal(gamma)) {
    throw std::invalid_argument("check_corollary requires a maximal structure");
  }
  CorollaryReport report;
  report.r = gamma.r();
  report.n = gamma.n();
  report.r_ge_n = report.r >= report.n;
  report.r_strictly_greater = report.r > report.n;
  report.minimal_maximal = is_minmax(gamma);
  return report;
}

std::vector<Mask> canonical_form(const AccessStructure& gamma) {
  const int n = gamma.n();
  if (n > 8) throw SizeLimitError("canonical form over " + std::to_string(n) +
                                  " players exceeds the permutation bound of 8");
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Mask> best;
  do {
    std::vector<Mask> image;
    image.reserve(gamma.minimal_sets().size());
    for (Mask a : gamma.minimal_sets()) {
      Mask m = 0;
      for (int i = 0; i < n; ++i) {
        if (a & (Mask{1} << i)) m |= Mask{1} << perm[i];
      }
      image.push_back(m);
    }
    std::sort(image.begin(), image.end());
    if (best.empty() || image < best) best = std::move(image);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

bool isomorphic(const AccessStructure& a, const AccessStructure& b) {
  return a.n() == b.n() && canonical_form(a) == canonical_form(b);
}

}  // namespace qaskit
