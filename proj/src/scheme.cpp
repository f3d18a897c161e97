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

#include "qaskit/scheme.hpp"

#include <algorithm>
#include <stdexcept>

namespace qaskit {

namespace {

std::string uncovered_player_message(const AccessStructure& gamma) {
  std::string msg = "players";
  const Mask missing = gamma.universe().full_mask() & ~gamma.covered_players();
  for (const auto& name : gamma.universe().set_names(missing)) msg += " " + name;
  msg += " occur in no minimal authorized set; the minimal maximal extension is undefined";
  return msg;
}

OuterThreshold outer_for(int l) {
  OuterThreshold outer;
  outer.k = l;
  outer.shares = 2 * l - 1;
  outer.field = next_prime(std::max(2, outer.shares));
  return outer;
}

}  // namespace

namespace {

// Hub family {P1P2, ..., P1Pn, P2...Pn}: a minimal maximal structure that
// exists on every universe with at least three players.
AccessStructure hub_family(const Universe& universe) {
  const int n = universe.size();
  if (n == 1) return AccessStructure::minimize(universe, {Mask{1}});
  if (n == 2) throw std::invalid_argument("no maximal structure covers two players");
  std::vector<Mask> sets;
  for (int i = 1; i < n; ++i) sets.push_back(Mask{1} | (Mask{1} << i));
  sets.push_back(universe.full_mask() & ~Mask{1});
  return AccessStructure::minimize(universe, sets);
}

// The minimal maximal structure the outer threshold routes its last l-1
// shares through.  With l >= 2 it must contain gamma's closure -- when the
// reduction pipeline loses that containment, the (bounded) enumeration picks
// the canonically-first containing family, and absence is a hard error: a
// maximal structure other than a minimal maximal one is contained in none.
AccessStructure choose_minmax(const AccessStructure& gamma, int l) {
  std::optional<AccessStructure> reduced;
  try {
    auto candidate = reduce_to_minmax(covering_maximal_extension(gamma).result).result;
    if (is_minmax(candidate)) reduced = std::move(candidate);
  } catch (const std::invalid_argument&) {
    // fall through to the fallbacks below
  }
  if (l <= 1) {
    // The minimal maximal component receives no shares; any well-formed
    // structure completes the descriptor.
    if (reduced) return *reduced;
    return hub_family(gamma.universe());
  }
  if (reduced && reduced->closure_contains(gamma)) return *reduced;
  for (const auto& candidate : enumerate_maximal_structures(gamma.universe())) {
    if (is_minmax(candidate) && candidate.closure_contains(gamma)) return candidate;
  }
  throw std::invalid_argument(
      "no minimal maximal structure contains the given structure; "
      "a maximal structure admits no proper minimal maximal extension");
}

}  // namespace

ConcatScheme build_scheme2(const AccessStructure& gamma, const Scheme2Config& config) {
  require_valid_quantum(gamma);
  if (!gamma.covers_universe()) {
    throw std::invalid_argument(uncovered_player_message(gamma));
  }
  auto decomposition = config.trivial ? trivial_decomposition(gamma, config.oracle)
                                      : optimal_decomposition(gamma, config.oracle);
  ConcatScheme cs{
      gamma,
      choose_minmax(gamma, decomposition.l()),
      std::move(decomposition),
      std::nullopt,
      {},
      {},
  };
  cs.minmax_witness = recognize_bundled_threshold(cs.minmax, config.oracle);
  cs.outer = outer_for(cs.l());
  for (int i = 0; i < cs.l(); ++i) {
    cs.routing.push_back("share " + std::to_string(i + 1) + " -> block " + std::to_string(i + 1));
  }
  for (int i = cs.l(); i < cs.outer.shares; ++i) {
    cs.routing.push_back("share " + std::to_string(i + 1) + " -> minimal_maximal");
  }
  return cs;
}

AccessStructure concat_authorized_family(const ConcatScheme& cs) {
  const Universe& universe = cs.gamma.universe();
  if (universe.size() > limits().enum_players) {
    throw SizeLimitError("composite sweep over " + std::to_string(universe.size()) +
                         " players exceeds the bound of " +
                         std::to_string(limits().enum_players));
  }
  const int l = cs.l();
  auto outer_shares = [&](Mask subset) {
    int count = 0;
    for (const auto& block : cs.decomposition.blocks) {
      if (block.structure.is_authorized(subset)) ++count;
    }
    if (cs.minmax.is_authorized(subset)) count += l - 1;
    return count;
  };
  auto qualified = [&](Mask subset) { return outer_shares(subset) >= l; };

  const Mask full = universe.full_mask();
  std::vector<Mask> minimal;
  for (Mask a = 1; a <= full; ++a) {
    if (!qualified(a)) continue;
    bool is_min = true;
    for (Mask bits = a; bits;) {
      const Mask low = bits & (0 - bits);
      bits ^= low;
      if (qualified(a ^ low)) {
        is_min = false;
        break;
      }
    }
    if (is_min) minimal.push_back(a);
  }
  return AccessStructure::minimize(universe, minimal);
}

namespace {

SimStatus simulate_target(const std::string& target, const Universe& universe,
                          const std::optional<BundledThreshold>& witness,
                          const AccessStructure& structure, const VerifyOptions& options) {
  SimStatus status{target, "skipped", ""};
  if (!witness) {
    status.detail = "no bundled-threshold witness";
    return status;
  }
  std::int64_t support = 1;
  for (int i = 0; i < witness->threshold; ++i) {
    support *= witness->field_order;
    if (support > options.sim_support_budget) break;
  }
  if (support > options.sim_support_budget) {
    status.detail = "support q^k exceeds the simulation budget of " +
                    std::to_string(options.sim_support_budget);
    return status;
  }
  try {
    const auto verification = verify_structure(make_scheme_instance(universe, *witness), structure);
    status.status = verification.pass ? "pass" : "fail";
    if (!verification.pass) {
      status.detail = std::to_string(verification.violations.size()) + " subset check(s) failed";
    }
  } catch (const SizeLimitError& e) {
    status.detail = e.what();
  }
  return status;
}

}  // namespace

Scheme2Verification verify_scheme2(const ConcatScheme& cs, const VerifyOptions& options) {
  Scheme2Verification out;
  const auto actual = concat_authorized_family(cs);
  const auto& expected_sets = cs.gamma.minimal_sets();
  const auto& actual_sets = actual.minimal_sets();
  std::set_difference(expected_sets.begin(), expected_sets.end(), actual_sets.begin(),
                      actual_sets.end(), std::back_inserter(out.missing_minimal_sets));
  std::set_difference(actual_sets.begin(), actual_sets.end(), expected_sets.begin(),
                      expected_sets.end(), std::back_inserter(out.extra_minimal_sets));
  out.share_flow_ok = out.missing_minimal_sets.empty() && out.extra_minimal_sets.empty();

  bool sims_ok = true;
  if (options.run_simulations) {
    const Universe& universe = cs.gamma.universe();
    for (std::size_t i = 0; i < cs.decomposition.blocks.size(); ++i) {
      const auto& block = cs.decomposition.blocks[i];
      auto status = simulate_target("block" + std::to_string(i + 1), universe, block.witness,
                                    block.structure, options);
      sims_ok = sims_ok && status.status != "fail";
      out.simulations.push_back(std::move(status));
    }
    auto status = simulate_target("minmax", universe, cs.minmax_witness, cs.minmax, options);
    sims_ok = sims_ok && status.status != "fail";
    out.simulations.push_back(std::move(status));
  }
  out.pass = out.share_flow_ok && sims_ok;
  return out;
}

Scheme1Plan build_scheme1(const AccessStructure& gamma, const OracleConfig& config) {
  require_valid_quantum(gamma);
  Scheme1Plan plan{gamma, optimal_decomposition(gamma, config), {}, {}};
  for (const auto& block : plan.decomposition.blocks) {
    if (!block.witness) {
      throw std::runtime_error("decomposition block lacks a bundled-threshold witness");
    }
    plan.block_schemes.push_back(make_scheme_instance(gamma.universe(), *block.witness));
  }
  plan.registers.assign(gamma.n(), {});
  for (std::size_t b = 0; b < plan.block_schemes.size(); ++b) {
    const auto& scheme = plan.block_schemes[b];
    for (int p = 0; p < gamma.n(); ++p) {
      if (!scheme.player_shares[p].empty()) {
        plan.registers[p].push_back({static_cast<int>(b), scheme.player_shares[p]});
      }
    }
  }
  return plan;
}

Scheme1Verification verify_scheme1(const Scheme1Plan& plan) {
  const Universe& universe = plan.gamma.universe();
  if (universe.size() > limits().enum_players) {
    throw SizeLimitError("register-plan sweep over " + std::to_string(universe.size()) +
                         " players exceeds the bound of " +
                         std::to_string(limits().enum_players));
  }
  Scheme1Verification out;
  out.combinatorial_ok = true;
  out.classical_ok = true;
  const Mask full = universe.full_mask();
  for (Mask subset = 1; subset <= full; ++subset) {
    bool in_some_block = false;
    bool classical_consistent = true;
    for (std::size_t b = 0; b < plan.block_schemes.size(); ++b) {
      const bool block_authorized =
          plan.decomposition.blocks[b].structure.is_authorized(subset);
      in_some_block = in_some_block || block_authorized;
      const auto& scheme = plan.block_schemes[b];
      const bool recoverable = classical_recoverable(scheme, scheme.shares_mask_of(subset));
      if (recoverable != block_authorized) classical_consistent = false;
    }
    const bool authorized = plan.gamma.is_authorized(subset);
    if (in_some_block != authorized) {
      out.combinatorial_ok = false;
      out.violations.push_back(subset);
    }
    if (!classical_consistent) {
      out.classical_ok = false;
      if (out.violations.empty() || out.violations.back() != subset) {
        out.violations.push_back(subset);
      }
    }
  }
  out.pass = out.combinatorial_ok && out.classical_ok;
  return out;
}

ResourceComparison resource_compare(const AccessStructure& gamma, const OracleConfig& config) {
  require_valid_quantum(gamma);
  if (!gamma.covers_universe()) {
    throw std::invalid_argument(uncovered_player_message(gamma));
  }
  // A comparison report, not an executable scheme: the reconstruction-side
  // reference structures are the maximal extension and its reduction, with
  // verification effort measured by their minimal-set counts.
  const auto optimal_dec = optimal_decomposition(gamma, config);
  const auto trivial_dec = trivial_decomposition(gamma, config);
  const AccessStructure maximal = covering_maximal_extension(gamma).result;
  const AccessStructure minmax = reduce_to_minmax(maximal).result;

  ResourceComparison rc{{}, {}, maximal, minmax};

  rc.optimal.outer = outer_for(optimal_dec.l());
  for (const auto& block : optimal_dec.blocks) {
    rc.optimal.block_shares.push_back(block.witness ? block.witness->total_shares : 0);
  }
  const auto minmax_witness = recognize_bundled_threshold(minmax, config);
  rc.optimal.total_shares = optimal_dec.total_witness_shares() +
                            (minmax_witness ? minmax_witness->total_shares : 0);
  rc.optimal.verification_count = minmax.r();

  rc.trivial.outer = outer_for(trivial_dec.l());
  for (const auto& block : trivial_dec.blocks) {
    rc.trivial.block_shares.push_back(block.witness ? block.witness->total_shares : 0);
  }
  const auto maximal_witness = recognize_bundled_threshold(maximal, config);
  rc.trivial.total_shares = trivial_dec.total_witness_shares() +
                            (maximal_witness ? maximal_witness->total_shares : 0);
  rc.trivial.verification_count = maximal.r();
  return rc;
}

std::vector<std::string> render_scheme2(const ConcatScheme& cs) {
  const Universe& universe = cs.gamma.universe();
  auto family_label = [&](const AccessStructure& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.minimal_sets().size(); ++i) {
      if (i) out += ", ";
      out += universe.set_label(s.minimal_sets()[i]);
    }
    return out + "}";
  };
  auto witness_label = [&](const std::optional<BundledThreshold>& w) {
    if (!w) return std::string("[no bundled witness]");
    std::string out = "[bundled ((" + std::to_string(w->threshold) + "," +
                      std::to_string(w->total_shares) + ")) over q=" +
                      std::to_string(w->field_order) + ", weights";
    for (int p = 0; p < universe.size(); ++p) {
      if (w->weights[p] > 0) out += " " + universe.label(p) + ":" + std::to_string(w->weights[p]);
    }
    return out + "]";
  };

  std::vector<std::string> lines;
  lines.push_back("((" + std::to_string(cs.outer.k) + "," + std::to_string(cs.outer.shares) +
                  ")) threshold scheme");
  for (std::size_t i = 0; i < cs.decomposition.blocks.size(); ++i) {
    const auto& block = cs.decomposition.blocks[i];
    const bool last_block = i + 1 == cs.decomposition.blocks.size() && cs.l() == 1;
    lines.push_back(std::string(last_block ? " '- " : " |- ") + "share " + std::to_string(i + 1) +
                    " -> block " + std::to_string(i + 1) + ": " + family_label(block.structure) +
                    "  " + witness_label(block.witness));
  }
  if (cs.l() > 1) {
    lines.push_back(" '- shares " + std::to_string(cs.l() + 1) + ".." +
                    std::to_string(cs.outer.shares) + " -> minimal maximal: " +
                    family_label(cs.minmax) + "  " + witness_label(cs.minmax_witness));
  }
  return lines;
}

}  // namespace qaskit
