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
#include <vector>

#include "qaskit/decomp.hpp"
#include "qaskit/maximalize.hpp"
#include "qaskit/qsim.hpp"

namespace qaskit {

// Assembly and verification of the two secret sharing constructions: the
// register plan built directly on a decomposition (scheme 1) and the
// concatenation scheme (scheme 2) whose outer ((l, 2l-1)) threshold routes
// one share per block and the remaining l-1 through a minimal maximal
// structure containing the target structure.

struct OuterThreshold {
  int k = 0;        // l
  int shares = 0;   // 2l-1
  int field = 0;    // smallest prime >= shares
};

struct ConcatScheme {
  AccessStructure gamma;
  AccessStructure minmax;
  Decomposition decomposition;
  std::optional<BundledThreshold> minmax_witness;
  OuterThreshold outer;
  // Outer share i (0-based): shares 0..l-1 feed block i, the rest the minmax
  // structure.  Kept explicit so reports can print the routing table.
  std::vector<std::string> routing;

  int l() const { return decomposition.l(); }
};

struct Scheme2Config {
  OracleConfig oracle;
  bool trivial = false;  // use the all-singletons decomposition instead
};

// Builds the concatenation scheme: minimal maximal extension via
// extend_to_maximal + reduce_to_minmax, optimal (or trivial) decomposition,
// outer ((l, 2l-1)) threshold and the share routing.  Requires a valid
// structure in which every player occurs in some minimal set.
ConcatScheme build_scheme2(const AccessStructure& gamma, const Scheme2Config& config = {});

// Minimal sets of the subsets that can reassemble at least l outer shares:
// one per block whose closure contains the subset, plus l-1 via the minmax
// structure.  By construction this is the composite access structure.
AccessStructure concat_authorized_family(const ConcatScheme& cs);

struct SimStatus {
  std::string target;   // "block0", "block1", ..., "minmax"
  std::string status;   // "pass", "fail", "skipped"
  std::string detail;   // skip reason or failure summary
};

struct Scheme2Verification {
  bool pass = false;
  bool share_flow_ok = false;
  std::vector<Mask> missing_minimal_sets;  // expected but not reachable
  std::vector<Mask> extra_minimal_sets;    // reachable but not expected
  std::vector<SimStatus> simulations;
};

struct VerifyOptions {
  // Sub-scheme simulations run only when the reference-state support q^k
  // stays within this budget; larger witnesses are reported as skipped.
  std::int64_t sim_support_budget = 250'000;
  bool run_simulations = true;
};

// Checks that the composite access structure equals gamma exactly, then
// verifies every block witness (and the minmax witness, when one exists)
// against its own structure with the qudit simulator.
Scheme2Verification verify_scheme2(const ConcatScheme& cs, const VerifyOptions& options = {});

// Scheme 1: per-player registers of block shares.
struct RegisterEntry {
  int block = 0;
  std::vector<int> shares;
};

struct Scheme1Plan {
  AccessStructure gamma;
  Decomposition decomposition;
  std::vector<SchemeInstance> block_schemes;            // per block, when witnessed
  std::vector<std::vector<RegisterEntry>> registers;    // per player index
};

// Register plan over the optimal decomposition.  Every block needs a
// bundled-threshold witness (singletons always have one).
Scheme1Plan build_scheme1(const AccessStructure& gamma, const OracleConfig& config = {});

struct Scheme1Verification {
  bool pass = false;
  bool combinatorial_ok = false;   // authorized iff authorized in some block
  bool classical_ok = false;       // rank checks against every block scheme
  std::vector<Mask> violations;
};

Scheme1Verification verify_scheme1(const Scheme1Plan& plan);

struct ResourceReport {
  OuterThreshold outer;
  std::vector<int> block_shares;   // witness share counts per block
  int total_shares = 0;            // sub-scheme shares incl. minmax witness
  int verification_count = 0;      // minimal sets to test during reconstruction
};

struct ResourceComparison {
  ResourceReport optimal;          // minmax structure + optimal decomposition
  ResourceReport trivial;          // maximal structure + singleton blocks
  AccessStructure maximal;         // extend_to_maximal(gamma)
  AccessStructure minimal_maximal; // reduce_to_minmax of the above
};

// Builds both variants and reports outer sizes ((l,2l-1)) vs ((r,2r-1)) and
// verification counts r(minimal maximal) = n vs r(maximal).
ResourceComparison resource_compare(const AccessStructure& gamma,
                                    const OracleConfig& config = {});

// ASCII rendering of the scheme layout, one line per row of the brace diagram.
std::vector<std::string> render_scheme2(const ConcatScheme& cs);

}  // namespace qaskit
