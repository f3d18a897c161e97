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

#include <complex>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "qaskit/decomp.hpp"
#include "qaskit/player_set.hpp"

namespace qaskit {

// Desk-scale qudit simulator for polynomial-code threshold schemes.  A subset
// of shares is checked information-theoretically: it carries no secret
// information iff its joint state with a maximally entangled reference
// factorizes, and it can recover the secret iff everything outside it
// decouples from the reference.

using Amplitude = std::complex<double>;

// Residuals at or below this are treated as exact decoupling.  Amplitudes are
// exact reciprocal square roots, so true zeros come out around 1e-16.
inline constexpr double kDecouplingTol = 1e-9;

// Exact arithmetic modulo a small prime.
struct PrimeField {
  int q;
  explicit PrimeField(int modulus);
  int add(int a, int b) const { return (a + b) % q; }
  int sub(int a, int b) const { return (a - b % q + q) % q; }
  int mul(int a, int b) const { return static_cast<int>(std::int64_t(a) * b % q); }
  int pow(int a, int e) const;
  int inv(int a) const;
};

bool is_prime(int n);
int next_prime(int n);  // smallest prime >= n

// Map from packed multi-qudit basis labels to amplitudes, sorted by label.
class SparseState {
 public:
  SparseState(int num_qudits, int dim);

  int num_qudits() const { return num_qudits_; }
  int dim() const { return dim_; }
  int bits_per_qudit() const { return bits_; }

  std::uint64_t pack(const std::vector<int>& digits) const;
  int digit(std::uint64_t label, int position) const;

  // Adds one basis term; finalize() sorts, merges and checks the support cap.
  void add_term(std::uint64_t label, Amplitude amp);
  void finalize();

  const std::vector<std::pair<std::uint64_t, Amplitude>>& terms() const { return terms_; }
  std::size_t support() const { return terms_.size(); }
  double norm() const;

 private:
  int num_qudits_;
  int dim_;
  int bits_;
  bool finalized_ = false;
  std::vector<std::pair<std::uint64_t, Amplitude>> terms_;
};

// One instantiated threshold scheme: a ((k, 2k-1)) polynomial code over F_q
// with the first total_shares evaluations handed to players per the bundling
// map and the rest discarded.  The secret is the leading coefficient, which
// frees x = 0 as an evaluation point.
struct SchemeInstance {
  int q = 0;                   // prime, >= 2k-1
  int threshold = 0;           // k
  std::vector<int> points;     // 2k-1 distinct evaluation points in F_q
  Universe universe;           // players the bundling refers to
  std::vector<std::vector<int>> player_shares;  // per player index
  std::vector<int> discarded;  // share indices never distributed

  int code_shares() const { return 2 * threshold - 1; }
  std::vector<int> shares_of(Mask players) const;
  std::uint64_t all_shares_mask() const;  // over share indices
  std::uint64_t shares_mask_of(Mask players) const;

  // Validates invariants (prime q, distinct points, bundling partition).
  void validate() const;
};

// Canonical instance for a bundled-threshold witness: evaluation points
// 0..2k-2, players receive consecutive share indices in universe order.
SchemeInstance make_scheme_instance(const Universe& universe,
                                    const BundledThreshold& witness);

// Uniform superposition over the degree < k polynomials with leading
// coefficient `secret`, with basis label (f(x_1), ..., f(x_{2k-1})).
SparseState encode(const SchemeInstance& scheme, int secret);

// Holds the reference-entangled state (1/sqrt q) sum_s |s>|encode(s)> and
// answers decoupling queries about share subsets.  Building the state costs
// q^k support; reuse one simulator per scheme when sweeping subsets.
class SchemeSimulator {
 public:
  explicit SchemeSimulator(SchemeInstance scheme);

  const SchemeInstance& scheme() const { return scheme_; }

  // Frobenius distance between rho_{R,subset} and rho_R (x) rho_subset,
  // where `share_subset` is a bitmask over code-share indices.
  double decoupling_residual(std::uint64_t share_subset) const;

 private:
  SchemeInstance scheme_;
  SparseState joint_;  // qudit 0 = reference, 1..2k-1 = code shares
};

double decoupling_residual(const SchemeInstance& scheme, std::uint64_t share_subset);

struct SubsetReport {
  bool recoverable = false;
  bool secret_free = false;
  double recover_residual = 0.0;  // residual of everything outside the subset
  double secrecy_residual = 0.0;  // residual of the subset itself
};

// Both decoupling checks for the shares held by `players`.
SubsetReport player_subset_report(const SchemeSimulator& sim, Mask players);
SubsetReport player_subset_report(const SchemeInstance& scheme, Mask players);

struct StructureCheck {
  Mask players = 0;
  bool authorized = false;
  double residual = 0.0;  // the one residual the verdict rests on
  bool pass = false;
};

struct StructureVerification {
  bool pass = false;
  std::vector<StructureCheck> checks;      // one per player subset
  std::vector<Mask> violations;            // subsets that failed
};

// Sweeps every player subset: authorized subsets must be recoverable
// (complement decouples), unauthorized ones must be secret-free.  Bounded by
// limits().verify_players.
StructureVerification verify_structure(const SchemeInstance& scheme,
                                       const AccessStructure& gamma);

// Recomputes a decoupling residual from a fully materialized dense state
// vector and explicit partial traces.  Independent of the sparse path; the
// two must agree to ~1e-10.  Bounded by limits().dense on q^code_shares.
double dense_oracle_crosscheck(const SchemeInstance& scheme, std::uint64_t share_subset);

// Classical-secret check used by register plans: over F_q, a share subset
// determines the leading coefficient iff the selector vector lies in the row
// space of the evaluation matrix; otherwise the secret stays perfectly hidden.
bool classical_recoverable(const SchemeInstance& scheme, std::uint64_t share_subset);

}  // namespace qaskit
