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

#include "qaskit/qsim.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>
#include <unordered_map>
#include <tuple>

namespace qaskit {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; std::int64_t(d) * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

int next_prime(int n) {
  int p = std::max(2, n);
  while (!is_prime(p)) ++p;
  return p;
}

PrimeField::PrimeField(int modulus) : q(modulus) {
  if (!is_prime(q)) throw std::invalid_argument("field order must be prime");
}

int PrimeField::pow(int a, int e) const {
  int result = 1;
  int base = ((a % q) + q) % q;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

int PrimeField::inv(int a) const {
  if (a % q == 0) throw std::invalid_argument("no inverse for zero");
  return pow(a, q - 2);
}

SparseState::SparseState(int num_qudits, int dim)
    : num_qudits_(num_qudits), dim_(dim), bits_(std::bit_width(unsigned(dim - 1))) {
  if (num_qudits_ < 0 || dim_ < 2) throw std::invalid_argument("bad state shape");
  if (num_qudits_ * bits_ > 64) {
    throw SizeLimitError("state labels for " + std::to_string(num_qudits_) +
                         " qudits of dimension " + std::to_string(dim_) +
                         " exceed 64 bits");
  }
}

std::uint64_t SparseState::pack(const std::vector<int>& digits) const {
  std::uint64_t label = 0;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    label |= std::uint64_t(digits[i]) << (bits_ * i);
  }
  return label;
}

int SparseState::digit(std::uint64_t label, int position) const {
  return int((label >> (bits_ * position)) & ((std::uint64_t{1} << bits_) - 1));
}

void SparseState::add_term(std::uint64_t label, Amplitude amp) {
  terms_.emplace_back(label, amp);
  finalized_ = false;
}

void SparseState::finalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::pair<std::uint64_t, Amplitude>> merged;
  for (const auto& [label, amp] : terms_) {
    if (!merged.empty() && merged.back().first == label) {
      merged.back().second += amp;
    } else {
      merged.emplace_back(label, amp);
    }
  }
  terms_ = std::move(merged);
  if (std::int64_t(terms_.size()) > limits().support) {
    throw SizeLimitError("state support " + std::to_string(terms_.size()) +
                         " exceeds the limit of " + std::to_string(limits().support));
  }
  finalized_ = true;
}

double SparseState::norm() const {
  double s = 0;
  for (const auto& [label, amp] : terms_) s += std::norm(amp);
  return std::sqrt(s);
}

std::vector<int> SchemeInstance::shares_of(Mask players) const {
  std::vector<int> shares;
  for (int i = 0; i < universe.size(); ++i) {
    if (players & (Mask{1} << i)) {
      shares.insert(shares.end(), player_shares[i].begin(), player_shares[i].end());
    }
  }
  std::sort(shares.begin(), shares.end());
  return shares;
}

std::uint64_t SchemeInstance::all_shares_mask() const {
  return (std::uint64_t{1} << code_shares()) - 1;
}

std::uint64_t SchemeInstance::shares_mask_of(Mask players) const {
  std::uint64_t m = 0;
  for (int s : shares_of(players)) m |= std::uint64_t{1} << s;
  return m;
}

void SchemeInstance::validate() const {
  if (threshold < 1) throw std::invalid_argument("threshold must be positive");
  if (!is_prime(q)) throw std::invalid_argument("field order must be prime");
  if (q < code_shares()) {
    throw std::invalid_argument("field order " + std::to_string(q) +
                                " is too small for " + std::to_string(code_shares()) +
                                " evaluation points");
  }
  if (static_cast<int>(points.size()) != code_shares()) {
    throw std::invalid_argument("expected " + std::to_string(code_shares()) +
                                " evaluation points");
  }
  auto sorted = points;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("evaluation points must be distinct");
  }
  for (int x : points) {
    if (x < 0 || x >= q) throw std::invalid_argument("evaluation point outside the field");
  }
  if (static_cast<int>(player_shares.size()) != universe.size()) {
    throw std::invalid_argument("bundling must list every player");
  }
  std::vector<int> owner(code_shares(), -1);
  for (std::size_t p = 0; p < player_shares.size(); ++p) {
    for (int s : player_shares[p]) {
      if (s < 0 || s >= code_shares()) throw std::invalid_argument("share index out of range");
      if (owner[s] != -1) throw std::invalid_argument("share assigned to two players");
      owner[s] = static_cast<int>(p);
    }
  }
  for (int s : discarded) {
    if (s < 0 || s >= code_shares()) throw std::invalid_argument("share index out of range");
    if (owner[s] != -1) throw std::invalid_argument("discarded share is assigned to a player");
    owner[s] = -2;
  }
  for (int s = 0; s < code_shares(); ++s) {
    if (owner[s] == -1) {
      throw std::invalid_argument("share " + std::to_string(s) +
                                  " is neither assigned nor discarded");
    }
  }
}

SchemeInstance make_scheme_instance(const Universe& universe, const BundledThreshold& witness) {
  SchemeInstance scheme{witness.field_order, witness.threshold, {}, universe, {}, {}};
  for (int x = 0; x < scheme.code_shares(); ++x) scheme.points.push_back(x);
  scheme.player_shares.assign(universe.size(), {});
  int next = 0;
  for (int p = 0; p < universe.size(); ++p) {
    for (int j = 0; j < witness.weights[p]; ++j) scheme.player_shares[p].push_back(next++);
  }
  for (int s = next; s < scheme.code_shares(); ++s) scheme.discarded.push_back(s);
  scheme.validate();
  return scheme;
}

namespace {

std::int64_t checked_pow(std::int64_t base, int exp, std::int64_t cap) {
  std::int64_t value = 1;
  for (int i = 0; i < exp; ++i) {
    value *= base;
    if (value > cap) return cap + 1;
  }
  return value;
}

// Evaluations of c_0 + c_1 x + ... + c_{k-1} x^{k-1} at every scheme point.
std::vector<int> evaluate(const SchemeInstance& scheme, const std::vector<int>& coeffs) {
  const PrimeField field(scheme.q);
  std::vector<int> evals(scheme.points.size());
  for (std::size_t j = 0; j < scheme.points.size(); ++j) {
    const int x = scheme.points[j];
    int acc = 0;
    for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i) {
      acc = field.add(field.mul(acc, x), coeffs[i]);
    }
    evals[j] = acc;
  }
  return evals;
}

}  // namespace

SparseState encode(const SchemeInstance& scheme, int secret) {
  scheme.validate();
  if (secret < 0 || secret >= scheme.q) throw std::invalid_argument("secret outside the field");
  const int k = scheme.threshold;
  const std::int64_t support = checked_pow(scheme.q, k - 1, limits().support);
  if (support > limits().support) {
    throw SizeLimitError("encoding support q^(k-1) exceeds the limit of " +
                         std::to_string(limits().support));
  }
  SparseState state(scheme.code_shares(), scheme.q);
  const double amp = 1.0 / std::sqrt(double(support));
  std::vector<int> coeffs(k, 0);
  coeffs[k - 1] = secret;  // secret rides on the leading coefficient
  for (std::int64_t it = 0;; ++it) {
    state.add_term(state.pack(evaluate(scheme, coeffs)), amp);
    int pos = 0;
    while (pos < k - 1 && ++coeffs[pos] == scheme.q) coeffs[pos++] = 0;
    if (pos == k - 1) break;
  }
  state.finalize();
  return state;
}

SchemeSimulator::SchemeSimulator(SchemeInstance scheme)
    : scheme_(std::move(scheme)), joint_(1, 2) {
  scheme_.validate();
  const int k = scheme_.threshold;
  const std::int64_t support = checked_pow(scheme_.q, k, limits().support);
  if (support > limits().support) {
    throw SizeLimitError("joint state support q^k exceeds the limit of " +
                         std::to_string(limits().support));
  }
  joint_ = SparseState(scheme_.code_shares() + 1, scheme_.q);
  const double amp = 1.0 / std::sqrt(double(support));
  std::vector<int> coeffs(k, 0);
  std::vector<int> digits(scheme_.code_shares() + 1);
  for (;;) {
    const auto evals = evaluate(scheme_, coeffs);
    digits[0] = coeffs[k - 1];  // reference qudit mirrors the secret
    std::copy(evals.begin(), evals.end(), digits.begin() + 1);
    joint_.add_term(joint_.pack(digits), amp);
    int pos = 0;
    while (pos < k && ++coeffs[pos] == scheme_.q) coeffs[pos++] = 0;
    if (pos == k) break;
  }
  joint_.finalize();
}

namespace {

// Sparse Hermitian matrix over packed kept-subsystem labels.
using RhoEntry = std::tuple<std::uint64_t, std::uint64_t, Amplitude>;

struct SparseRho {
  std::vector<RhoEntry> entries;  // sorted by (ket, bra), keys unique
};

bool rho_key_less(const RhoEntry& a, const RhoEntry& b) {
  return std::pair(std::get<0>(a), std::get<1>(a)) < std::pair(std::get<0>(b), std::get<1>(b));
}

// Partial trace of a pure sparse state onto the qudits listed in `kept`
// (ascending positions; the kept label packs them in that order).
SparseRho partial_trace(const SparseState& state, const std::vector<int>& kept) {
  std::vector<char> keep_flag(state.num_qudits(), 0);
  for (int pos : kept) keep_flag[pos] = 1;

  std::vector<std::tuple<std::uint64_t, std::uint64_t, Amplitude>> split;
  split.reserve(state.support());
  for (const auto& [label, amp] : state.terms()) {
    std::uint64_t kept_key = 0;
    std::uint64_t traced_key = 0;
    int kpos = 0;
    int tpos = 0;
    for (int i = 0; i < state.num_qudits(); ++i) {
      const std::uint64_t d = std::uint64_t(state.digit(label, i));
      if (keep_flag[i]) {
        kept_key |= d << (state.bits_per_qudit() * kpos++);
      } else {
        traced_key |= d << (state.bits_per_qudit() * tpos++);
      }
    }
    split.emplace_back(traced_key, kept_key, amp);
  }
  std::sort(split.begin(), split.end(), [](const auto& a, const auto& b) {
    return std::pair(std::get<0>(a), std::get<1>(a)) < std::pair(std::get<0>(b), std::get<1>(b));
  });

  std::int64_t work = 0;
  for (std::size_t i = 0; i < split.size();) {
    std::size_t j = i;
    while (j < split.size() && std::get<0>(split[j]) == std::get<0>(split[i])) ++j;
    work += std::int64_t(j - i) * std::int64_t(j - i);
    i = j;
  }
  if (work > limits().rho_entries) {
    throw SizeLimitError("reduced state of the requested subset needs " +
                         std::to_string(work) + " entries, over the limit of " +
                         std::to_string(limits().rho_entries));
  }

  std::vector<RhoEntry> contrib;
  contrib.reserve(std::size_t(work));
  for (std::size_t i = 0; i < split.size();) {
    std::size_t j = i;
    while (j < split.size() && std::get<0>(split[j]) == std::get<0>(split[i])) ++j;
    for (std::size_t a = i; a < j; ++a) {
      for (std::size_t b = i; b < j; ++b) {
        contrib.emplace_back(std::get<1>(split[a]), std::get<1>(split[b]),
                             std::get<2>(split[a]) * std::conj(std::get<2>(split[b])));
      }
    }
    i = j;
  }
  std::stable_sort(contrib.begin(), contrib.end(), rho_key_less);

  SparseRho rho;
  for (const auto& entry : contrib) {
    if (!rho.entries.empty() && !rho_key_less(rho.entries.back(), entry)) {
      std::get<2>(rho.entries.back()) += std::get<2>(entry);
    } else {
      rho.entries.push_back(entry);
    }
  }
  return rho;
}

// Kronecker product; `left` occupies the low digit positions of the result.
SparseRho kron(const SparseRho& left, const SparseRho& right, int left_digits, int bits) {
  SparseRho out;
  out.entries.reserve(left.entries.size() * right.entries.size());
  const int shift = left_digits * bits;
  for (const auto& [lk, lb, lv] : left.entries) {
    for (const auto& [rk, rb, rv] : right.entries) {
      out.entries.emplace_back(lk | (rk << shift), lb | (rb << shift), lv * rv);
    }
  }
  std::stable_sort(out.entries.begin(), out.entries.end(), rho_key_less);
  return out;
}

double frobenius_distance(const SparseRho& x, const SparseRho& y) {
  double sum = 0;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < x.entries.size() || j < y.entries.size()) {
    if (j == y.entries.size() ||
        (i < x.entries.size() && rho_key_less(x.entries[i], y.entries[j]))) {
      sum += std::norm(std::get<2>(x.entries[i++]));
    } else if (i == x.entries.size() || rho_key_less(y.entries[j], x.entries[i])) {
      sum += std::norm(std::get<2>(y.entries[j++]));
    } else {
      sum += std::norm(std::get<2>(x.entries[i++]) - std::get<2>(y.entries[j++]));
    }
  }
  return std::sqrt(sum);
}

std::vector<int> subset_positions(std::uint64_t share_subset, int code_shares, bool with_reference) {
  std::vector<int> kept;
  if (with_reference) kept.push_back(0);
  for (int s = 0; s < code_shares; ++s) {
    if (share_subset & (std::uint64_t{1} << s)) kept.push_back(s + 1);
  }
  return kept;
}

}  // namespace

namespace {

// When the traced-out shares number at least k they pin the polynomial down,
// so every reduced state involved is exactly diagonal.  Diagonal weights are
// grouped per shares-label with a dense reference column so the residual is
// a direct per-entry difference (no cancellation-prone rearrangement).
double diagonal_residual(const SparseState& joint, const std::vector<int>& kept_shares,
                         int dim) {
  const int bits = joint.bits_per_qudit();
  std::unordered_map<std::uint64_t, std::vector<double>> columns;
  std::vector<double> ref_diag(std::size_t(dim), 0.0);

  for (const auto& [label, amp] : joint.terms()) {
    const double p = std::norm(amp);
    const int r = joint.digit(label, 0);
    std::uint64_t shares_key = 0;
    int pos = 0;
    for (int s : kept_shares) {
      shares_key |= std::uint64_t(joint.digit(label, s + 1)) << (bits * pos++);
    }
    auto& column = columns[shares_key];
    if (column.empty()) column.assign(std::size_t(dim), 0.0);
    column[std::size_t(r)] += p;
    ref_diag[std::size_t(r)] += p;
  }

  double sum = 0;
  for (const auto& [shares_key, column] : columns) {
    double shares_weight = 0;
    for (double v : column) shares_weight += v;
    for (int r = 0; r < dim; ++r) {
      const double diff = column[std::size_t(r)] - ref_diag[std::size_t(r)] * shares_weight;
      sum += diff * diff;
    }
  }
  return std::sqrt(sum);
}

}  // namespace

double SchemeSimulator::decoupling_residual(std::uint64_t share_subset) const {
  const int nc = scheme_.code_shares();
  if (share_subset & ~((std::uint64_t{1} << nc) - 1)) {
    throw std::invalid_argument("share subset references shares beyond the code");
  }
  // rho_{R,empty} and rho_R (x) 1 are the same object.
  if (share_subset == 0) return 0.0;
  const int traced_shares = nc - std::popcount(share_subset);
  if (traced_shares >= scheme_.threshold) {
    std::vector<int> kept_shares;
    for (int s = 0; s < nc; ++s) {
      if (share_subset & (std::uint64_t{1} << s)) kept_shares.push_back(s);
    }
    return diagonal_residual(joint_, kept_shares, scheme_.q);
  }
  const auto rho_joint = partial_trace(joint_, subset_positions(share_subset, nc, true));
  const auto rho_ref = partial_trace(joint_, {0});
  const auto rho_shares = partial_trace(joint_, subset_positions(share_subset, nc, false));
  const auto product = kron(rho_ref, rho_shares, 1, joint_.bits_per_qudit());
  return frobenius_distance(rho_joint, product);
}

double decoupling_residual(const SchemeInstance& scheme, std::uint64_t share_subset) {
  return SchemeSimulator(scheme).decoupling_residual(share_subset);
}

SubsetReport player_subset_report(const SchemeSimulator& sim, Mask players) {
  const auto& scheme = sim.scheme();
  const std::uint64_t held = scheme.shares_mask_of(players);
  const std::uint64_t outside = scheme.all_shares_mask() & ~held;  // incl. discarded
  SubsetReport report;
  report.recover_residual = sim.decoupling_residual(outside);
  report.secrecy_residual = sim.decoupling_residual(held);
  report.recoverable = report.recover_residual <= kDecouplingTol;
  report.secret_free = report.secrecy_residual <= kDecouplingTol;
  return report;
}

SubsetReport player_subset_report(const SchemeInstance& scheme, Mask players) {
  SchemeSimulator sim(scheme);
  return player_subset_report(sim, players);
}

StructureVerification verify_structure(const SchemeInstance& scheme,
                                       const AccessStructure& gamma) {
  if (gamma.n() > limits().verify_players) {
    throw SizeLimitError("structure verification over " + std::to_string(gamma.n()) +
                         " players exceeds the bound of " +
                         std::to_string(limits().verify_players));
  }
  if (!(scheme.universe == gamma.universe())) {
    throw std::invalid_argument("scheme and structure use different universes");
  }
  SchemeSimulator sim(scheme);
  const Mask full = gamma.universe().full_mask();
  const std::uint64_t all = scheme.all_shares_mask();

  StructureVerification out;
  out.checks.resize(full);
  const int jobs = std::max(1, limits().jobs);
  auto worker = [&](Mask begin, Mask end) {
    for (Mask subset = begin; subset < end; ++subset) {
      StructureCheck check;
      check.players = subset + 1;
      check.authorized = gamma.is_authorized(check.players);
      const std::uint64_t held = scheme.shares_mask_of(check.players);
      // Authorized sets must be able to recover (everything outside them
      // decouples); unauthorized sets must themselves decouple.
      check.residual = check.authorized ? sim.decoupling_residual(all & ~held)
                                        : sim.decoupling_residual(held);
      check.pass = check.residual <= kDecouplingTol;
      out.checks[subset] = check;
    }
  };
  if (jobs == 1) {
    worker(0, full);
  } else {
    std::vector<std::thread> threads;
    const Mask chunk = (full + jobs - 1) / jobs;
    for (int t = 0; t < jobs; ++t) {
      const Mask begin = std::min<Mask>(full, t * chunk);
      const Mask end = std::min<Mask>(full, begin + chunk);
      if (begin < end) threads.emplace_back(worker, begin, end);
    }
    for (auto& th : threads) th.join();
  }
  for (const auto& check : out.checks) {
    if (!check.pass) out.violations.push_back(check.players);
  }
  out.pass = out.violations.empty();
  return out;
}

double dense_oracle_crosscheck(const SchemeInstance& scheme, std::uint64_t share_subset) {
  scheme.validate();
  const int nc = scheme.code_shares();
  const std::int64_t dim_code = checked_pow(scheme.q, nc, limits().dense);
  if (dim_code > limits().dense) {
    throw SizeLimitError("dense state dimension q^" + std::to_string(nc) +
                         " exceeds the limit of " + std::to_string(limits().dense));
  }
  const std::int64_t dim = dim_code * scheme.q;  // with the reference qudit
  const int k = scheme.threshold;

  // Index layout: digit 0 (lowest) is the reference, then shares in order.
  std::vector<Amplitude> state(std::size_t(dim), Amplitude{0});
  std::int64_t poly_count = 1;
  for (int i = 0; i < k; ++i) poly_count *= scheme.q;
  const double amp = 1.0 / std::sqrt(double(poly_count));
  std::vector<int> coeffs(k, 0);
  for (;;) {
    const auto evals = evaluate(scheme, coeffs);
    std::int64_t index = 0;
    for (int s = nc - 1; s >= 0; --s) index = index * scheme.q + evals[s];
    index = index * scheme.q + coeffs[k - 1];
    state[std::size_t(index)] += amp;
    int pos = 0;
    while (pos < k && ++coeffs[pos] == scheme.q) coeffs[pos++] = 0;
    if (pos == k) break;
  }

  std::vector<int> kept{0};
  std::vector<int> traced;
  for (int s = 0; s < nc; ++s) {
    if (share_subset & (std::uint64_t{1} << s)) kept.push_back(s + 1);
    else traced.push_back(s + 1);
  }

  auto dim_of = [&](const std::vector<int>& qudits) {
    std::int64_t d = 1;
    for (std::size_t i = 0; i < qudits.size(); ++i) d *= scheme.q;
    return d;
  };
  auto compose = [&](const std::vector<int>& qudits, std::int64_t packed,
                     const std::vector<int>& rest, std::int64_t rest_packed) {
    std::vector<int> digits(nc + 1, 0);
    for (int q_i : qudits) {
      digits[q_i] = int(packed % scheme.q);
      packed /= scheme.q;
    }
    for (int q_i : rest) {
      digits[q_i] = int(rest_packed % scheme.q);
      rest_packed /= scheme.q;
    }
    std::int64_t index = 0;
    for (int i = nc; i >= 0; --i) index = index * scheme.q + digits[i];
    return index;
  };

  auto reduced = [&](const std::vector<int>& qudits) {
    const std::int64_t d = dim_of(qudits);
    std::vector<int> rest;
    for (int i = 0; i <= nc; ++i) {
      if (std::find(qudits.begin(), qudits.end(), i) == qudits.end()) rest.push_back(i);
    }
    const std::int64_t dr = dim_of(rest);
    if (d * d * dr > 100'000'000) {
      throw SizeLimitError("dense partial trace would need " +
                           std::to_string(d * d * dr) + " operations");
    }
    std::vector<Amplitude> rho(std::size_t(d * d), Amplitude{0});
    for (std::int64_t a = 0; a < d; ++a) {
      for (std::int64_t b = 0; b < d; ++b) {
        Amplitude sum{0};
        for (std::int64_t e = 0; e < dr; ++e) {
          sum += state[std::size_t(compose(qudits, a, rest, e))] *
                 std::conj(state[std::size_t(compose(qudits, b, rest, e))]);
        }
        rho[std::size_t(a * d + b)] = sum;
      }
    }
    return rho;
  };

  const auto rho_joint = reduced(kept);
  const auto rho_ref = reduced({0});
  std::vector<int> shares_only(kept.begin() + 1, kept.end());
  std::vector<Amplitude> rho_shares;
  if (shares_only.empty()) {
    rho_shares = {Amplitude{1}};
  } else {
    rho_shares = reduced(shares_only);
  }

  const std::int64_t ds = shares_only.empty() ? 1 : dim_of(shares_only);
  double sum = 0;
  for (std::int64_t ra = 0; ra < scheme.q; ++ra) {
    for (std::int64_t sa = 0; sa < ds; ++sa) {
      for (std::int64_t rb = 0; rb < scheme.q; ++rb) {
        for (std::int64_t sb = 0; sb < ds; ++sb) {
          // kept packs the reference into the lowest digit
          const std::int64_t a = sa * scheme.q + ra;
          const std::int64_t b = sb * scheme.q + rb;
          const Amplitude joint = rho_joint[std::size_t(a * (scheme.q * ds) + b)];
          const Amplitude prod = rho_ref[std::size_t(ra * scheme.q + rb)] *
                                 rho_shares[std::size_t(sa * ds + sb)];
          sum += std::norm(joint - prod);
        }
      }
    }
  }
  return std::sqrt(sum);
}

bool classical_recoverable(const SchemeInstance& scheme, std::uint64_t share_subset) {
  const PrimeField field(scheme.q);
  const int k = scheme.threshold;
  std::vector<std::vector<int>> rows;
  for (int s = 0; s < scheme.code_shares(); ++s) {
    if (!(share_subset & (std::uint64_t{1} << s))) continue;
    std::vector<int> row(k);
    for (int i = 0; i < k; ++i) row[i] = field.pow(scheme.points[s], i);
    rows.push_back(std::move(row));
  }
  // Reduce the rows, then test whether the leading-coefficient selector
  // (0,...,0,1) lies in their span.
  std::vector<int> target(k, 0);
  target[k - 1] = 1;
  std::size_t rank = 0;
  for (int col = 0; col < k && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    const int inv = field.inv(rows[rank][col]);
    for (int c = 0; c < k; ++c) rows[rank][c] = field.mul(rows[rank][c], inv);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      const int factor = rows[r][col];
      for (int c = 0; c < k; ++c) {
        rows[r][c] = field.sub(rows[r][c], field.mul(factor, rows[rank][c]));
      }
    }
    if (target[col] != 0) {
      const int factor = target[col];
      for (int c = 0; c < k; ++c) {
        target[c] = field.sub(target[c], field.mul(factor, rows[rank][c]));
      }
    }
    ++rank;
  }
  for (int c = 0; c < k; ++c) {
    if (target[c] != 0) return false;
  }
  return true;
}

}  // namespace qaskit
