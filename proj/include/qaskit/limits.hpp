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
#include <stdexcept>
#include <string>

namespace qaskit {

// Raised whenever an input exceeds one of the desk-scale bounds below.  The
// message always names the bound that was hit.
class SizeLimitError : public std::runtime_error {
 public:
  explicit SizeLimitError(const std::string& what) : std::runtime_error(what) {}
};

// Desk-scale resource bounds.  Defaults cover every bundled reference case;
// the QASKIT_LIMITS environment variable ("key=value,key=value") can override
// individual fields for experiments.
struct Limits {
  int max_players = 24;         // bitmask representation cap
  int enum_players = 20;        // any 2^n subset enumeration
  int extension_players = 6;    // exhaustive maximal-structure enumeration
  int verify_players = 10;      // per-subset simulator sweeps
  int subfamily_r = 16;         // realizable-subfamily precomputation
  int oracle_participants = 8;  // bundled-threshold weight search
  std::int64_t support = 1'000'000;      // sparse state labels
  std::int64_t rho_entries = 8'000'000;  // sparse density-matrix entries
  std::int64_t dense = 1'000'000;        // dense state dimension q^n_code
  int jobs = 1;                 // worker threads for parallel sweeps
};

// Process-wide limits, initialised once from QASKIT_LIMITS.
const Limits& limits();

// Replaces the process-wide limits (used by the CLI for --jobs and by tests).
void set_limits(const Limits& lim);

// Parses a QASKIT_LIMITS-style override string on top of `base`.
Limits parse_limits(const std::string& spec, Limits base);

}  // namespace qaskit
