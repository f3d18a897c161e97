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

#include "qaskit/player_set.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace qaskit {

namespace {

Limits load_initial_limits() {
  Limits lim;
  if (const char* env = std::getenv("QASKIT_LIMITS")) {
    lim = parse_limits(env, lim);
  }
  return lim;
}

Limits& mutable_limits() {
  static Limits lim = load_initial_limits();
  return lim;
}

}  // namespace

const Limits& limits() { return mutable_limits(); }

void set_limits(const Limits& lim) { mutable_limits() = lim; }

Limits parse_limits(const std::string& spec, Limits base) {
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("QASKIT_LIMITS entry '" + item + "' is not key=value");
    }
    const std::string key = item.substr(0, eq);
    const std::int64_t value = std::stoll(item.substr(eq + 1));
    if (key == "max_players") base.max_players = static_cast<int>(value);
    else if (key == "enum_players") base.enum_players = static_cast<int>(value);
    else if (key == "extension_players") base.extension_players = static_cast<int>(value);
    else if (key == "verify_players") base.verify_players = static_cast<int>(value);
    else if (key == "subfamily_r") base.subfamily_r = static_cast<int>(value);
    else if (key == "oracle_participants") base.oracle_participants = static_cast<int>(value);
    else if (key == "support") base.support = value;
    else if (key == "rho_entries") base.rho_entries = value;
    else if (key == "dense") base.dense = value;
    else if (key == "jobs") base.jobs = static_cast<int>(value);
    else throw std::invalid_argument("unknown QASKIT_LIMITS key '" + key + "'");
  }
  return base;
}

Universe::Universe(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.empty()) throw std::invalid_argument("universe needs at least one player");
  if (static_cast<int>(labels_.size()) > limits().max_players) {
    throw SizeLimitError("universe of " + std::to_string(labels_.size()) +
                         " players exceeds the representation cap of " +
                         std::to_string(limits().max_players));
  }
  for (const auto& name : labels_) {
    if (name.empty()) throw std::invalid_argument("player names must be non-empty");
    if (name.find(',') != std::string::npos) {
      throw std::invalid_argument("player name '" + name + "' may not contain a comma");
    }
  }
  auto sorted = labels_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("duplicate player name in universe");
  }
}

int Universe::index_of(const std::string& name) const {
  for (int i = 0; i < size(); ++i) {
    if (labels_[i] == name) return i;
  }
  throw std::invalid_argument("unknown player '" + name + "'");
}

bool Universe::has(const std::string& name) const {
  return std::find(labels_.begin(), labels_.end(), name) != labels_.end();
}

Mask Universe::parse_set(const std::vector<std::string>& names) const {
  Mask m = 0;
  for (const auto& name : names) m |= Mask{1} << index_of(name);
  return m;
}

Mask Universe::parse_set_expr(const std::string& expr) const {
  std::vector<std::string> names;
  std::stringstream ss(expr);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) names.push_back(item);
  }
  return parse_set(names);
}

std::vector<std::string> Universe::set_names(Mask a) const {
  std::vector<std::string> names;
  for (int i = 0; i < size(); ++i) {
    if (a & (Mask{1} << i)) names.push_back(labels_[i]);
  }
  return names;
}

std::string Universe::set_label(Mask a) const {
  if (a == 0) return "{}";
  std::string out;
  for (const auto& name : set_names(a)) out += name;
  return out;
}

Universe Universe::with_player(const std::string& name) const {
  if (has(name)) throw std::invalid_argument("player '" + name + "' already present");
  auto labels = labels_;
  labels.push_back(name);
  return Universe(std::move(labels));
}

}  // namespace qaskit
