// Copyright 2026 The verdict-bn Authors
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

#include "verdict/network.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <queue>
#include <set>
#include <sstream>
#include <unordered_set>

#include "verdict/error.hpp"

namespace verdict::bn {
namespace {

[[noreturn]] void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

bool has_whitespace(std::string_view s) {
  return std::any_of(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); });
}

void validate_variable(const Variable& v) {
  if (v.id.empty() || has_whitespace(v.id)) {
    fail(ErrorCode::kInvalidVariable,
         "variable id '" + v.id + "' must be nonempty and contain no whitespace");
  }
  if (v.states.size() < 2) {
    fail(ErrorCode::kInvalidVariable, "variable '" + v.id + "' needs at least 2 states");
  }
  std::set<std::string_view> seen;
  for (const auto& s : v.states) {
    if (s.empty()) {
      fail(ErrorCode::kInvalidVariable, "variable '" + v.id + "' has an empty state label");
    }
    if (!seen.insert(s).second) {
      fail(ErrorCode::kInvalidVariable,
           "variable '" + v.id + "' repeats state '" + s + "'");
    }
  }
}

void validate_rows(const Cpt& cpt, std::size_t expected_rows, std::size_t child_states) {
  auto bad = [&](const std::string& what) {
    fail(ErrorCode::kBadRow, "CPT of '" + cpt.child + "': " + what);
  };
  if (cpt.rows.size() != expected_rows) {
    bad("expected " + std::to_string(expected_rows) + " rows, got " +
        std::to_string(cpt.rows.size()));
  }
  const bool masked = !cpt.structural.empty();
  if (masked && cpt.structural.size() != expected_rows) {
    bad("structural mask has " + std::to_string(cpt.structural.size()) + " rows");
  }
  for (std::size_t r = 0; r < cpt.rows.size(); ++r) {
    const auto& row = cpt.rows[r];
    if (row.size() != child_states) {
      bad("row " + std::to_string(r) + " has " + std::to_string(row.size()) +
          " entries, expected " + std::to_string(child_states));
    }
    if (masked && cpt.structural[r].size() != child_states) {
      bad("structural mask row " + std::to_string(r) + " has wrong length");
    }
    double sum = 0.0;
    for (std::size_t s = 0; s < row.size(); ++s) {
      const double p = row[s];
      if (!std::isfinite(p) || p < 0.0 || p > 1.0) {
        std::ostringstream os;
        os << "row " << r << " entry " << s << " = " << p << " is outside [0,1]";
        bad(os.str());
      }
      if (masked && cpt.structural[r][s] && p != 0.0 && p != 1.0) {
        std::ostringstream os;
        os << "structural entry (" << r << ", " << s << ") = " << p << " is not 0 or 1";
        bad(os.str());
      }
      sum += p;
    }
    if (std::abs(sum - 1.0) > kRowSumTolerance) {
      std::ostringstream os;
      os.precision(17);
      os << "row " << r << " sums to " << sum;
      bad(os.str());
    }
  }
}

}  // namespace

bool Variable::is_canonical_binary() const {
  return states.size() == 2 && states[0] == kTrue && states[1] == kFalse;
}

bool Cpt::is_structural(std::size_t row, std::size_t state) const {
  return !structural.empty() && structural.at(row).at(state);
}

std::optional<std::size_t> Network::find(std::string_view id) const {
  auto it = index_.find(std::string(id));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t Network::index_of(std::string_view id) const {
  if (auto i = find(id)) return *i;
  fail(ErrorCode::kUnknownVariable, "unknown variable '" + std::string(id) + "'");
}

std::size_t Network::state_index(std::size_t variable, std::string_view state) const {
  const auto& states = variables_.at(variable).states;
  auto it = std::find(states.begin(), states.end(), state);
  if (it == states.end()) {
    fail(ErrorCode::kUnknownState, "variable '" + variables_[variable].id +
                                       "' has no state '" + std::string(state) + "'");
  }
  return static_cast<std::size_t>(it - states.begin());
}

std::size_t Network::row_index(std::size_t variable,
                               std::span<const std::size_t> states) const {
  std::size_t row = 0;
  for (std::size_t p : parent_indices_.at(variable)) {
    row = row * variables_[p].states.size() + states[p];
  }
  return row;
}

Observation Network::resolve(const Evidence& evidence) const {
  Observation obs(size());
  for (const auto& [id, state] : evidence) {
    const std::size_t v = index_of(id);
    obs[v] = state_index(v, state);
  }
  return obs;
}

std::size_t Network::arc_count() const {
  std::size_t n = 0;
  for (const auto& p : parent_indices_) n += p.size();
  return n;
}

Network build_network(std::vector<Variable> variables, std::vector<Cpt> cpts) {
  Network net;
  for (std::size_t i = 0; i < variables.size(); ++i) {
    validate_variable(variables[i]);
    if (!net.index_.emplace(variables[i].id, i).second) {
      fail(ErrorCode::kDuplicateVariable, "duplicate variable '" + variables[i].id + "'");
    }
  }

  std::vector<std::optional<Cpt>> by_child(variables.size());
  for (auto& cpt : cpts) {
    auto it = net.index_.find(cpt.child);
    if (it == net.index_.end()) {
      fail(ErrorCode::kUnknownVariable, "CPT for undeclared variable '" + cpt.child + "'");
    }
    if (by_child[it->second]) {
      fail(ErrorCode::kMissingCpt, "more than one CPT for '" + cpt.child + "'");
    }
    by_child[it->second] = std::move(cpt);
  }

  net.parent_indices_.resize(variables.size());
  for (std::size_t i = 0; i < variables.size(); ++i) {
    if (!by_child[i]) {
      fail(ErrorCode::kMissingCpt, "no CPT for variable '" + variables[i].id + "'");
    }
    std::unordered_set<std::size_t> seen;
    for (const auto& parent : by_child[i]->parents) {
      auto it = net.index_.find(parent);
      if (it == net.index_.end()) {
        fail(ErrorCode::kUnknownParent,
             "CPT of '" + variables[i].id + "' names unknown parent '" + parent + "'");
      }
      if (!seen.insert(it->second).second) {
        fail(ErrorCode::kBadRow,
             "CPT of '" + variables[i].id + "' lists parent '" + parent + "' twice");
      }
      net.parent_indices_[i].push_back(it->second);
    }
  }

  // Kahn's algorithm; ties go to the earliest declared variable.
  std::vector<std::size_t> pending(variables.size());
  std::vector<std::vector<std::size_t>> children(variables.size());
  for (std::size_t i = 0; i < variables.size(); ++i) {
    pending[i] = net.parent_indices_[i].size();
    for (std::size_t p : net.parent_indices_[i]) children[p].push_back(i);
  }
  std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
  for (std::size_t i = 0; i < variables.size(); ++i) {
    if (pending[i] == 0) ready.push(i);
  }
  while (!ready.empty()) {
    const std::size_t v = ready.top();
    ready.pop();
    net.topological_order_.push_back(v);
    for (std::size_t c : children[v]) {
      if (--pending[c] == 0) ready.push(c);
    }
  }
  if (net.topological_order_.size() != variables.size()) {
    std::string on_cycle;
    for (std::size_t i = 0; i < variables.size(); ++i) {
      if (pending[i] > 0) on_cycle += (on_cycle.empty() ? "" : ", ") + variables[i].id;
    }
    fail(ErrorCode::kCycleDetected, "parent relation has a cycle through: " + on_cycle);
  }

  for (std::size_t i = 0; i < variables.size(); ++i) {
    std::size_t rows = 1;
    for (std::size_t p : net.parent_indices_[i]) rows *= variables[p].states.size();
    validate_rows(*by_child[i], rows, variables[i].states.size());
  }

  net.variables_ = std::move(variables);
  net.cpts_.reserve(by_child.size());
  for (auto& c : by_child) net.cpts_.push_back(std::move(*c));
  return net;
}

Cpt make_and_gate_cpt(const Variable& child, std::span<const Variable> parents) {
  auto require_binary = [](const Variable& v) {
    if (!v.is_canonical_binary()) {
      fail(ErrorCode::kNonBinaryVariable,
           "AND gate requires states [true, false] on '" + v.id + "'");
    }
  };
  require_binary(child);
  for (const auto& p : parents) require_binary(p);

  Cpt cpt;
  cpt.child = child.id;
  for (const auto& p : parents) cpt.parents.push_back(p.id);
  const std::size_t rows = std::size_t{1} << parents.size();
  cpt.rows.reserve(rows);
  // Row 0 is the all-true combination since true is state 0 everywhere.
  for (std::size_t r = 0; r < rows; ++r) {
    cpt.rows.push_back(r == 0 ? std::vector<double>{1.0, 0.0}
                              : std::vector<double>{0.0, 1.0});
  }
  cpt.structural.assign(rows, std::vector<bool>{true, true});
  return cpt;
}

}  // namespace verdict::bn
