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

#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace verdict::bn {

// Canonical state labels for binary variables, in canonical order.
inline constexpr std::string_view kTrue = "true";
inline constexpr std::string_view kFalse = "false";

// Tolerance on row sums when validating a CPT.
inline constexpr double kRowSumTolerance = 1e-9;

struct Variable {
  std::string id;
  std::vector<std::string> states;

  bool is_canonical_binary() const;

  friend bool operator==(const Variable&, const Variable&) = default;
};

// Conditional probability table for one child variable.
//
// `rows` holds one distribution over the child's states per combination of
// parent states. Rows are ordered row-major in the declared parent order, so
// the last parent varies fastest: with parents (A, B) both binary the rows
// are (A0,B0), (A0,B1), (A1,B0), (A1,B1).
//
// `structural` has the same shape as `rows` (or is empty, meaning no entry is
// structural). A structural entry is fixed by logic to exactly 0 or 1 and is
// never touched by learning.
struct Cpt {
  std::string child;
  std::vector<std::string> parents;
  std::vector<std::vector<double>> rows;
  std::vector<std::vector<bool>> structural;

  bool is_structural(std::size_t row, std::size_t state) const;

  friend bool operator==(const Cpt&, const Cpt&) = default;
};

// Hard evidence: variable id -> state label.
using Evidence = std::map<std::string, std::string, std::less<>>;

// Evidence resolved against a network: one optional state index per variable,
// indexed like Network::variables().
using Observation = std::vector<std::optional<std::size_t>>;

// A validated, immutable discrete Bayesian network. Construct with
// build_network(). Safe to share between threads.
class Network {
 public:
  std::size_t size() const noexcept { return variables_.size(); }

  const std::vector<Variable>& variables() const noexcept { return variables_; }
  const Variable& variable(std::size_t index) const { return variables_.at(index); }

  // CPTs are stored in the same order as variables(), whatever order they
  // were supplied in.
  const std::vector<Cpt>& cpts() const noexcept { return cpts_; }
  const Cpt& cpt(std::size_t index) const { return cpts_.at(index); }

  std::span<const std::size_t> parents(std::size_t index) const {
    return parent_indices_.at(index);
  }
  std::span<const std::size_t> topological_order() const noexcept {
    return topological_order_;
  }

  std::optional<std::size_t> find(std::string_view id) const;
  // Throws Error(kUnknownVariable).
  std::size_t index_of(std::string_view id) const;
  // Throws Error(kUnknownState).
  std::size_t state_index(std::size_t variable, std::string_view state) const;

  // Row of `variable`'s CPT selected by the parent states in `states`, which
  // must hold a state index for every parent.
  std::size_t row_index(std::size_t variable,
                        std::span<const std::size_t> states) const;

  // Throws Error(kUnknownVariable / kUnknownState).
  Observation resolve(const Evidence& evidence) const;

  std::size_t arc_count() const;

 private:
  friend Network build_network(std::vector<Variable> variables,
                               std::vector<Cpt> cpts);

  std::vector<Variable> variables_;
  std::vector<Cpt> cpts_;
  std::vector<std::vector<std::size_t>> parent_indices_;
  std::vector<std::size_t> topological_order_;
  std::unordered_map<std::string, std::size_t> index_;
};

// Validates and freezes a network. Throws Error with one of
// kInvalidVariable, kDuplicateVariable, kUnknownVariable, kUnknownParent,
// kMissingCpt, kBadRow, kCycleDetected.
Network build_network(std::vector<Variable> variables, std::vector<Cpt> cpts);

// Deterministic AND: P(child=true | all parents true) = 1, otherwise 0.
// Every entry is structural. All variables must be canonical binary
// ([true, false]); otherwise throws Error(kNonBinaryVariable).
Cpt make_and_gate_cpt(const Variable& child, std::span<const Variable> parents);

}  // namespace verdict::bn
