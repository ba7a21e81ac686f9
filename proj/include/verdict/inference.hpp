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

#include <span>
#include <string>
#include <vector>

#include "verdict/network.hpp"

namespace verdict::bn {

// Tolerance within which variable elimination must agree with enumeration.
inline constexpr double kOracleTolerance = 1e-9;

struct Posterior {
  std::string variable;
  // One probability per state, in the variable's declared state order.
  std::vector<double> distribution;

  friend bool operator==(const Posterior&, const Posterior&) = default;
};

// Result of a posterior query. When the evidence has probability zero the
// posteriors are undefined: `posteriors` is left empty and zero_evidence()
// is true. This is a normal outcome, not an error.
struct InferenceResult {
  std::vector<Posterior> posteriors;
  double evidence_probability = 0.0;
  bool zero_evidence = false;

  const Posterior* find(std::string_view variable) const;
};

// Product of the CPT entries selected by a full assignment. Throws
// Error(kIncompleteAssignment) if a variable is unassigned.
double joint_probability(const Network& net, const Evidence& full_assignment);

// Brute-force oracle: sums the joint over every assignment consistent with
// the evidence. Cost is the product of the free variables' state counts.
InferenceResult enumerate_posterior(const Network& net, const Evidence& evidence,
                                    std::span<const std::string> query);

// Exact posteriors by variable elimination. Each query variable is handled by
// its own elimination pass, ordered by elimination_order().
InferenceResult infer(const Network& net, const Evidence& evidence,
                      std::span<const std::string> query);

// P(evidence); 1 for empty evidence, 0 for contradictory evidence.
double probability_of_evidence(const Network& net, const Evidence& evidence);

// Greedy min-degree order over the moral graph restricted to unobserved
// variables; ties are broken by lexicographic variable id. Covers every
// variable that is neither queried nor observed.
std::vector<std::string> elimination_order(const Network& net, const Evidence& evidence,
                                           std::span<const std::string> query);

// Ids of all variables not mentioned in the evidence, in network order.
std::vector<std::string> unobserved_variables(const Network& net, const Evidence& evidence);

// Ids of all variables, in network order.
std::vector<std::string> all_variables(const Network& net);

}  // namespace verdict::bn
