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

#include <string>
#include <string_view>
#include <vector>

#include "verdict/case_data.hpp"
#include "verdict/inference.hpp"
#include "verdict/learning.hpp"
#include "verdict/model_json.hpp"
#include "verdict/network.hpp"

namespace verdict::negligence {

// Variable ids of the negligence model, in declaration order.
namespace var {
inline constexpr std::string_view kRiskExists = "RiskExists";
inline constexpr std::string_view kKnowledge = "Knowledge";
inline constexpr std::string_view kForeseeability = "ForeseeabilityEstablished";
inline constexpr std::string_view kDutyEstablished = "DutyEstablished";
inline constexpr std::string_view kDutyBreached = "DutyBreached";
inline constexpr std::string_view kButFor = "ButForSucceeds";
inline constexpr std::string_view kRequirements = "NecessaryRequirements";
inline constexpr std::string_view kAmeliorated = "Ameliorated";
inline constexpr std::string_view kOutcome = "CaseOutcome";
}  // namespace var

inline constexpr std::string_view kWon = "won";
inline constexpr std::string_view kLost = "lost";

inline constexpr std::string_view kPlaintiffDoesWin = "plaintiff-does-win";
inline constexpr std::string_view kPlaintiffShouldWin = "plaintiff-should-win";

// The nine-node structure:
//
//   RiskExists ─┐
//   Knowledge ──┴─> ForeseeabilityEstablished (AND) ─┐
//   DutyEstablished ─> DutyBreached ─────────────────┼─> NecessaryRequirements (AND) ─┐
//   ButForSucceeds ──────────────────────────────────┘                                ├─> CaseOutcome
//   Ameliorated ──────────────────────────────────────────────────────────────────────┘
//
// Structural cells: both AND gates, P(DutyBreached=true | DutyEstablished=false) = 0
// and P(won | NecessaryRequirements=false) = 0. Everything else is learned.
learning::Skeleton build_negligence_skeleton();

// The fifteen-record case audit extract compiled into the library.
data::Dataset builtin_audit_extract();

// Learns the skeleton's parameters from builtin_audit_extract().
bn::Network fit_default_model(const learning::LearningConfig& cfg = {});

struct ScenarioResult {
  std::string name;
  bn::Evidence evidence;
  // Posteriors for every variable (observed ones as point masses).
  bn::InferenceResult result;
};

std::vector<std::string> scenario_names();

// Throws Error(kUnknownScenario).
bn::Evidence scenario_evidence(std::string_view name);

ScenarioResult run_scenario(const bn::Network& net, std::string_view name);
ScenarioResult run_scenario(const bn::Network& net, const bn::Evidence& evidence,
                            std::string name = "custom");

// {"scenario", "evidence", "evidence_probability", "zero_evidence", "posteriors"}
OrderedJson scenario_to_json(const bn::Network& net, const ScenarioResult& scenario);

}  // namespace verdict::negligence
