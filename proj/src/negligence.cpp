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

#include "verdict/negligence.hpp"

#include <array>
#include <optional>

#include "verdict/audit_extract_data.hpp"
#include "verdict/error.hpp"

namespace verdict::negligence {
namespace {

using data::ButFor;
using data::CaseRecord;
using data::Finding;

constexpr std::size_t kTrueState = 0;
constexpr std::size_t kFalseState = 1;

bn::Variable binary(std::string_view id) {
  return {std::string(id), {std::string(bn::kTrue), std::string(bn::kFalse)}};
}

// A CPT whose every row is a learnable placeholder (uniform).
bn::Cpt learnable(std::string_view child, std::vector<std::string> parents,
                  std::size_t rows, std::size_t states) {
  bn::Cpt cpt;
  cpt.child = std::string(child);
  cpt.parents = std::move(parents);
  cpt.rows.assign(rows, std::vector<double>(states, 1.0 / static_cast<double>(states)));
  cpt.structural.assign(rows, std::vector<bool>(states, false));
  return cpt;
}

void pin_row(bn::Cpt& cpt, std::size_t row, std::vector<double> values) {
  cpt.structural[row].assign(values.size(), true);
  cpt.rows[row] = std::move(values);
}

std::optional<std::size_t> from_finding(Finding f) {
  switch (f) {
    case Finding::kYes: return kTrueState;
    case Finding::kNo: return kFalseState;
    case Finding::kUnknown: return std::nullopt;
  }
  return std::nullopt;
}

std::optional<std::size_t> from_butfor(ButFor b) {
  switch (b) {
    case ButFor::kSucceeded: return kTrueState;
    case ButFor::kFailed: return kFalseState;
    case ButFor::kUnknown: return std::nullopt;
  }
  return std::nullopt;
}

// Three-valued AND: false if any input is known false, true if all are
// known true, otherwise unobserved.
template <std::size_t N>
std::optional<std::size_t> all_of(const std::array<std::optional<std::size_t>, N>& inputs) {
  bool all_true = true;
  for (const auto& in : inputs) {
    if (in == kFalseState) return kFalseState;
    if (!in) all_true = false;
  }
  return all_true ? std::optional<std::size_t>(kTrueState) : std::nullopt;
}

std::optional<std::size_t> foreseeability(const CaseRecord& r) {
  return all_of<2>({from_finding(r.risk_exists), from_finding(r.knowledge)});
}

std::optional<std::size_t> requirements(const CaseRecord& r) {
  return all_of<3>({foreseeability(r), from_finding(r.duty_breached), from_butfor(r.butfor)});
}

learning::SchemaMapping negligence_mapping() {
  learning::SchemaMapping m;
  m.emplace(var::kRiskExists, [](const CaseRecord& r) { return from_finding(r.risk_exists); });
  m.emplace(var::kKnowledge, [](const CaseRecord& r) { return from_finding(r.knowledge); });
  m.emplace(var::kForeseeability, foreseeability);
  m.emplace(var::kDutyEstablished,
            [](const CaseRecord& r) { return from_finding(r.duty_established); });
  m.emplace(var::kDutyBreached, [](const CaseRecord& r) { return from_finding(r.duty_breached); });
  m.emplace(var::kButFor, [](const CaseRecord& r) { return from_butfor(r.butfor); });
  m.emplace(var::kRequirements, requirements);
  m.emplace(var::kAmeliorated, [](const CaseRecord& r) { return from_finding(r.ameliorated); });
  m.emplace(var::kOutcome, [](const CaseRecord& r) -> std::optional<std::size_t> {
    return r.outcome == data::Outcome::kWon ? 0 : 1;
  });
  return m;
}

}  // namespace

learning::Skeleton build_negligence_skeleton() {
  const bn::Variable risk = binary(var::kRiskExists);
  const bn::Variable knowledge = binary(var::kKnowledge);
  const bn::Variable foresee = binary(var::kForeseeability);
  const bn::Variable duty = binary(var::kDutyEstablished);
  const bn::Variable breached = binary(var::kDutyBreached);
  const bn::Variable butfor = binary(var::kButFor);
  const bn::Variable reqs = binary(var::kRequirements);
  const bn::Variable ameliorated = binary(var::kAmeliorated);
  const bn::Variable outcome{std::string(var::kOutcome),
                             {std::string(kWon), std::string(kLost)}};

  std::vector<bn::Cpt> cpts;
  cpts.push_back(learnable(var::kRiskExists, {}, 1, 2));
  cpts.push_back(learnable(var::kKnowledge, {}, 1, 2));
  cpts.push_back(bn::make_and_gate_cpt(foresee, std::array{risk, knowledge}));
  cpts.push_back(learnable(var::kDutyEstablished, {}, 1, 2));

  bn::Cpt breach = learnable(var::kDutyBreached, {duty.id}, 2, 2);
  pin_row(breach, kFalseState, {0.0, 1.0});
  cpts.push_back(std::move(breach));

  cpts.push_back(learnable(var::kButFor, {}, 1, 2));
  cpts.push_back(bn::make_and_gate_cpt(reqs, std::array{foresee, breached, butfor}));
  cpts.push_back(learnable(var::kAmeliorated, {}, 1, 2));

  // Rows: (reqs=t, am=t), (reqs=t, am=f), (reqs=f, am=t), (reqs=f, am=f).
  bn::Cpt result = learnable(var::kOutcome, {reqs.id, ameliorated.id}, 4, 2);
  pin_row(result, 2, {0.0, 1.0});
  pin_row(result, 3, {0.0, 1.0});
  cpts.push_back(std::move(result));

  return {bn::build_network({risk, knowledge, foresee, duty, breached, butfor, reqs,
                             ameliorated, outcome},
                            std::move(cpts)),
          negligence_mapping()};
}

data::Dataset builtin_audit_extract() {
  return data::parse_case_csv(resources::kAuditExtractCsv);
}

bn::Network fit_default_model(const learning::LearningConfig& cfg) {
  return learning::learn_parameters(builtin_audit_extract(), build_negligence_skeleton(), cfg);
}

std::vector<std::string> scenario_names() {
  return {std::string(kPlaintiffDoesWin), std::string(kPlaintiffShouldWin)};
}

bn::Evidence scenario_evidence(std::string_view name) {
  const std::string t(bn::kTrue);
  if (name == kPlaintiffDoesWin) {
    return {{std::string(var::kOutcome), std::string(kWon)}};
  }
  if (name == kPlaintiffShouldWin) {
    return {{std::string(var::kForeseeability), t},
            {std::string(var::kDutyBreached), t},
            {std::string(var::kButFor), t}};
  }
  throw Error(ErrorCode::kUnknownScenario, "unknown scenario '" + std::string(name) + "'");
}

ScenarioResult run_scenario(const bn::Network& net, std::string_view name) {
  return run_scenario(net, scenario_evidence(name), std::string(name));
}

ScenarioResult run_scenario(const bn::Network& net, const bn::Evidence& evidence,
                            std::string name) {
  const auto query = bn::all_variables(net);
  return {std::move(name), evidence, bn::infer(net, evidence, query)};
}

OrderedJson scenario_to_json(const bn::Network& net, const ScenarioResult& scenario) {
  OrderedJson out;
  out["scenario"] = scenario.name;
  OrderedJson ev = OrderedJson::object();
  for (const auto& [k, v] : scenario.evidence) ev[k] = v;
  out["evidence"] = std::move(ev);
  const OrderedJson inference = inference_to_json(net, scenario.result);
  for (const auto& [k, v] : inference.items()) out[k] = v;
  return out;
}

}  // namespace verdict::negligence
