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

#include <gtest/gtest.h>

#include <algorithm>

#include "test_support.hpp"
#include "verdict/error.hpp"
#include "verdict/negligence.hpp"

namespace verdict::negligence {
namespace {

// P(CaseOutcome=won) under plaintiff-should-win on fit_default_model(alpha=1),
// computed once with enumerate_posterior and frozen. It equals 53/85:
// P(ameliorated) = 10/17, P(won | reqs, ameliorated) = 1/2,
// P(won | reqs, not ameliorated) = 4/5.
constexpr double kShouldWinGolden = 0.62352941176470589;
// Same quantity at alpha=0: 3/5 * 1/2 + 2/5 * 1 = 0.7.
constexpr double kShouldWinGoldenAlphaZero = 0.69999999999999996;

const std::vector<std::string_view> kRequirementNodes{
    var::kRiskExists, var::kKnowledge, var::kForeseeability, var::kDutyEstablished,
    var::kDutyBreached, var::kButFor, var::kRequirements};

double p_true(const bn::InferenceResult& r, std::string_view id) {
  const auto* p = r.find(id);
  EXPECT_NE(p, nullptr) << id;
  return p ? p->distribution[0] : -1.0;
}

TEST(Skeleton, Shape) {
  const auto sk = build_negligence_skeleton();
  const auto& net = sk.network;
  EXPECT_EQ(net.size(), 9u);
  EXPECT_EQ(net.arc_count(), 8u);
  EXPECT_EQ(net.variable(net.index_of(var::kOutcome)).states,
            (std::vector<std::string>{"won", "lost"}));
  EXPECT_EQ(net.cpt(net.index_of(var::kOutcome)).parents,
            (std::vector<std::string>{"NecessaryRequirements", "Ameliorated"}));
  EXPECT_EQ(net.cpt(net.index_of(var::kForeseeability)).parents,
            (std::vector<std::string>{"RiskExists", "Knowledge"}));
}

TEST(Skeleton, RequirementsGateHasOneTrueRow) {
  const auto sk = build_negligence_skeleton();
  const auto& cpt = sk.network.cpt(sk.network.index_of(var::kRequirements));
  ASSERT_EQ(cpt.rows.size(), 8u);
  EXPECT_EQ(std::count_if(cpt.rows.begin(), cpt.rows.end(),
                          [](const auto& row) { return row[0] == 1.0; }),
            1);
}

TEST(Skeleton, StructuralCells) {
  const auto sk = build_negligence_skeleton();
  const auto& net = sk.network;
  const auto& breach = net.cpt(net.index_of(var::kDutyBreached));
  EXPECT_EQ(breach.rows[1][0], 0.0);  // P(breached | duty not established)
  EXPECT_TRUE(breach.is_structural(1, 0));
  EXPECT_FALSE(breach.is_structural(0, 0));

  const auto& outcome = net.cpt(net.index_of(var::kOutcome));
  for (std::size_t r : {2, 3}) {
    EXPECT_EQ(outcome.rows[r], (std::vector<double>{0.0, 1.0}));
    EXPECT_TRUE(outcome.is_structural(r, 0));
  }
  for (std::size_t r : {0, 1}) EXPECT_FALSE(outcome.is_structural(r, 0));

  // Everything else is learnable; the gates are fully structural.
  for (std::string_view id : {var::kRiskExists, var::kKnowledge, var::kDutyEstablished,
                              var::kButFor, var::kAmeliorated}) {
    EXPECT_FALSE(net.cpt(net.index_of(id)).is_structural(0, 0)) << id;
  }
  for (std::string_view id : {var::kForeseeability, var::kRequirements}) {
    const auto& cpt = net.cpt(net.index_of(id));
    for (std::size_t r = 0; r < cpt.rows.size(); ++r) EXPECT_TRUE(cpt.is_structural(r, 1));
  }
}

TEST(AuditExtract, Records) {
  const auto ds = builtin_audit_extract();
  ASSERT_EQ(ds.size(), 15u);
  EXPECT_EQ(std::count_if(ds.records.begin(), ds.records.end(),
                          [](const auto& r) { return r.case_id == "Scarf [1998] QSC 233"; }),
            2);

  const auto find = [&](std::string_view id) {
    auto it = std::find_if(ds.records.begin(), ds.records.end(),
                           [&](const auto& r) { return r.case_id == id; });
    EXPECT_NE(it, ds.records.end()) << id;
    return *it;
  };
  const auto vairy = find("Vairy [2005] HCA 62");
  EXPECT_EQ(vairy.outcome, data::Outcome::kWon);
  EXPECT_EQ(vairy.duty_breached, data::Finding::kYes);
  EXPECT_EQ(vairy.butfor, data::ButFor::kSucceeded);
  EXPECT_EQ(vairy.ameliorated, data::Finding::kNo);
  EXPECT_EQ(vairy.jurisdiction, "NSW");
  EXPECT_EQ(vairy.authority_level, data::AuthorityLevel::kLocal);

  const auto heyman = find("Heyman [1985] HCA 41");
  EXPECT_EQ(heyman.outcome, data::Outcome::kLost);
  EXPECT_EQ(heyman.duty_established, data::Finding::kNo);
  EXPECT_EQ(heyman.butfor, data::ButFor::kFailed);
  EXPECT_EQ(heyman.ameliorated, data::Finding::kNo);
  EXPECT_EQ(heyman.authority_level, data::AuthorityLevel::kLocal);
}

TEST(AuditExtract, SummaryMatchesPublishedTotals) {
  const auto t = data::summarize(builtin_audit_extract());
  EXPECT_EQ(t.won, 3);
  EXPECT_EQ(t.lost, 12);
  EXPECT_EQ(t.duty_established, (data::YesNoTally{11, 4}));
  EXPECT_EQ(t.duty_breached, (data::YesNoTally{3, 12}));
  EXPECT_EQ(t.soc_breached, (data::YesNoTally{1, 14}));
  EXPECT_EQ(t.butfor_succeeded, 3);
  EXPECT_EQ(t.butfor_failed, 9);
  EXPECT_EQ(t.butfor_not_considered, 3);
  EXPECT_EQ(t.ameliorated, (data::YesNoTally{9, 6}));
  EXPECT_EQ(t.jurisdiction, (std::map<std::string, int>{{"NSW", 10}, {"VIC", 2}, {"QLD", 2}, {"NT", 1}}));
  EXPECT_EQ(t.authority_local, 9);
  EXPECT_EQ(t.authority_state, 6);
  EXPECT_EQ(t.authority_federal, 0);
}

TEST(FitDefaultModel, ZeroAlphaFrequencies) {
  const auto net = fit_default_model({0.0});
  EXPECT_EQ(net.cpt(net.index_of(var::kAmeliorated)).rows[0][0], 0.6);
  EXPECT_EQ(net.cpt(net.index_of(var::kButFor)).rows[0][0], 0.25);
  EXPECT_EQ(net.cpt(net.index_of(var::kRiskExists)).rows[0][0], 5.0 / 7.0);
  EXPECT_EQ(net.cpt(net.index_of(var::kKnowledge)).rows[0][0], 4.0 / 7.0);
  EXPECT_EQ(net.cpt(net.index_of(var::kDutyEstablished)).rows[0][0], 11.0 / 15.0);
  const auto& breach = net.cpt(net.index_of(var::kDutyBreached));
  EXPECT_EQ(breach.rows[0][0], 3.0 / 11.0);
  const auto& outcome = net.cpt(net.index_of(var::kOutcome));
  EXPECT_EQ(outcome.rows[0], (std::vector<double>{0.5, 0.5}));  // no data: uniform
  EXPECT_EQ(outcome.rows[1], (std::vector<double>{1.0, 0.0}));
}

TEST(FitDefaultModel, Deterministic) {
  for (double alpha : {0.0, 1.0, 2.5}) {
    EXPECT_EQ(dump_model(fit_default_model({alpha})), dump_model(fit_default_model({alpha})));
  }
}

TEST(FitDefaultModel, JointIsAProperDistribution) {
  const auto net = fit_default_model({1.0});
  const auto all = testing::all_assignments(net);
  ASSERT_EQ(all.size(), 512u);
  double total = 0.0;
  double won = 0.0;
  for (const auto& a : all) {
    const double p = bn::joint_probability(net, a);
    double product = 1.0;
    for (std::size_t v = 0; v < net.size(); ++v) {
      std::vector<std::size_t> states(net.size());
      for (std::size_t u = 0; u < net.size(); ++u) {
        states[u] = net.state_index(u, a.at(net.variable(u).id));
      }
      product *= net.cpt(v).rows[net.row_index(v, states)][states[v]];
    }
    EXPECT_EQ(p, product);
    total += p;
    if (a.at(std::string(var::kOutcome)) == "won") won += p;
  }
  EXPECT_NEAR(total, 1.0, 1e-12);
  const bn::Evidence ev{{std::string(var::kOutcome), "won"}};
  EXPECT_NEAR(bn::enumerate_posterior(net, ev, {}).evidence_probability, won, 1e-12);
  EXPECT_NEAR(bn::probability_of_evidence(net, ev), won, 1e-12);
}

TEST(FitDefaultModel, EliminationOrderIsStable) {
  const auto net = fit_default_model();
  const std::vector<std::string> q{std::string(var::kOutcome)};
  const auto first = bn::elimination_order(net, {}, q);
  EXPECT_EQ(first.size(), 8u);
  EXPECT_EQ(bn::elimination_order(net, {}, q), first);
  EXPECT_EQ(bn::elimination_order(fit_default_model(), {}, q), first);
}

TEST(Scenarios, Names) {
  EXPECT_EQ(scenario_names(), (std::vector<std::string>{"plaintiff-does-win", "plaintiff-should-win"}));
  try {
    scenario_evidence("nope");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnknownScenario);
  }
}

TEST(Scenarios, PlaintiffDoesWinForcesEveryRequirement) {
  for (double alpha : {0.0, 0.5, 1.0, 4.0}) {
    const auto net = fit_default_model({alpha});
    const auto s = run_scenario(net, kPlaintiffDoesWin);
    EXPECT_EQ(s.name, "plaintiff-does-win");
    ASSERT_FALSE(s.result.zero_evidence);
    EXPECT_EQ(s.result.posteriors.size(), 9u);
    for (auto id : kRequirementNodes) EXPECT_EQ(p_true(s.result, id), 1.0) << id << " alpha " << alpha;
    EXPECT_EQ(s.result.find(var::kOutcome)->distribution, (std::vector<double>{1.0, 0.0}));
  }
}

TEST(Scenarios, PlaintiffShouldWin) {
  const auto net = fit_default_model({1.0});
  const auto s = run_scenario(net, kPlaintiffShouldWin);
  ASSERT_FALSE(s.result.zero_evidence);
  for (auto id : {var::kRiskExists, var::kKnowledge, var::kDutyEstablished}) {
    EXPECT_EQ(p_true(s.result, id), 1.0) << id;
  }
  const double won = s.result.find(var::kOutcome)->distribution[0];
  EXPECT_NEAR(won, kShouldWinGolden, 1e-12);
  EXPECT_NEAR(won, 53.0 / 85.0, 1e-12);
  EXPECT_GT(won, 0.0);
  EXPECT_LT(won, 1.0);

  const std::vector<std::string> q{std::string(var::kOutcome)};
  const auto oracle = bn::enumerate_posterior(net, scenario_evidence(kPlaintiffShouldWin), q);
  EXPECT_NEAR(oracle.posteriors[0].distribution[0], kShouldWinGolden, 1e-12);

  const auto zero = run_scenario(fit_default_model({0.0}), kPlaintiffShouldWin);
  EXPECT_NEAR(zero.result.find(var::kOutcome)->distribution[0], kShouldWinGoldenAlphaZero, 1e-12);
}

TEST(Scenarios, ScenarioLayerAddsNothingNumerically) {
  const auto net = fit_default_model();
  for (const auto& name : scenario_names()) {
    const auto ev = scenario_evidence(name);
    const auto s = run_scenario(net, name);
    const auto direct = bn::infer(net, ev, bn::all_variables(net));
    EXPECT_EQ(s.evidence, ev);
    EXPECT_EQ(s.result.posteriors, direct.posteriors);
    EXPECT_EQ(s.result.evidence_probability, direct.evidence_probability);
  }
}

TEST(Scenarios, CustomEvidenceCanBeContradictory) {
  const auto net = fit_default_model();
  const auto s = run_scenario(net, {{"CaseOutcome", "won"}, {"NecessaryRequirements", "false"}});
  EXPECT_EQ(s.name, "custom");
  EXPECT_TRUE(s.result.zero_evidence);
  EXPECT_TRUE(s.result.posteriors.empty());
  const auto j = scenario_to_json(net, s);
  EXPECT_TRUE(j["zero_evidence"].get<bool>());
  EXPECT_TRUE(j["posteriors"].empty());
}

TEST(Scenarios, ForwardChanceStaysBelowCertainty) {
  // Whenever amelioration is possible and does not guarantee a win, the
  // plaintiff who establishes every requirement can still lose.
  for (double alpha : {0.0, 0.1, 1.0, 3.0, 100.0}) {
    const auto net = fit_default_model({alpha});
    const double p_am = net.cpt(net.index_of(var::kAmeliorated)).rows[0][0];
    const double p_won_am = net.cpt(net.index_of(var::kOutcome)).rows[0][0];
    const double won = run_scenario(net, kPlaintiffShouldWin).result.find(var::kOutcome)->distribution[0];
    if (p_am > 0.0 && p_won_am < 1.0) EXPECT_LT(won, 1.0) << alpha;
  }
}

}  // namespace
}  // namespace verdict::negligence
