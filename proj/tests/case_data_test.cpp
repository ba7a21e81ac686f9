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

#include <random>

#include "verdict/case_data.hpp"
#include "verdict/error.hpp"

namespace verdict::data {
namespace {

constexpr std::string_view kHeader =
    "case_id,outcome,duty_established,duty_breached,soc_breached,butfor,ameliorated,"
    "jurisdiction,authority_level,risk_exists,knowledge,notes\n";

ErrorCode parse_error(std::string_view text, std::string* message = nullptr) {
  try {
    parse_case_csv(text);
  } catch (const Error& e) {
    if (message) *message = e.what();
    return e.code();
  }
  ADD_FAILURE() << "accepted: " << text;
  return ErrorCode::kIo;
}

TEST(ParseCaseCsv, HeaderOnlyIsEmpty) {
  EXPECT_EQ(parse_case_csv(kHeader).size(), 0u);
  EXPECT_EQ(summarize(parse_case_csv(kHeader)), TotalsSummary{});
}

TEST(ParseCaseCsv, MissingHeader) {
  EXPECT_EQ(parse_error(""), ErrorCode::kBadHeader);
  std::string msg;
  EXPECT_EQ(parse_error("case_id,outcome\nX,won\n", &msg), ErrorCode::kBadHeader);
  EXPECT_NE(msg.find("duty_established"), std::string::npos);
}

TEST(ParseCaseCsv, UnknownTokensAndTrimming) {
  const std::string text = std::string(kHeader) +
                           "  Smith [2001] HCA 1 , Won , YES, - ,na,Not Cons, NO ,NSW,l,"
                           "not considered,,\"a, b\"\n"
                           "Jones,lost,no,No,NA,Succeeded,yes,VIC,S,yes,no,\n";
  const Dataset ds = parse_case_csv(text);
  ASSERT_EQ(ds.size(), 2u);
  const CaseRecord& r = ds.records[0];
  EXPECT_EQ(r.case_id, "Smith [2001] HCA 1");
  EXPECT_EQ(r.outcome, Outcome::kWon);
  EXPECT_EQ(r.duty_established, Finding::kYes);
  EXPECT_EQ(r.duty_breached, Finding::kUnknown);
  EXPECT_EQ(r.soc_breached, Finding::kUnknown);
  EXPECT_EQ(r.butfor, ButFor::kUnknown);
  EXPECT_EQ(r.ameliorated, Finding::kNo);
  EXPECT_EQ(r.authority_level, AuthorityLevel::kLocal);
  EXPECT_EQ(r.risk_exists, Finding::kUnknown);
  EXPECT_EQ(r.knowledge, Finding::kUnknown);
  EXPECT_EQ(r.notes, "a, b");
  EXPECT_EQ(ds.records[1].butfor, ButFor::kSucceeded);
  EXPECT_EQ(ds.records[1].authority_level, AuthorityLevel::kState);
}

TEST(ParseCaseCsv, ColumnsMatchedByName) {
  const std::string text =
      "notes,knowledge,risk_exists,authority_level,jurisdiction,ameliorated,butfor,"
      "soc_breached,duty_breached,duty_established,outcome,case_id\r\n"
      "n,yes,no,F,QLD,yes,failed,no,no,yes,lost,X\r\n";
  const Dataset ds = parse_case_csv(text);
  ASSERT_EQ(ds.size(), 1u);
  EXPECT_EQ(ds.records[0].case_id, "X");
  EXPECT_EQ(ds.records[0].authority_level, AuthorityLevel::kFederal);
  EXPECT_EQ(ds.records[0].knowledge, Finding::kYes);
  EXPECT_EQ(ds.records[0].risk_exists, Finding::kNo);
}

TEST(ParseCaseCsv, BadTokenNamesRowAndColumn) {
  std::string msg;
  EXPECT_EQ(parse_error(std::string(kHeader) + "A,lost,yes,no,no,failed,maybe,NSW,L,-,-,\n", &msg),
            ErrorCode::kBadToken);
  EXPECT_NE(msg.find("row 1"), std::string::npos) << msg;
  EXPECT_NE(msg.find("ameliorated"), std::string::npos) << msg;
  EXPECT_NE(msg.find("maybe"), std::string::npos) << msg;

  // outcome and authority level have no unknown
  EXPECT_EQ(parse_error(std::string(kHeader) + "A,-,yes,no,no,failed,yes,NSW,L,-,-,\n"),
            ErrorCode::kBadToken);
  EXPECT_EQ(parse_error(std::string(kHeader) + "A,won,yes,no,no,failed,yes,NSW,X,-,-,\n"),
            ErrorCode::kBadToken);
  EXPECT_EQ(parse_error(std::string(kHeader) + ",won,yes,no,no,failed,yes,NSW,L,-,-,\n"),
            ErrorCode::kBadToken);
}

TEST(ParseCaseCsv, MalformedRows) {
  EXPECT_EQ(parse_error(std::string(kHeader) + "A,won\n"), ErrorCode::kMalformedCsv);
  EXPECT_EQ(parse_error(std::string(kHeader) + "\"A,won,yes,no,no,failed,yes,NSW,L,-,-,\n"),
            ErrorCode::kMalformedCsv);
}

CaseRecord random_record(std::mt19937_64& rng) {
  auto pick = [&](int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng); };
  static const char* kIds[] = {"Vairy [2005] HCA 62", "A, \"quoted\" name", "Plain", "x"};
  static const char* kNotes[] = {"", "multi\nline", "comma, here", "He said \"no\"", "simple"};
  static const char* kJur[] = {"NSW", "VIC", "QLD", "NT", "SA"};
  CaseRecord r;
  r.case_id = kIds[pick(4)];
  r.outcome = static_cast<Outcome>(pick(2));
  r.duty_established = static_cast<Finding>(pick(3));
  r.duty_breached = static_cast<Finding>(pick(3));
  r.soc_breached = static_cast<Finding>(pick(3));
  r.butfor = static_cast<ButFor>(pick(3));
  r.ameliorated = static_cast<Finding>(pick(3));
  r.jurisdiction = kJur[pick(5)];
  r.authority_level = static_cast<AuthorityLevel>(pick(3));
  r.risk_exists = static_cast<Finding>(pick(3));
  r.knowledge = static_cast<Finding>(pick(3));
  r.notes = kNotes[pick(5)];
  return r;
}

TEST(CaseCsvProperty, SerializeThenParseIsIdentity) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    Dataset ds;
    const int n = trial % 17;
    for (int i = 0; i < n; ++i) ds.records.push_back(random_record(rng));
    EXPECT_EQ(parse_case_csv(to_case_csv(ds)), ds) << to_case_csv(ds);
  }
}

TEST(SummarizeProperty, EveryGroupTalliesToRecordCount) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    Dataset ds;
    for (int i = 0; i < trial % 23; ++i) ds.records.push_back(random_record(rng));
    const TotalsSummary t = summarize(ds);
    const int n = static_cast<int>(ds.size());
    EXPECT_EQ(t.records, ds.size());
    EXPECT_EQ(t.won + t.lost, n);
    for (const auto* g : {&t.duty_established, &t.duty_breached, &t.soc_breached, &t.ameliorated}) {
      EXPECT_EQ(g->yes + g->no, n);
    }
    EXPECT_EQ(t.butfor_succeeded + t.butfor_failed + t.butfor_not_considered, n);
    int jur = 0;
    for (const auto& [code, c] : t.jurisdiction) jur += c;
    EXPECT_EQ(jur, n);
    EXPECT_EQ(t.authority_local + t.authority_state + t.authority_federal, n);
  }
}

TEST(Summarize, UnknownsFollowTheAuditConvention) {
  Dataset ds;
  CaseRecord r;
  r.case_id = "X";
  r.jurisdiction = "SA";
  ds.records.push_back(r);  // every finding unknown
  const TotalsSummary t = summarize(ds);
  EXPECT_EQ(t.duty_breached, (YesNoTally{0, 1}));
  EXPECT_EQ(t.soc_breached, (YesNoTally{0, 1}));
  EXPECT_EQ(t.butfor_not_considered, 1);
  EXPECT_EQ(format_summary(t).find("outcome: won=0 lost=1\n") != std::string::npos, true);
}

}  // namespace
}  // namespace verdict::data
