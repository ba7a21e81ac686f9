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
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace verdict::data {

enum class Outcome { kWon, kLost };
enum class Finding { kYes, kNo, kUnknown };
enum class ButFor { kSucceeded, kFailed, kUnknown };
// Level of government of the defendant authority: local, state, federal.
enum class AuthorityLevel { kLocal, kState, kFederal };

// One audited judgment (one row per case/defendant pairing).
struct CaseRecord {
  std::string case_id;
  Outcome outcome = Outcome::kLost;
  Finding duty_established = Finding::kUnknown;
  Finding duty_breached = Finding::kUnknown;
  Finding soc_breached = Finding::kUnknown;
  ButFor butfor = ButFor::kUnknown;
  Finding ameliorated = Finding::kUnknown;
  std::string jurisdiction;
  AuthorityLevel authority_level = AuthorityLevel::kLocal;
  Finding risk_exists = Finding::kUnknown;
  Finding knowledge = Finding::kUnknown;
  std::string notes;

  friend bool operator==(const CaseRecord&, const CaseRecord&) = default;
};

struct Dataset {
  std::vector<CaseRecord> records;

  std::size_t size() const noexcept { return records.size(); }
  friend bool operator==(const Dataset&, const Dataset&) = default;
};

// Column names, in the order written by to_case_csv().
inline constexpr std::string_view kCaseColumns[] = {
    "case_id",     "outcome",      "duty_established", "duty_breached",
    "soc_breached", "butfor",      "ameliorated",      "jurisdiction",
    "authority_level", "risk_exists", "knowledge",     "notes"};

// Parses the case-audit CSV (RFC 4180 quoting, header row required, columns
// matched by name). Cells are trimmed and matched case-insensitively;
// "-", "", "na", "not cons" and "not considered" read as unknown.
// Throws Error(kBadHeader), Error(kBadToken) with row and column, or
// Error(kMalformedCsv).
Dataset parse_case_csv(std::string_view text);

// Writes the canonical form: lowercase tokens, unknown as "-", quoting only
// where needed.
std::string to_case_csv(const Dataset& ds);

struct YesNoTally {
  int yes = 0;
  int no = 0;
  friend bool operator==(const YesNoTally&, const YesNoTally&) = default;
};

// Mirrors the audit's TOTALS row. Unknown findings are tallied under "no"
// and an unknown but-for result under "not considered", as the published
// table does.
struct TotalsSummary {
  std::size_t records = 0;
  int won = 0;
  int lost = 0;
  YesNoTally duty_established;
  YesNoTally duty_breached;
  YesNoTally soc_breached;
  int butfor_succeeded = 0;
  int butfor_failed = 0;
  int butfor_not_considered = 0;
  YesNoTally ameliorated;
  std::map<std::string, int> jurisdiction;
  int authority_local = 0;
  int authority_state = 0;
  int authority_federal = 0;

  friend bool operator==(const TotalsSummary&, const TotalsSummary&) = default;
};

TotalsSummary summarize(const Dataset& ds);

// One "group: key=count ..." line per tally group, e.g.
// "outcome: won=3 lost=12".
std::string format_summary(const TotalsSummary& summary);

std::string_view to_string(Outcome v);
std::string_view to_string(Finding v);
std::string_view to_string(ButFor v);
std::string_view to_string(AuthorityLevel v);

}  // namespace verdict::data
