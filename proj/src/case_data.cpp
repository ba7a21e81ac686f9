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

#include "verdict/case_data.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <optional>
#include <sstream>

#include "verdict/error.hpp"

namespace verdict::data {
namespace {

constexpr std::size_t kColumnCount = std::size(kCaseColumns);

std::string_view trim(std::string_view s) {
  const auto is_space = [](unsigned char c) { return std::isspace(c) != 0; };
  while (!s.empty() && is_space(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && is_space(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

bool is_unknown_token(const std::string& t) {
  return t == "-" || t.empty() || t == "na" || t == "not cons" || t == "not considered";
}

// Splits RFC 4180 text into records of raw (unquoted, untrimmed) fields.
// Blank lines are skipped.
std::vector<std::vector<std::string>> split_csv(std::string_view text) {
  std::vector<std::vector<std::string>> records;
  std::vector<std::string> fields;
  std::string field;
  bool in_quotes = false;
  bool quoted_field = false;
  std::size_t line = 1;

  auto end_record = [&] {
    fields.push_back(std::move(field));
    field.clear();
    const bool blank = fields.size() == 1 && !quoted_field && trim(fields[0]).empty();
    if (!blank) records.push_back(std::move(fields));
    fields.clear();
    quoted_field = false;
  };

  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field.push_back('"');
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        if (c == '\n') ++line;
        field.push_back(c);
      }
      continue;
    }
    switch (c) {
      case '"':
        if (!trim(field).empty()) {
          throw Error(ErrorCode::kMalformedCsv,
                      "line " + std::to_string(line) + ": quote inside unquoted field");
        }
        field.clear();
        in_quotes = true;
        quoted_field = true;
        break;
      case ',':
        fields.push_back(std::move(field));
        field.clear();
        break;
      case '\r':
        break;
      case '\n':
        ++line;
        end_record();
        break;
      default:
        field.push_back(c);
    }
  }
  if (in_quotes) throw Error(ErrorCode::kMalformedCsv, "unterminated quoted field");
  if (!field.empty() || !fields.empty() || quoted_field) end_record();
  return records;
}

class RowReader {
 public:
  RowReader(const std::vector<std::string>& cells, const std::array<std::size_t, kColumnCount>& cols,
            std::size_t row)
      : cells_(cells), cols_(cols), row_(row) {}

  std::string text(std::size_t column) const {
    return std::string(trim(cells_[cols_[column]]));
  }

  [[noreturn]] void bad(std::size_t column, const std::string& raw) const {
    throw Error(ErrorCode::kBadToken, "row " + std::to_string(row_) + ", column '" +
                                          std::string(kCaseColumns[column]) +
                                          "': cannot map '" + raw + "'");
  }

  Finding finding(std::size_t column) const {
    const std::string t = lower(text(column));
    if (t == "yes") return Finding::kYes;
    if (t == "no") return Finding::kNo;
    if (is_unknown_token(t)) return Finding::kUnknown;
    bad(column, text(column));
  }

  ButFor butfor(std::size_t column) const {
    const std::string t = lower(text(column));
    if (t == "succeeded") return ButFor::kSucceeded;
    if (t == "failed") return ButFor::kFailed;
    if (is_unknown_token(t)) return ButFor::kUnknown;
    bad(column, text(column));
  }

  Outcome outcome(std::size_t column) const {
    const std::string t = lower(text(column));
    if (t == "won") return Outcome::kWon;
    if (t == "lost") return Outcome::kLost;
    bad(column, text(column));
  }

  AuthorityLevel authority(std::size_t column) const {
    const std::string t = lower(text(column));
    if (t == "l") return AuthorityLevel::kLocal;
    if (t == "s") return AuthorityLevel::kState;
    if (t == "f") return AuthorityLevel::kFederal;
    bad(column, text(column));
  }

  std::string required(std::size_t column) const {
    std::string t = text(column);
    if (t.empty()) bad(column, t);
    return t;
  }

 private:
  const std::vector<std::string>& cells_;
  const std::array<std::size_t, kColumnCount>& cols_;
  std::size_t row_;
};

std::string quote_if_needed(std::string_view s) {
  const bool needs = s.find_first_of(",\"\r\n") != std::string_view::npos;
  if (!needs) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

}  // namespace

std::string_view to_string(Outcome v) { return v == Outcome::kWon ? "won" : "lost"; }

std::string_view to_string(Finding v) {
  switch (v) {
    case Finding::kYes: return "yes";
    case Finding::kNo: return "no";
    case Finding::kUnknown: return "-";
  }
  return "-";
}

std::string_view to_string(ButFor v) {
  switch (v) {
    case ButFor::kSucceeded: return "succeeded";
    case ButFor::kFailed: return "failed";
    case ButFor::kUnknown: return "-";
  }
  return "-";
}

std::string_view to_string(AuthorityLevel v) {
  switch (v) {
    case AuthorityLevel::kLocal: return "L";
    case AuthorityLevel::kState: return "S";
    case AuthorityLevel::kFederal: return "F";
  }
  return "L";
}

Dataset parse_case_csv(std::string_view text) {
  if (text.starts_with("\xEF\xBB\xBF")) text.remove_prefix(3);
  const auto rows = split_csv(text);
  if (rows.empty()) throw Error(ErrorCode::kBadHeader, "missing header row");

  const auto& header = rows.front();
  std::array<std::size_t, kColumnCount> cols{};
  for (std::size_t c = 0; c < kColumnCount; ++c) {
    auto it = std::find_if(header.begin(), header.end(), [&](const std::string& h) {
      return trim(h) == kCaseColumns[c];
    });
    if (it == header.end()) {
      throw Error(ErrorCode::kBadHeader,
                  "header is missing column '" + std::string(kCaseColumns[c]) + "'");
    }
    cols[c] = static_cast<std::size_t>(it - header.begin());
  }

  Dataset ds;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    if (rows[r].size() != header.size()) {
      throw Error(ErrorCode::kMalformedCsv,
                  "row " + std::to_string(r) + " has " + std::to_string(rows[r].size()) +
                      " fields, header has " + std::to_string(header.size()));
    }
    const RowReader in(rows[r], cols, r);
    CaseRecord rec;
    rec.case_id = in.required(0);
    rec.outcome = in.outcome(1);
    rec.duty_established = in.finding(2);
    rec.duty_breached = in.finding(3);
    rec.soc_breached = in.finding(4);
    rec.butfor = in.butfor(5);
    rec.ameliorated = in.finding(6);
    rec.jurisdiction = in.required(7);
    rec.authority_level = in.authority(8);
    rec.risk_exists = in.finding(9);
    rec.knowledge = in.finding(10);
    rec.notes = in.text(11);
    ds.records.push_back(std::move(rec));
  }
  return ds;
}

std::string to_case_csv(const Dataset& ds) {
  std::ostringstream out;
  for (std::size_t c = 0; c < kColumnCount; ++c) out << (c ? "," : "") << kCaseColumns[c];
  out << '\n';
  for (const auto& r : ds.records) {
    out << quote_if_needed(r.case_id) << ',' << to_string(r.outcome) << ','
        << to_string(r.duty_established) << ',' << to_string(r.duty_breached) << ','
        << to_string(r.soc_breached) << ',' << to_string(r.butfor) << ','
        << to_string(r.ameliorated) << ',' << quote_if_needed(r.jurisdiction) << ','
        << to_string(r.authority_level) << ',' << to_string(r.risk_exists) << ','
        << to_string(r.knowledge) << ',' << quote_if_needed(r.notes) << '\n';
  }
  return out.str();
}

TotalsSummary summarize(const Dataset& ds) {
  TotalsSummary t;
  t.records = ds.size();
  auto tally = [](YesNoTally& into, Finding f) {
    if (f == Finding::kYes) {
      ++into.yes;
    } else {
      ++into.no;
    }
  };
  for (const auto& r : ds.records) {
    (r.outcome == Outcome::kWon ? t.won : t.lost)++;
    tally(t.duty_established, r.duty_established);
    tally(t.duty_breached, r.duty_breached);
    tally(t.soc_breached, r.soc_breached);
    tally(t.ameliorated, r.ameliorated);
    switch (r.butfor) {
      case ButFor::kSucceeded: ++t.butfor_succeeded; break;
      case ButFor::kFailed: ++t.butfor_failed; break;
      case ButFor::kUnknown: ++t.butfor_not_considered; break;
    }
    ++t.jurisdiction[r.jurisdiction];
    switch (r.authority_level) {
      case AuthorityLevel::kLocal: ++t.authority_local; break;
      case AuthorityLevel::kState: ++t.authority_state; break;
      case AuthorityLevel::kFederal: ++t.authority_federal; break;
    }
  }
  return t;
}

std::string format_summary(const TotalsSummary& t) {
  std::ostringstream out;
  auto yes_no = [&](std::string_view name, const YesNoTally& y) {
    out << name << ": yes=" << y.yes << " no=" << y.no << '\n';
  };
  out << "records: " << t.records << '\n';
  out << "outcome: won=" << t.won << " lost=" << t.lost << '\n';
  yes_no("duty_established", t.duty_established);
  yes_no("duty_breached", t.duty_breached);
  yes_no("soc_breached", t.soc_breached);
  out << "butfor: succeeded=" << t.butfor_succeeded << " failed=" << t.butfor_failed
      << " not_considered=" << t.butfor_not_considered << '\n';
  yes_no("ameliorated", t.ameliorated);
  out << "jurisdiction:";
  for (const auto& [code, n] : t.jurisdiction) out << ' ' << code << '=' << n;
  out << '\n';
  out << "authority_level: L=" << t.authority_local << " S=" << t.authority_state
      << " F=" << t.authority_federal << '\n';
  return out.str();
}

}  // namespace verdict::data
