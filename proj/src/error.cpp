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

#include "verdict/error.hpp"

namespace verdict {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidVariable: return "invalid_variable";
    case ErrorCode::kDuplicateVariable: return "duplicate_variable";
    case ErrorCode::kUnknownVariable: return "unknown_variable";
    case ErrorCode::kUnknownParent: return "unknown_parent";
    case ErrorCode::kMissingCpt: return "missing_cpt";
    case ErrorCode::kCycleDetected: return "cycle_detected";
    case ErrorCode::kBadRow: return "bad_row";
    case ErrorCode::kNonBinaryVariable: return "non_binary_variable";
    case ErrorCode::kUnknownState: return "unknown_state";
    case ErrorCode::kIncompleteAssignment: return "incomplete_assignment";
    case ErrorCode::kBadModelJson: return "bad_model_json";
    case ErrorCode::kBadHeader: return "bad_header";
    case ErrorCode::kBadToken: return "bad_token";
    case ErrorCode::kMalformedCsv: return "malformed_csv";
    case ErrorCode::kUnmappedVariable: return "unmapped_variable";
    case ErrorCode::kInvalidAlpha: return "invalid_alpha";
    case ErrorCode::kUnknownScenario: return "unknown_scenario";
    case ErrorCode::kIo: return "io";
  }
  return "unknown";
}

}  // namespace verdict
