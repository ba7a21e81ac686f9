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
#include <vector>

#include "verdict/case_data.hpp"
#include "verdict/network.hpp"

namespace verdict::learning {

// Reads one model variable off a case record: the state index, or nullopt
// when the record leaves it unobserved.
using FieldMapping = std::function<std::optional<std::size_t>(const data::CaseRecord&)>;
using SchemaMapping = std::map<std::string, FieldMapping, std::less<>>;

struct LearningConfig {
  // Dirichlet pseudo-count added to every learnable cell.
  double alpha = 1.0;
};

// A fixed structure plus the mapping from record fields to its variables.
// Learnable CPT cells carry placeholder values; structural cells are final.
struct Skeleton {
  bn::Network network;
  SchemaMapping mapping;
};

struct FamilyCounts {
  std::string child;
  std::vector<std::string> parents;
  // counts[row][state], rows ordered like the child's CPT rows for `parents`.
  std::vector<std::vector<std::size_t>> counts;
  // Records missing the child or any parent.
  std::size_t skipped = 0;

  std::size_t counted() const;
};

// Complete-case tallies for one family. Throws Error(kUnmappedVariable) if
// the child or a parent has no mapping, Error(kUnknownVariable) if it is not
// in `net`.
FamilyCounts family_counts(const data::Dataset& ds, const bn::Network& net,
                           std::string_view child, std::span<const std::string> parents,
                           const SchemaMapping& mapping);

// Fills every learnable cell with (count + alpha) / (n + alpha * k), where n
// is the row's complete-case count over its k learnable cells, scaled by the
// probability mass the row's structural cells leave free. A row with no
// observations and alpha = 0 becomes uniform over its learnable cells.
// Throws Error(kInvalidAlpha) for negative or non-finite alpha.
bn::Network learn_parameters(const data::Dataset& ds, const Skeleton& skeleton,
                             const LearningConfig& cfg);

}  // namespace verdict::learning
