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
#include <vector>

#include "verdict/network.hpp"

namespace verdict::bn::detail {

// A table over a set of network variables. Scope is kept sorted by variable
// index; values are row-major over the scope (last variable fastest).
class Factor {
 public:
  // The constant factor 1 with empty scope.
  Factor() : values_{1.0} {}
  Factor(std::vector<std::size_t> scope, std::vector<std::size_t> cards,
         std::vector<double> values);

  // CPT of `variable` restricted to the observed states in `obs`.
  static Factor from_cpt(const Network& net, std::size_t variable, const Observation& obs);

  const std::vector<std::size_t>& scope() const noexcept { return scope_; }
  const std::vector<std::size_t>& cards() const noexcept { return cards_; }
  const std::vector<double>& values() const noexcept { return values_; }

  bool contains(std::size_t variable) const;

  Factor multiply(const Factor& other) const;
  Factor sum_out(std::size_t variable) const;

 private:
  std::vector<std::size_t> scope_;
  std::vector<std::size_t> cards_;
  std::vector<double> values_;
};

}  // namespace verdict::bn::detail
