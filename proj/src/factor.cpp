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

#include "factor.hpp"

#include <algorithm>
#include <cassert>

namespace verdict::bn::detail {
namespace {

// Stride of each variable of `target` scope inside `source`, 0 if absent.
std::vector<std::size_t> strides_within(const std::vector<std::size_t>& target,
                                        const std::vector<std::size_t>& source,
                                        const std::vector<std::size_t>& source_cards) {
  std::vector<std::size_t> source_strides(source.size());
  std::size_t stride = 1;
  for (std::size_t i = source.size(); i-- > 0;) {
    source_strides[i] = stride;
    stride *= source_cards[i];
  }
  std::vector<std::size_t> out(target.size(), 0);
  for (std::size_t i = 0; i < target.size(); ++i) {
    auto it = std::lower_bound(source.begin(), source.end(), target[i]);
    if (it != source.end() && *it == target[i]) {
      out[i] = source_strides[static_cast<std::size_t>(it - source.begin())];
    }
  }
  return out;
}

std::size_t table_size(const std::vector<std::size_t>& cards) {
  std::size_t n = 1;
  for (std::size_t c : cards) n *= c;
  return n;
}

}  // namespace

Factor::Factor(std::vector<std::size_t> scope, std::vector<std::size_t> cards,
               std::vector<double> values)
    : scope_(std::move(scope)), cards_(std::move(cards)), values_(std::move(values)) {
  assert(std::is_sorted(scope_.begin(), scope_.end()));
  assert(scope_.size() == cards_.size());
  assert(values_.size() == table_size(cards_));
}

Factor Factor::from_cpt(const Network& net, std::size_t variable, const Observation& obs) {
  std::vector<std::size_t> family(net.parents(variable).begin(), net.parents(variable).end());
  family.push_back(variable);

  std::vector<std::size_t> scope;
  for (std::size_t v : family) {
    if (!obs[v]) scope.push_back(v);
  }
  std::sort(scope.begin(), scope.end());
  std::vector<std::size_t> cards;
  for (std::size_t v : scope) cards.push_back(net.variable(v).states.size());

  const Cpt& cpt = net.cpt(variable);
  std::vector<std::size_t> states(net.size(), 0);
  for (std::size_t v : family) {
    if (obs[v]) states[v] = *obs[v];
  }
  std::vector<double> values(table_size(cards));
  for (std::size_t flat = 0; flat < values.size(); ++flat) {
    std::size_t rest = flat;
    for (std::size_t i = scope.size(); i-- > 0;) {
      states[scope[i]] = rest % cards[i];
      rest /= cards[i];
    }
    values[flat] = cpt.rows[net.row_index(variable, states)][states[variable]];
  }
  return Factor(std::move(scope), std::move(cards), std::move(values));
}

bool Factor::contains(std::size_t variable) const {
  return std::binary_search(scope_.begin(), scope_.end(), variable);
}

Factor Factor::multiply(const Factor& other) const {
  std::vector<std::size_t> scope;
  std::set_union(scope_.begin(), scope_.end(), other.scope_.begin(), other.scope_.end(),
                 std::back_inserter(scope));
  std::vector<std::size_t> cards(scope.size());
  for (std::size_t i = 0; i < scope.size(); ++i) {
    auto it = std::lower_bound(scope_.begin(), scope_.end(), scope[i]);
    if (it != scope_.end() && *it == scope[i]) {
      cards[i] = cards_[static_cast<std::size_t>(it - scope_.begin())];
    } else {
      auto jt = std::lower_bound(other.scope_.begin(), other.scope_.end(), scope[i]);
      cards[i] = other.cards_[static_cast<std::size_t>(jt - other.scope_.begin())];
    }
  }
  const auto sa = strides_within(scope, scope_, cards_);
  const auto sb = strides_within(scope, other.scope_, other.cards_);

  std::vector<double> values(table_size(cards));
  std::vector<std::size_t> counter(scope.size(), 0);
  std::size_t ia = 0;
  std::size_t ib = 0;
  for (std::size_t flat = 0; flat < values.size(); ++flat) {
    values[flat] = values_[ia] * other.values_[ib];
    // Odometer increment, last position fastest.
    for (std::size_t i = scope.size(); i-- > 0;) {
      if (++counter[i] < cards[i]) {
        ia += sa[i];
        ib += sb[i];
        break;
      }
      ia -= sa[i] * (cards[i] - 1);
      ib -= sb[i] * (cards[i] - 1);
      counter[i] = 0;
    }
  }
  return Factor(std::move(scope), std::move(cards), std::move(values));
}

Factor Factor::sum_out(std::size_t variable) const {
  auto it = std::lower_bound(scope_.begin(), scope_.end(), variable);
  if (it == scope_.end() || *it != variable) return *this;
  const auto pos = static_cast<std::size_t>(it - scope_.begin());

  std::vector<std::size_t> scope = scope_;
  std::vector<std::size_t> cards = cards_;
  scope.erase(scope.begin() + static_cast<std::ptrdiff_t>(pos));
  cards.erase(cards.begin() + static_cast<std::ptrdiff_t>(pos));

  std::size_t inner = 1;
  for (std::size_t i = pos + 1; i < cards_.size(); ++i) inner *= cards_[i];
  const std::size_t card = cards_[pos];
  const std::size_t outer = values_.size() / (inner * card);

  std::vector<double> values(outer * inner, 0.0);
  for (std::size_t o = 0; o < outer; ++o) {
    for (std::size_t s = 0; s < card; ++s) {
      for (std::size_t n = 0; n < inner; ++n) {
        values[o * inner + n] += values_[(o * card + s) * inner + n];
      }
    }
  }
  return Factor(std::move(scope), std::move(cards), std::move(values));
}

}  // namespace verdict::bn::detail
