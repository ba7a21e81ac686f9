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

#include "verdict/learning.hpp"

#include <cmath>

#include "verdict/error.hpp"

namespace verdict::learning {

std::size_t FamilyCounts::counted() const {
  std::size_t n = 0;
  for (const auto& row : counts) {
    for (std::size_t c : row) n += c;
  }
  return n;
}

FamilyCounts family_counts(const data::Dataset& ds, const bn::Network& net,
                           std::string_view child, std::span<const std::string> parents,
                           const SchemaMapping& mapping) {
  auto mapper = [&](std::string_view id) -> const FieldMapping& {
    net.index_of(id);
    auto it = mapping.find(id);
    if (it == mapping.end()) {
      throw Error(ErrorCode::kUnmappedVariable,
                  "variable '" + std::string(id) + "' has no record-field mapping");
    }
    return it->second;
  };

  const FieldMapping& child_map = mapper(child);
  std::vector<const FieldMapping*> parent_maps;
  std::vector<std::size_t> parent_cards;
  std::size_t rows = 1;
  for (const auto& p : parents) {
    parent_maps.push_back(&mapper(p));
    parent_cards.push_back(net.variable(net.index_of(p)).states.size());
    rows *= parent_cards.back();
  }
  const std::size_t child_card = net.variable(net.index_of(child)).states.size();

  FamilyCounts out;
  out.child = std::string(child);
  out.parents.assign(parents.begin(), parents.end());
  out.counts.assign(rows, std::vector<std::size_t>(child_card, 0));

  for (const auto& rec : ds.records) {
    const auto state = child_map(rec);
    bool complete = state.has_value();
    std::size_t row = 0;
    for (std::size_t i = 0; complete && i < parent_maps.size(); ++i) {
      const auto ps = (*parent_maps[i])(rec);
      if (!ps) {
        complete = false;
      } else {
        row = row * parent_cards[i] + *ps;
      }
    }
    if (complete) {
      ++out.counts[row][*state];
    } else {
      ++out.skipped;
    }
  }
  return out;
}

bn::Network learn_parameters(const data::Dataset& ds, const Skeleton& skeleton,
                             const LearningConfig& cfg) {
  if (!std::isfinite(cfg.alpha) || cfg.alpha < 0.0) {
    throw Error(ErrorCode::kInvalidAlpha, "alpha must be a finite number >= 0");
  }
  const bn::Network& net = skeleton.network;

  std::vector<bn::Cpt> cpts = net.cpts();
  for (auto& cpt : cpts) {
    bool any_learnable = false;
    for (std::size_t r = 0; r < cpt.rows.size() && !any_learnable; ++r) {
      for (std::size_t s = 0; s < cpt.rows[r].size(); ++s) {
        if (!cpt.is_structural(r, s)) any_learnable = true;
      }
    }
    if (!any_learnable) continue;

    const FamilyCounts fc = family_counts(ds, net, cpt.child, cpt.parents, skeleton.mapping);
    for (std::size_t r = 0; r < cpt.rows.size(); ++r) {
      auto& row = cpt.rows[r];
      double fixed_mass = 0.0;
      double observed = 0.0;
      std::size_t learnable = 0;
      for (std::size_t s = 0; s < row.size(); ++s) {
        if (cpt.is_structural(r, s)) {
          fixed_mass += row[s];
        } else {
          observed += static_cast<double>(fc.counts[r][s]);
          ++learnable;
        }
      }
      if (learnable == 0) continue;
      const double free_mass = fixed_mass == 0.0 ? 1.0 : std::max(0.0, 1.0 - fixed_mass);
      const double denom = observed + cfg.alpha * static_cast<double>(learnable);
      for (std::size_t s = 0; s < row.size(); ++s) {
        if (cpt.is_structural(r, s)) continue;
        if (denom == 0.0) {
          row[s] = free_mass / static_cast<double>(learnable);
        } else {
          row[s] = free_mass * ((static_cast<double>(fc.counts[r][s]) + cfg.alpha) / denom);
        }
      }
    }
  }
  return bn::build_network(net.variables(), std::move(cpts));
}

}  // namespace verdict::learning
