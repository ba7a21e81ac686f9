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

#include "verdict/inference.hpp"

#include <algorithm>
#include <set>

#include "factor.hpp"
#include "verdict/error.hpp"

namespace verdict::bn {
namespace {

using detail::Factor;

std::vector<std::size_t> resolve_query(const Network& net, std::span<const std::string> query) {
  std::vector<std::size_t> out;
  out.reserve(query.size());
  for (const auto& id : query) out.push_back(net.index_of(id));
  return out;
}

std::vector<std::size_t> order_indices(const Network& net, const Observation& obs,
                                       const std::vector<bool>& keep) {
  const std::size_t n = net.size();
  std::vector<std::set<std::size_t>> adj(n);
  auto link = [&](std::size_t a, std::size_t b) {
    if (a == b || obs[a] || obs[b]) return;
    adj[a].insert(b);
    adj[b].insert(a);
  };
  // Moralize: each family becomes a clique.
  for (std::size_t v = 0; v < n; ++v) {
    auto parents = net.parents(v);
    for (std::size_t i = 0; i < parents.size(); ++i) {
      link(v, parents[i]);
      for (std::size_t j = i + 1; j < parents.size(); ++j) link(parents[i], parents[j]);
    }
  }

  std::vector<bool> pending(n, false);
  std::size_t remaining = 0;
  for (std::size_t v = 0; v < n; ++v) {
    if (!obs[v] && !keep[v]) {
      pending[v] = true;
      ++remaining;
    }
  }

  std::vector<std::size_t> order;
  order.reserve(remaining);
  while (remaining-- > 0) {
    std::size_t best = n;
    for (std::size_t v = 0; v < n; ++v) {
      if (!pending[v]) continue;
      if (best == n || adj[v].size() < adj[best].size() ||
          (adj[v].size() == adj[best].size() &&
           net.variable(v).id < net.variable(best).id)) {
        best = v;
      }
    }
    const std::vector<std::size_t> neighbours(adj[best].begin(), adj[best].end());
    for (std::size_t i = 0; i < neighbours.size(); ++i) {
      adj[neighbours[i]].erase(best);
      for (std::size_t j = i + 1; j < neighbours.size(); ++j) {
        adj[neighbours[i]].insert(neighbours[j]);
        adj[neighbours[j]].insert(neighbours[i]);
      }
    }
    adj[best].clear();
    pending[best] = false;
    order.push_back(best);
  }
  return order;
}

// Runs elimination keeping only `kept`; returns the product of what is left.
Factor eliminate(const Network& net, const Observation& obs, const std::vector<bool>& kept) {
  std::vector<Factor> factors;
  factors.reserve(net.size());
  for (std::size_t v = 0; v < net.size(); ++v) factors.push_back(Factor::from_cpt(net, v, obs));

  for (std::size_t v : order_indices(net, obs, kept)) {
    Factor product;
    std::vector<Factor> rest;
    rest.reserve(factors.size());
    for (auto& f : factors) {
      if (f.contains(v)) {
        product = product.multiply(f);
      } else {
        rest.push_back(std::move(f));
      }
    }
    rest.push_back(product.sum_out(v));
    factors = std::move(rest);
  }

  Factor result;
  for (const auto& f : factors) result = result.multiply(f);
  return result;
}

double total(const std::vector<double>& values) {
  double sum = 0.0;
  for (double v : values) sum += v;
  return sum;
}

}  // namespace

const Posterior* InferenceResult::find(std::string_view variable) const {
  for (const auto& p : posteriors) {
    if (p.variable == variable) return &p;
  }
  return nullptr;
}

double joint_probability(const Network& net, const Evidence& full_assignment) {
  const Observation obs = net.resolve(full_assignment);
  std::vector<std::size_t> states(net.size());
  for (std::size_t v = 0; v < net.size(); ++v) {
    if (!obs[v]) {
      throw Error(ErrorCode::kIncompleteAssignment,
                  "assignment does not cover variable '" + net.variable(v).id + "'");
    }
    states[v] = *obs[v];
  }
  double p = 1.0;
  for (std::size_t v = 0; v < net.size(); ++v) {
    p *= net.cpt(v).rows[net.row_index(v, states)][states[v]];
  }
  return p;
}

InferenceResult enumerate_posterior(const Network& net, const Evidence& evidence,
                                    std::span<const std::string> query) {
  const Observation obs = net.resolve(evidence);
  const auto query_idx = resolve_query(net, query);

  std::vector<std::size_t> free_vars;
  std::vector<std::size_t> states(net.size(), 0);
  for (std::size_t v = 0; v < net.size(); ++v) {
    if (obs[v]) {
      states[v] = *obs[v];
    } else {
      free_vars.push_back(v);
    }
  }

  std::vector<std::vector<double>> mass(query_idx.size());
  for (std::size_t q = 0; q < query_idx.size(); ++q) {
    mass[q].assign(net.variable(query_idx[q]).states.size(), 0.0);
  }

  double evidence_mass = 0.0;
  while (true) {
    double p = 1.0;
    for (std::size_t v = 0; v < net.size(); ++v) {
      p *= net.cpt(v).rows[net.row_index(v, states)][states[v]];
    }
    evidence_mass += p;
    for (std::size_t q = 0; q < query_idx.size(); ++q) mass[q][states[query_idx[q]]] += p;

    std::size_t i = free_vars.size();
    while (i > 0) {
      const std::size_t v = free_vars[i - 1];
      if (++states[v] < net.variable(v).states.size()) break;
      states[v] = 0;
      --i;
    }
    if (i == 0) break;
  }

  InferenceResult result;
  result.evidence_probability = evidence_mass;
  if (!(evidence_mass > 0.0)) {
    result.zero_evidence = true;
    return result;
  }
  for (std::size_t q = 0; q < query_idx.size(); ++q) {
    const double z = total(mass[q]);
    for (double& m : mass[q]) m /= z;
    result.posteriors.push_back({net.variable(query_idx[q]).id, std::move(mass[q])});
  }
  return result;
}

InferenceResult infer(const Network& net, const Evidence& evidence,
                      std::span<const std::string> query) {
  const Observation obs = net.resolve(evidence);
  const auto query_idx = resolve_query(net, query);

  InferenceResult result;
  result.evidence_probability = total(eliminate(net, obs, std::vector<bool>(net.size())).values());
  if (!(result.evidence_probability > 0.0)) {
    result.zero_evidence = true;
    return result;
  }

  for (std::size_t q : query_idx) {
    std::vector<double> dist(net.variable(q).states.size(), 0.0);
    if (obs[q]) {
      dist[*obs[q]] = 1.0;
    } else {
      std::vector<bool> kept(net.size(), false);
      kept[q] = true;
      dist = eliminate(net, obs, kept).values();
      const double z = total(dist);
      for (double& d : dist) d /= z;
    }
    result.posteriors.push_back({net.variable(q).id, std::move(dist)});
  }
  return result;
}

double probability_of_evidence(const Network& net, const Evidence& evidence) {
  const Observation obs = net.resolve(evidence);
  return total(eliminate(net, obs, std::vector<bool>(net.size())).values());
}

std::vector<std::string> elimination_order(const Network& net, const Evidence& evidence,
                                           std::span<const std::string> query) {
  const Observation obs = net.resolve(evidence);
  std::vector<bool> kept(net.size(), false);
  for (std::size_t q : resolve_query(net, query)) kept[q] = true;
  std::vector<std::string> out;
  for (std::size_t v : order_indices(net, obs, kept)) out.push_back(net.variable(v).id);
  return out;
}

std::vector<std::string> unobserved_variables(const Network& net, const Evidence& evidence) {
  std::vector<std::string> out;
  for (const auto& v : net.variables()) {
    if (!evidence.contains(v.id)) out.push_back(v.id);
  }
  return out;
}

std::vector<std::string> all_variables(const Network& net) {
  std::vector<std::string> out;
  for (const auto& v : net.variables()) out.push_back(v.id);
  return out;
}

}  // namespace verdict::bn
