// Copyright 2026 The Authors.
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

#ifndef SUBSTREAM_TESTS_TEST_SUPPORT_HPP_
#define SUBSTREAM_TESTS_TEST_SUPPORT_HPP_

#include <map>
#include <set>
#include <vector>

#include "substream/formats.hpp"
#include "substream/generators.hpp"
#include "substream/independent_set.hpp"
#include "substream/oracle.hpp"

namespace substream::testing {

struct EdgeSpec {
  int u;
  int v;
  double w = 1.0;
};

// Graph instance with ids 1..m in the given stream order.
inline Instance make_graph(int n, const std::vector<EdgeSpec>& edges) {
  std::vector<Element> elements;
  int id = 1;
  for (const auto& spec : edges) {
    Element e;
    e.id = id++;
    e.vertices = {spec.u, spec.v};
    e.given_weight = spec.w;
    elements.push_back(std::move(e));
  }
  return Instance(InstanceKind::graph, n, 2, std::move(elements));
}

inline ValueOracle modular_oracle(const Instance& instance) {
  return make_oracle(modular_from_given_weights(instance), instance);
}

// The path a-b-c-d with stream weights 1, 3, 1: the canonical tiny case
// whose optimum matching is the middle edge alone.
inline Instance make_path_131() {
  return make_graph(4, {{1, 2, 1.0}, {2, 3, 3.0}, {3, 4, 1.0}});
}

// Hypergraph instance with ids 1..m.
inline Instance make_hypergraph(int n, int p,
                                const std::vector<std::vector<int>>& edges) {
  std::vector<Element> elements;
  int id = 1;
  for (const auto& vertices : edges) {
    Element e;
    e.id = id++;
    e.vertices = vertices;
    elements.push_back(std::move(e));
  }
  return Instance(InstanceKind::hypergraph, n, p, std::move(elements));
}

// Abstract matroid-intersection instance with ids 1..m.
inline Instance make_matroid_instance(int bound, std::size_t m,
                                      std::vector<PartitionMatroid> matroids) {
  std::vector<Element> elements;
  for (std::size_t i = 0; i < m; ++i) {
    Element e;
    e.id = static_cast<int>(i) + 1;
    elements.push_back(std::move(e));
  }
  const int p = static_cast<int>(matroids.size());
  return Instance(InstanceKind::matroid_intersection, bound, p,
                  std::move(elements), std::move(matroids));
}

// Exhaustive diminishing-returns / monotonicity / zero-at-empty audit over
// every (Y subset of X, x outside X) triple; feasible up to ~12 elements.
// Returns true when the oracle behaves like a proper monotone submodular
// function on this ground set.
inline bool exhaustive_submodularity_audit(ValueOracle& oracle,
                                           const std::vector<int>& ids,
                                           double tol = 1e-9) {
  const std::size_t m = ids.size();
  const std::size_t masks = std::size_t{1} << m;
  std::vector<double> value(masks, 0.0);
  for (std::size_t mask = 0; mask < masks; ++mask) {
    std::vector<int> subset;
    for (std::size_t i = 0; i < m; ++i) {
      if (mask & (std::size_t{1} << i)) subset.push_back(ids[i]);
    }
    value[mask] = oracle.value(subset);
  }
  if (value[0] != 0.0) return false;
  for (std::size_t mask = 0; mask < masks; ++mask) {
    if (value[mask] < -tol) return false;
    for (std::size_t i = 0; i < m; ++i) {
      std::size_t bit = std::size_t{1} << i;
      if (mask & bit) continue;
      // monotone: adding never decreases
      if (value[mask | bit] < value[mask] - tol) return false;
    }
  }
  // diminishing returns across every nested pair
  for (std::size_t big = 0; big < masks; ++big) {
    for (std::size_t small = big;; small = (small - 1) & big) {
      for (std::size_t i = 0; i < m; ++i) {
        std::size_t bit = std::size_t{1} << i;
        if (big & bit) continue;
        double gain_big = value[big | bit] - value[big];
        double gain_small = value[small | bit] - value[small];
        if (gain_big > gain_small + tol) return false;
      }
      if (small == 0) break;
    }
  }
  return true;
}

// Curvature straight from its definition: the largest shortfall of any
// marginal against the singleton value, over every (set, element) pair.
inline double curvature_bruteforce(ValueOracle& oracle,
                                   const std::vector<int>& ids) {
  const std::size_t m = ids.size();
  const std::size_t masks = std::size_t{1} << m;
  std::vector<double> value(masks, 0.0);
  for (std::size_t mask = 0; mask < masks; ++mask) {
    std::vector<int> subset;
    for (std::size_t i = 0; i < m; ++i) {
      if (mask & (std::size_t{1} << i)) subset.push_back(ids[i]);
    }
    value[mask] = oracle.value(subset);
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    std::size_t bit = std::size_t{1} << i;
    double singleton = value[bit];
    if (singleton <= 0.0) continue;
    for (std::size_t mask = 0; mask < masks; ++mask) {
      if (mask & bit) continue;
      double gain = value[mask | bit] - value[mask];
      double c = 1.0 - gain / singleton;
      worst = std::max(worst, std::min(1.0, std::max(0.0, c)));
    }
  }
  return worst;
}

// Random problem drawers shared by property tests and the acceptance suite.
inline ProblemInput random_graph_problem(Rng& rng, OracleFamilyKind family,
                                         std::uint64_t seed) {
  GenSpec spec;
  spec.kind = InstanceKind::graph;
  spec.n = rng.uniform(4, 12);
  int max_m = spec.n * (spec.n - 1) / 2;
  spec.m = rng.uniform(1, std::min(20, max_m));
  spec.family = family;
  spec.seed = seed;
  return generate_instance(spec);
}

inline ProblemInput random_hypergraph_problem(Rng& rng, int p,
                                              OracleFamilyKind family,
                                              std::uint64_t seed) {
  GenSpec spec;
  spec.kind = InstanceKind::hypergraph;
  spec.n = rng.uniform(6, 12);  // >= 6 so 16 distinct hyperedges always fit
  spec.m = rng.uniform(1, 16);
  spec.p = p;
  spec.family = family;
  spec.seed = seed;
  return generate_instance(spec);
}

inline ProblemInput random_matroid_problem(Rng& rng, int p,
                                           OracleFamilyKind family,
                                           std::uint64_t seed) {
  GenSpec spec;
  spec.kind = InstanceKind::matroid_intersection;
  spec.m = rng.uniform(3, 16);
  spec.p = p;
  spec.family = family;
  spec.seed = seed;
  return generate_instance(spec);
}

}  // namespace substream::testing

#endif  // SUBSTREAM_TESTS_TEST_SUPPORT_HPP_
