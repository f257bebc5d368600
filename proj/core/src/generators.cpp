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

#include "substream/generators.hpp"

#include <algorithm>
#include <numeric>

#include "substream/errors.hpp"

namespace substream {

namespace {

OracleSpec draw_oracle(Rng& rng, const std::vector<Element>& elements,
                       OracleFamilyKind family, int universe_hint,
                       std::vector<Element>* weight_into) {
  switch (family) {
    case OracleFamilyKind::modular: {
      std::map<int, double> weights;
      for (const auto& e : elements) weights[e.id] = rng.uniform(1, 10);
      if (weight_into) {
        for (auto& e : *weight_into) e.given_weight = weights.at(e.id);
      }
      return OracleSpec::modular(std::move(weights));
    }
    case OracleFamilyKind::coverage: {
      int universe = std::max(4, universe_hint);
      std::map<int, std::vector<int>> covers;
      for (const auto& e : elements) {
        int points = rng.uniform(1, 3);
        std::vector<int> cover;
        for (int k = 0; k < points; ++k) {
          cover.push_back(rng.uniform(1, universe));
        }
        covers[e.id] = std::move(cover);
      }
      return OracleSpec::coverage(std::move(covers));
    }
    case OracleFamilyKind::saturated_additive: {
      std::map<int, double> weights;
      double max_w = 0.0;
      double total = 0.0;
      for (const auto& e : elements) {
        double w = rng.uniform(1, 10);
        weights[e.id] = w;
        max_w = std::max(max_w, w);
        total += w;
      }
      // A cap between the heaviest element and ~70% of the total keeps the
      // saturation active, giving nonzero curvature on most draws.
      int hi = std::max(static_cast<int>(max_w),
                        static_cast<int>(total * 0.7));
      double cap = elements.empty()
                       ? 1.0
                       : rng.uniform(static_cast<int>(max_w), hi);
      return OracleSpec::saturated_additive(std::move(weights), cap);
    }
  }
  throw ParamError("generate: unknown oracle family");
}

ProblemInput generate_graph(const GenSpec& spec) {
  std::vector<std::pair<int, int>> pairs;
  for (int u = 1; u <= spec.n; ++u) {
    for (int v = u + 1; v <= spec.n; ++v) pairs.emplace_back(u, v);
  }
  if (spec.m > static_cast<int>(pairs.size())) {
    throw ParamError("generate: " + std::to_string(spec.m) +
                     " edges exceed the " + std::to_string(pairs.size()) +
                     " possible on " + std::to_string(spec.n) + " vertices");
  }
  Rng rng(spec.seed);
  rng.shuffle(pairs);
  std::vector<Element> elements;
  for (int i = 0; i < spec.m; ++i) {
    Element e;
    e.id = i + 1;
    e.vertices = {pairs[i].first, pairs[i].second};
    elements.push_back(std::move(e));
  }
  OracleSpec oracle =
      draw_oracle(rng, elements, spec.family, spec.n, &elements);
  Instance instance(InstanceKind::graph, spec.n, 2, std::move(elements));
  return ProblemInput{std::move(instance), std::move(oracle)};
}

ProblemInput generate_hypergraph(const GenSpec& spec) {
  if (spec.p < 1) throw ParamError("generate: p must be >= 1");
  Rng rng(spec.seed);
  std::set<std::vector<int>> seen;
  std::vector<Element> elements;
  int attempts = 0;
  while (static_cast<int>(elements.size()) < spec.m) {
    if (++attempts > 200 * spec.m + 200) {
      throw ParamError("generate: cannot place " + std::to_string(spec.m) +
                       " distinct hyperedges on " + std::to_string(spec.n) +
                       " vertices");
    }
    int size = rng.uniform(1, std::min(spec.p, spec.n));
    std::set<int> vertices;
    while (static_cast<int>(vertices.size()) < size) {
      vertices.insert(rng.uniform(1, spec.n));
    }
    std::vector<int> sorted(vertices.begin(), vertices.end());
    if (!seen.insert(sorted).second) continue;
    Element e;
    e.id = static_cast<int>(elements.size()) + 1;
    e.vertices = std::move(sorted);
    elements.push_back(std::move(e));
  }
  OracleSpec oracle =
      draw_oracle(rng, elements, spec.family, spec.n, &elements);
  Instance instance(InstanceKind::hypergraph, spec.n, spec.p,
                    std::move(elements));
  return ProblemInput{std::move(instance), std::move(oracle)};
}

ProblemInput generate_matroid(const GenSpec& spec) {
  if (spec.p < 1) throw ParamError("generate: p must be >= 1");
  if (spec.m < 1) throw ParamError("generate: need at least one element");
  Rng rng(spec.seed);
  std::vector<Element> elements;
  for (int i = 0; i < spec.m; ++i) {
    Element e;
    e.id = i + 1;
    elements.push_back(std::move(e));
  }

  std::vector<PartitionMatroid> matroids;
  int bound = spec.m;
  for (int i = 0; i < spec.p; ++i) {
    int part_count = rng.uniform(2, std::max(2, std::min(5, spec.m)));
    std::vector<std::vector<int>> parts(part_count);
    for (const auto& e : elements) {
      parts[rng.uniform(0, part_count - 1)].push_back(e.id);
    }
    std::vector<int> caps(part_count);
    for (int j = 0; j < part_count; ++j) caps[j] = rng.uniform(1, 2);
    int rank = 0;
    for (int j = 0; j < part_count; ++j) {
      rank += std::min<int>(caps[j], parts[j].size());
    }
    bound = std::min(bound, rank);
    matroids.emplace_back(std::move(parts), std::move(caps));
  }

  OracleSpec oracle =
      draw_oracle(rng, elements, spec.family, spec.m, &elements);
  Instance instance(InstanceKind::matroid_intersection, bound, spec.p,
                    std::move(elements), std::move(matroids));
  return ProblemInput{std::move(instance), std::move(oracle)};
}

}  // namespace

ProblemInput generate_instance(const GenSpec& spec) {
  switch (spec.kind) {
    case InstanceKind::graph:
      return generate_graph(spec);
    case InstanceKind::hypergraph:
      return generate_hypergraph(spec);
    case InstanceKind::matroid_intersection:
      return generate_matroid(spec);
  }
  throw ParamError("generate: unknown kind");
}

BipartiteEncoding generate_bipartite_encoding(int left, int right, int m,
                                              OracleFamilyKind family,
                                              std::uint64_t seed) {
  if (left < 1 || right < 1) {
    throw ParamError("generate: bipartite sides must be nonempty");
  }
  std::vector<std::pair<int, int>> pairs;
  for (int l = 1; l <= left; ++l) {
    for (int r = 1; r <= right; ++r) pairs.emplace_back(l, left + r);
  }
  if (m > static_cast<int>(pairs.size())) {
    throw ParamError("generate: too many edges for the bipartite shape");
  }
  Rng rng(seed);
  rng.shuffle(pairs);
  pairs.resize(m);

  std::vector<Element> edges;
  std::vector<Element> abstract;
  std::map<int, std::vector<int>> by_left;
  std::map<int, std::vector<int>> by_right;
  for (int i = 0; i < m; ++i) {
    Element e;
    e.id = i + 1;
    e.vertices = {pairs[i].first, pairs[i].second};
    by_left[pairs[i].first].push_back(e.id);
    by_right[pairs[i].second].push_back(e.id);
    edges.push_back(e);
    Element bare;
    bare.id = e.id;
    abstract.push_back(std::move(bare));
  }

  auto matroid_from = [](const std::map<int, std::vector<int>>& groups) {
    std::vector<std::vector<int>> parts;
    std::vector<int> caps;
    for (const auto& [vertex, ids] : groups) {
      parts.push_back(ids);
      caps.push_back(1);
    }
    return PartitionMatroid(std::move(parts), std::move(caps));
  };

  OracleSpec oracle = draw_oracle(rng, edges, family, left + right, &edges);
  for (auto& e : abstract) {
    e.given_weight = edges[e.id - 1].given_weight;
  }

  int bound = static_cast<int>(std::min(by_left.size(), by_right.size()));
  std::vector<PartitionMatroid> matroids;
  matroids.push_back(matroid_from(by_left));
  matroids.push_back(matroid_from(by_right));
  return BipartiteEncoding{
      ProblemInput{
          Instance(InstanceKind::graph, left + right, 2, std::move(edges)),
          oracle},
      ProblemInput{Instance(InstanceKind::matroid_intersection, bound, 2,
                            std::move(abstract), std::move(matroids)),
                   std::move(oracle)},
      left};
}

}  // namespace substream
