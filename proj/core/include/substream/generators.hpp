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

#ifndef SUBSTREAM_GENERATORS_HPP_
#define SUBSTREAM_GENERATORS_HPP_

#include <cstdint>
#include <random>

#include "substream/formats.hpp"

namespace substream {

// Deterministic helper around mt19937_64; the bounded draw avoids the
// implementation-defined std distributions so identical seeds give
// identical instances everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  int uniform(int lo, int hi) {  // inclusive bounds
    return lo + static_cast<int>(engine_() %
                                 static_cast<std::uint64_t>(hi - lo + 1));
  }

  template <typename T>
  void shuffle(std::vector<T>& values) {
    for (std::size_t i = values.size(); i > 1; --i) {
      std::swap(values[i - 1],
                values[static_cast<std::size_t>(uniform(0, i - 1))]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

struct GenSpec {
  InstanceKind kind = InstanceKind::graph;
  int n = 8;   // vertices (graph/hypergraph); ignored for matroid kinds
  int m = 12;  // elements
  int p = 2;   // hyperedge arity / matroid count
  OracleFamilyKind family = OracleFamilyKind::modular;
  std::uint64_t seed = 1;
};

// Seeded random instance: stream order is a seeded shuffle, weights are
// small integers so desk-scale checks compare exactly. Throws ParamError on
// infeasible shapes (more edges than the vertex count allows, ...).
ProblemInput generate_instance(const GenSpec& spec);

// A bipartite graph and its two-partition-matroid encoding over the same
// element ids: one matroid caps each left vertex, the other each right
// vertex, so common independent sets are exactly the matchings.
struct BipartiteEncoding {
  ProblemInput graph;
  ProblemInput matroid;
  int left_count = 0;
};
BipartiteEncoding generate_bipartite_encoding(int left, int right, int m,
                                              OracleFamilyKind family,
                                              std::uint64_t seed);

}  // namespace substream

#endif  // SUBSTREAM_GENERATORS_HPP_
