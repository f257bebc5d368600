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

#ifndef SUBSTREAM_ELEMENT_HPP_
#define SUBSTREAM_ELEMENT_HPP_

#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "substream/matroids.hpp"

namespace substream {

// One stream item: a graph edge, a hyperedge, or an abstract matroid
// ground-set element. Ids are unique within an instance; files assign them
// by stream position.
struct Element {
  int id = 0;
  std::vector<int> vertices;  // sorted ascending; empty for matroid elements
  std::optional<double> given_weight;  // present in weighted (MWIS) inputs
};

enum class InstanceKind { graph, hypergraph, matroid_intersection };

std::string to_string(InstanceKind kind);

// A finite ground set in stream order plus its independence structure.
// Immutable after construction and safe to share across concurrent runs.
class Instance {
 public:
  // Validates all kind-specific constraints; throws ParamError on breach:
  // duplicate ids, duplicate vertex sets, out-of-range vertices, edges that
  // are not proper pairs, hyperedges larger than p, matroids that do not
  // partition the ground set.
  Instance(InstanceKind kind, int n, int p, std::vector<Element> elements,
           std::vector<PartitionMatroid> matroids = {});

  InstanceKind kind() const { return kind_; }
  bool is_matching_kind() const {
    return kind_ != InstanceKind::matroid_intersection;
  }

  // Vertex count for graph/hypergraph kinds; an upper bound on the size of
  // any independent set for the matroid kind.
  int vertex_bound() const { return n_; }
  // Max element arity: 2 for graphs, p for hypergraphs, the matroid count
  // for intersections.
  int arity() const { return p_; }

  std::size_t size() const { return elements_.size(); }
  const std::vector<Element>& elements() const { return elements_; }
  const std::vector<PartitionMatroid>& matroids() const { return matroids_; }

  bool has_element(int id) const { return index_by_id_.count(id) > 0; }
  const Element& element(int id) const;

  // All element ids, ascending. This is the value-oracle ground guard.
  const std::set<int>& ground_ids() const { return ground_ids_; }

 private:
  InstanceKind kind_;
  int n_;
  int p_;
  std::vector<Element> elements_;
  std::vector<PartitionMatroid> matroids_;
  std::unordered_map<int, std::size_t> index_by_id_;
  std::set<int> ground_ids_;
};

}  // namespace substream

#endif  // SUBSTREAM_ELEMENT_HPP_
