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

#include "substream/element.hpp"

#include <algorithm>
#include <string>

#include "substream/errors.hpp"

namespace substream {

std::string to_string(InstanceKind kind) {
  switch (kind) {
    case InstanceKind::graph:
      return "graph";
    case InstanceKind::hypergraph:
      return "hypergraph";
    case InstanceKind::matroid_intersection:
      return "matroid_intersection";
  }
  return "unknown";
}

Instance::Instance(InstanceKind kind, int n, int p,
                   std::vector<Element> elements,
                   std::vector<PartitionMatroid> matroids)
    : kind_(kind),
      n_(n),
      p_(p),
      elements_(std::move(elements)),
      matroids_(std::move(matroids)) {
  if (n_ < 0) throw ParamError("instance: n must be nonnegative");
  if (kind_ == InstanceKind::graph) p_ = 2;
  if (kind_ != InstanceKind::graph && p_ < 1) {
    throw ParamError("instance: p must be >= 1");
  }

  std::set<std::vector<int>> seen_vertex_sets;
  for (auto& e : elements_) {
    if (e.id < 0) {
      throw ParamError("instance: element ids must be nonnegative");
    }
    if (!index_by_id_.emplace(e.id, index_by_id_.size()).second) {
      throw ParamError("instance: duplicate element id " +
                       std::to_string(e.id));
    }
    ground_ids_.insert(e.id);
    std::sort(e.vertices.begin(), e.vertices.end());
    if (std::adjacent_find(e.vertices.begin(), e.vertices.end()) !=
        e.vertices.end()) {
      throw ParamError("instance: element " + std::to_string(e.id) +
                       " repeats a vertex");
    }
    if (e.given_weight && *e.given_weight < 0.0) {
      throw ParamError("instance: element " + std::to_string(e.id) +
                       " has a negative weight");
    }

    switch (kind_) {
      case InstanceKind::graph:
        if (e.vertices.size() != 2) {
          throw ParamError("instance: graph edge " + std::to_string(e.id) +
                           " must join two distinct vertices");
        }
        break;
      case InstanceKind::hypergraph:
        if (e.vertices.empty() ||
            static_cast<int>(e.vertices.size()) > p_) {
          throw ParamError("instance: hyperedge " + std::to_string(e.id) +
                           " must have between 1 and p vertices");
        }
        break;
      case InstanceKind::matroid_intersection:
        if (!e.vertices.empty()) {
          throw ParamError("instance: matroid element " +
                           std::to_string(e.id) + " must carry no vertices");
        }
        break;
    }
    for (int v : e.vertices) {
      if (v < 1 || v > n_) {
        throw ParamError("instance: element " + std::to_string(e.id) +
                         " has vertex " + std::to_string(v) +
                         " outside [1, " + std::to_string(n_) + "]");
      }
    }
    if (is_matching_kind() &&
        !seen_vertex_sets.insert(e.vertices).second) {
      throw ParamError("instance: duplicate edge (element " +
                       std::to_string(e.id) + ")");
    }
  }

  if (kind_ == InstanceKind::matroid_intersection) {
    if (static_cast<int>(matroids_.size()) != p_) {
      throw ParamError("instance: expected " + std::to_string(p_) +
                       " matroids, got " + std::to_string(matroids_.size()));
    }
    for (std::size_t i = 0; i < matroids_.size(); ++i) {
      std::size_t covered = 0;
      for (int id : ground_ids_) {
        if (!matroids_[i].covers(id)) {
          throw ParamError("instance: matroid " + std::to_string(i) +
                           " does not cover element " + std::to_string(id));
        }
        ++covered;
      }
      std::size_t part_total = 0;
      for (int j = 0; j < matroids_[i].part_count(); ++j) {
        part_total += matroids_[i].part_members(j).size();
      }
      if (part_total != covered) {
        throw ParamError("instance: matroid " + std::to_string(i) +
                         " lists ids outside the ground set");
      }
    }
  } else if (!matroids_.empty()) {
    throw ParamError("instance: matroids given for a matching-kind instance");
  }
}

const Element& Instance::element(int id) const {
  auto it = index_by_id_.find(id);
  if (it == index_by_id_.end()) {
    throw ParamError("instance: unknown element id " + std::to_string(id));
  }
  return elements_[it->second];
}

}  // namespace substream
