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

#include "substream/matroids.hpp"

#include <algorithm>
#include <string>

#include "substream/errors.hpp"

namespace substream {

PartitionMatroid::PartitionMatroid(std::vector<std::vector<int>> parts,
                                   std::vector<int> capacities)
    : parts_(std::move(parts)), capacities_(std::move(capacities)) {
  if (parts_.size() != capacities_.size()) {
    throw ParamError("partition matroid: parts/capacities size mismatch");
  }
  for (std::size_t j = 0; j < parts_.size(); ++j) {
    if (capacities_[j] < 1) {
      throw ParamError("partition matroid: capacity of part " +
                       std::to_string(j) + " must be >= 1");
    }
    std::sort(parts_[j].begin(), parts_[j].end());
    for (int id : parts_[j]) {
      if (!part_by_element_.emplace(id, static_cast<int>(j)).second) {
        throw ParamError("partition matroid: element " + std::to_string(id) +
                         " appears in two parts");
      }
    }
  }
}

int PartitionMatroid::part_of(int element_id) const {
  auto it = part_by_element_.find(element_id);
  if (it == part_by_element_.end()) {
    throw ParamError("partition matroid: element " +
                     std::to_string(element_id) + " is in no part");
  }
  return it->second;
}

bool PartitionMatroid::is_independent(const std::set<int>& ids) const {
  std::vector<int> counts(parts_.size(), 0);
  for (int id : ids) {
    int j = part_of(id);
    if (++counts[j] > capacities_[j]) return false;
  }
  return true;
}

std::vector<int> PartitionMatroid::circuit(const std::set<int>& independent,
                                           int element_id) const {
  int j = part_of(element_id);
  std::vector<int> in_part;
  for (int id : independent) {
    if (part_by_element_.at(id) == j) in_part.push_back(id);
  }
  if (static_cast<int>(in_part.size()) < capacities_[j]) return {};
  // I independent means the part holds exactly capacity(j) members, so
  // those members plus e form the unique circuit.
  in_part.push_back(element_id);
  std::sort(in_part.begin(), in_part.end());
  return in_part;
}

bool is_independent_intersection(std::span<const PartitionMatroid> matroids,
                                 const std::set<int>& ids) {
  for (const auto& m : matroids) {
    if (!m.is_independent(ids)) return false;
  }
  return true;
}

}  // namespace substream
