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

#ifndef SUBSTREAM_MATROIDS_HPP_
#define SUBSTREAM_MATROIDS_HPP_

#include <set>
#include <span>
#include <unordered_map>
#include <vector>

namespace substream {

// Partition matroid: the ground set is split into disjoint parts, and a set
// is independent iff it holds at most capacity(j) elements of part j. A
// uniform matroid is the single-part special case.
class PartitionMatroid {
 public:
  // parts[j] lists the element ids of part j; capacities[j] >= 1.
  // Parts must be pairwise disjoint. Throws ParamError otherwise.
  PartitionMatroid(std::vector<std::vector<int>> parts,
                   std::vector<int> capacities);

  int part_count() const { return static_cast<int>(parts_.size()); }
  int capacity(int part) const { return capacities_.at(part); }
  const std::vector<int>& part_members(int part) const {
    return parts_.at(part);
  }

  bool covers(int element_id) const {
    return part_by_element_.count(element_id) > 0;
  }
  // Part index of an element; throws ParamError for ids outside all parts.
  int part_of(int element_id) const;

  bool is_independent(const std::set<int>& ids) const;

  // For an independent set I and e not in I: the unique circuit of I + e,
  // or an empty set when I + e is independent. For a partition matroid the
  // circuit is e together with the members of I in e's part.
  std::vector<int> circuit(const std::set<int>& independent,
                           int element_id) const;

 private:
  std::vector<std::vector<int>> parts_;
  std::vector<int> capacities_;
  std::unordered_map<int, int> part_by_element_;
};

// True iff ids is independent in every matroid.
bool is_independent_intersection(std::span<const PartitionMatroid> matroids,
                                 const std::set<int>& ids);

}  // namespace substream

#endif  // SUBSTREAM_MATROIDS_HPP_
