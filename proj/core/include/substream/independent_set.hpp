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

#ifndef SUBSTREAM_INDEPENDENT_SET_HPP_
#define SUBSTREAM_INDEPENDENT_SET_HPP_

#include <map>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "substream/element.hpp"

namespace substream {

// Mutable independent set of one instance: a (hyper)matching with its
// vertex-occupancy map, or a common independent set of p partition matroids
// with per-part usage counters. Single-owner state; not thread-safe.
class IndependentSet {
 public:
  explicit IndependentSet(const Instance& instance);

  const Instance& instance() const { return *instance_; }
  const std::set<int>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool contains(int id) const { return members_.count(id) > 0; }

  // Matching kinds: id of the member occupying a vertex, if any.
  std::optional<int> occupant(int vertex) const;
  const std::map<int, int>& occupancy() const { return occupancy_; }
  // Matroid kind: members of matroid i's part j currently held.
  int usage(int matroid, int part) const;

  bool can_insert(const Element& e) const;
  // Throws InvariantViolation if e is already present or would break
  // independence.
  void insert(const Element& e);
  // Throws InvariantViolation if e is not a member.
  void erase(const Element& e);
  void clear();

 private:
  const Instance* instance_;
  std::set<int> members_;
  std::map<int, int> occupancy_;            // vertex -> member id
  std::vector<std::vector<int>> usage_;     // [matroid][part] -> count
};

// Members of I sharing at least one vertex with some element of `with`.
// Matching kinds only; throws ContractViolation on matroid instances.
std::set<int> conflicts(const IndependentSet& I, std::span<const Element> with);

// I <- (I \ remove) + add, updating occupancy/usage maps. The caller
// guarantees the result is independent; a breach throws InvariantViolation.
void apply_augment(IndependentSet& I, std::span<const Element> add,
                   std::span<const Element> remove);

// Full revalidation from scratch: membership data, occupancy/usage maps and
// independence all re-derived and compared. Throws InvariantViolation.
void validate_independent(const IndependentSet& I);

// Independence test for an arbitrary id set (no incremental state).
bool is_independent(const Instance& instance, const std::set<int>& ids);

}  // namespace substream

#endif  // SUBSTREAM_INDEPENDENT_SET_HPP_
