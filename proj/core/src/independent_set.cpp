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

#include "substream/independent_set.hpp"

#include <string>

#include "substream/errors.hpp"

namespace substream {

IndependentSet::IndependentSet(const Instance& instance)
    : instance_(&instance) {
  if (instance.kind() == InstanceKind::matroid_intersection) {
    usage_.reserve(instance.matroids().size());
    for (const auto& m : instance.matroids()) {
      usage_.emplace_back(m.part_count(), 0);
    }
  }
}

std::optional<int> IndependentSet::occupant(int vertex) const {
  auto it = occupancy_.find(vertex);
  if (it == occupancy_.end()) return std::nullopt;
  return it->second;
}

int IndependentSet::usage(int matroid, int part) const {
  return usage_.at(matroid).at(part);
}

bool IndependentSet::can_insert(const Element& e) const {
  if (contains(e.id)) return false;
  if (instance_->is_matching_kind()) {
    for (int v : e.vertices) {
      if (occupancy_.count(v)) return false;
    }
    return true;
  }
  const auto& matroids = instance_->matroids();
  for (std::size_t i = 0; i < matroids.size(); ++i) {
    int j = matroids[i].part_of(e.id);
    if (usage_[i][j] + 1 > matroids[i].capacity(j)) return false;
  }
  return true;
}

void IndependentSet::insert(const Element& e) {
  if (!can_insert(e)) {
    throw InvariantViolation("independent set: inserting element " +
                             std::to_string(e.id) +
                             " would break independence");
  }
  members_.insert(e.id);
  if (instance_->is_matching_kind()) {
    for (int v : e.vertices) occupancy_[v] = e.id;
  } else {
    const auto& matroids = instance_->matroids();
    for (std::size_t i = 0; i < matroids.size(); ++i) {
      ++usage_[i][matroids[i].part_of(e.id)];
    }
  }
}

void IndependentSet::erase(const Element& e) {
  if (!members_.erase(e.id)) {
    throw InvariantViolation("independent set: erasing non-member " +
                             std::to_string(e.id));
  }
  if (instance_->is_matching_kind()) {
    for (int v : e.vertices) occupancy_.erase(v);
  } else {
    const auto& matroids = instance_->matroids();
    for (std::size_t i = 0; i < matroids.size(); ++i) {
      --usage_[i][matroids[i].part_of(e.id)];
    }
  }
}

void IndependentSet::clear() {
  members_.clear();
  occupancy_.clear();
  for (auto& u : usage_) std::fill(u.begin(), u.end(), 0);
}

std::set<int> conflicts(const IndependentSet& I,
                        std::span<const Element> with) {
  if (!I.instance().is_matching_kind()) {
    throw ContractViolation(
        "conflicts: vertex conflicts are undefined for matroid instances");
  }
  std::set<int> hit;
  for (const auto& e : with) {
    for (int v : e.vertices) {
      if (auto id = I.occupant(v)) hit.insert(*id);
    }
  }
  return hit;
}

void apply_augment(IndependentSet& I, std::span<const Element> add,
                   std::span<const Element> remove) {
  for (const auto& e : remove) I.erase(e);
  for (const auto& e : add) {
    if (I.contains(e.id)) continue;  // re-adding a retained member is a no-op
    I.insert(e);                     // throws if the pair was not augmenting
  }
}

void validate_independent(const IndependentSet& I) {
  const Instance& inst = I.instance();
  if (!is_independent(inst, I.members())) {
    throw InvariantViolation("independent set: members are dependent");
  }
  if (inst.is_matching_kind()) {
    std::map<int, int> expect;
    for (int id : I.members()) {
      for (int v : inst.element(id).vertices) expect[v] = id;
    }
    if (I.occupancy() != expect) {
      throw InvariantViolation("independent set: occupancy map is stale");
    }
  } else {
    const auto& matroids = inst.matroids();
    for (std::size_t i = 0; i < matroids.size(); ++i) {
      std::vector<int> counts(matroids[i].part_count(), 0);
      for (int id : I.members()) ++counts[matroids[i].part_of(id)];
      for (int j = 0; j < matroids[i].part_count(); ++j) {
        if (I.usage(static_cast<int>(i), j) != counts[j]) {
          throw InvariantViolation("independent set: usage counters stale");
        }
      }
    }
  }
}

bool is_independent(const Instance& instance, const std::set<int>& ids) {
  if (instance.is_matching_kind()) {
    std::set<int> seen;
    for (int id : ids) {
      for (int v : instance.element(id).vertices) {
        if (!seen.insert(v).second) return false;
      }
    }
    return true;
  }
  return is_independent_intersection(instance.matroids(), ids);
}

}  // namespace substream
