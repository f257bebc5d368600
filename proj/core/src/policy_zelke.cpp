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

#include "substream/policy_zelke.hpp"

#include <algorithm>

#include "substream/errors.hpp"

namespace substream {

std::optional<int> ShadowTable::shadow_at(int matched_id, int vertex) const {
  auto it = slots_.find({matched_id, vertex});
  if (it == slots_.end()) return std::nullopt;
  return it->second;
}

std::set<int> ShadowTable::shadow_ids() const {
  std::set<int> ids;
  for (const auto& [slot, id] : slots_) ids.insert(id);
  return ids;
}

void ShadowTable::on_augment(std::span<const Element> added,
                             std::span<const Element> removed,
                             const IndependentSet& matching) {
  for (const Element& r : removed) {
    for (int v : r.vertices) slots_.erase({r.id, v});
  }
  std::set<int> promoted;
  for (const Element& a : added) promoted.insert(a.id);
  for (auto it = slots_.begin(); it != slots_.end();) {
    it = promoted.count(it->second) ? slots_.erase(it) : std::next(it);
  }
  for (const Element& r : removed) {
    for (int v : r.vertices) {
      if (auto holder = matching.occupant(v)) {
        slots_.insert_or_assign({*holder, v}, r.id);
      }
    }
  }
}

namespace {

void push_unique(std::vector<Element>& out, const Element& e) {
  for (const auto& existing : out) {
    if (existing.id == e.id) return;
  }
  out.push_back(e);
}

}  // namespace

std::vector<Element> zelke_neighborhood(const Element& e,
                                        const SolutionState& state,
                                        const ShadowTable& shadows) {
  std::vector<Element> hood;
  hood.push_back(e);
  const IndependentSet& matching = state.solution;
  for (int y : e.vertices) {
    auto blocked = matching.occupant(y);
    if (!blocked) continue;
    const Element& gy = state.stored.at(*blocked);
    push_unique(hood, gy);
    // The shadow hangs off the far endpoint of the blocking edge.
    int far = gy.vertices[0] == y ? gy.vertices[1] : gy.vertices[0];
    auto shadow_id = shadows.shadow_at(gy.id, far);
    if (!shadow_id) continue;
    const Element& ag = state.stored.at(*shadow_id);
    push_unique(hood, ag);
    for (int a : ag.vertices) {
      if (a == far) continue;
      if (auto next_matched = matching.occupant(a)) {
        push_unique(hood, state.stored.at(*next_matched));
      }
    }
  }
  std::sort(hood.begin(), hood.end(),
            [](const Element& a, const Element& b) { return a.id < b.id; });
  return hood;
}

namespace {

bool vertex_disjoint(const std::vector<Element>& edges) {
  std::set<int> seen;
  for (const auto& e : edges) {
    for (int v : e.vertices) {
      if (!seen.insert(v).second) return false;
    }
  }
  return true;
}

bool lex_less(const std::vector<Element>& a, const std::vector<Element>& b) {
  auto ids = [](const std::vector<Element>& v) {
    std::vector<int> out;
    out.reserve(v.size());
    for (const auto& e : v) out.push_back(e.id);
    std::sort(out.begin(), out.end());
    return out;
  };
  return ids(a) < ids(b);
}

}  // namespace

AugmentChoice best_augmenting_set(std::span<const Element> neighborhood,
                                  const SolutionState& state, double gamma) {
  // Matched members of the neighborhood never help: adding one pays its own
  // eviction. Candidates are the unmatched few (the arriving edge and any
  // shadows), at most three in practice.
  std::vector<Element> candidates;
  for (const Element& e : neighborhood) {
    if (!state.solution.contains(e.id)) candidates.push_back(e);
  }

  AugmentChoice best;  // the empty choice, gain 0
  const std::size_t subsets = std::size_t{1} << candidates.size();
  for (std::size_t mask = 1; mask < subsets; ++mask) {
    std::vector<Element> pick;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if (mask & (std::size_t{1} << i)) pick.push_back(candidates[i]);
    }
    if (!vertex_disjoint(pick)) continue;
    std::set<int> evicted = conflicts(state.solution, pick);
    double gain = 0.0;
    for (const auto& e : pick) gain += state.weight.at(e.id);
    for (int id : evicted) gain -= (1.0 + gamma) * state.weight.at(id);
    if (gain > best.gain ||
        (gain == best.gain && !best.add.empty() && lex_less(pick, best.add))) {
      best.add = std::move(pick);
      best.remove = std::move(evicted);
      best.gain = gain;
    }
  }
  return best;
}

void ZelkePolicy::begin_pass(const Instance& instance) {
  if (instance.kind() != InstanceKind::graph) {
    throw ContractViolation("zelke policy handles graph instances only");
  }
  shadows_.clear();
}

Proposal ZelkePolicy::propose(const Element& e, const SolutionState& state) {
  std::vector<Element> hood = zelke_neighborhood(e, state, shadows_);
  AugmentChoice choice = best_augmenting_set(hood, state, state.gamma);
  if (choice.gain <= 0.0) return {};
  Proposal prop;
  prop.add = std::move(choice.add);
  prop.remove.assign(choice.remove.begin(), choice.remove.end());
  return prop;
}

void ZelkePolicy::after_accept(const Element& e, const Proposal& applied,
                               SolutionState& state) {
  std::vector<Element> removed;
  removed.reserve(applied.remove.size());
  for (int id : applied.remove) removed.push_back(state.stored.at(id));
  shadows_.on_augment(applied.add, removed, state.solution);
  state.shadow = shadows_.shadow_ids();
  // Two slots per matched edge caps the shadow count at n.
  if (shadows_.slot_count() > 2 * state.solution.size()) {
    throw InvariantViolation("zelke policy: shadow slots exceed 2|M|");
  }
}

}  // namespace substream
