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

#ifndef SUBSTREAM_POLICY_ZELKE_HPP_
#define SUBSTREAM_POLICY_ZELKE_HPP_

#include <map>
#include <optional>
#include <set>
#include <utility>

#include "substream/framework.hpp"

namespace substream {

// Shadow bookkeeping for the local-swap matching policy: every matched edge
// uv owns one shadow slot per endpoint, and each slot may hold one formerly
// matched edge that still touches that endpoint. At most two slots per
// matched edge keeps the shadow count at or below n.
class ShadowTable {
 public:
  std::optional<int> shadow_at(int matched_id, int vertex) const;
  std::set<int> shadow_ids() const;
  std::size_t slot_count() const { return slots_.size(); }
  void clear() { slots_.clear(); }

  // Rewrite after an accepted augment: drop the slots owned by evicted
  // edges, drop promoted shadows (members of `added`) from every slot, then
  // file each evicted edge under every (new matching edge, shared vertex)
  // slot it touches. Evicted edges touching no matching edge are discarded.
  void on_augment(std::span<const Element> added,
                  std::span<const Element> removed,
                  const IndependentSet& matching);

 private:
  std::map<std::pair<int, int>, int> slots_;  // (matched id, vertex) -> id
};

// The candidate neighborhood of an arriving edge e = y1y2, at most seven
// edges: e itself, the matched edges at y1 and y2, their far-endpoint
// shadows, and the matched edges those shadows touch. Sorted by id.
std::vector<Element> zelke_neighborhood(const Element& e,
                                        const SolutionState& state,
                                        const ShadowTable& shadows);

struct AugmentChoice {
  std::vector<Element> add;
  std::set<int> remove;
  double gain = 0.0;
};

// Enumerates every subset of the unmatched neighborhood candidates that is
// itself a matching and maximizes w(A) - (1 + gamma) w(M -> A), where
// M -> A are the matched edges touching A. Ties break toward the smallest
// id sequence. The returned gain decides acceptance (strictly positive).
AugmentChoice best_augmenting_set(std::span<const Element> neighborhood,
                                  const SolutionState& state, double gamma);

// Local-swap matching policy with shadow edges. Graph instances only.
class ZelkePolicy final : public Policy {
 public:
  void begin_pass(const Instance& instance) override;
  Proposal propose(const Element& e, const SolutionState& state) override;
  void after_accept(const Element& e, const Proposal& applied,
                    SolutionState& state) override;
  std::string_view name() const override { return "zelke"; }

  const ShadowTable& shadows() const { return shadows_; }

 private:
  ShadowTable shadows_;
};

}  // namespace substream

#endif  // SUBSTREAM_POLICY_ZELKE_HPP_
