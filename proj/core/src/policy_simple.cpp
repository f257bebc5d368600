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

#include "substream/policy_simple.hpp"

#include <algorithm>
#include <set>

namespace substream {

Proposal SimplePolicy::propose(const Element& e, const SolutionState& state) {
  const double w_e = state.weight.at(e.id);
  std::set<int> evict;

  if (state.instance->is_matching_kind()) {
    std::span<const Element> one(&e, 1);
    evict = conflicts(state.solution, one);
  } else {
    const auto& matroids = state.instance->matroids();
    for (const auto& matroid : matroids) {
      std::vector<int> circuit =
          matroid.circuit(state.solution.members(), e.id);
      if (circuit.empty()) continue;
      // Swapping e for itself is pointless; pick the lightest other member
      // of the circuit, smallest id on ties.
      int pick = -1;
      double pick_weight = 0.0;
      for (int id : circuit) {
        if (id == e.id) continue;
        double w = state.weight.at(id);
        if (pick < 0 || w < pick_weight ||
            (w == pick_weight && id < pick)) {
          pick = id;
          pick_weight = w;
        }
      }
      if (pick < 0) return {};  // circuit was {e} alone; cannot make room
      evict.insert(pick);
    }
  }

  double removed_weight = 0.0;
  for (int id : evict) removed_weight += state.weight.at(id);
  if (w_e < (1.0 + state.gamma) * removed_weight) return {};
  if (evict.empty() && w_e == 0.0) return {};  // no zero-gain insertions

  if (!state.instance->is_matching_kind()) {
    // For partition matroids evicting one circuit member per violated
    // matroid always makes room, but verify rather than assume.
    std::set<int> after = state.solution.members();
    for (int id : evict) after.erase(id);
    after.insert(e.id);
    if (!is_independent_intersection(state.instance->matroids(), after)) {
      return {};
    }
  }

  Proposal prop;
  prop.add.push_back(e);
  prop.remove.assign(evict.begin(), evict.end());
  return prop;
}

}  // namespace substream
