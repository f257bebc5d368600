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

#ifndef SUBSTREAM_POLICY_SIMPLE_HPP_
#define SUBSTREAM_POLICY_SIMPLE_HPP_

#include "substream/framework.hpp"

namespace substream {

// Single-element policy: the augmenting pair is either ({e}, J) or (0, 0)
// and no shadow set is kept. On matching instances J is the set of members
// conflicting with e; on matroid intersections J collects, per violated
// matroid, the lightest member of the circuit of I + e (ties to the
// smallest id, duplicates merged). e is accepted iff
// w(e) >= (1 + gamma) w(J), except that weightless insertions with nothing
// to evict are declined.
class SimplePolicy final : public Policy {
 public:
  Proposal propose(const Element& e, const SolutionState& state) override;
  bool builds_killing_forest() const override { return true; }
  std::string_view name() const override { return "simple"; }
};

}  // namespace substream

#endif  // SUBSTREAM_POLICY_SIMPLE_HPP_
