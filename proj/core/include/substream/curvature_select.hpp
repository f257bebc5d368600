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

#ifndef SUBSTREAM_CURVATURE_SELECT_HPP_
#define SUBSTREAM_CURVATURE_SELECT_HPP_

#include <array>

#include "substream/framework.hpp"

namespace substream {

enum class PolicyId { zelke, simple };

// Worst-case ratio of the weighted (modular) run at a given gamma:
//   zelke    2(1+gamma) + (1/gamma + 1) - gamma/(1+gamma)^2
//   simple   (1+gamma)((p-1)/gamma + p)
double weighted_ratio(PolicyId policy, int p, double gamma);

// Worst-case ratio of the marginal-gain extension at the same gamma:
// weighted_ratio + 1 + 1/gamma.
double extension_ratio(PolicyId policy, int p, double gamma);

// min{extension_ratio, weighted_ratio / (1 - curv)}; the second branch is
// +infinity at curv = 1. Throws ParamError for gamma <= 0 or curv outside
// [0, 1].
double ratio_bound(PolicyId policy, int p, double gamma, double curv);

// The two parameter points a dual run races: first the gamma minimizing the
// weighted ratio (0.717 for zelke, sqrt((p-1)/p) for simple), then the one
// minimizing the extension ratio (1 for both).
std::array<double, 2> dual_gammas(PolicyId policy, int p);

struct DualRunOutcome {
  std::vector<PassResult> runs;  // [0] weighted-optimal, [1] extension-optimal
  int chosen = 0;
  double final_value = 0.0;
};

// Runs the policy at both parameter points over the same stream and keeps
// whichever solution scores higher (ties to the weighted-optimal run). By
// default the two solution states advance element by element within a
// single pass; sequential = true replays the stream once per state instead.
// Both schedules produce identical results.
DualRunOutcome dual_run(const Instance& instance, StreamSource& stream,
                        ValueOracle& oracle, PolicyId policy,
                        bool sequential = false);

}  // namespace substream

#endif  // SUBSTREAM_CURVATURE_SELECT_HPP_
