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

#ifndef SUBSTREAM_MULTIPASS_HPP_
#define SUBSTREAM_MULTIPASS_HPP_

#include <string>
#include <vector>

#include "substream/framework.hpp"

namespace substream {

// What a multi-pass run optimizes. *_msm modes maximize a submodular
// objective through streaming marginal gains; *_mwm modes carry given
// modular weights and use the tighter parameter schedule that setting
// allows.
enum class Mode {
  graph_msm,
  graph_mwm,
  hypergraph_msm,
  hypergraph_mwm,
  matroid_msm,
  matroid_mwm,
};

std::string to_string(Mode mode);
Mode mode_from_string(const std::string& name);
bool is_weighted_mode(Mode mode);
InstanceKind kind_for_mode(Mode mode);

// Stopping threshold for the repeat passes:
//   weighted:    gamma^3 / ((p-1)(1+gamma)^2 - gamma^3)
//   submodular:  gamma^3 / (p + (2p-1) gamma + (p-1) gamma^2 - gamma^3)
// Graph modes use p = 2; the submodular graph formula then reads
// gamma^3 / (2 + 3 gamma + gamma^2 - gamma^3). Throws ParamError when the
// denominator is not positive.
double kappa_value(Mode mode, int p, double gamma);

struct MultiPassConfig {
  Mode mode = Mode::graph_msm;
  int p = 2;
  double epsilon = 0.5;
  double gamma_first = 1.0;
  double gamma_rest = 0.0;
  double kappa = 0.0;
  int pass_cap = 2;
};

// Guarantee of the bootstrap pass at its default gamma; used to size the
// pass cap.
double first_pass_ratio(Mode mode, int p);

// Parameter schedule per mode:
//   graph_msm        gamma = 1 then eps/3
//   graph_mwm        gamma = 1/sqrt(2) then 2 eps/3
//   *_msm (p)        gamma = 1 then eps/(p+1)
//   *_mwm (p)        gamma = sqrt((p-1)/p) then eps/(p+1)
// The pass cap is 2 + ceil(log_{1+kappa}(first-pass ratio)) plus slack.
MultiPassConfig default_config(Mode mode, int p, double epsilon);

struct MultiPassOutcome {
  IndependentSet solution;
  std::map<int, Element> kept;
  std::map<int, double> weights;  // final pass's weights of the solution
  std::vector<PassStats> passes;
  int pass_count = 0;
  bool stopped_by_rule = false;
  bool pass_cap_hit = false;
  double final_value = 0.0;   // f of the final solution
  double final_weight = 0.0;  // final pass's weights summed over it
  CheckResults checks;        // cross-pass invariants
};

// Repeatedly improves the solution until one pass gains no more than a
// 1 + kappa factor. Pass one starts from scratch at gamma_first; every
// later pass is primed with the previous solution at gamma_rest. A run
// whose stream yields nothing stops as soon as a pass ends worthless.
// Exceeding the pass cap is flagged, not fatal.
MultiPassOutcome run_multipass(const Instance& instance, StreamSource& stream,
                               ValueOracle& oracle,
                               const MultiPassConfig& config);

}  // namespace substream

#endif  // SUBSTREAM_MULTIPASS_HPP_
