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

#include "substream/curvature_select.hpp"

#include <cmath>
#include <limits>
#include <memory>

#include "substream/errors.hpp"
#include "substream/policy_simple.hpp"
#include "substream/policy_zelke.hpp"

namespace substream {

double weighted_ratio(PolicyId policy, int p, double gamma) {
  if (!(gamma > 0.0)) throw ParamError("ratio: gamma must be positive");
  if (policy == PolicyId::zelke) {
    double g1 = 1.0 + gamma;
    return 2.0 * g1 + (1.0 / gamma + 1.0) - gamma / (g1 * g1);
  }
  if (p < 1) throw ParamError("ratio: p must be >= 1");
  return (1.0 + gamma) * ((p - 1) / gamma + p);
}

double extension_ratio(PolicyId policy, int p, double gamma) {
  return weighted_ratio(policy, p, gamma) + 1.0 + 1.0 / gamma;
}

double ratio_bound(PolicyId policy, int p, double gamma, double curv) {
  if (curv < 0.0 || curv > 1.0) {
    throw ParamError("ratio: curvature must lie in [0, 1]");
  }
  double ext = extension_ratio(policy, p, gamma);
  if (curv >= 1.0) return ext;
  return std::min(ext, weighted_ratio(policy, p, gamma) / (1.0 - curv));
}

std::array<double, 2> dual_gammas(PolicyId policy, int p) {
  if (policy == PolicyId::zelke) return {0.717, 1.0};
  if (p < 2) throw ParamError("dual run: p must be >= 2 for this policy");
  return {std::sqrt((p - 1.0) / p), 1.0};
}

DualRunOutcome dual_run(const Instance& instance, StreamSource& stream,
                        ValueOracle& oracle, PolicyId policy,
                        bool sequential) {
  int p = instance.arity();
  std::array<double, 2> gammas = dual_gammas(policy, p);

  std::array<std::unique_ptr<Policy>, 2> policies;
  for (auto& slot : policies) {
    if (policy == PolicyId::zelke) {
      slot = std::make_unique<ZelkePolicy>();
    } else {
      slot = std::make_unique<SimplePolicy>();
    }
  }
  // Each state gets its own call counter over the shared oracle data.
  std::array<ValueOracle, 2> oracles = {oracle.fresh_counter(),
                                        oracle.fresh_counter()};

  DualRunOutcome out;
  if (sequential) {
    for (int i = 0; i < 2; ++i) {
      out.runs.push_back(improve_solution(instance, stream, {}, gammas[i],
                                          *policies[i], oracles[i]));
    }
  } else {
    std::array<std::unique_ptr<OnePassRunner>, 2> runners;
    for (int i = 0; i < 2; ++i) {
      runners[i] = std::make_unique<OnePassRunner>(instance, gammas[i],
                                                   *policies[i], oracles[i]);
      runners[i]->prime({});
    }
    stream.for_each([&](const Element& e) {
      for (auto& r : runners) r->process(e);
    });
    for (auto& r : runners) out.runs.push_back(r->finish());
  }

  out.chosen =
      out.runs[1].stats.final_value > out.runs[0].stats.final_value ? 1 : 0;
  out.final_value = out.runs[out.chosen].stats.final_value;
  return out;
}

}  // namespace substream
