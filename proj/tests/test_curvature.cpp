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

#include <cmath>

#include <doctest.h>

#include "substream/baselines.hpp"
#include "substream/curvature_select.hpp"
#include "substream/errors.hpp"
#include "test_support.hpp"

using namespace substream;
using namespace substream::testing;

TEST_CASE("ratio bounds hit the published corner values") {
  // flat curvature disables the weighted branch entirely
  CHECK(ratio_bound(PolicyId::zelke, 2, 1.0, 1.0) == doctest::Approx(7.75));
  // modular case at the weighted-optimal parameter
  double at_0717 = ratio_bound(PolicyId::zelke, 2, 0.717, 0.0);
  CHECK(at_0717 == doctest::Approx(5.585).epsilon(2e-4));
  CHECK(at_0717 <= 5.5855);
  // the single-element policy on graphs at its weighted-optimal parameter
  CHECK(ratio_bound(PolicyId::simple, 2, 1.0 / std::sqrt(2.0), 0.0) ==
        doctest::Approx(3.0 + 2.0 * std::sqrt(2.0)));
  CHECK_THROWS_AS(ratio_bound(PolicyId::simple, 2, -1.0, 0.0), ParamError);
  CHECK_THROWS_AS(ratio_bound(PolicyId::simple, 2, 1.0, 2.0), ParamError);
}

TEST_CASE("extension ratios evaluate the closed forms") {
  CHECK(weighted_ratio(PolicyId::zelke, 2, 1.0) == doctest::Approx(5.75));
  CHECK(extension_ratio(PolicyId::zelke, 2, 1.0) == doctest::Approx(7.75));
  CHECK(extension_ratio(PolicyId::simple, 2, 1.0) == doctest::Approx(8.0));
  CHECK(extension_ratio(PolicyId::simple, 3, 1.0) == doctest::Approx(12.0));
  // the weighted-optimal parameter of the single-element policy
  for (int p : {2, 3, 5}) {
    double star = std::sqrt((p - 1.0) / p);
    double at_star = weighted_ratio(PolicyId::simple, p, star);
    CHECK(at_star ==
          doctest::Approx(2.0 * (p + std::sqrt(p * (p - 1.0))) - 1.0));
    for (double gamma : {0.2, 0.5, 0.9, 1.3}) {
      CHECK(at_star <= weighted_ratio(PolicyId::simple, p, gamma) + 1e-12);
    }
  }
}

TEST_CASE("a dual run keeps the better of its two branches") {
  SUBCASE("one lonely edge: both branches take it") {
    Instance inst = make_graph(2, {{1, 2, 3.0}});
    ValueOracle oracle = modular_oracle(inst);
    MemoryStreamSource stream(inst);
    auto out = dual_run(inst, stream, oracle, PolicyId::zelke);
    CHECK(out.runs[0].solution.members() == std::set<int>{1});
    CHECK(out.runs[1].solution.members() == std::set<int>{1});
    CHECK(out.final_value == 3.0);
  }

  SUBCASE("the result value is the max across branches") {
    Rng rng(79);
    for (int trial = 0; trial < 15; ++trial) {
      auto family = static_cast<OracleFamilyKind>(trial % 3);
      auto input = random_graph_problem(rng, family, 16000 + trial);
      ValueOracle oracle = make_oracle(input.oracle_spec, input.instance);
      MemoryStreamSource stream(input.instance);
      auto out = dual_run(input.instance, stream, oracle, PolicyId::zelke);
      CHECK(out.final_value == std::max(out.runs[0].stats.final_value,
                                        out.runs[1].stats.final_value));
    }
  }

  SUBCASE("interleaved and sequential schedules agree exactly") {
    Rng rng(83);
    for (int trial = 0; trial < 15; ++trial) {
      auto family = static_cast<OracleFamilyKind>(trial % 3);
      auto input = random_graph_problem(rng, family, 17000 + trial);
      ValueOracle oracle = make_oracle(input.oracle_spec, input.instance);
      MemoryStreamSource stream(input.instance);
      auto lockstep = dual_run(input.instance, stream, oracle,
                               PolicyId::zelke, /*sequential=*/false);
      auto replay = dual_run(input.instance, stream, oracle,
                             PolicyId::zelke, /*sequential=*/true);
      for (int i = 0; i < 2; ++i) {
        CHECK(lockstep.runs[i].solution.members() ==
              replay.runs[i].solution.members());
        CHECK(lockstep.runs[i].stats.final_value ==
              replay.runs[i].stats.final_value);
        CHECK(lockstep.runs[i].stats.oracle_calls ==
              replay.runs[i].stats.oracle_calls);
      }
      CHECK(lockstep.chosen == replay.chosen);
    }
  }

  SUBCASE("modular graphs stay within the weighted-branch bound") {
    Rng rng(89);
    for (int trial = 0; trial < 15; ++trial) {
      auto input = random_graph_problem(rng, OracleFamilyKind::modular,
                                        18000 + trial);
      ValueOracle oracle = make_oracle(input.oracle_spec, input.instance);
      MemoryStreamSource stream(input.instance);
      auto out = dual_run(input.instance, stream, oracle, PolicyId::zelke);
      ValueOracle side = oracle.fresh_counter();
      OptResult best = exact_opt(input.instance, side);
      CHECK(approx_le(best.value, 5.5855 * out.final_value));
    }
  }
}
