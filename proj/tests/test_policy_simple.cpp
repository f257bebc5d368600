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

#include <doctest.h>

#include "substream/policy_simple.hpp"
#include "test_support.hpp"

using namespace substream;
using namespace substream::testing;

TEST_CASE("propose: insert, swap, and the matroid threshold") {
  SimplePolicy policy;

  SUBCASE("anything nonnegative enters an empty solution") {
    Instance inst = make_graph(2, {{1, 2, 1.0}});
    SolutionState state(inst, 1.0);
    state.weight[1] = 1.0;
    Proposal prop = policy.propose(inst.element(1), state);
    REQUIRE(prop.add.size() == 1);
    CHECK(prop.add[0].id == 1);
    CHECK(prop.remove.empty());
  }

  SUBCASE("a heavy arrival evicts its conflicting member") {
    Instance inst = make_graph(3, {{1, 2, 1.0}, {2, 3, 3.0}});
    SolutionState state(inst, 1.0);
    state.solution.insert(inst.element(1));
    state.stored.emplace(1, inst.element(1));
    state.weight[1] = 1.0;
    state.weight[2] = 3.0;  // 3 >= (1+1) * 1
    Proposal prop = policy.propose(inst.element(2), state);
    REQUIRE(prop.add.size() == 1);
    CHECK(prop.remove == std::vector<int>{1});
  }

  SUBCASE("acceptance is non-strict at the threshold") {
    Instance inst = make_graph(3, {{1, 2, 1.0}, {2, 3, 2.0}});
    SolutionState state(inst, 1.0);
    state.solution.insert(inst.element(1));
    state.stored.emplace(1, inst.element(1));
    state.weight[1] = 1.0;
    state.weight[2] = 2.0;  // exactly (1+1) * 1
    Proposal prop = policy.propose(inst.element(2), state);
    CHECK(prop.remove == std::vector<int>{1});
  }

  SUBCASE("a single-part matroid swap below threshold is declined") {
    Instance inst =
        make_matroid_instance(1, 2, {PartitionMatroid({{1, 2}}, {1})});
    SolutionState state(inst, 1.0);
    state.solution.insert(inst.element(1));
    state.stored.emplace(1, inst.element(1));
    state.weight[1] = 2.0;
    state.weight[2] = 2.5;  // 2.5 < (1+1) * 2
    Proposal prop = policy.propose(inst.element(2), state);
    CHECK(prop.empty());
  }

  SUBCASE("one eviction per violated matroid, merged") {
    // Two matroids that both pick element 1 as the lightest circuit member.
    PartitionMatroid a({{1, 2, 3}}, {1});
    PartitionMatroid b({{1, 3}, {2}}, {1, 1});
    Instance inst = make_matroid_instance(1, 3, {a, b});
    SolutionState state(inst, 1.0);
    state.solution.insert(inst.element(1));
    state.stored.emplace(1, inst.element(1));
    state.weight[1] = 1.0;
    state.weight[3] = 2.0;  // 2 >= 2 * 1 with J = {1} merged across matroids
    Proposal prop = policy.propose(inst.element(3), state);
    REQUIRE_FALSE(prop.empty());
    CHECK(prop.remove == std::vector<int>{1});
  }
}

TEST_CASE("hypergraph one-pass runs keep every check green") {
  Rng rng(41);
  for (int trial = 0; trial < 30; ++trial) {
    auto family = static_cast<OracleFamilyKind>(trial % 3);
    int p = 2 + trial % 2;
    auto input = random_hypergraph_problem(rng, p, family, 6000 + trial);
    const Instance& inst = input.instance;
    ValueOracle oracle = make_oracle(input.oracle_spec, inst);
    SimplePolicy policy;
    MemoryStreamSource stream(inst);
    PassResult pass = improve_solution(inst, stream, {}, 1.0, policy, oracle);
    CHECK(failed_count(pass.stats.checks) == 0);
    CHECK(pass.stats.checks.at("kill_tree_budget").status ==
          CheckOutcome::Status::pass);
  }
}

TEST_CASE("matroid one-pass runs keep every check green") {
  Rng rng(43);
  for (int trial = 0; trial < 30; ++trial) {
    auto family = static_cast<OracleFamilyKind>(trial % 3);
    int p = 1 + trial % 3;
    auto input = random_matroid_problem(rng, p, family, 7000 + trial);
    const Instance& inst = input.instance;
    ValueOracle oracle = make_oracle(input.oracle_spec, inst);
    SimplePolicy policy;
    MemoryStreamSource stream(inst);
    PassResult pass = improve_solution(inst, stream, {}, 1.0, policy, oracle);
    CHECK(failed_count(pass.stats.checks) == 0);
    validate_independent(pass.solution);
    CHECK(is_independent_intersection(inst.matroids(),
                                      pass.solution.members()));
  }
}
