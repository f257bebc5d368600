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

#include "substream/baselines.hpp"
#include "substream/policy_zelke.hpp"
#include "test_support.hpp"

using namespace substream;
using namespace substream::testing;

namespace {

std::set<int> ids_of(const std::vector<Element>& elems) {
  std::set<int> out;
  for (const auto& e : elems) out.insert(e.id);
  return out;
}

}  // namespace

TEST_CASE("neighborhood of an arriving edge") {
  SUBCASE("empty matching: just the edge itself") {
    Instance inst = make_graph(4, {{1, 2, 1.0}});
    SolutionState state(inst, 1.0);
    ShadowTable shadows;
    auto hood = zelke_neighborhood(inst.element(1), state, shadows);
    CHECK(ids_of(hood) == std::set<int>{1});
  }

  SUBCASE("one conflicting matched edge, no shadow chain") {
    Instance inst = make_graph(4, {{2, 3, 1.0}, {1, 2, 1.0}});
    SolutionState state(inst, 1.0);
    state.solution.insert(inst.element(1));
    state.stored.emplace(1, inst.element(1));
    ShadowTable shadows;
    auto hood = zelke_neighborhood(inst.element(2), state, shadows);
    CHECK(ids_of(hood) == std::set<int>{1, 2});
  }
}

TEST_CASE("a full seven-edge neighborhood emerges from a real run") {
  // Vertices: the arriving edge is 1-2; matched edges 1-3 and 2-4 block it;
  // their far-endpoint shadows 3-5 and 4-6 lead to matched edges 5-7 and
  // 6-8. Weights drive exactly that configuration.
  Instance inst = make_graph(8, {{3, 5, 4.0},
                                 {1, 3, 9.0},
                                 {5, 7, 4.0},
                                 {4, 6, 4.0},
                                 {2, 4, 9.0},
                                 {6, 8, 4.0},
                                 {1, 2, 1.0}});
  ValueOracle oracle = modular_oracle(inst);
  ZelkePolicy policy;
  OnePassRunner runner(inst, 1.0, policy, oracle);
  runner.prime({});
  for (int id = 1; id <= 6; ++id) runner.process(inst.element(id));

  CHECK(runner.state().solution.members() == std::set<int>{2, 3, 5, 6});
  CHECK(policy.shadows().shadow_at(2, 3) == 1);  // evicted 3-5 shadows 1-3
  CHECK(policy.shadows().shadow_at(5, 4) == 4);  // evicted 4-6 shadows 2-4
  CHECK(runner.state().shadow == std::set<int>{1, 4});

  auto hood =
      zelke_neighborhood(inst.element(7), runner.state(), policy.shadows());
  CHECK(hood.size() == 7);
  CHECK(ids_of(hood) == std::set<int>{1, 2, 3, 4, 5, 6, 7});
}

TEST_CASE("best augmenting set maximizes the eviction-discounted gain") {
  SUBCASE("a lone edge against an empty matching takes itself") {
    Instance inst = make_graph(4, {{1, 2, 5.0}});
    SolutionState state(inst, 1.0);
    state.weight[1] = 5.0;
    std::vector<Element> hood{inst.element(1)};
    auto choice = best_augmenting_set(hood, state, 1.0);
    CHECK(ids_of(choice.add) == std::set<int>{1});
    CHECK(choice.remove.empty());
    CHECK(choice.gain == 5.0);
  }

  SUBCASE("profitable swap against one matched edge") {
    Instance inst = make_graph(4, {{2, 3, 1.0}, {1, 2, 3.0}});
    SolutionState state(inst, 1.0);
    state.solution.insert(inst.element(1));
    state.stored.emplace(1, inst.element(1));
    state.weight[1] = 1.0;
    state.weight[2] = 3.0;
    std::vector<Element> hood{inst.element(1), inst.element(2)};
    auto choice = best_augmenting_set(hood, state, 1.0);
    CHECK(ids_of(choice.add) == std::set<int>{2});
    CHECK(choice.remove == std::set<int>{1});
    CHECK(choice.gain == doctest::Approx(1.0));
  }

  SUBCASE("unprofitable swap leaves the empty choice") {
    Instance inst = make_graph(4, {{2, 3, 1.0}, {1, 2, 1.5}});
    SolutionState state(inst, 1.0);
    state.solution.insert(inst.element(1));
    state.stored.emplace(1, inst.element(1));
    state.weight[1] = 1.0;
    state.weight[2] = 1.5;  // 1.5 - 2 < 0
    std::vector<Element> hood{inst.element(1), inst.element(2)};
    auto choice = best_augmenting_set(hood, state, 1.0);
    CHECK(choice.add.empty());
    CHECK(choice.gain == 0.0);
  }
}

TEST_CASE("shadow table rewrite after an augment") {
  Instance inst = make_graph(8, {{1, 3, 1.0},
                                 {3, 5, 1.0},
                                 {5, 7, 1.0},
                                 {1, 2, 1.0},
                                 {5, 6, 1.0}});

  SUBCASE("plain insertion leaves the table alone") {
    IndependentSet matching(inst);
    matching.insert(inst.element(4));  // 1-2
    ShadowTable table;
    std::vector<Element> added{inst.element(4)};
    table.on_augment(added, {}, matching);
    CHECK(table.slot_count() == 0);
  }

  SUBCASE("an accepted shadow files both of its evicted neighbors") {
    // The matching now holds 3-5; its old blockers 1-3 and 5-7 were evicted
    // and must hang off 3-5 at the vertices they share with it.
    IndependentSet matching(inst);
    matching.insert(inst.element(2));  // 3-5
    ShadowTable table;
    std::vector<Element> added{inst.element(2)};
    std::vector<Element> removed{inst.element(1), inst.element(3)};
    table.on_augment(added, removed, matching);
    CHECK(table.shadow_at(2, 3) == 1);  // 1-3 keyed at vertex 3
    CHECK(table.shadow_at(2, 5) == 3);  // 5-7 keyed at vertex 5
    CHECK(table.slot_count() == 2);
  }

  SUBCASE("an evicted edge touching no matched edge is discarded") {
    IndependentSet matching(inst);
    matching.insert(inst.element(4));  // 1-2
    ShadowTable table;
    std::vector<Element> added{inst.element(4)};
    std::vector<Element> removed{inst.element(5)};  // 5-6, now isolated
    table.on_augment(added, removed, matching);
    CHECK(table.slot_count() == 0);
    CHECK(table.shadow_ids().empty());
  }
}

TEST_CASE("an evicted edge can come back through a local two-swap") {
  // 3-5 enters, 1-3 evicts it into the shadows, then 1-2 arrives and only
  // the pair {1-2, 3-5} beats the incumbent.
  Instance inst = make_graph(5, {{3, 5, 6.0}, {1, 3, 13.0}, {1, 2, 21.0}});
  ValueOracle oracle = modular_oracle(inst);
  ZelkePolicy policy;
  MemoryStreamSource stream(inst);
  PassResult pass = improve_solution(inst, stream, {}, 1.0, policy, oracle);

  CHECK(pass.solution.members() == std::set<int>{1, 3});
  CHECK(pass.stats.final_weight == 27.0);
  CHECK(pass.stats.killed == std::set<int>{2});
  CHECK(pass.stats.kill_parent.at(2) == 1);  // smallest-id toucher wins
  // The doubly-evicted incumbent is rekeyed at both of its endpoints.
  CHECK(policy.shadows().shadow_at(3, 1) == 2);
  CHECK(policy.shadows().shadow_at(1, 3) == 2);
  CHECK(pass.stats.checks.at("kill_tree_budget").status ==
        CheckOutcome::Status::skipped);
  CHECK(failed_count(pass.stats.checks) == 0);
}

TEST_CASE("random runs respect the shadow and storage budgets") {
  Rng rng(47);
  for (int trial = 0; trial < 40; ++trial) {
    auto family = static_cast<OracleFamilyKind>(trial % 3);
    auto input = random_graph_problem(rng, family, 9000 + trial);
    const Instance& inst = input.instance;
    ValueOracle oracle = make_oracle(input.oracle_spec, inst);
    ZelkePolicy policy;
    MemoryStreamSource stream(inst);
    PassResult pass = improve_solution(inst, stream, {}, 1.0, policy, oracle);

    CHECK(failed_count(pass.stats.checks) == 0);
    int n = inst.vertex_bound();
    CHECK(static_cast<int>(pass.stats.peak_stored) <= 3 * n / 2 + 1);
    CHECK(policy.shadows().slot_count() <= 2 * pass.solution.size());
    CHECK(static_cast<int>(policy.shadows().shadow_ids().size()) <= n);

    // Structural audit: every slot hangs off a live matched edge at one of
    // its own vertices, and the stored shadow touches that vertex.
    for (int matched : pass.solution.members()) {
      for (int v : inst.element(matched).vertices) {
        auto shadow = policy.shadows().shadow_at(matched, v);
        if (!shadow) continue;
        const auto& sv = inst.element(*shadow).vertices;
        CHECK(std::count(sv.begin(), sv.end(), v) == 1);
      }
    }
  }
}

TEST_CASE("one-pass quality stays within the marginal-gain bound") {
  Rng rng(53);
  for (int trial = 0; trial < 25; ++trial) {
    auto family = static_cast<OracleFamilyKind>(trial % 3);
    auto input = random_graph_problem(rng, family, 9500 + trial);
    const Instance& inst = input.instance;
    ValueOracle oracle = make_oracle(input.oracle_spec, inst);
    ZelkePolicy policy;
    MemoryStreamSource stream(inst);
    PassResult pass = improve_solution(inst, stream, {}, 1.0, policy, oracle);
    ValueOracle side = oracle.fresh_counter();
    OptResult opt = exact_opt(inst, side);
    CHECK(approx_le(pass.stats.final_value, opt.value));
    CHECK(approx_le(opt.value, 7.75 * pass.stats.final_value));
  }
}
