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

#include "substream/errors.hpp"
#include "substream/independent_set.hpp"
#include "test_support.hpp"

using namespace substream;
using namespace substream::testing;

TEST_CASE("instance validation rejects malformed elements") {
  CHECK_THROWS_AS(make_graph(4, {{1, 1, 1.0}}), ParamError);  // self-loop
  CHECK_THROWS_AS(make_graph(2, {{1, 3, 1.0}}), ParamError);  // out of range
  CHECK_THROWS_AS(make_graph(4, {{1, 2, 1.0}, {1, 2, 2.0}}),
                  ParamError);  // duplicate edge
  CHECK_THROWS_AS(make_graph(4, {{1, 2, -1.0}}), ParamError);
  CHECK_THROWS_AS(make_hypergraph(5, 2, {{1, 2, 3}}), ParamError);  // > p
  std::vector<Element> dup(2);
  dup[0].id = 3;
  dup[1].id = 3;
  CHECK_THROWS_AS(
      Instance(InstanceKind::matroid_intersection, 2, 1, dup,
               {PartitionMatroid({{3}}, {1})}),
      ParamError);
}

TEST_CASE("conflicts finds every member touching the probe set") {
  // Both members share an endpoint with the middle edge.
  Instance inst = make_graph(4, {{1, 2}, {3, 4}, {2, 3}});
  IndependentSet I(inst);
  I.insert(inst.element(1));
  I.insert(inst.element(2));

  std::vector<Element> probe{inst.element(3)};
  CHECK(conflicts(I, probe) == std::set<int>{1, 2});

  SUBCASE("vertex-disjoint probe yields nothing") {
    Instance inst2 = make_graph(4, {{1, 2}, {3, 4}});
    IndependentSet J(inst2);
    J.insert(inst2.element(1));
    std::vector<Element> far{inst2.element(2)};
    CHECK(conflicts(J, far).empty());
  }

  SUBCASE("hyperedges conflict through any shared vertex") {
    Instance h = make_hypergraph(5, 3, {{1, 2, 3}, {3, 4, 5}});
    IndependentSet K(h);
    K.insert(h.element(1));
    std::vector<Element> probe3{h.element(2)};
    CHECK(conflicts(K, probe3) == std::set<int>{1});
  }

  SUBCASE("matroid instances have no vertex conflicts") {
    Instance m = make_matroid_instance(
        2, 2, {PartitionMatroid({{1, 2}}, {1})});
    IndependentSet L(m);
    std::vector<Element> probe4{m.element(1)};
    CHECK_THROWS_AS(conflicts(L, probe4), ContractViolation);
  }
}

TEST_CASE("conflicts of a single element stays within the arity") {
  Rng rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    auto input = random_graph_problem(rng, OracleFamilyKind::modular,
                                      1000 + trial);
    const Instance& inst = input.instance;
    IndependentSet I(inst);
    for (const auto& e : inst.elements()) {
      if (I.can_insert(e)) I.insert(e);
    }
    for (const auto& e : inst.elements()) {
      if (I.contains(e.id)) continue;
      std::vector<Element> probe{e};
      CHECK(conflicts(I, probe).size() <= 2);
    }
  }
  for (int trial = 0; trial < 20; ++trial) {
    auto input =
        random_hypergraph_problem(rng, 3, OracleFamilyKind::modular,
                                  2000 + trial);
    const Instance& inst = input.instance;
    IndependentSet I(inst);
    for (const auto& e : inst.elements()) {
      if (I.can_insert(e)) I.insert(e);
    }
    for (const auto& e : inst.elements()) {
      if (I.contains(e.id)) continue;
      std::vector<Element> probe{e};
      CHECK(conflicts(I, probe).size() <= 3);
    }
  }
}

TEST_CASE("apply_augment handles swaps, inserts and partial replacement") {
  Instance inst = make_graph(6, {{1, 2}, {3, 4}, {1, 3}, {5, 6}});

  SUBCASE("swap") {
    IndependentSet I(inst);
    I.insert(inst.element(1));
    std::vector<Element> add{inst.element(3)};
    std::vector<Element> remove{inst.element(1)};
    apply_augment(I, add, remove);
    CHECK(I.members() == std::set<int>{3});
    validate_independent(I);
  }

  SUBCASE("insert into empty") {
    IndependentSet I(inst);
    std::vector<Element> add{inst.element(4)};
    apply_augment(I, add, {});
    CHECK(I.members() == std::set<int>{4});
    validate_independent(I);
  }

  SUBCASE("partial replacement") {
    IndependentSet I(inst);
    I.insert(inst.element(1));  // 1-2
    I.insert(inst.element(2));  // 3-4
    std::vector<Element> add{inst.element(4)};     // 5-6
    std::vector<Element> remove{inst.element(1)};  // drop 1-2
    apply_augment(I, add, remove);
    CHECK(I.members() == std::set<int>{2, 4});
    validate_independent(I);
  }

  SUBCASE("dependent result throws") {
    IndependentSet I(inst);
    I.insert(inst.element(1));  // 1-2
    std::vector<Element> add{inst.element(3)};  // 1-3 shares vertex 1
    CHECK_THROWS_AS(apply_augment(I, add, {}), InvariantViolation);
  }
}

TEST_CASE("random augment churn keeps the occupancy maps consistent") {
  Rng rng(11);
  for (int trial = 0; trial < 25; ++trial) {
    auto input =
        random_graph_problem(rng, OracleFamilyKind::modular, 3000 + trial);
    const Instance& inst = input.instance;
    IndependentSet I(inst);
    for (int step = 0; step < 60; ++step) {
      const Element& e = inst.elements()[static_cast<std::size_t>(
          rng.uniform(0, static_cast<int>(inst.size()) - 1))];
      if (I.contains(e.id)) {
        std::vector<Element> remove{e};
        apply_augment(I, {}, remove);
      } else {
        std::vector<Element> add{e};
        std::set<int> clash = conflicts(I, add);
        std::vector<Element> remove;
        for (int id : clash) remove.push_back(inst.element(id));
        apply_augment(I, add, remove);
      }
      validate_independent(I);
    }
  }
}

TEST_CASE("usage counters track matroid membership") {
  PartitionMatroid left({{1, 2}, {3}}, {1, 1});
  PartitionMatroid right({{1}, {2, 3}}, {1, 2});
  Instance inst = make_matroid_instance(2, 3, {left, right});
  IndependentSet I(inst);
  I.insert(inst.element(2));
  CHECK(I.usage(0, 0) == 1);
  CHECK(I.usage(1, 1) == 1);
  CHECK_FALSE(I.can_insert(inst.element(1)));  // left part {1,2} is full
  CHECK(I.can_insert(inst.element(3)));
  I.insert(inst.element(3));
  validate_independent(I);
  I.erase(inst.element(2));
  CHECK(I.usage(0, 0) == 0);
  CHECK(I.can_insert(inst.element(1)));
}
