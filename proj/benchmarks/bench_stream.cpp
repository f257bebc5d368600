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

#include <benchmark/benchmark.h>

#include "substream/generators.hpp"
#include "substream/multipass.hpp"
#include "substream/policy_simple.hpp"
#include "substream/policy_zelke.hpp"

namespace {

using namespace substream;

ProblemInput dense_graph(int n, int m, OracleFamilyKind family) {
  GenSpec spec;
  spec.kind = InstanceKind::graph;
  spec.n = n;
  spec.m = m;
  spec.family = family;
  spec.seed = 99;
  return generate_instance(spec);
}

void BM_OracleValue(benchmark::State& state) {
  auto input = dense_graph(200, static_cast<int>(state.range(0)),
                           OracleFamilyKind::coverage);
  ValueOracle oracle = make_oracle(input.oracle_spec, input.instance);
  std::set<int> all = input.instance.ground_ids();
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle.value(all));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_OracleValue)->Arg(64)->Arg(512)->Arg(4096);

void BM_OnePassSimple(benchmark::State& state) {
  auto input = dense_graph(500, static_cast<int>(state.range(0)),
                           OracleFamilyKind::modular);
  for (auto _ : state) {
    ValueOracle oracle = make_oracle(input.oracle_spec, input.instance);
    SimplePolicy policy;
    MemoryStreamSource stream(input.instance);
    auto pass = improve_solution(input.instance, stream, {}, 1.0, policy,
                                 oracle);
    benchmark::DoNotOptimize(pass.stats.final_value);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_OnePassSimple)->Arg(1000)->Arg(10000);

void BM_OnePassZelke(benchmark::State& state) {
  auto input = dense_graph(500, static_cast<int>(state.range(0)),
                           OracleFamilyKind::saturated_additive);
  for (auto _ : state) {
    ValueOracle oracle = make_oracle(input.oracle_spec, input.instance);
    ZelkePolicy policy;
    MemoryStreamSource stream(input.instance);
    auto pass = improve_solution(input.instance, stream, {}, 1.0, policy,
                                 oracle);
    benchmark::DoNotOptimize(pass.stats.final_value);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_OnePassZelke)->Arg(1000)->Arg(10000);

void BM_MultiPass(benchmark::State& state) {
  auto input = dense_graph(200, 2000, OracleFamilyKind::coverage);
  for (auto _ : state) {
    ValueOracle oracle = make_oracle(input.oracle_spec, input.instance);
    MemoryStreamSource stream(input.instance);
    auto cfg = default_config(Mode::graph_msm, 2, 0.5);
    auto out = run_multipass(input.instance, stream, oracle, cfg);
    benchmark::DoNotOptimize(out.final_value);
  }
}
BENCHMARK(BM_MultiPass);

}  // namespace

BENCHMARK_MAIN();
