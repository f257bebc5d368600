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
//
// Command-line front end: run experiments, brute-force optima, generate
// instances, measure curvature, and benchmark, over the instance file
// formats described in the README.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <iostream>
#include <thread>

#include <CLI11.hpp>

#include "substream/baselines.hpp"
#include "substream/curvature_select.hpp"
#include "substream/errors.hpp"
#include "substream/generators.hpp"
#include "substream/runner.hpp"

namespace {

using namespace substream;

constexpr int kExitOk = 0;
constexpr int kExitRunFailed = 1;
constexpr int kExitUsage = 2;

std::string resolve_report_path(const std::string& path) {
  if (path.empty() || path.front() == '/') return path;
  const char* dir = std::getenv("SUBSTREAM_REPORT_DIR");
  if (!dir || !*dir) return path;
  return std::string(dir) + "/" + path;
}

struct RunArgs {
  std::string input;
  std::string algo = "mcgregor1p";
  std::string mode;
  double gamma = -1.0;
  double epsilon = 0.5;
  int pass_cap = -1;
  std::string check_level = "fast";
  std::string report_path;
  std::string inject_fault;
};

int cmd_run(const RunArgs& args) {
  ProblemInput input = parse_instance_file(args.input);
  ExperimentConfig config;
  config.algo = algo_from_string(args.algo);
  if (!args.mode.empty()) config.mode = mode_from_string(args.mode);
  if (args.gamma > 0.0) config.gamma = args.gamma;
  config.epsilon = args.epsilon;
  if (args.pass_cap > 0) config.pass_cap = args.pass_cap;
  config.check_level =
      args.check_level == "full" ? CheckLevel::full : CheckLevel::fast;
  config.inject_fault = args.inject_fault;

  RunReport report;
  if (config.algo == Algo::multipass) {
    // Multi-pass runs re-read the file each pass instead of holding the
    // whole stream in memory.
    FileStreamSource stream(args.input);
    report = run_experiment(input, stream, config);
  } else {
    MemoryStreamSource stream(input.instance);
    report = run_experiment(input, stream, config);
  }

  if (!args.report_path.empty()) {
    write_report_atomic(resolve_report_path(args.report_path), report);
  }
  std::cout << "algo=" << report.algo << " passes=" << report.pass_count
            << " value=" << format_double(report.final_value)
            << " size=" << report.final_members.size()
            << " oracle_calls=" << report.total_oracle_calls()
            << " peak_stored=" << report.max_peak_stored();
  if (report.realized_ratio) {
    std::cout << " ratio=" << format_double(*report.realized_ratio);
  }
  if (report.curvature) {
    std::cout << " curvature=" << format_double(*report.curvature);
  }
  std::cout << (report.ok ? " ok" : " FAILED") << "\n";
  if (!report.ok) {
    for (const auto& a : report.anomalies) std::cerr << "anomaly: " << a << "\n";
    return kExitRunFailed;
  }
  return kExitOk;
}

int cmd_exact(const std::string& input_path, std::size_t cap) {
  ProblemInput input = parse_instance_file(input_path);
  ValueOracle oracle = make_oracle(input.oracle_spec, input.instance);
  OptResult best = exact_opt(input.instance, oracle, cap);
  std::cout << "value=" << format_double(best.value) << " members=[";
  for (std::size_t i = 0; i < best.ids.size(); ++i) {
    std::cout << (i ? " " : "") << best.ids[i];
  }
  std::cout << "] oracle_calls=" << oracle.call_count() << "\n";
  return kExitOk;
}

int cmd_greedy(const std::string& input_path) {
  ProblemInput input = parse_instance_file(input_path);
  ValueOracle oracle = make_oracle(input.oracle_spec, input.instance);
  OptResult picked = offline_greedy(input.instance, oracle);
  std::cout << "value=" << format_double(picked.value) << " members=[";
  for (std::size_t i = 0; i < picked.ids.size(); ++i) {
    std::cout << (i ? " " : "") << picked.ids[i];
  }
  std::cout << "] oracle_calls=" << oracle.call_count() << "\n";
  return kExitOk;
}

int cmd_curvature(const std::string& input_path) {
  ProblemInput input = parse_instance_file(input_path);
  ValueOracle oracle = make_oracle(input.oracle_spec, input.instance);
  double curv = total_curvature(oracle, input.instance.ground_ids());
  std::cout << "curvature=" << format_double(curv) << "\n";
  return kExitOk;
}

struct GenArgs {
  std::string kind = "graph";
  int n = 8;
  int m = 12;
  int p = 2;
  int left = 0;
  int right = 0;
  std::string family = "modular";
  std::uint64_t seed = 1;
  std::string out;
};

int cmd_gen(const GenArgs& args) {
  OracleFamilyKind family;
  if (args.family == "modular") {
    family = OracleFamilyKind::modular;
  } else if (args.family == "coverage") {
    family = OracleFamilyKind::coverage;
  } else if (args.family == "saturated_additive") {
    family = OracleFamilyKind::saturated_additive;
  } else {
    throw ParamError("unknown oracle family: " + args.family);
  }

  ProblemInput generated = [&] {
    if (args.kind == "bipartite") {
      int left = args.left > 0 ? args.left : std::max(1, args.n / 2);
      int right = args.right > 0 ? args.right : std::max(1, args.n - left);
      return generate_bipartite_encoding(left, right, args.m, family,
                                         args.seed)
          .matroid;
    }
    GenSpec spec;
    if (args.kind == "graph") {
      spec.kind = InstanceKind::graph;
    } else if (args.kind == "hypergraph") {
      spec.kind = InstanceKind::hypergraph;
    } else if (args.kind == "matroid") {
      spec.kind = InstanceKind::matroid_intersection;
    } else {
      throw ParamError("unknown kind: " + args.kind);
    }
    spec.n = args.n;
    spec.m = args.m;
    spec.p = args.p;
    spec.family = family;
    spec.seed = args.seed;
    return generate_instance(spec);
  }();

  if (args.out.empty()) {
    write_instance(std::cout, generated.instance, generated.oracle_spec);
  } else {
    write_instance_file(args.out, generated.instance, generated.oracle_spec);
    std::cout << "wrote " << args.out << " (" << generated.instance.size()
              << " elements)\n";
  }
  return kExitOk;
}

struct BenchArgs {
  int threads = 0;
  int repeats = 3;
  std::uint64_t seed = 1;
  std::string out_dir;
};

int cmd_bench(const BenchArgs& args) {
  struct Job {
    std::string label;
    ExperimentConfig config;
    GenSpec spec;
  };
  std::vector<Job> jobs;
  for (int r = 0; r < args.repeats; ++r) {
    for (auto family : {OracleFamilyKind::modular, OracleFamilyKind::coverage,
                        OracleFamilyKind::saturated_additive}) {
      GenSpec spec;
      spec.kind = InstanceKind::graph;
      spec.n = 60;
      spec.m = 600;
      spec.family = family;
      spec.seed = args.seed + static_cast<std::uint64_t>(r);
      for (auto algo : {Algo::mcgregor1p, Algo::zelke, Algo::multipass}) {
        ExperimentConfig config;
        config.algo = algo;
        config.epsilon = 0.5;
        jobs.push_back({to_string(algo) + "/" + to_string(family) + "/s" +
                            std::to_string(spec.seed),
                        config, spec});
      }
    }
  }

  int workers = args.threads > 0
                    ? args.threads
                    : static_cast<int>(std::thread::hardware_concurrency());
  if (workers < 1) workers = 1;

  struct Row {
    std::string label;
    double value;
    long calls;
    int peak;
    double millis;
    bool ok;
  };
  std::vector<Row> rows(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= jobs.size()) return;
      const Job& job = jobs[i];
      ProblemInput input = generate_instance(job.spec);
      MemoryStreamSource stream(input.instance);
      auto start = std::chrono::steady_clock::now();
      RunReport report = run_experiment(input, stream, job.config);
      auto stop = std::chrono::steady_clock::now();
      if (!args.out_dir.empty()) {
        write_report_atomic(args.out_dir + "/" + std::to_string(i) + ".json",
                            report);
      }
      rows[i] = Row{job.label, report.final_value,
                    report.total_oracle_calls(), report.max_peak_stored(),
                    std::chrono::duration<double, std::milli>(stop - start)
                        .count(),
                    report.ok};
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < workers; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  std::cout << "label value oracle_calls peak_stored millis ok\n";
  bool all_ok = true;
  for (const auto& row : rows) {
    std::cout << row.label << " " << format_double(row.value) << " "
              << row.calls << " " << row.peak << " "
              << format_double(row.millis) << " " << (row.ok ? "yes" : "NO")
              << "\n";
    all_ok = all_ok && row.ok;
  }
  return all_ok ? kExitOk : kExitRunFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Streaming submodular matching and independent-set toolkit"};
  app.require_subcommand(1);

  RunArgs run_args;
  auto* run = app.add_subcommand("run", "Run a streaming algorithm");
  run->add_option("--input", run_args.input, "Instance file")->required();
  run->add_option("--algo", run_args.algo,
                  "zelke|mcgregor1p|hypergraph1p|matroid1p|multipass|"
                  "dual-zelke|dual-simple");
  run->add_option("--mode", run_args.mode,
                  "multipass objective, e.g. graph_msm or hypergraph_mwm");
  run->add_option("--gamma", run_args.gamma, "One-pass trade-off parameter");
  run->add_option("--eps", run_args.epsilon, "Multipass accuracy target");
  run->add_option("--pass-cap", run_args.pass_cap, "Multipass pass cap");
  run->add_option("--check-level", run_args.check_level, "fast|full")
      ->check(CLI::IsMember({"fast", "full"}));
  run->add_option("--report", run_args.report_path,
                  "Report file (relative paths land in $SUBSTREAM_REPORT_DIR)");
  run->add_option("--inject-fault", run_args.inject_fault,
                  "Self-test hook: bad-pair")
      ->group("");  // hidden

  std::string exact_input;
  std::size_t exact_cap = 22;
  auto* exact = app.add_subcommand("exact", "Brute-force the optimum");
  exact->add_option("--input", exact_input, "Instance file")->required();
  exact->add_option("--cap", exact_cap, "Largest element count accepted");

  std::string greedy_input;
  auto* greedy = app.add_subcommand("greedy", "Offline greedy baseline");
  greedy->add_option("--input", greedy_input, "Instance file")->required();

  std::string curvature_input;
  auto* curvature =
      app.add_subcommand("curvature", "Total curvature of the oracle");
  curvature->add_option("--input", curvature_input, "Instance file")
      ->required();

  GenArgs gen_args;
  auto* gen = app.add_subcommand("gen", "Generate a random instance");
  gen->add_option("--kind", gen_args.kind,
                  "graph|hypergraph|matroid|bipartite");
  gen->add_option("--n", gen_args.n, "Vertex count");
  gen->add_option("--m", gen_args.m, "Element count");
  gen->add_option("--p", gen_args.p, "Arity / matroid count");
  gen->add_option("--left", gen_args.left, "Bipartite left side size");
  gen->add_option("--right", gen_args.right, "Bipartite right side size");
  gen->add_option("--family", gen_args.family,
                  "modular|coverage|saturated_additive");
  gen->add_option("--seed", gen_args.seed, "Generator seed");
  gen->add_option("--out", gen_args.out, "Output file (default stdout)");

  BenchArgs bench_args;
  auto* bench = app.add_subcommand("bench", "Benchmark the algorithm matrix");
  bench->add_option("--threads", bench_args.threads, "Worker threads");
  bench->add_option("--repeats", bench_args.repeats, "Seeds per config");
  bench->add_option("--seed", bench_args.seed, "Base seed");
  bench->add_option("--out-dir", bench_args.out_dir,
                    "Directory for per-run reports");

  try {
    app.parse(argc, argv);
    if (run->parsed()) return cmd_run(run_args);
    if (exact->parsed()) return cmd_exact(exact_input, exact_cap);
    if (greedy->parsed()) return cmd_greedy(greedy_input);
    if (curvature->parsed()) return cmd_curvature(curvature_input);
    if (gen->parsed()) return cmd_gen(gen_args);
    if (bench->parsed()) return cmd_bench(bench_args);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParamError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const SizeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRunFailed;
  }
  return kExitUsage;
}
