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

#ifndef SUBSTREAM_RUNNER_HPP_
#define SUBSTREAM_RUNNER_HPP_

#include <optional>
#include <string>

#include "substream/formats.hpp"
#include "substream/multipass.hpp"
#include "substream/report.hpp"

namespace substream {

enum class Algo {
  zelke,
  mcgregor1p,
  hypergraph1p,
  matroid1p,
  multipass,
  dual_zelke,
  dual_simple,
};

std::string to_string(Algo algo);
Algo algo_from_string(const std::string& name);

// fast: the per-pass and cross-pass invariants that cost nothing extra.
// full: additionally brute-force the optimum (size permitting), record the
// realized ratio, verify the optimum's marginal-weight bound per pass, and
// compute the oracle's total curvature offline.
enum class CheckLevel { fast, full };

struct ExperimentConfig {
  Algo algo = Algo::mcgregor1p;
  std::optional<Mode> mode;      // multipass only; defaults to the msm mode
  std::optional<double> gamma;   // one-pass parameter override
  double epsilon = 0.5;          // multipass accuracy target
  std::optional<int> pass_cap;   // multipass override
  CheckLevel check_level = CheckLevel::fast;
  std::size_t exact_cap = 22;
  // Self-test hook: "bad-pair" makes the policy emit one illegal proposal
  // so harness plumbing for failed runs can be exercised end to end.
  std::string inject_fault;
};

// Executes one experiment: runs the selected algorithm over the stream,
// evaluates every applicable runtime check, optionally cross-checks against
// the exhaustive optimum, and fills a deterministic report. Guard and
// invariant violations are caught and turn into a failed report rather than
// propagating.
RunReport run_experiment(const ProblemInput& input, StreamSource& stream,
                         const ExperimentConfig& config);

}  // namespace substream

#endif  // SUBSTREAM_RUNNER_HPP_
