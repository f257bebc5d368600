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

#ifndef SUBSTREAM_REPORT_HPP_
#define SUBSTREAM_REPORT_HPP_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "substream/framework.hpp"

namespace substream {

// Everything one experiment run reports: per-pass metrics, check outcomes,
// resources, and (when computed) the exhaustive optimum, realized ratio and
// curvature. Serialization is deterministic: stable key order, no clocks.
struct RunReport {
  std::string algo;
  std::string mode;
  std::string instance_kind;
  std::string oracle_family;
  int n = 0;
  int p = 0;
  long m = 0;

  std::map<std::string, double> params;
  std::vector<PassStats> passes;
  CheckResults run_checks;  // cross-pass and harness-level checks

  int pass_count = 0;
  std::optional<bool> stopped_by_rule;  // multi-pass runs only
  std::optional<int> chosen_branch;     // dual runs only

  double final_value = 0.0;
  double final_weight = 0.0;
  std::vector<int> final_members;

  std::optional<double> exact_value;
  std::optional<double> realized_ratio;
  std::optional<double> curvature;
  std::optional<double> applicable_bound;

  std::vector<std::string> anomalies;
  bool ok = true;

  long total_oracle_calls() const;
  int max_peak_stored() const;
  int failed_checks() const;
};

// Stable, human-readable serialization (JSON, sorted keys, two-space
// indent, trailing newline). Identical runs produce identical bytes.
std::string serialize_report(const RunReport& report);

// Writes through a temp file in the same directory, then renames it in.
void write_report_atomic(const std::string& path, const RunReport& report);

}  // namespace substream

#endif  // SUBSTREAM_REPORT_HPP_
