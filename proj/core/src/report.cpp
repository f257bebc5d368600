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

#include "substream/report.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>

#include <nlohmann/json.hpp>

#include "substream/errors.hpp"

namespace substream {

using json = nlohmann::json;

long RunReport::total_oracle_calls() const {
  long total = 0;
  for (const auto& pass : passes) total += pass.oracle_calls;
  return total;
}

int RunReport::max_peak_stored() const {
  int peak = 0;
  for (const auto& pass : passes) peak = std::max(peak, pass.peak_stored);
  return peak;
}

int RunReport::failed_checks() const {
  int total = failed_count(run_checks);
  for (const auto& pass : passes) total += failed_count(pass.checks);
  return total;
}

namespace {

const char* status_name(CheckOutcome::Status status) {
  switch (status) {
    case CheckOutcome::Status::pass:
      return "pass";
    case CheckOutcome::Status::fail:
      return "fail";
    case CheckOutcome::Status::skipped:
      return "skipped";
  }
  return "unknown";
}

json checks_to_json(const CheckResults& checks) {
  json out = json::object();
  for (const auto& [name, outcome] : checks) {
    json entry;
    entry["status"] = status_name(outcome.status);
    if (!outcome.detail.empty() &&
        outcome.status != CheckOutcome::Status::pass) {
      entry["detail"] = outcome.detail;
    }
    out[name] = std::move(entry);
  }
  return out;
}

json pass_to_json(const PassStats& stats) {
  json out;
  out["pass"] = stats.pass_index;
  out["gamma"] = stats.gamma;
  out["primed"] = stats.primed_count;
  out["elements"] = stats.elements_processed;
  out["accepts"] = stats.accept_count;
  out["oracle_calls"] = stats.oracle_calls;
  out["peak_stored"] = stats.peak_stored;
  out["prime_weight"] = stats.prime_weight_total;
  out["replaced_weight"] = stats.removed_weight_total;
  out["killed_weight"] = stats.killed_weight;
  out["killed_count"] = static_cast<long>(stats.killed.size());
  out["solution_weight"] = stats.final_weight;
  out["solution_value"] = stats.final_value;
  out["checks"] = checks_to_json(stats.checks);
  return out;
}

}  // namespace

std::string serialize_report(const RunReport& report) {
  json out;
  out["algo"] = report.algo;
  out["mode"] = report.mode;
  out["instance"]["kind"] = report.instance_kind;
  out["instance"]["oracle"] = report.oracle_family;
  out["instance"]["n"] = report.n;
  out["instance"]["p"] = report.p;
  out["instance"]["m"] = report.m;
  out["params"] = report.params;
  json passes = json::array();
  for (const auto& pass : report.passes) passes.push_back(pass_to_json(pass));
  out["passes"] = std::move(passes);
  out["checks"] = checks_to_json(report.run_checks);
  out["pass_count"] = report.pass_count;
  if (report.stopped_by_rule) out["stopped_by_rule"] = *report.stopped_by_rule;
  if (report.chosen_branch) out["chosen_branch"] = *report.chosen_branch;
  out["final"]["value"] = report.final_value;
  out["final"]["weight"] = report.final_weight;
  out["final"]["size"] = static_cast<long>(report.final_members.size());
  out["final"]["members"] = report.final_members;
  if (report.exact_value) out["exact"]["value"] = *report.exact_value;
  if (report.realized_ratio) out["exact"]["ratio"] = *report.realized_ratio;
  if (report.curvature) out["curvature"] = *report.curvature;
  if (report.applicable_bound) out["applicable_bound"] = *report.applicable_bound;
  out["resources"]["oracle_calls"] = report.total_oracle_calls();
  out["resources"]["peak_stored"] = report.max_peak_stored();
  out["anomalies"] = report.anomalies;
  out["failed_checks"] = report.failed_checks();
  out["ok"] = report.ok;
  return out.dump(2) + "\n";
}

void write_report_atomic(const std::string& path, const RunReport& report) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw Error("report: cannot open " + tmp + " for writing");
    out << serialize_report(report);
    if (!out.good()) throw Error("report: write to " + tmp + " failed");
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    throw Error("report: cannot move " + tmp + " into place");
  }
}

}  // namespace substream
