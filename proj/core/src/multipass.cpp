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

#include "substream/multipass.hpp"

#include <algorithm>
#include <cmath>

#include "substream/errors.hpp"
#include "substream/policy_simple.hpp"

namespace substream {

std::string to_string(Mode mode) {
  switch (mode) {
    case Mode::graph_msm:
      return "graph_msm";
    case Mode::graph_mwm:
      return "graph_mwm";
    case Mode::hypergraph_msm:
      return "hypergraph_msm";
    case Mode::hypergraph_mwm:
      return "hypergraph_mwm";
    case Mode::matroid_msm:
      return "matroid_msm";
    case Mode::matroid_mwm:
      return "matroid_mwm";
  }
  return "unknown";
}

Mode mode_from_string(const std::string& name) {
  for (Mode m : {Mode::graph_msm, Mode::graph_mwm, Mode::hypergraph_msm,
                 Mode::hypergraph_mwm, Mode::matroid_msm, Mode::matroid_mwm}) {
    if (to_string(m) == name) return m;
  }
  throw ParamError("unknown mode: " + name);
}

bool is_weighted_mode(Mode mode) {
  return mode == Mode::graph_mwm || mode == Mode::hypergraph_mwm ||
         mode == Mode::matroid_mwm;
}

InstanceKind kind_for_mode(Mode mode) {
  switch (mode) {
    case Mode::graph_msm:
    case Mode::graph_mwm:
      return InstanceKind::graph;
    case Mode::hypergraph_msm:
    case Mode::hypergraph_mwm:
      return InstanceKind::hypergraph;
    case Mode::matroid_msm:
    case Mode::matroid_mwm:
      return InstanceKind::matroid_intersection;
  }
  return InstanceKind::graph;
}

double kappa_value(Mode mode, int p, double gamma) {
  if (kind_for_mode(mode) == InstanceKind::graph) p = 2;
  if (p < 1) throw ParamError("kappa: p must be >= 1");
  if (!(gamma > 0.0)) throw ParamError("kappa: gamma must be positive");
  double g2 = gamma * gamma;
  double g3 = g2 * gamma;
  double denom;
  if (is_weighted_mode(mode)) {
    denom = (p - 1) * (1.0 + gamma) * (1.0 + gamma) - g3;
  } else {
    denom = p + (2.0 * p - 1.0) * gamma + (p - 1) * g2 - g3;
  }
  if (!(denom > 0.0)) {
    throw ParamError("kappa: nonpositive denominator; epsilon too large for "
                     "this arity");
  }
  return g3 / denom;
}

double first_pass_ratio(Mode mode, int p) {
  if (kind_for_mode(mode) == InstanceKind::graph) p = 2;
  if (is_weighted_mode(mode)) {
    return 2.0 * (p + std::sqrt(static_cast<double>(p) * (p - 1))) - 1.0;
  }
  return 4.0 * p;
}

MultiPassConfig default_config(Mode mode, int p, double epsilon) {
  if (!(epsilon > 0.0)) {
    throw ParamError("multipass: epsilon must be positive");
  }
  if (kind_for_mode(mode) == InstanceKind::graph) p = 2;
  if (p < 1) throw ParamError("multipass: p must be >= 1");

  MultiPassConfig cfg;
  cfg.mode = mode;
  cfg.p = p;
  cfg.epsilon = epsilon;
  switch (mode) {
    case Mode::graph_msm:
      cfg.gamma_first = 1.0;
      cfg.gamma_rest = epsilon / 3.0;
      break;
    case Mode::graph_mwm:
      cfg.gamma_first = 1.0 / std::sqrt(2.0);
      cfg.gamma_rest = 2.0 * epsilon / 3.0;
      break;
    case Mode::hypergraph_msm:
    case Mode::matroid_msm:
      cfg.gamma_first = 1.0;
      cfg.gamma_rest = epsilon / (p + 1.0);
      break;
    case Mode::hypergraph_mwm:
    case Mode::matroid_mwm:
      cfg.gamma_first = std::sqrt((p - 1.0) / p);
      cfg.gamma_rest = epsilon / (p + 1.0);
      break;
  }
  if (!(cfg.gamma_first > 0.0)) {
    // p = 1 weighted modes have no useful bootstrap parameter.
    throw ParamError("multipass: no first-pass gamma for this mode at p = " +
                     std::to_string(p));
  }
  cfg.kappa = kappa_value(mode, p, cfg.gamma_rest);
  double passes_needed =
      std::log(first_pass_ratio(mode, p)) / std::log1p(cfg.kappa);
  cfg.pass_cap = 2 + static_cast<int>(std::ceil(passes_needed)) + 2;
  return cfg;
}

namespace {

void record(CheckResults& checks, const std::string& name, bool ok,
            const std::string& detail) {
  auto status =
      ok ? CheckOutcome::Status::pass : CheckOutcome::Status::fail;
  auto it = checks.find(name);
  if (it == checks.end()) {
    checks[name] = CheckOutcome{status, detail};
  } else if (!ok && it->second.status != CheckOutcome::Status::fail) {
    it->second = CheckOutcome{status, detail};  // first failure wins
  }
}

std::vector<Element> sorted_elements(const std::map<int, Element>& kept) {
  std::vector<Element> out;
  out.reserve(kept.size());
  for (const auto& [id, e] : kept) out.push_back(e);
  return out;
}

}  // namespace

MultiPassOutcome run_multipass(const Instance& instance, StreamSource& stream,
                               ValueOracle& oracle,
                               const MultiPassConfig& config) {
  if (instance.kind() != kind_for_mode(config.mode)) {
    throw ParamError("multipass: mode " + to_string(config.mode) +
                     " does not match a " + to_string(instance.kind()) +
                     " instance");
  }
  if (config.pass_cap < 2) {
    throw ParamError("multipass: pass cap must be at least 2");
  }
  const bool weighted = is_weighted_mode(config.mode);

  SimplePolicy policy;
  PassResult prev = improve_solution(instance, stream, {}, config.gamma_first,
                                     policy, oracle, 1);
  MultiPassOutcome out{IndependentSet(instance), {}, {}, {}, 0};
  out.passes.push_back(prev.stats);
  int tau = 1;

  while (true) {
    if (tau >= config.pass_cap) {
      out.pass_cap_hit = true;
      break;
    }
    // The yardstick for this pass's improvement: the previous solution as
    // the previous pass valued it.
    double w_prev =
        weighted ? prev.stats.final_weight : prev.stats.final_value;
    std::vector<Element> prime = sorted_elements(prev.kept);
    PassResult cur = improve_solution(instance, stream, prime,
                                      config.gamma_rest, policy, oracle,
                                      tau + 1);
    ++tau;

    // Priming replays the previous solution with telescoping marginals, so
    // the weights it assigns must reproduce the yardstick.
    record(out.checks, "prime_telescoping",
           approx_le(cur.stats.prime_weight_total, w_prev) &&
               approx_le(w_prev, cur.stats.prime_weight_total),
           "pass " + std::to_string(tau) + ": primed weight " +
               std::to_string(cur.stats.prime_weight_total) + " vs " +
               std::to_string(w_prev));

    // Retained elements were primed without evicting anyone and are never
    // reconsidered, so they must have no eviction subtree.
    std::set<int> retained;
    for (int id : cur.solution.members()) {
      if (prev.solution.contains(id)) retained.insert(id);
    }
    bool no_kills = true;
    for (const auto& [victim, killer] : cur.stats.kill_parent) {
      if (retained.count(killer)) no_kills = false;
    }
    record(out.checks, "retained_no_evictions", no_kills,
           "pass " + std::to_string(tau));

    double w_cur = cur.stats.final_weight;
    double retained_weight = 0.0;
    for (int id : retained) retained_weight += cur.weights.at(id);

    bool stop;
    if (w_prev == 0.0) {
      stop = w_cur == 0.0;  // the improvement ratio is undefined; a stream
                            // worth nothing must still terminate
    } else {
      stop = w_cur / w_prev <= 1.0 + config.kappa;
    }

    prev = std::move(cur);
    out.passes.push_back(prev.stats);

    if (stop) {
      out.stopped_by_rule = true;
      // At the stopping pass the retained share of the weight is pinned by
      // the rule: w(B) / w(M) >= (gamma - kappa) / (gamma + gamma kappa).
      if (w_cur > 0.0) {
        double share = retained_weight / w_cur;
        double floor = (config.gamma_rest - config.kappa) /
                       (config.gamma_rest + config.gamma_rest * config.kappa);
        record(out.checks, "retained_weight_share",
               share >= floor - kCheckRelTol,
               "share " + std::to_string(share) + " vs floor " +
                   std::to_string(floor));
      } else {
        record(out.checks, "retained_weight_share", true, "final pass empty");
      }
      break;
    }
  }

  if (!out.checks.count("retained_weight_share")) {
    out.checks["retained_weight_share"] =
        CheckOutcome{CheckOutcome::Status::skipped,
                     "run ended without satisfying the stopping rule"};
  }

  // Every pass before the stopper must have improved by more than 1+kappa.
  bool monotone = true;
  std::string detail;
  for (std::size_t i = 1; i + 1 < out.passes.size(); ++i) {
    double before = weighted ? out.passes[i - 1].final_weight
                             : out.passes[i - 1].final_value;
    double after = out.passes[i].final_weight;
    if (before == 0.0 ? after <= 0.0
                      : after <= (1.0 + config.kappa) * before) {
      monotone = false;
      detail = "pass " + std::to_string(i + 1) + " gained too little yet ran";
      break;
    }
  }
  record(out.checks, "improvement_monotonic", monotone, detail);

  out.pass_count = tau;
  out.solution = std::move(prev.solution);
  out.kept = std::move(prev.kept);
  out.weights = std::move(prev.weights);
  out.final_value = prev.stats.final_value;
  out.final_weight = prev.stats.final_weight;
  return out;
}

}  // namespace substream
