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

#include "substream/runner.hpp"

#include <algorithm>

#include "substream/baselines.hpp"
#include "substream/curvature_select.hpp"
#include "substream/errors.hpp"
#include "substream/policy_simple.hpp"
#include "substream/policy_zelke.hpp"

namespace substream {

std::string to_string(Algo algo) {
  switch (algo) {
    case Algo::zelke:
      return "zelke";
    case Algo::mcgregor1p:
      return "mcgregor1p";
    case Algo::hypergraph1p:
      return "hypergraph1p";
    case Algo::matroid1p:
      return "matroid1p";
    case Algo::multipass:
      return "multipass";
    case Algo::dual_zelke:
      return "dual-zelke";
    case Algo::dual_simple:
      return "dual-simple";
  }
  return "unknown";
}

Algo algo_from_string(const std::string& name) {
  for (Algo a : {Algo::zelke, Algo::mcgregor1p, Algo::hypergraph1p,
                 Algo::matroid1p, Algo::multipass, Algo::dual_zelke,
                 Algo::dual_simple}) {
    if (to_string(a) == name) return a;
  }
  throw ParamError("unknown algorithm: " + name);
}

namespace {

// Wraps a policy and corrupts its first proposal; exercises the failed-run
// plumbing end to end.
class BadPairPolicy final : public Policy {
 public:
  explicit BadPairPolicy(Policy& inner) : inner_(&inner) {}
  void begin_pass(const Instance& instance) override {
    inner_->begin_pass(instance);
  }
  Proposal propose(const Element& e, const SolutionState& state) override {
    if (!fired_) {
      fired_ = true;
      Proposal bad;
      bad.add.push_back(e);
      bad.remove.push_back(-1);  // never a member
      return bad;
    }
    return inner_->propose(e, state);
  }
  void after_accept(const Element& e, const Proposal& applied,
                    SolutionState& state) override {
    inner_->after_accept(e, applied, state);
  }
  bool builds_killing_forest() const override {
    return inner_->builds_killing_forest();
  }
  std::string_view name() const override { return "bad-pair"; }

 private:
  Policy* inner_;
  bool fired_ = false;
};

void require_kind(const Instance& instance, InstanceKind kind,
                  const std::string& algo) {
  if (instance.kind() != kind) {
    throw ParamError(algo + " runs on " + to_string(kind) +
                     " instances, got " + to_string(instance.kind()));
  }
}

void record(CheckResults& checks, const std::string& name, bool ok,
            const std::string& detail) {
  auto status = ok ? CheckOutcome::Status::pass : CheckOutcome::Status::fail;
  auto it = checks.find(name);
  if (it == checks.end()) {
    checks[name] = CheckOutcome{status, detail};
  } else if (!ok && it->second.status != CheckOutcome::Status::fail) {
    it->second = CheckOutcome{status, detail};
  }
}

}  // namespace

RunReport run_experiment(const ProblemInput& input, StreamSource& stream,
                         const ExperimentConfig& config) {
  const Instance& instance = input.instance;
  RunReport report;
  report.algo = to_string(config.algo);
  report.instance_kind = to_string(instance.kind());
  report.oracle_family = to_string(input.oracle_spec.kind);
  report.n = instance.vertex_bound();
  report.p = instance.arity();
  report.m = static_cast<long>(instance.size());

  ValueOracle oracle = make_oracle(input.oracle_spec, instance);

  std::optional<PolicyId> bound_policy;  // set for one-pass and dual runs
  double bound_gamma = 1.0;

  try {
    switch (config.algo) {
      case Algo::zelke:
      case Algo::mcgregor1p:
      case Algo::hypergraph1p:
      case Algo::matroid1p: {
        if (config.algo == Algo::zelke || config.algo == Algo::mcgregor1p) {
          require_kind(instance, InstanceKind::graph, report.algo);
        } else if (config.algo == Algo::hypergraph1p) {
          require_kind(instance, InstanceKind::hypergraph, report.algo);
        } else {
          require_kind(instance, InstanceKind::matroid_intersection,
                       report.algo);
        }
        double gamma = config.gamma.value_or(1.0);
        ZelkePolicy zelke;
        SimplePolicy simple;
        Policy& base = config.algo == Algo::zelke
                           ? static_cast<Policy&>(zelke)
                           : static_cast<Policy&>(simple);
        BadPairPolicy faulty(base);
        Policy& policy = config.inject_fault == "bad-pair"
                             ? static_cast<Policy&>(faulty)
                             : base;
        PassResult pass =
            improve_solution(instance, stream, {}, gamma, policy, oracle);
        report.mode = "one_pass";
        report.params["gamma"] = gamma;
        report.pass_count = 1;
        report.final_value = pass.stats.final_value;
        report.final_weight = pass.stats.final_weight;
        report.final_members.assign(pass.solution.members().begin(),
                                    pass.solution.members().end());
        report.passes.push_back(std::move(pass.stats));
        bound_policy = config.algo == Algo::zelke ? PolicyId::zelke
                                                  : PolicyId::simple;
        bound_gamma = gamma;
        break;
      }
      case Algo::multipass: {
        Mode mode = config.mode.value_or([&] {
          switch (instance.kind()) {
            case InstanceKind::graph:
              return Mode::graph_msm;
            case InstanceKind::hypergraph:
              return Mode::hypergraph_msm;
            case InstanceKind::matroid_intersection:
              return Mode::matroid_msm;
          }
          return Mode::graph_msm;
        }());
        require_kind(instance, kind_for_mode(mode), to_string(mode));
        if (is_weighted_mode(mode) &&
            input.oracle_spec.kind != OracleFamilyKind::modular) {
          throw ParamError("weighted modes need a modular oracle");
        }
        if (!config.inject_fault.empty()) {
          throw ParamError("fault injection supports one-pass runs only");
        }
        MultiPassConfig mp =
            default_config(mode, instance.arity(), config.epsilon);
        if (config.pass_cap) mp.pass_cap = *config.pass_cap;
        MultiPassOutcome out = run_multipass(instance, stream, oracle, mp);
        report.mode = to_string(mode);
        report.params["epsilon"] = mp.epsilon;
        report.params["gamma_first"] = mp.gamma_first;
        report.params["gamma_rest"] = mp.gamma_rest;
        report.params["kappa"] = mp.kappa;
        report.params["pass_cap"] = mp.pass_cap;
        report.pass_count = out.pass_count;
        report.stopped_by_rule = out.stopped_by_rule;
        report.final_value = out.final_value;
        report.final_weight = out.final_weight;
        report.final_members.assign(out.solution.members().begin(),
                                    out.solution.members().end());
        report.passes = std::move(out.passes);
        report.run_checks = std::move(out.checks);
        if (out.pass_cap_hit) {
          report.anomalies.push_back(
              "pass cap reached before the stopping rule was satisfied");
        }
        break;
      }
      case Algo::dual_zelke:
      case Algo::dual_simple: {
        PolicyId id =
            config.algo == Algo::dual_zelke ? PolicyId::zelke : PolicyId::simple;
        if (id == PolicyId::zelke) {
          require_kind(instance, InstanceKind::graph, report.algo);
        }
        if (!config.inject_fault.empty()) {
          throw ParamError("fault injection supports one-pass runs only");
        }
        DualRunOutcome out = dual_run(instance, stream, oracle, id);
        report.mode = "dual_one_pass";
        auto gammas = dual_gammas(id, instance.arity());
        report.params["gamma_weighted_opt"] = gammas[0];
        report.params["gamma_extension_opt"] = gammas[1];
        report.pass_count = 1;
        report.chosen_branch = out.chosen;
        const PassResult& winner = out.runs[out.chosen];
        report.final_value = winner.stats.final_value;
        report.final_weight = winner.stats.final_weight;
        report.final_members.assign(winner.solution.members().begin(),
                                    winner.solution.members().end());
        for (auto& run : out.runs) report.passes.push_back(run.stats);
        bound_policy = id;
        break;
      }
    }
  } catch (const GuardViolation& e) {
    report.anomalies.push_back(std::string("guard violation: ") + e.what());
    report.ok = false;
    return report;
  } catch (const InvariantViolation& e) {
    report.anomalies.push_back(std::string("invariant violation: ") +
                               e.what());
    report.ok = false;
    return report;
  }

  if (config.check_level == CheckLevel::full) {
    ValueOracle side = oracle.fresh_counter();
    double curv = total_curvature(side, instance.ground_ids());
    report.curvature = curv;

    if (bound_policy) {
      if (config.algo == Algo::dual_zelke || config.algo == Algo::dual_simple) {
        auto gammas = dual_gammas(*bound_policy, instance.arity());
        double weighted_branch =
            curv < 1.0 ? weighted_ratio(*bound_policy, instance.arity(),
                                        gammas[0]) /
                             (1.0 - curv)
                       : std::numeric_limits<double>::infinity();
        report.applicable_bound = std::min(
            extension_ratio(*bound_policy, instance.arity(), gammas[1]),
            weighted_branch);
      } else {
        report.applicable_bound =
            ratio_bound(*bound_policy, instance.arity(), bound_gamma, curv);
      }
    }

    if (instance.size() <= config.exact_cap) {
      ValueOracle exact_oracle = oracle.fresh_counter();
      OptResult opt = exact_opt(instance, exact_oracle, config.exact_cap);
      report.exact_value = opt.value;
      record(report.run_checks, "optimum_dominates",
             approx_le(report.final_value, opt.value),
             "algorithm " + std::to_string(report.final_value) +
                 " vs optimum " + std::to_string(opt.value));
      if (report.final_value > 0.0) {
        report.realized_ratio = opt.value / report.final_value;
        record(report.run_checks, "realized_ratio_sane",
               *report.realized_ratio >= 1.0 - kCheckRelTol,
               "ratio " + std::to_string(*report.realized_ratio));
      } else if (opt.value > 0.0) {
        report.anomalies.push_back(
            "algorithm returned nothing on an instance with positive optimum");
        report.ok = false;
      } else {
        report.realized_ratio = 1.0;
      }
      // Per pass: the optimum is pinched by the pass's own weights,
      // f(opt) <= (1/gamma + 1) f(I) + w(opt).
      for (const PassStats& pass : report.passes) {
        double opt_pass_weight = 0.0;
        for (int id : opt.ids) opt_pass_weight += pass.assigned_weight.at(id);
        double bound = (1.0 / pass.gamma + 1.0) * pass.final_value +
                       opt_pass_weight;
        record(report.run_checks, "opt_marginal_bound",
               approx_le(opt.value, bound),
               "pass " + std::to_string(pass.pass_index) + ": optimum " +
                   std::to_string(opt.value) + " > bound " +
                   std::to_string(bound));
      }
    }
  }

  if (report.failed_checks() > 0) report.ok = false;
  return report;
}

}  // namespace substream
