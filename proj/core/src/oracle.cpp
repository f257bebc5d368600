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

#include "substream/oracle.hpp"

#include <algorithm>
#include <cmath>

#include "substream/errors.hpp"

namespace substream {

std::string to_string(OracleFamilyKind kind) {
  switch (kind) {
    case OracleFamilyKind::modular:
      return "modular";
    case OracleFamilyKind::coverage:
      return "coverage";
    case OracleFamilyKind::saturated_additive:
      return "saturated_additive";
  }
  return "unknown";
}

namespace {

void check_nonnegative(const std::map<int, double>& weights) {
  for (const auto& [id, w] : weights) {
    if (w < 0.0 || !std::isfinite(w)) {
      throw ParamError("oracle: weight of element " + std::to_string(id) +
                       " must be finite and nonnegative");
    }
  }
}

}  // namespace

OracleSpec OracleSpec::modular(std::map<int, double> weights) {
  check_nonnegative(weights);
  OracleSpec spec;
  spec.kind = OracleFamilyKind::modular;
  spec.weights = std::move(weights);
  return spec;
}

OracleSpec OracleSpec::coverage(std::map<int, std::vector<int>> covers) {
  OracleSpec spec;
  spec.kind = OracleFamilyKind::coverage;
  for (auto& [id, points] : covers) {
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
  }
  spec.covers = std::move(covers);
  return spec;
}

OracleSpec OracleSpec::saturated_additive(std::map<int, double> weights,
                                          double cap) {
  check_nonnegative(weights);
  if (cap < 0.0 || !std::isfinite(cap)) {
    throw ParamError("oracle: saturation cap must be finite and nonnegative");
  }
  OracleSpec spec;
  spec.kind = OracleFamilyKind::saturated_additive;
  spec.weights = std::move(weights);
  spec.cap = cap;
  return spec;
}

ValueOracle::ValueOracle(OracleSpec spec, std::set<int> ground_guard)
    : spec_(std::make_shared<const OracleSpec>(std::move(spec))),
      guard_(std::move(ground_guard)) {}

double ValueOracle::evaluate(std::span<const int> ids) const {
  const OracleSpec& spec = *spec_;
  switch (spec.kind) {
    case OracleFamilyKind::modular: {
      double total = 0.0;
      for (int id : ids) total += spec.weights.at(id);
      return total;
    }
    case OracleFamilyKind::coverage: {
      std::set<int> covered;
      for (int id : ids) {
        const auto& points = spec.covers.at(id);
        covered.insert(points.begin(), points.end());
      }
      return static_cast<double>(covered.size());
    }
    case OracleFamilyKind::saturated_additive: {
      double total = 0.0;
      for (int id : ids) total += spec.weights.at(id);
      return std::min(spec.cap, total);
    }
  }
  throw InvariantViolation("oracle: unknown family");
}

double ValueOracle::value(std::span<const int> ids) {
  ++calls_;
  for (int id : ids) {
    if (!guard_.count(id)) {
      throw GuardViolation("oracle: query mentions element " +
                           std::to_string(id) + " outside the ground set");
    }
  }
  // Queries are sets; evaluate over distinct ids in ascending order so that
  // floating-point results do not depend on the caller's iteration order.
  std::vector<int> sorted(ids.begin(), ids.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  return evaluate(sorted);
}

double ValueOracle::value(const std::set<int>& ids) {
  ++calls_;
  for (int id : ids) {
    if (!guard_.count(id)) {
      throw GuardViolation("oracle: query mentions element " +
                           std::to_string(id) + " outside the ground set");
    }
  }
  std::vector<int> sorted(ids.begin(), ids.end());
  return evaluate(sorted);
}

double ValueOracle::marginal(const std::set<int>& base, int id) {
  double without = value(base);
  return marginal_with_cache(without, base, id).gain;
}

ValueOracle::Marginal ValueOracle::marginal_with_cache(
    double base_value, const std::set<int>& base, int id) {
  if (base.count(id)) {
    throw ParamError("oracle: marginal of an element already in the base");
  }
  std::vector<int> extended(base.begin(), base.end());
  extended.insert(std::upper_bound(extended.begin(), extended.end(), id), id);
  ++calls_;
  for (int e : extended) {
    if (!guard_.count(e)) {
      throw GuardViolation("oracle: query mentions element " +
                           std::to_string(e) + " outside the ground set");
    }
  }
  double with = evaluate(extended);
  // Monotone f: clip the 1-ulp negatives that drifting float sums produce.
  return {std::max(0.0, with - base_value), with};
}

ValueOracle ValueOracle::fresh_counter() const {
  ValueOracle copy = *this;
  copy.calls_ = 0;
  return copy;
}

ValueOracle make_oracle(const OracleSpec& spec, const Instance& instance) {
  for (int id : instance.ground_ids()) {
    bool known = spec.kind == OracleFamilyKind::coverage
                     ? spec.covers.count(id) > 0
                     : spec.weights.count(id) > 0;
    if (!known) {
      throw ParamError("oracle: no parameters for element " +
                       std::to_string(id));
    }
  }
  return ValueOracle(spec, instance.ground_ids());
}

OracleSpec modular_from_given_weights(const Instance& instance) {
  std::map<int, double> weights;
  for (const auto& e : instance.elements()) {
    if (!e.given_weight) {
      throw ParamError("oracle: element " + std::to_string(e.id) +
                       " carries no weight");
    }
    weights[e.id] = *e.given_weight;
  }
  return OracleSpec::modular(std::move(weights));
}

double total_curvature(ValueOracle& oracle, const std::set<int>& ground_set) {
  if (ground_set.empty()) return 0.0;
  double full = oracle.value(ground_set);
  double min_ratio = 1.0;
  bool any = false;
  for (int id : ground_set) {
    double singleton = oracle.value(std::span<const int>(&id, 1));
    if (singleton <= 0.0) continue;  // unconstrained in the definition
    std::set<int> rest = ground_set;
    rest.erase(id);
    double tail_gain = full - oracle.value(rest);
    double ratio = tail_gain / singleton;
    min_ratio = std::min(min_ratio, std::clamp(ratio, 0.0, 1.0));
    any = true;
  }
  if (!any) return 0.0;
  return 1.0 - min_ratio;
}

}  // namespace substream
