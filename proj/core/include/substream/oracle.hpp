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

#ifndef SUBSTREAM_ORACLE_HPP_
#define SUBSTREAM_ORACLE_HPP_

#include <map>
#include <memory>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "substream/element.hpp"

namespace substream {

// Built-in families of nonnegative monotone proper submodular functions:
//   modular              f(S) = sum of per-element weights
//   coverage             f(S) = number of distinct universe points covered
//   saturated_additive   f(S) = min(cap, sum of per-element weights)
enum class OracleFamilyKind { modular, coverage, saturated_additive };

std::string to_string(OracleFamilyKind kind);

// Immutable description of an oracle; shared across counter wrappers and
// serialized into instance files.
struct OracleSpec {
  OracleFamilyKind kind = OracleFamilyKind::modular;
  std::map<int, double> weights;             // modular / saturated_additive
  std::map<int, std::vector<int>> covers;    // coverage
  double cap = 0.0;                          // saturated_additive

  static OracleSpec modular(std::map<int, double> weights);
  static OracleSpec coverage(std::map<int, std::vector<int>> covers);
  static OracleSpec saturated_additive(std::map<int, double> weights,
                                       double cap);
};

// Guarded, call-counted evaluator. The parameter data is immutable and
// shared; the call counter is per-wrapper state, so concurrent runs each
// take their own copy via fresh_counter().
class ValueOracle {
 public:
  ValueOracle(OracleSpec spec, std::set<int> ground_guard);

  // f(ids). Throws GuardViolation when ids mentions anything outside the
  // ground guard; that models a streaming algorithm probing elements it
  // never received and is fatal for the run.
  double value(std::span<const int> ids);
  double value(const std::set<int>& ids);

  // f(base + e) - f(base): two value() calls. Requires e not in base.
  double marginal(const std::set<int>& base, int id);
  // Same, with f(base) supplied by the caller: one value() call. Returns
  // both the marginal and f(base + e) so callers can keep their cache warm.
  struct Marginal {
    double gain;
    double extended_value;
  };
  Marginal marginal_with_cache(double base_value, const std::set<int>& base,
                               int id);

  long call_count() const { return calls_; }
  void reset_call_count() { calls_ = 0; }

  // Copy sharing the immutable spec but with a zeroed counter.
  ValueOracle fresh_counter() const;

  const OracleSpec& spec() const { return *spec_; }
  const std::set<int>& ground_guard() const { return guard_; }

 private:
  double evaluate(std::span<const int> ids) const;

  std::shared_ptr<const OracleSpec> spec_;
  std::set<int> guard_;
  long calls_ = 0;
};

// Oracle over an instance's ground set.
ValueOracle make_oracle(const OracleSpec& spec, const Instance& instance);

// Oracle spec whose modular weights are the instance's given weights.
// Throws ParamError if any element lacks one.
OracleSpec modular_from_given_weights(const Instance& instance);

// Total curvature in [0, 1]: how far f is from modular, 0 iff modular.
// Uses the closed form: by diminishing returns the smallest marginal of e
// is attained on top of everything else, so
//   curv = 1 - min over e with f({e}) > 0 of (f(E) - f(E \ {e})) / f({e}).
// Elements with f({e}) = 0 are skipped; if all are skipped returns 0.
double total_curvature(ValueOracle& oracle, const std::set<int>& ground_set);

}  // namespace substream

#endif  // SUBSTREAM_ORACLE_HPP_
