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

#ifndef SUBSTREAM_FRAMEWORK_HPP_
#define SUBSTREAM_FRAMEWORK_HPP_

#include <cmath>
#include <cstdlib>
#include <functional>
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "substream/independent_set.hpp"
#include "substream/oracle.hpp"

namespace substream {

// Relative tolerance used by every runtime invariant check.
inline constexpr double kCheckRelTol = 1e-9;

inline bool approx_le(double a, double b, double rel = kCheckRelTol) {
  return a <= b + rel * std::max(std::abs(a), std::abs(b));
}

struct CheckOutcome {
  enum class Status { pass, fail, skipped };
  Status status = Status::pass;
  std::string detail;
};
using CheckResults = std::map<std::string, CheckOutcome>;

inline int failed_count(const CheckResults& checks) {
  int n = 0;
  for (const auto& [name, outcome] : checks) {
    if (outcome.status == CheckOutcome::Status::fail) ++n;
  }
  return n;
}

// One sequential pass over the element stream. Implementations may re-read
// a file or walk an in-memory instance; each for_each call is a fresh pass.
class StreamSource {
 public:
  virtual ~StreamSource() = default;
  virtual void for_each(const std::function<void(const Element&)>& fn) = 0;
};

class MemoryStreamSource final : public StreamSource {
 public:
  explicit MemoryStreamSource(const Instance& instance)
      : instance_(&instance) {}
  void for_each(const std::function<void(const Element&)>& fn) override {
    for (const auto& e : instance_->elements()) fn(e);
  }

 private:
  const Instance* instance_;
};

// Mutable state of one improvement pass: the current solution I, the shadow
// set S, and weights defined on exactly I + S. Element data for stored ids
// lives here too; everything else about the stream is forgotten.
struct SolutionState {
  SolutionState(const Instance& instance, double gamma);

  const Instance* instance;
  IndependentSet solution;
  std::set<int> shadow;
  std::map<int, Element> stored;   // data for I + S (and transiently e)
  std::map<int, double> weight;    // domain I + S (and transiently e)
  double gamma;
  double cached_union_value = 0.0;  // f(I + S), kept warm across elements

  std::vector<int> stored_ids() const;
  double weight_of(std::span<const int> ids) const;
};

// Per-pass instrumentation. Weights of evicted elements are retained here
// only; this storage is exempt from the streaming-space accounting, which
// counts just I + S plus the element in hand.
struct PassStats {
  int pass_index = 1;
  double gamma = 0.0;
  long primed_count = 0;
  long elements_processed = 0;  // primed + streamed
  long accept_count = 0;
  long oracle_calls = 0;
  int peak_stored = 0;
  double prime_weight_total = 0.0;   // sum of weights assigned while priming
  double removed_weight_total = 0.0;  // sum over accepted augments of w(J)
  double killed_weight = 0.0;
  double final_weight = 0.0;  // this pass's weights summed over the final I
  double final_value = 0.0;   // f(final I)

  std::map<int, double> assigned_weight;      // every processed element
  std::set<int> killed;                       // evicted and never returned
  std::map<int, int> kill_parent;             // victim -> evicting element
  std::vector<std::pair<int, long>> call_log;  // (element id, oracle calls)
  bool kill_forest_valid = false;
  CheckResults checks;
};

struct PassResult {
  IndependentSet solution;
  std::map<int, Element> kept;     // element data of the final I
  std::map<int, double> weights;   // this pass's weights of the final I
  PassStats stats;
};

// An augmenting pair: add A (subset of I + S + e), evict J (subset of I).
// Both empty means the element is declined.
struct Proposal {
  std::vector<Element> add;
  std::vector<int> remove;
  bool empty() const { return add.empty() && remove.empty(); }
};

// Pluggable augmenting-pair and shadow rule. propose() sees the arriving
// element after its weight has been assigned; an accepted proposal must
// satisfy w(A) >= (1 + gamma) w(J) and leave (I \ J) + A independent.
// after_accept() runs once the solution has been updated and is where a
// policy rewrites state.shadow.
class Policy {
 public:
  virtual ~Policy() = default;
  virtual void begin_pass(const Instance& instance) {}
  virtual Proposal propose(const Element& e, const SolutionState& state) = 0;
  virtual void after_accept(const Element& e, const Proposal& applied,
                            SolutionState& state) {}
  // True when evicted elements can never re-enter the solution within a
  // pass, which makes the eviction records a forest.
  virtual bool builds_killing_forest() const { return false; }
  virtual std::string_view name() const = 0;
};

// The primed solution in ascending id order, then the remaining stream
// elements in arrival order; every element exactly once.
std::vector<Element> pretend_order(std::span<const Element> prime,
                                   const Instance& stream);

// Drives one improvement pass: prime() replays the previous solution with
// telescoping weights, process() handles one stream arrival, finish() runs
// the end-of-pass invariant checks and hands the state over.
class OnePassRunner {
 public:
  OnePassRunner(const Instance& instance, double gamma, Policy& policy,
                ValueOracle& oracle, int pass_index = 1);

  void prime(std::span<const Element> prime_elements);
  void process(const Element& e);
  bool was_primed(int id) const { return primed_ids_.count(id) > 0; }
  PassResult finish();

  const SolutionState& state() const { return state_; }
  const PassStats& stats() const { return stats_; }

 private:
  void assign_weight(const Element& e, double w);
  void validate_proposal(const Element& e, const Proposal& prop,
                         double weight_added, double weight_removed) const;
  int pick_killer(const Element& victim, std::span<const Element> added) const;
  void prune_store();
  void note_peak(int extra);
  void run_end_checks();

  SolutionState state_;
  Policy* policy_;
  ValueOracle* oracle_;
  PassStats stats_;
  long calls_at_start_ = 0;
  std::set<int> primed_ids_;
  std::set<int> seen_;
  std::set<int> ever_held_;
  bool finished_ = false;
};

// One full pass: prime with P, then stream every non-primed element in
// arrival order. Throws ParamError if P is dependent or not a subset of
// the stream.
PassResult improve_solution(const Instance& instance, StreamSource& stream,
                            std::span<const Element> prime, double gamma,
                            Policy& policy, ValueOracle& oracle,
                            int pass_index = 1);

}  // namespace substream

#endif  // SUBSTREAM_FRAMEWORK_HPP_
