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

#include "substream/framework.hpp"

#include <algorithm>

#include "substream/errors.hpp"

namespace substream {

SolutionState::SolutionState(const Instance& inst, double g)
    : instance(&inst), solution(inst), gamma(g) {}

std::vector<int> SolutionState::stored_ids() const {
  std::vector<int> ids;
  ids.reserve(stored.size());
  for (const auto& [id, e] : stored) ids.push_back(id);
  return ids;
}

double SolutionState::weight_of(std::span<const int> ids) const {
  double total = 0.0;
  for (int id : ids) total += weight.at(id);
  return total;
}

std::vector<Element> pretend_order(std::span<const Element> prime,
                                   const Instance& stream) {
  std::vector<Element> order(prime.begin(), prime.end());
  std::sort(order.begin(), order.end(),
            [](const Element& a, const Element& b) { return a.id < b.id; });
  std::set<int> primed;
  for (const auto& e : order) {
    if (!stream.has_element(e.id)) {
      throw ParamError("pretend order: primed element " +
                       std::to_string(e.id) + " is not in the stream");
    }
    if (!primed.insert(e.id).second) {
      throw ParamError("pretend order: primed element " +
                       std::to_string(e.id) + " repeats");
    }
  }
  for (const auto& e : stream.elements()) {
    if (!primed.count(e.id)) order.push_back(e);
  }
  return order;
}

OnePassRunner::OnePassRunner(const Instance& instance, double gamma,
                             Policy& policy, ValueOracle& oracle,
                             int pass_index)
    : state_(instance, gamma), policy_(&policy), oracle_(&oracle) {
  if (!(gamma > 0.0)) {
    throw ParamError("improvement pass: gamma must be positive");
  }
  stats_.pass_index = pass_index;
  stats_.gamma = gamma;
  calls_at_start_ = oracle.call_count();
  policy_->begin_pass(instance);
}

void OnePassRunner::note_peak(int extra) {
  int stored = static_cast<int>(state_.stored.size()) + extra;
  stats_.peak_stored = std::max(stats_.peak_stored, stored);
}

void OnePassRunner::prime(std::span<const Element> prime_elements) {
  if (stats_.elements_processed > 0 || !primed_ids_.empty()) {
    throw ParamError("improvement pass: prime must precede the stream");
  }
  std::vector<Element> order(prime_elements.begin(), prime_elements.end());
  std::sort(order.begin(), order.end(),
            [](const Element& a, const Element& b) { return a.id < b.id; });
  for (const Element& e : order) {
    if (!state_.instance->has_element(e.id)) {
      throw ParamError("improvement pass: primed element " +
                       std::to_string(e.id) + " is not in the stream");
    }
    if (!primed_ids_.insert(e.id).second) {
      throw ParamError("improvement pass: primed element repeats");
    }
    if (!state_.solution.can_insert(e)) {
      throw ParamError("improvement pass: prime set is not independent");
    }
    // Telescoping weight: the marginal of e on top of the primed prefix.
    std::vector<int> extended = state_.stored_ids();
    extended.insert(
        std::upper_bound(extended.begin(), extended.end(), e.id), e.id);
    long before = oracle_->call_count();
    double with = oracle_->value(extended);
    double w = std::max(0.0, with - state_.cached_union_value);
    state_.solution.insert(e);
    state_.stored.emplace(e.id, e);
    assign_weight(e, w);
    state_.cached_union_value = with;
    stats_.prime_weight_total += w;
    ++stats_.primed_count;
    ++stats_.elements_processed;
    ever_held_.insert(e.id);
    stats_.call_log.emplace_back(e.id, oracle_->call_count() - before);
    note_peak(0);
  }
}

void OnePassRunner::assign_weight(const Element& e, double w) {
  state_.weight[e.id] = w;
  stats_.assigned_weight[e.id] = w;
}

void OnePassRunner::validate_proposal(const Element& e,
                                      const Proposal& prop) const {
  for (const Element& a : prop.add) {
    if (a.id != e.id && !state_.stored.count(a.id)) {
      throw InvariantViolation(
          "policy proposal adds element " + std::to_string(a.id) +
          " that is neither stored nor the element in hand");
    }
  }
  std::set<int> removed;
  for (int j : prop.remove) {
    if (!state_.solution.contains(j)) {
      throw InvariantViolation("policy proposal evicts non-member " +
                               std::to_string(j));
    }
    if (!removed.insert(j).second) {
      throw InvariantViolation("policy proposal evicts element " +
                               std::to_string(j) + " twice");
    }
  }
  for (const Element& a : prop.add) {
    if (removed.count(a.id)) {
      throw InvariantViolation("policy proposal both adds and evicts " +
                               std::to_string(a.id));
    }
  }
}

void OnePassRunner::prune_store() {
  for (auto it = state_.stored.begin(); it != state_.stored.end();) {
    int id = it->first;
    if (state_.solution.contains(id) || state_.shadow.count(id)) {
      ++it;
    } else {
      state_.weight.erase(id);
      it = state_.stored.erase(it);
    }
  }
}

void OnePassRunner::process(const Element& e) {
  if (finished_) throw ParamError("improvement pass: already finished");
  if (!seen_.insert(e.id).second || primed_ids_.count(e.id)) {
    throw ParamError("improvement pass: element " + std::to_string(e.id) +
                     " processed twice");
  }
  ++stats_.elements_processed;
  long calls_before = oracle_->call_count();

  // w(e) <- f(I + S + e) - f(I + S), one oracle call on a warm cache.
  std::vector<int> extended = state_.stored_ids();
  extended.insert(std::upper_bound(extended.begin(), extended.end(), e.id),
                  e.id);
  double with = oracle_->value(extended);
  double w_e = std::max(0.0, with - state_.cached_union_value);
  assign_weight(e, w_e);
  note_peak(1);

  Proposal prop = policy_->propose(e, state_);
  bool accept = !prop.empty();
  double weight_added = 0.0;
  double weight_removed = 0.0;
  if (accept) {
    validate_proposal(e, prop);
    for (const Element& a : prop.add) weight_added += state_.weight.at(a.id);
    for (int j : prop.remove) weight_removed += state_.weight.at(j);
    if (weight_added < (1.0 + state_.gamma) * weight_removed) {
      throw InvariantViolation(
          "policy proposal breaks the acceptance rule: w(A) < (1+gamma) w(J)");
    }
    // No zero-gain insertions: an empty choice is always legal, and letting
    // weightless elements churn the solution voids the eviction budget.
    if (prop.remove.empty() && weight_added == 0.0) accept = false;
  }

  if (accept) {
    stats_.removed_weight_total += weight_removed;
    ++stats_.accept_count;

    std::vector<Element> removed_elems;
    removed_elems.reserve(prop.remove.size());
    for (int j : prop.remove) removed_elems.push_back(state_.stored.at(j));

    for (const Element& a : prop.add) state_.stored.emplace(a.id, a);
    apply_augment(state_.solution, prop.add, removed_elems);

    for (const Element& j : removed_elems) {
      stats_.kill_parent[j.id] = pick_killer(j, prop.add);
      stats_.killed.insert(j.id);
    }
    for (const Element& a : prop.add) {
      ever_held_.insert(a.id);
      if (stats_.killed.erase(a.id)) stats_.kill_parent.erase(a.id);
    }

    policy_->after_accept(e, prop, state_);
    prune_store();

    // The marginal query already holds f of the new stored set whenever the
    // augment only appended e; otherwise refresh with one more call.
    std::vector<int> now = state_.stored_ids();
    if (now == extended) {
      state_.cached_union_value = with;
    } else {
      state_.cached_union_value = oracle_->value(now);
    }
  } else {
    if (!state_.solution.contains(e.id) && !state_.shadow.count(e.id)) {
      state_.weight.erase(e.id);
      state_.stored.erase(e.id);
    }
  }
  note_peak(0);
  stats_.call_log.emplace_back(e.id, oracle_->call_count() - calls_before);
}

int OnePassRunner::pick_killer(const Element& victim,
                               std::span<const Element> added) const {
  if (state_.instance->is_matching_kind()) {
    std::set<int> victim_vertices(victim.vertices.begin(),
                                  victim.vertices.end());
    int best = -1;
    for (const Element& a : added) {
      for (int v : a.vertices) {
        if (victim_vertices.count(v)) {
          if (best < 0 || a.id < best) best = a.id;
          break;
        }
      }
    }
    if (best >= 0) return best;
  }
  int best = added.front().id;
  for (const Element& a : added) best = std::min(best, a.id);
  return best;
}

PassResult OnePassRunner::finish() {
  if (finished_) throw ParamError("improvement pass: already finished");
  finished_ = true;

  const IndependentSet& I = state_.solution;
  for (int id : I.members()) stats_.final_weight += state_.weight.at(id);
  stats_.final_value = state_.shadow.empty()
                           ? state_.cached_union_value
                           : oracle_->value(I.members());
  for (int id : ever_held_) {
    if (!I.contains(id)) {
      stats_.killed.insert(id);
      stats_.killed_weight += stats_.assigned_weight.at(id);
    }
  }
  for (auto it = stats_.kill_parent.begin(); it != stats_.kill_parent.end();) {
    it = stats_.killed.count(it->first) ? std::next(it)
                                        : stats_.kill_parent.erase(it);
  }
  stats_.oracle_calls = oracle_->call_count() - calls_at_start_;
  stats_.kill_forest_valid = policy_->builds_killing_forest();
  run_end_checks();

  PassResult result{std::move(state_.solution), {}, {}, std::move(stats_)};
  for (int id : result.solution.members()) {
    result.kept.emplace(id, state_.stored.at(id));
    result.weights.emplace(id, state_.weight.at(id));
  }
  return result;
}

void OnePassRunner::run_end_checks() {
  auto record = [&](const std::string& name, bool ok,
                    const std::string& detail) {
    stats_.checks[name] = CheckOutcome{
        ok ? CheckOutcome::Status::pass : CheckOutcome::Status::fail, detail};
  };

  record("stored_weight_le_value",
         approx_le(stats_.final_weight, stats_.final_value),
         "w(I) = " + std::to_string(stats_.final_weight) +
             ", f(I) = " + std::to_string(stats_.final_value));
  record("replaced_weight_budget",
         approx_le(stats_.removed_weight_total,
                   stats_.final_weight / state_.gamma),
         "sum w(J) = " + std::to_string(stats_.removed_weight_total) +
             ", w(I)/gamma = " +
             std::to_string(stats_.final_weight / state_.gamma));
  record("killed_weight_bounded",
         approx_le(stats_.killed_weight, stats_.removed_weight_total),
         "w(killed) = " + std::to_string(stats_.killed_weight));
  record("oracle_call_budget",
         stats_.oracle_calls <= 3 * stats_.elements_processed,
         std::to_string(stats_.oracle_calls) + " calls for " +
             std::to_string(stats_.elements_processed) + " elements");
  record("peak_storage",
         stats_.peak_stored <= 2 * state_.instance->vertex_bound(),
         "peak " + std::to_string(stats_.peak_stored) + ", bound " +
             std::to_string(2 * state_.instance->vertex_bound()));

  if (!stats_.kill_forest_valid) {
    stats_.checks["kill_tree_budget"] = CheckOutcome{
        CheckOutcome::Status::skipped,
        "policy may revive evicted elements; eviction records form no forest"};
    return;
  }
  // Eviction records form a forest; every subtree's weight is bounded by
  // its root's weight over gamma.
  std::map<int, std::vector<int>> children;
  for (const auto& [child, parent] : stats_.kill_parent) {
    children[parent].push_back(child);
  }
  std::map<int, double> trail_weight;
  std::function<double(int)> trail = [&](int id) -> double {
    auto memo = trail_weight.find(id);
    if (memo != trail_weight.end()) return memo->second;
    double total = 0.0;
    auto it = children.find(id);
    if (it != children.end()) {
      for (int c : it->second) total += stats_.assigned_weight.at(c) + trail(c);
    }
    trail_weight[id] = total;
    return total;
  };
  bool ok = true;
  std::string detail;
  for (int id : ever_held_) {
    double t = trail(id);
    double budget = stats_.assigned_weight.at(id) / state_.gamma;
    if (!approx_le(t, budget)) {
      ok = false;
      detail = "element " + std::to_string(id) + ": trail weight " +
               std::to_string(t) + " > " + std::to_string(budget);
      break;
    }
  }
  for (const auto& [child, parent] : stats_.kill_parent) {
    if (!ever_held_.count(parent)) {
      ok = false;
      detail = "eviction record points at element " + std::to_string(parent) +
               " that was never held";
      break;
    }
  }
  stats_.checks["kill_tree_budget"] = CheckOutcome{
      ok ? CheckOutcome::Status::pass : CheckOutcome::Status::fail, detail};
}

PassResult improve_solution(const Instance& instance, StreamSource& stream,
                            std::span<const Element> prime, double gamma,
                            Policy& policy, ValueOracle& oracle,
                            int pass_index) {
  OnePassRunner runner(instance, gamma, policy, oracle, pass_index);
  runner.prime(prime);
  std::size_t skipped = 0;
  stream.for_each([&](const Element& e) {
    if (runner.was_primed(e.id)) {
      ++skipped;
      return;
    }
    runner.process(e);
  });
  if (skipped != prime.size()) {
    throw ParamError("improvement pass: primed solution is not a subset of "
                     "the stream");
  }
  return runner.finish();
}

}  // namespace substream
