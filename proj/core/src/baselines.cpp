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

#include "substream/baselines.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "substream/errors.hpp"

namespace substream {

namespace {

std::vector<Element> by_ascending_id(const Instance& instance) {
  std::vector<Element> order(instance.elements());
  std::sort(order.begin(), order.end(),
            [](const Element& a, const Element& b) { return a.id < b.id; });
  return order;
}

}  // namespace

OptResult exact_opt(const Instance& instance, ValueOracle& oracle,
                    std::size_t cap) {
  if (instance.size() > cap) {
    throw SizeError("exact_opt: " + std::to_string(instance.size()) +
                    " elements exceed the cap of " + std::to_string(cap));
  }
  std::vector<Element> order = by_ascending_id(instance);
  IndependentSet current(instance);
  std::vector<int> chosen;
  OptResult best;
  bool have_best = false;

  auto is_maximal = [&]() {
    for (const Element& e : order) {
      if (!current.contains(e.id) && current.can_insert(e)) return false;
    }
    return true;
  };

  // Include-first recursion visits candidate sets in ascending lexicographic
  // id order, so keeping the first strict improvement realizes the
  // smallest-sequence tie-break.
  std::function<void(std::size_t)> walk = [&](std::size_t i) {
    if (i == order.size()) {
      if (!is_maximal()) return;
      double v = oracle.value(chosen);
      if (!have_best || v > best.value) {
        best.ids = chosen;
        best.value = v;
        have_best = true;
      }
      return;
    }
    const Element& e = order[i];
    if (current.can_insert(e)) {
      current.insert(e);
      chosen.push_back(e.id);
      walk(i + 1);
      chosen.pop_back();
      current.erase(e);
    }
    walk(i + 1);
  };
  walk(0);
  if (!have_best) {
    best.ids = {};
    best.value = oracle.value(std::span<const int>{});
  }
  return best;
}

OptResult exact_opt_bitmask(const Instance& instance, ValueOracle& oracle,
                            std::size_t cap) {
  if (instance.size() > cap) {
    throw SizeError("exact_opt_bitmask: " + std::to_string(instance.size()) +
                    " elements exceed the cap of " + std::to_string(cap));
  }
  std::vector<Element> order = by_ascending_id(instance);
  const std::size_t m = order.size();
  OptResult best;
  best.value = oracle.value(std::span<const int>{});
  std::vector<int> best_ids;
  bool have_best = false;

  for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
    std::set<int> ids;
    for (std::size_t i = 0; i < m; ++i) {
      if (mask & (std::size_t{1} << i)) ids.insert(order[i].id);
    }
    if (!is_independent(instance, ids)) continue;
    double v = oracle.value(ids);
    std::vector<int> as_vec(ids.begin(), ids.end());
    if (!have_best || v > best.value ||
        (v == best.value && as_vec < best_ids)) {
      best.value = v;
      best_ids = std::move(as_vec);
      have_best = true;
    }
  }
  best.ids = std::move(best_ids);
  return best;
}

OptResult offline_greedy(const Instance& instance, ValueOracle& oracle) {
  std::vector<Element> order = by_ascending_id(instance);
  IndependentSet picked(instance);
  double current_value = oracle.value(std::span<const int>{});

  while (true) {
    const Element* best_e = nullptr;
    double best_gain = 0.0;
    double best_with = 0.0;
    for (const Element& e : order) {
      if (picked.contains(e.id) || !picked.can_insert(e)) continue;
      std::set<int> base = picked.members();
      auto m = oracle.marginal_with_cache(current_value, base, e.id);
      if (m.gain > best_gain) {
        best_e = &e;
        best_gain = m.gain;
        best_with = m.extended_value;
      }
    }
    if (!best_e) break;  // nothing improves the objective
    picked.insert(*best_e);
    current_value = best_with;
  }

  OptResult out;
  out.ids.assign(picked.members().begin(), picked.members().end());
  out.value = current_value;
  return out;
}

}  // namespace substream
