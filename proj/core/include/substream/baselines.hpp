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

#ifndef SUBSTREAM_BASELINES_HPP_
#define SUBSTREAM_BASELINES_HPP_

#include <vector>

#include "substream/independent_set.hpp"
#include "substream/oracle.hpp"

namespace substream {

struct OptResult {
  std::vector<int> ids;  // ascending
  double value = 0.0;
};

// Exhaustive optimum over all independent subsets. Recursion extends
// independent prefixes in ascending id order and, since the objective is
// monotone, evaluates maximal sets only. Ties go to the smallest id
// sequence among the maximal maximizers. Refuses instances larger than
// `cap` elements with SizeError.
OptResult exact_opt(const Instance& instance, ValueOracle& oracle,
                    std::size_t cap = 22);

// Second, independent implementation: plain bitmask sweep over all subsets
// with a from-scratch independence test and no maximality shortcut. Kept
// deliberately naive as a cross-check for exact_opt.
OptResult exact_opt_bitmask(const Instance& instance, ValueOracle& oracle,
                            std::size_t cap = 20);

// Offline greedy: repeatedly add the feasible element with the largest
// marginal gain (ties to the smallest id) until no gain is positive.
OptResult offline_greedy(const Instance& instance, ValueOracle& oracle);

}  // namespace substream

#endif  // SUBSTREAM_BASELINES_HPP_
