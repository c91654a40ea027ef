// Copyright 2026 The pbs-schedule Authors
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

// Ground-truth solvers for small instances, used as test oracles.

#ifndef PBS_EXACT_ORACLE_HPP_
#define PBS_EXACT_ORACLE_HPP_

#include <cstdint>
#include <stdexcept>

#include "pbs/core_model.hpp"

namespace pbs {

struct SearchLimits {
  int max_edges = 6;
  int max_nodes_per_side = 4;
  Weight max_total_weight = 30;
  std::int64_t node_budget = 10'000'000;
};

/// Thrown when an instance or the search exceeds its limits. Means the oracle
/// does not apply, never that the answer is wrong.
class OracleLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class DurationCandidates {
  /// Packet lengths are drawn from the residual weights of the chosen
  /// matching plus the smallest residual weight overall.
  kResidualWeights,
  /// Every integer from 1 to the largest matched residual weight. Slow; used
  /// to cross-check the restricted search.
  kFullRange,
};

struct OracleResult {
  Weight makespan = 0;
  Schedule witness;
  std::int64_t explored = 0;  // search nodes expanded
};

/// Exact minimum makespan by memoised branch and bound over (maximal matching
/// of the residual, packet length) choices, pruned with lower_bound.
OracleResult optimal_makespan(
    const Instance& instance, const SearchLimits& limits = {},
    DurationCandidates candidates = DurationCandidates::kResidualWeights);

/// Schedule whose durations sum to exactly W, the optimum when the overhead
/// is ignored. Pads the demand matrix to a W-doubly-stochastic one and peels
/// perfect matchings off its support.
Schedule min_total_duration_decomposition(const Instance& instance);

}  // namespace pbs

#endif  // PBS_EXACT_ORACLE_HPP_
