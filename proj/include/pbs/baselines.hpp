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

// The two comparison schedulers.
//
// A-PBS(d+1) rounds every message up to a multiple of d+1 and schedules the
// resulting unit slots as perfect matchings of a regular multigraph, so each
// packet lasts at most d+1. A1 repeatedly sends a maximum-cardinality matching
// and picks the packet length that minimises packet cost plus the lower bound
// of what is left.

#ifndef PBS_BASELINES_HPP_
#define PBS_BASELINES_HPP_

#include <vector>

#include "pbs/core_model.hpp"
#include "pbs/matching.hpp"

namespace pbs {

struct RoundedInstance {
  Weight slot = 1;                // d + 1
  std::vector<Weight> rounded;    // per instance edge, smallest multiple of slot >= weight
  std::vector<int> slot_count;    // rounded / slot
  BipartiteGraph unit_multigraph; // edge i of the instance repeated slot_count[i] times
  std::vector<int> unit_source;   // unit edge -> instance edge index
};

RoundedInstance round_up_weights(const Instance& instance);

Schedule run_apbs(const Instance& instance);

/// Packet length for A1: among the distinct matched weights, the t minimising
/// (t + d) + lower_bound(residual after cutting `matching` by t). Ties go to
/// the larger t.
Weight a1_packet_choice(const BipartiteGraph& residual, const Matching& matching,
                        Weight overhead);

Schedule run_a1(const Instance& instance);

}  // namespace pbs

#endif  // PBS_BASELINES_HPP_
