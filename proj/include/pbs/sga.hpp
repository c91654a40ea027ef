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

// Split-graph scheduler.
//
// Edges are split by the overhead d into a large-edge graph (weight >= d) and
// a small-edge graph (weight < d). Large edges are drained first, one packet
// per iteration: a load-ordered maximal matching is cut by a removal weight R
// and padded with small edges on free stations. Whatever remains in the
// small-edge graph is then scheduled by decomposing its regularized form into
// Delta_m perfect matchings, which minimises the number of packets spent on
// short messages.

#ifndef PBS_SGA_HPP_
#define PBS_SGA_HPP_

#include <vector>

#include "pbs/core_model.hpp"
#include "pbs/matching.hpp"

namespace pbs {

struct SplitState {
  BipartiteGraph large;  // every weight >= overhead
  BipartiteGraph small;  // every weight in [1, overhead - 1]
  Weight overhead = 1;
};

SplitState split_graph(const Instance& instance);

struct EdgeRemoval {
  MatchedPair pair;
  Weight weight = 0;  // c(e)
  Weight r = 0;       // c(e) if cutting the matching by c(e) lowers W by exactly c(e), else 0
};

struct RemovalWeight {
  std::vector<EdgeRemoval> per_edge;
  Weight amount = 0;     // R
  bool fallback = false; // every r was 0; amount is the smallest matched weight
};

/// For each matched edge e, cuts every matched edge by min(its weight, c(e))
/// and checks whether the graph's W drops by exactly c(e). R is the largest
/// such c(e); when none qualifies R falls back to the smallest matched weight
/// so that every iteration removes at least one edge completely.
RemovalWeight removal_weight(const BipartiteGraph& large, const Matching& matching);

/// Per-iteration trace of the large-edge phase, for tests and diagnostics.
struct SgaIteration {
  Matching large_matching;
  RemovalWeight removal;
  std::vector<Edge> small_added;
  std::vector<Edge> migrated;  // large edges that dropped below d
};

struct SgaTrace {
  std::vector<SgaIteration> iterations;
  int small_degree = 0;  // Delta_m of the small-edge graph after the loop
  int small_packets = 0;
};

Schedule run_sga(const Instance& instance, SgaTrace* trace = nullptr);

}  // namespace pbs

#endif  // PBS_SGA_HPP_
