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

// Matching primitives used by the schedulers: the load-ordered greedy maximal
// matching, maximum-cardinality matching, greedy augmentation with small
// edges, and the regularize-then-peel decomposition of a bipartite multigraph
// into perfect matchings.
//
// Edges with weight <= 0 are treated as absent by every function here except
// `regularize`, which keeps zero-weight edges as part of the multigraph.

#ifndef PBS_MATCHING_HPP_
#define PBS_MATCHING_HPP_

#include <vector>

#include "pbs/core_model.hpp"

namespace pbs {

struct MatchedPair {
  int tx = 0;
  int rx = 0;

  friend bool operator==(const MatchedPair&, const MatchedPair&) = default;
  friend auto operator<=>(const MatchedPair&, const MatchedPair&) = default;
};

/// Node-disjoint set of (tx, rx) pairs, kept sorted by (tx, rx).
struct Matching {
  std::vector<MatchedPair> pairs;

  std::size_t size() const { return pairs.size(); }
  bool empty() const { return pairs.empty(); }
  bool contains(int tx, int rx) const;
  void insert(int tx, int rx);

  friend bool operator==(const Matching&, const Matching&) = default;
};

struct LoadOrderEntry {
  Side side = Side::kTransmitter;
  int id = 0;
  Weight load = 0;

  friend bool operator==(const LoadOrderEntry&, const LoadOrderEntry&) = default;
};

/// All nodes of both sides sorted by load descending; ties go to
/// transmitters first, then to the lower id.
std::vector<LoadOrderEntry> load_order(const BipartiteGraph& graph);

/// Walks the load order once: the first remaining node is matched to its
/// neighbour that appears earliest in the order among those still remaining;
/// nodes without a remaining neighbour are dropped. The result is maximal.
Matching load_greedy_maximal_matching(const BipartiteGraph& graph);

/// Maximum-cardinality matching by augmenting paths. Deterministic, but
/// callers must not rely on which maximum matching is returned.
Matching max_cardinality_matching(const BipartiteGraph& graph);

struct Augmentation {
  Matching matching;
  std::vector<Edge> consumed;  // small edges added to the matching
};

/// Adds small edges whose endpoints are both free in `matching`, heaviest
/// first (ties by tx, then rx). Existing pairs are never touched.
Augmentation augment_with_small_edges(const Matching& matching,
                                      const BipartiteGraph& small_graph);

/// An edge of a regularized multigraph. `source` indexes the edges of the
/// graph passed to `regularize`; dummies carry source == -1 and weight 0.
struct RegularEdge {
  int left = 0;
  int right = 0;
  Weight weight = 0;
  int source = -1;

  bool is_dummy() const { return source < 0; }
};

/// Bipartite multigraph with `size` nodes per side where every node has
/// degree exactly `degree`.
struct RegularizedGraph {
  int size = 0;
  int degree = 0;
  std::vector<RegularEdge> edges;

  int dummy_count() const;
};

/// Pads both sides to the same node count and adds zero-weight dummy edges,
/// one at a time between the lowest-degree left and right nodes, until every
/// node has the graph's maximum degree. Parallel edges are allowed, so the
/// input may itself be a multigraph.
RegularizedGraph regularize(const BipartiteGraph& graph);

/// Splits a k-regular multigraph into exactly k perfect matchings by repeated
/// extraction. Each matching lists indices into `graph.edges`, ordered by
/// left node. Throws std::logic_error if the input is not regular.
std::vector<std::vector<int>> regular_decomposition(const RegularizedGraph& graph);

}  // namespace pbs

#endif  // PBS_MATCHING_HPP_
