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

#include "pbs/sga.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

namespace pbs {

SplitState split_graph(const Instance& instance) {
  SplitState state;
  state.overhead = instance.overhead();
  state.large = {instance.n_tx(), instance.n_rx(), {}};
  state.small = {instance.n_tx(), instance.n_rx(), {}};
  for (const Edge& e : instance.edges()) {
    (e.weight >= instance.overhead() ? state.large : state.small).edges.push_back(e);
  }
  return state;
}

namespace {

// W of `graph` after every matched edge loses min(weight, cut).
Weight max_load_after_cut(const BipartiteGraph& graph, const Matching& matching,
                          Weight cut) {
  std::vector<Weight> tx_load(graph.n_tx, 0), rx_load(graph.n_rx, 0);
  for (const Edge& e : graph.edges) {
    Weight w = e.weight;
    if (matching.contains(e.tx, e.rx)) w -= std::min(w, cut);
    tx_load[e.tx] += w;
    rx_load[e.rx] += w;
  }
  Weight w_max = 0;
  for (Weight t : tx_load) w_max = std::max(w_max, t);
  for (Weight t : rx_load) w_max = std::max(w_max, t);
  return w_max;
}

}  // namespace

RemovalWeight removal_weight(const BipartiteGraph& large, const Matching& matching) {
  if (matching.empty()) throw std::invalid_argument("removal_weight: empty matching");
  std::map<MatchedPair, Weight> weight_of;
  for (const Edge& e : large.edges) weight_of[{e.tx, e.rx}] = e.weight;

  const Weight w = node_metrics(large).max_load;
  RemovalWeight out;
  Weight smallest = 0;
  for (const MatchedPair& p : matching.pairs) {
    auto it = weight_of.find(p);
    if (it == weight_of.end()) {
      throw std::invalid_argument("removal_weight: matched pair is not an edge");
    }
    const Weight c = it->second;
    const Weight r = max_load_after_cut(large, matching, c) == w - c ? c : 0;
    out.per_edge.push_back({p, c, r});
    out.amount = std::max(out.amount, r);
    smallest = out.per_edge.size() == 1 ? c : std::min(smallest, c);
  }
  if (out.amount == 0) {
    out.amount = smallest;
    out.fallback = true;
  }
  return out;
}

Schedule run_sga(const Instance& instance, SgaTrace* trace) {
  const Weight d = instance.overhead();
  SplitState state = split_graph(instance);
  Schedule schedule;

  while (!state.large.empty()) {
    SgaIteration it;
    it.large_matching = load_greedy_maximal_matching(state.large);
    it.removal = removal_weight(state.large, it.large_matching);
    const Weight cut = it.removal.amount;

    Augmentation aug = augment_with_small_edges(it.large_matching, state.small);
    it.small_added = aug.consumed;

    std::vector<PacketItem> items;
    for (const Edge& e : aug.consumed) items.push_back({e.tx, e.rx, e.weight});
    std::erase_if(state.small.edges, [&](const Edge& e) {
      return aug.matching.contains(e.tx, e.rx);
    });

    std::vector<Edge> survivors;
    for (Edge e : state.large.edges) {
      if (it.large_matching.contains(e.tx, e.rx)) {
        const Weight sent = std::min(e.weight, cut);
        items.push_back({e.tx, e.rx, sent});
        e.weight -= sent;
      }
      if (e.weight >= d) {
        survivors.push_back(e);
      } else if (e.weight > 0) {
        state.small.edges.push_back(e);
        it.migrated.push_back(e);
      }
    }
    state.large.edges = std::move(survivors);
    schedule.packets.push_back(make_packet(std::move(items)));
    if (trace) trace->iterations.push_back(std::move(it));
  }

  const RegularizedGraph rg = regularize(state.small);
  if (trace) trace->small_degree = rg.degree;
  for (const std::vector<int>& perfect : regular_decomposition(rg)) {
    std::vector<PacketItem> items;
    for (int idx : perfect) {
      const RegularEdge& e = rg.edges[idx];
      if (!e.is_dummy()) items.push_back({e.left, e.right, e.weight});
    }
    if (items.empty()) continue;
    schedule.packets.push_back(make_packet(std::move(items)));
    if (trace) ++trace->small_packets;
  }
  return schedule;
}

}  // namespace pbs
