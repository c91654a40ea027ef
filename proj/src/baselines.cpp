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

#include "pbs/baselines.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace pbs {

RoundedInstance round_up_weights(const Instance& instance) {
  RoundedInstance out;
  out.slot = instance.overhead() + 1;
  out.unit_multigraph = {instance.n_tx(), instance.n_rx(), {}};
  const auto& edges = instance.edges();
  for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
    const Weight slots = (edges[i].weight + out.slot - 1) / out.slot;
    out.rounded.push_back(slots * out.slot);
    out.slot_count.push_back(static_cast<int>(slots));
    for (Weight k = 0; k < slots; ++k) {
      out.unit_multigraph.edges.push_back({edges[i].tx, edges[i].rx, out.slot});
      out.unit_source.push_back(i);
    }
  }
  return out;
}

Schedule run_apbs(const Instance& instance) {
  const RoundedInstance rounded = round_up_weights(instance);
  const RegularizedGraph rg = regularize(rounded.unit_multigraph);

  std::vector<Weight> remaining;
  for (const Edge& e : instance.edges()) remaining.push_back(e.weight);

  Schedule schedule;
  for (const std::vector<int>& perfect : regular_decomposition(rg)) {
    std::vector<PacketItem> items;
    for (int idx : perfect) {
      const RegularEdge& e = rg.edges[idx];
      if (e.is_dummy()) continue;
      const int src = rounded.unit_source[e.source];
      const Weight amount = std::min(remaining[src], rounded.slot);
      remaining[src] -= amount;
      items.push_back({e.left, e.right, amount});
    }
    if (items.empty()) continue;
    schedule.packets.push_back(make_packet(std::move(items)));
  }
  return schedule;
}

namespace {

BipartiteGraph cut(const BipartiteGraph& residual, const Matching& matching, Weight t) {
  BipartiteGraph next{residual.n_tx, residual.n_rx, {}};
  for (Edge e : residual.edges) {
    if (matching.contains(e.tx, e.rx)) e.weight -= std::min(e.weight, t);
    if (e.weight > 0) next.edges.push_back(e);
  }
  return next;
}

}  // namespace

Weight a1_packet_choice(const BipartiteGraph& residual, const Matching& matching,
                        Weight overhead) {
  std::vector<Weight> candidates;
  for (const Edge& e : residual.edges) {
    if (e.weight > 0 && matching.contains(e.tx, e.rx)) candidates.push_back(e.weight);
  }
  if (candidates.empty()) throw std::invalid_argument("a1_packet_choice: empty matching");
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  Weight best_t = 0;
  Weight best_cost = 0;
  for (Weight t : candidates) {
    const Weight cost = t + overhead + lower_bound(cut(residual, matching, t), overhead);
    if (best_t == 0 || cost <= best_cost) {
      best_t = t;
      best_cost = cost;
    }
  }
  return best_t;
}

Schedule run_a1(const Instance& instance) {
  BipartiteGraph residual = instance.graph();
  Schedule schedule;
  while (!residual.empty()) {
    const Matching matching = max_cardinality_matching(residual);
    const Weight t = a1_packet_choice(residual, matching, instance.overhead());
    std::vector<PacketItem> items;
    for (const Edge& e : residual.edges) {
      if (matching.contains(e.tx, e.rx)) items.push_back({e.tx, e.rx, std::min(e.weight, t)});
    }
    schedule.packets.push_back(make_packet(std::move(items)));
    residual = cut(residual, matching, t);
  }
  return schedule;
}

}  // namespace pbs
