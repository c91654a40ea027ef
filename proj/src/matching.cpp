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

#include "pbs/matching.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <stdexcept>
#include <tuple>

namespace pbs {

bool Matching::contains(int tx, int rx) const {
  return std::binary_search(pairs.begin(), pairs.end(), MatchedPair{tx, rx});
}

void Matching::insert(int tx, int rx) {
  const MatchedPair p{tx, rx};
  pairs.insert(std::lower_bound(pairs.begin(), pairs.end(), p), p);
}

std::vector<LoadOrderEntry> load_order(const BipartiteGraph& graph) {
  const NodeMetrics m = node_metrics(graph);
  std::vector<LoadOrderEntry> order;
  order.reserve(graph.n_tx + graph.n_rx);
  for (int v = 0; v < graph.n_tx; ++v) {
    order.push_back({Side::kTransmitter, v, m.tx_load[v]});
  }
  for (int u = 0; u < graph.n_rx; ++u) {
    order.push_back({Side::kReceiver, u, m.rx_load[u]});
  }
  std::stable_sort(order.begin(), order.end(),
                   [](const LoadOrderEntry& a, const LoadOrderEntry& b) {
                     return a.load > b.load;
                   });
  return order;
}

Matching load_greedy_maximal_matching(const BipartiteGraph& graph) {
  const std::vector<LoadOrderEntry> order = load_order(graph);
  std::vector<int> tx_pos(graph.n_tx), rx_pos(graph.n_rx);
  for (int i = 0; i < static_cast<int>(order.size()); ++i) {
    (order[i].side == Side::kTransmitter ? tx_pos : rx_pos)[order[i].id] = i;
  }
  std::vector<std::vector<int>> tx_adj(graph.n_tx), rx_adj(graph.n_rx);
  for (const Edge& e : graph.edges) {
    if (e.weight <= 0) continue;
    tx_adj[e.tx].push_back(e.rx);
    rx_adj[e.rx].push_back(e.tx);
  }
  std::vector<char> tx_alive(graph.n_tx, 1), rx_alive(graph.n_rx, 1);

  Matching matching;
  for (const LoadOrderEntry& w0 : order) {
    const bool is_tx = w0.side == Side::kTransmitter;
    if (!(is_tx ? tx_alive : rx_alive)[w0.id]) continue;
    const auto& nbrs = (is_tx ? tx_adj : rx_adj)[w0.id];
    const auto& nbr_alive = is_tx ? rx_alive : tx_alive;
    const auto& nbr_pos = is_tx ? rx_pos : tx_pos;
    int w1 = -1;
    for (int x : nbrs) {
      if (nbr_alive[x] && (w1 < 0 || nbr_pos[x] < nbr_pos[w1])) w1 = x;
    }
    (is_tx ? tx_alive : rx_alive)[w0.id] = 0;
    if (w1 < 0) continue;
    (is_tx ? rx_alive : tx_alive)[w1] = 0;
    if (is_tx) {
      matching.insert(w0.id, w1);
    } else {
      matching.insert(w1, w0.id);
    }
  }
  return matching;
}

Matching max_cardinality_matching(const BipartiteGraph& graph) {
  std::vector<std::vector<int>> adj(graph.n_tx);
  for (const Edge& e : graph.edges) {
    if (e.weight > 0) adj[e.tx].push_back(e.rx);
  }
  for (auto& list : adj) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
  std::vector<int> rx_match(graph.n_rx, -1);
  std::vector<int> seen(graph.n_rx, -1);

  std::function<bool(int, int)> augment = [&](int tx, int stamp) {
    for (int rx : adj[tx]) {
      if (seen[rx] == stamp) continue;
      seen[rx] = stamp;
      if (rx_match[rx] < 0 || augment(rx_match[rx], stamp)) {
        rx_match[rx] = tx;
        return true;
      }
    }
    return false;
  };
  for (int tx = 0; tx < graph.n_tx; ++tx) augment(tx, tx);

  Matching matching;
  for (int rx = 0; rx < graph.n_rx; ++rx) {
    if (rx_match[rx] >= 0) matching.pairs.push_back({rx_match[rx], rx});
  }
  std::sort(matching.pairs.begin(), matching.pairs.end());
  return matching;
}

Augmentation augment_with_small_edges(const Matching& matching,
                                      const BipartiteGraph& small_graph) {
  Augmentation out{matching, {}};
  std::vector<char> tx_used(small_graph.n_tx, 0), rx_used(small_graph.n_rx, 0);
  for (const MatchedPair& p : matching.pairs) {
    if (p.tx < small_graph.n_tx) tx_used[p.tx] = 1;
    if (p.rx < small_graph.n_rx) rx_used[p.rx] = 1;
  }
  std::vector<Edge> candidates;
  for (const Edge& e : small_graph.edges) {
    if (e.weight > 0) candidates.push_back(e);
  }
  std::sort(candidates.begin(), candidates.end(), [](const Edge& a, const Edge& b) {
    return std::tuple(-a.weight, a.tx, a.rx) < std::tuple(-b.weight, b.tx, b.rx);
  });
  for (const Edge& e : candidates) {
    if (tx_used[e.tx] || rx_used[e.rx]) continue;
    tx_used[e.tx] = rx_used[e.rx] = 1;
    out.matching.insert(e.tx, e.rx);
    out.consumed.push_back(e);
  }
  return out;
}

int RegularizedGraph::dummy_count() const {
  return static_cast<int>(
      std::count_if(edges.begin(), edges.end(),
                    [](const RegularEdge& e) { return e.is_dummy(); }));
}

RegularizedGraph regularize(const BipartiteGraph& graph) {
  RegularizedGraph rg;
  if (graph.edges.empty()) return rg;
  rg.size = std::max(graph.n_tx, graph.n_rx);
  std::vector<int> left_deg(rg.size, 0), right_deg(rg.size, 0);
  rg.edges.reserve(graph.edges.size());
  for (int i = 0; i < static_cast<int>(graph.edges.size()); ++i) {
    const Edge& e = graph.edges[i];
    rg.edges.push_back({e.tx, e.rx, e.weight, i});
    ++left_deg[e.tx];
    ++right_deg[e.rx];
  }
  rg.degree = std::max(*std::max_element(left_deg.begin(), left_deg.end()),
                       *std::max_element(right_deg.begin(), right_deg.end()));

  auto most_deficient = [&](const std::vector<int>& deg) {
    int best = -1;
    for (int i = 0; i < rg.size; ++i) {
      if (deg[i] < rg.degree && (best < 0 || deg[i] < deg[best])) best = i;
    }
    return best;
  };
  for (;;) {
    const int l = most_deficient(left_deg);
    if (l < 0) break;
    const int r = most_deficient(right_deg);
    if (r < 0) throw std::logic_error("regularize: unbalanced degree deficit");
    rg.edges.push_back({l, r, 0, -1});
    ++left_deg[l];
    ++right_deg[r];
  }
  return rg;
}

std::vector<std::vector<int>> regular_decomposition(const RegularizedGraph& graph) {
  const int n = graph.size;
  std::vector<int> left_deg(n, 0), right_deg(n, 0);
  // buckets[l * n + r] holds the unused parallel edges between l and r; the
  // lowest edge index sits at the back.
  std::vector<std::vector<int>> buckets(static_cast<std::size_t>(n) * n);
  for (int i = static_cast<int>(graph.edges.size()) - 1; i >= 0; --i) {
    const RegularEdge& e = graph.edges[i];
    if (e.left < 0 || e.left >= n || e.right < 0 || e.right >= n) {
      throw std::logic_error("regular_decomposition: edge endpoint out of range");
    }
    buckets[static_cast<std::size_t>(e.left) * n + e.right].push_back(i);
    ++left_deg[e.left];
    ++right_deg[e.right];
  }
  for (int i = 0; i < n; ++i) {
    if (left_deg[i] != graph.degree || right_deg[i] != graph.degree) {
      throw std::logic_error("regular_decomposition: graph is not regular");
    }
  }
  auto has_edge = [&](int l, int r) {
    return !buckets[static_cast<std::size_t>(l) * n + r].empty();
  };

  std::vector<std::vector<int>> result;
  result.reserve(graph.degree);
  std::vector<int> left_match(n), right_match(n), seen(n);
  int stamp = 0;
  std::function<bool(int)> augment = [&](int l) {
    for (int r = 0; r < n; ++r) {
      if (!has_edge(l, r) || seen[r] == stamp) continue;
      seen[r] = stamp;
      if (right_match[r] < 0 || augment(right_match[r])) {
        right_match[r] = l;
        left_match[l] = r;
        return true;
      }
    }
    return false;
  };

  for (int round = 0; round < graph.degree; ++round) {
    std::fill(left_match.begin(), left_match.end(), -1);
    std::fill(right_match.begin(), right_match.end(), -1);
    std::fill(seen.begin(), seen.end(), -1);
    for (int l = 0; l < n; ++l) {
      for (int r = 0; r < n; ++r) {
        if (right_match[r] < 0 && has_edge(l, r)) {
          left_match[l] = r;
          right_match[r] = l;
          break;
        }
      }
    }
    for (int l = 0; l < n; ++l) {
      if (left_match[l] >= 0) continue;
      ++stamp;
      if (!augment(l)) {
        throw std::logic_error("regular_decomposition: no perfect matching");
      }
    }
    std::vector<int> matching(n);
    for (int l = 0; l < n; ++l) {
      auto& bucket = buckets[static_cast<std::size_t>(l) * n + left_match[l]];
      matching[l] = bucket.back();
      bucket.pop_back();
    }
    result.push_back(std::move(matching));
  }
  return result;
}

}  // namespace pbs
