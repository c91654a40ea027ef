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

#include "pbs/exact_oracle.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "pbs/matching.hpp"

namespace pbs {

namespace {

using Residual = std::vector<Weight>;
constexpr Weight kInfinity = std::numeric_limits<Weight>::max() / 4;

struct Choice {
  unsigned mask = 0;
  Weight duration = 0;
};

struct MemoEntry {
  Weight value = 0;
  Choice choice;
};

class BranchAndBound {
 public:
  BranchAndBound(const Instance& instance, const SearchLimits& limits,
                 DurationCandidates candidates)
      : instance_(instance), limits_(limits), candidates_(candidates) {
    const auto& edges = instance.edges();
    const int m = static_cast<int>(edges.size());
    conflicts_.assign(m, 0);
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) {
        if (i != j && (edges[i].tx == edges[j].tx || edges[i].rx == edges[j].rx)) {
          conflicts_[i] |= 1u << j;
        }
      }
    }
    for (unsigned mask = 1; mask < (1u << m); ++mask) {
      bool ok = true;
      for (int i = 0; i < m && ok; ++i) {
        if ((mask >> i & 1u) && (conflicts_[i] & mask)) ok = false;
      }
      if (ok) matchings_.push_back(mask);
    }
  }

  Weight solve(const Residual& state) {
    if (std::all_of(state.begin(), state.end(), [](Weight w) { return w == 0; })) {
      return 0;
    }
    if (auto it = memo_.find(state); it != memo_.end()) return it->second.value;
    if (++explored_ > limits_.node_budget) {
      throw OracleLimitExceeded("search node budget exhausted");
    }

    const Weight d = instance_.overhead();
    const Weight floor = bound(state);
    const unsigned support = support_of(state);
    MemoEntry best{kInfinity, {}};

    for (unsigned mask : matchings_) {
      if (best.value == floor) break;
      if ((mask & ~support) != 0 || !maximal_in(mask, support)) continue;
      for (Weight t : durations(state, mask)) {
        Residual next = state;
        for (int i = 0; i < static_cast<int>(next.size()); ++i) {
          if (mask >> i & 1u) next[i] -= std::min(next[i], t);
        }
        if (t + d + bound(next) >= best.value) continue;
        const Weight cost = t + d + solve(next);
        if (cost < best.value) best = {cost, {mask, t}};
        if (best.value == floor) break;
      }
    }
    memo_.emplace(state, best);
    return best.value;
  }

  Schedule witness(Residual state) const {
    Schedule schedule;
    const auto& edges = instance_.edges();
    while (std::any_of(state.begin(), state.end(), [](Weight w) { return w > 0; })) {
      const Choice& c = memo_.at(state).choice;
      std::vector<PacketItem> items;
      for (int i = 0; i < static_cast<int>(state.size()); ++i) {
        if (!(c.mask >> i & 1u)) continue;
        const Weight sent = std::min(state[i], c.duration);
        items.push_back({edges[i].tx, edges[i].rx, sent});
        state[i] -= sent;
      }
      schedule.packets.push_back(make_packet(std::move(items)));
    }
    return schedule;
  }

  std::int64_t explored() const { return explored_; }

 private:
  unsigned support_of(const Residual& state) const {
    unsigned s = 0;
    for (int i = 0; i < static_cast<int>(state.size()); ++i) {
      if (state[i] > 0) s |= 1u << i;
    }
    return s;
  }

  bool maximal_in(unsigned mask, unsigned support) const {
    for (int i = 0; i < static_cast<int>(conflicts_.size()); ++i) {
      if ((support >> i & 1u) && !(mask >> i & 1u) && !(conflicts_[i] & mask)) {
        return false;
      }
    }
    return true;
  }

  // Descending, so long packets that clear more work are tried first.
  std::vector<Weight> durations(const Residual& state, unsigned mask) const {
    std::vector<Weight> out;
    Weight longest = 0;
    Weight shortest_overall = kInfinity;
    for (int i = 0; i < static_cast<int>(state.size()); ++i) {
      if (state[i] > 0) shortest_overall = std::min(shortest_overall, state[i]);
      if (mask >> i & 1u) {
        out.push_back(state[i]);
        longest = std::max(longest, state[i]);
      }
    }
    if (candidates_ == DurationCandidates::kFullRange) {
      out.clear();
      for (Weight t = 1; t <= longest; ++t) out.push_back(t);
    } else if (shortest_overall < longest) {
      out.push_back(shortest_overall);
    }
    std::sort(out.begin(), out.end(), std::greater<>());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  Weight bound(const Residual& state) const {
    BipartiteGraph g{instance_.n_tx(), instance_.n_rx(), {}};
    const auto& edges = instance_.edges();
    for (int i = 0; i < static_cast<int>(state.size()); ++i) {
      if (state[i] > 0) g.edges.push_back({edges[i].tx, edges[i].rx, state[i]});
    }
    return lower_bound(g, instance_.overhead());
  }

  const Instance& instance_;
  SearchLimits limits_;
  DurationCandidates candidates_;
  std::vector<unsigned> conflicts_;
  std::vector<unsigned> matchings_;
  std::map<Residual, MemoEntry> memo_;
  std::int64_t explored_ = 0;
};

}  // namespace

OracleResult optimal_makespan(const Instance& instance, const SearchLimits& limits,
                              DurationCandidates candidates) {
  const int m = static_cast<int>(instance.edges().size());
  if (m > limits.max_edges || m > 16) {
    throw OracleLimitExceeded("instance has " + std::to_string(m) +
                              " edges, limit is " + std::to_string(limits.max_edges));
  }
  if (instance.n_tx() > limits.max_nodes_per_side ||
      instance.n_rx() > limits.max_nodes_per_side) {
    throw OracleLimitExceeded("instance exceeds " +
                              std::to_string(limits.max_nodes_per_side) +
                              " stations per side");
  }
  Weight total = 0;
  Residual start;
  for (const Edge& e : instance.edges()) {
    total += e.weight;
    start.push_back(e.weight);
  }
  if (total > limits.max_total_weight) {
    throw OracleLimitExceeded("total weight " + std::to_string(total) +
                              " exceeds limit " +
                              std::to_string(limits.max_total_weight));
  }

  BranchAndBound search(instance, limits, candidates);
  OracleResult result;
  result.makespan = search.solve(start);
  result.witness = search.witness(start);
  result.explored = search.explored();
  return result;
}

Schedule min_total_duration_decomposition(const Instance& instance) {
  const NodeMetrics metrics = node_metrics(instance);
  const Weight w = metrics.max_load;
  const int n = std::max(instance.n_tx(), instance.n_rx());

  // real[l][r] is the instance demand, pad[l][r] the filler that brings every
  // row and column sum up to W.
  std::vector<std::vector<Weight>> real(n, std::vector<Weight>(n, 0));
  std::vector<std::vector<Weight>> pad(n, std::vector<Weight>(n, 0));
  std::vector<Weight> row_gap(n, w), col_gap(n, w);
  for (const Edge& e : instance.edges()) {
    real[e.tx][e.rx] = e.weight;
    row_gap[e.tx] -= e.weight;
    col_gap[e.rx] -= e.weight;
  }
  for (int l = 0, r = 0; l < n && r < n;) {
    const Weight fill = std::min(row_gap[l], col_gap[r]);
    pad[l][r] += fill;
    row_gap[l] -= fill;
    col_gap[r] -= fill;
    if (row_gap[l] == 0) ++l;
    if (r < n && col_gap[r] == 0) ++r;
  }

  BipartiteGraph support{n, n, {}};
  Schedule schedule;
  for (;;) {
    support.edges.clear();
    for (int l = 0; l < n; ++l) {
      for (int r = 0; r < n; ++r) {
        if (real[l][r] + pad[l][r] > 0) support.edges.push_back({l, r, 1});
      }
    }
    if (support.edges.empty()) break;
    const Matching perfect = max_cardinality_matching(support);
    if (static_cast<int>(perfect.size()) != n) {
      throw std::logic_error("min_total_duration_decomposition: no perfect matching");
    }
    Weight step = kInfinity;
    for (const MatchedPair& p : perfect.pairs) {
      step = std::min(step, real[p.tx][p.rx] + pad[p.tx][p.rx]);
    }
    std::vector<PacketItem> items;
    for (const MatchedPair& p : perfect.pairs) {
      // Drain real demand before filler so the critical rows stay real.
      Weight left = step;
      const Weight from_real = std::min(left, real[p.tx][p.rx]);
      real[p.tx][p.rx] -= from_real;
      left -= from_real;
      pad[p.tx][p.rx] -= left;
      if (from_real > 0) items.push_back({p.tx, p.rx, from_real});
    }
    if (!items.empty()) schedule.packets.push_back(make_packet(std::move(items)));
  }
  return schedule;
}

}  // namespace pbs
