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

// Shared helpers for the test suites. The reference routines here are
// deliberately naive and independent of the library's algorithms.

#ifndef PBS_TESTS_TEST_SUPPORT_HPP_
#define PBS_TESTS_TEST_SUPPORT_HPP_

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <random>
#include <vector>

#include "pbs/core_model.hpp"
#include "pbs/matching.hpp"

namespace pbs::testing {

struct E1 {  // 1-based edge, as written in worked examples
  int v;
  int u;
  Weight w;
};

inline std::vector<Edge> edges1(std::initializer_list<E1> list) {
  std::vector<Edge> out;
  for (const E1& e : list) out.push_back({e.v - 1, e.u - 1, e.w});
  return out;
}

inline Instance instance1(int n, int m, Weight d, std::initializer_list<E1> list) {
  return Instance(n, m, d, edges1(list));
}

inline BipartiteGraph graph1(int n, int m, std::initializer_list<E1> list) {
  return BipartiteGraph{n, m, edges1(list)};
}

inline Matching matching1(std::initializer_list<std::pair<int, int>> pairs) {
  Matching out;
  for (auto [v, u] : pairs) out.insert(v - 1, u - 1);
  return out;
}

/// Random instance with every pair kept with probability `density`.
inline Instance random_instance(std::mt19937_64& rng, int max_side, Weight max_w,
                                Weight max_d, double density) {
  std::uniform_int_distribution<int> side(1, max_side);
  const int n = side(rng), m = side(rng);
  const Weight d = std::uniform_int_distribution<Weight>(1, max_d)(rng);
  const Weight w_max = std::uniform_int_distribution<Weight>(1, max_w)(rng);
  std::uniform_int_distribution<Weight> weight(1, w_max);
  std::bernoulli_distribution keep(density);
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v) {
    for (int u = 0; u < m; ++u) {
      if (keep(rng)) edges.push_back({v, u, weight(rng)});
    }
  }
  return Instance(n, m, d, std::move(edges));
}

/// Random instance with at most `max_edges` edges and total weight capped, for
/// the exact oracle.
inline Instance random_tiny_instance(std::mt19937_64& rng, int max_side, int max_edges,
                                     Weight max_w, Weight max_total, Weight max_d) {
  std::uniform_int_distribution<int> side(1, max_side);
  const int n = side(rng), m = side(rng);
  std::vector<std::pair<int, int>> pairs;
  for (int v = 0; v < n; ++v) {
    for (int u = 0; u < m; ++u) pairs.push_back({v, u});
  }
  std::shuffle(pairs.begin(), pairs.end(), rng);
  const int k = std::uniform_int_distribution<int>(
      1, std::min<int>(max_edges, static_cast<int>(pairs.size())))(rng);
  std::vector<Edge> edges;
  Weight total = 0;
  for (int i = 0; i < k; ++i) {
    const Weight cap = std::min(max_w, max_total - total - (k - i - 1));
    const Weight w = std::uniform_int_distribution<Weight>(1, std::max<Weight>(cap, 1))(rng);
    total += w;
    edges.push_back({pairs[i].first, pairs[i].second, w});
  }
  const Weight d = std::uniform_int_distribution<Weight>(1, max_d)(rng);
  return Instance(n, m, d, std::move(edges));
}

/// Maximum matching size by trying every edge subset.
inline int brute_force_max_matching(const BipartiteGraph& g) {
  const int m = static_cast<int>(g.edges.size());
  int best = 0;
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    std::vector<char> tx(g.n_tx, 0), rx(g.n_rx, 0);
    bool ok = true;
    int size = 0;
    for (int i = 0; i < m && ok; ++i) {
      if (!(mask >> i & 1u)) continue;
      const Edge& e = g.edges[i];
      if (tx[e.tx] || rx[e.rx]) ok = false;
      tx[e.tx] = rx[e.rx] = 1;
      ++size;
    }
    if (ok) best = std::max(best, size);
  }
  return best;
}

inline bool is_matching_in(const Matching& mt, const BipartiteGraph& g) {
  std::vector<char> tx(g.n_tx, 0), rx(g.n_rx, 0);
  for (const MatchedPair& p : mt.pairs) {
    if (tx[p.tx] || rx[p.rx]) return false;
    tx[p.tx] = rx[p.rx] = 1;
    const bool present = std::any_of(g.edges.begin(), g.edges.end(), [&](const Edge& e) {
      return e.tx == p.tx && e.rx == p.rx && e.weight > 0;
    });
    if (!present) return false;
  }
  return true;
}

inline std::vector<Weight> durations(const Schedule& s) {
  std::vector<Weight> out;
  for (const Packet& p : s.packets) out.push_back(p.duration);
  return out;
}

/// Optimal makespan by plain recursion over every non-empty matching and every
/// packet length from 1 to the longest matched residual, memoised on the
/// residual but without pruning. Only usable for a handful of small edges.
inline Weight brute_force_optimum(const Instance& inst, std::vector<Weight> residual,
                                  std::map<std::vector<Weight>, Weight>& memo) {
  if (auto it = memo.find(residual); it != memo.end()) return it->second;
  const auto& edges = inst.edges();
  const int m = static_cast<int>(edges.size());
  bool done = true;
  for (Weight w : residual) done = done && w == 0;
  if (done) return 0;
  Weight best = -1;
  for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
    std::vector<char> tx(inst.n_tx(), 0), rx(inst.n_rx(), 0);
    bool ok = true;
    Weight longest = 0;
    for (int i = 0; i < m && ok; ++i) {
      if (!(mask >> i & 1u)) continue;
      if (residual[i] == 0 || tx[edges[i].tx] || rx[edges[i].rx]) ok = false;
      tx[edges[i].tx] = rx[edges[i].rx] = 1;
      longest = std::max(longest, residual[i]);
    }
    if (!ok) continue;
    for (Weight t = 1; t <= longest; ++t) {
      std::vector<Weight> next = residual;
      for (int i = 0; i < m; ++i) {
        if (mask >> i & 1u) next[i] -= std::min(next[i], t);
      }
      const Weight cost = t + inst.overhead() + brute_force_optimum(inst, next, memo);
      if (best < 0 || cost < best) best = cost;
    }
  }
  memo[residual] = best;
  return best;
}

inline Weight brute_force_optimum(const Instance& inst) {
  std::vector<Weight> start;
  for (const Edge& e : inst.edges()) start.push_back(e.weight);
  std::map<std::vector<Weight>, Weight> memo;
  return brute_force_optimum(inst, start, memo);
}

}  // namespace pbs::testing

#endif  // PBS_TESTS_TEST_SUPPORT_HPP_
