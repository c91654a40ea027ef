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

// Instance and schedule data model shared by every solver in the library.
//
// Node ids are 0-based internally; the text formats in io.hpp use 1-based ids.
// All times (weights, durations, amounts, overhead) are integers.

#ifndef PBS_CORE_MODEL_HPP_
#define PBS_CORE_MODEL_HPP_

#include <cstdint>
#include <string>
#include <vector>

namespace pbs {

using Weight = std::int64_t;

enum class Side { kTransmitter, kReceiver };

/// A message from transmitter `tx` to receiver `rx` that needs `weight` time
/// units on the link.
struct Edge {
  int tx = 0;
  int rx = 0;
  Weight weight = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Weighted bipartite graph with transmitters on one side and receivers on
/// the other. Used for residual graphs inside the solvers, so zero weights
/// and arbitrary edge order are tolerated here; `Instance` is the validated
/// form.
struct BipartiteGraph {
  int n_tx = 0;
  int n_rx = 0;
  std::vector<Edge> edges;

  bool empty() const { return edges.empty(); }
  friend bool operator==(const BipartiteGraph&, const BipartiteGraph&) = default;
};

/// A scheduling problem: a demand graph plus the per-packet setup overhead.
///
/// Construction validates every invariant and throws std::invalid_argument on
/// failure: ids in range, weights >= 1, overhead >= 1, no duplicate pairs.
/// Edges are stored sorted by (tx, rx).
class Instance {
 public:
  Instance(int n_tx, int n_rx, Weight overhead, std::vector<Edge> edges);

  int n_tx() const { return graph_.n_tx; }
  int n_rx() const { return graph_.n_rx; }
  Weight overhead() const { return overhead_; }
  const std::vector<Edge>& edges() const { return graph_.edges; }
  const BipartiteGraph& graph() const { return graph_; }

  friend bool operator==(const Instance&, const Instance&) = default;

 private:
  BipartiteGraph graph_;
  Weight overhead_;
};

struct PacketItem {
  int tx = 0;
  int rx = 0;
  Weight amount = 0;

  friend bool operator==(const PacketItem&, const PacketItem&) = default;
};

/// One switch configuration: a set of simultaneous transmissions that must
/// form a matching, held for `duration` time units.
struct Packet {
  Weight duration = 0;
  std::vector<PacketItem> items;

  friend bool operator==(const Packet&, const Packet&) = default;
};

/// Builds a packet from items, sorting them by transmitter and setting the
/// duration to the largest amount.
Packet make_packet(std::vector<PacketItem> items);

struct Schedule {
  std::vector<Packet> packets;

  friend bool operator==(const Schedule&, const Schedule&) = default;
};

/// Per-station workload t(.) and message count, with their maxima W and Delta.
struct NodeMetrics {
  std::vector<Weight> tx_load;
  std::vector<Weight> rx_load;
  std::vector<int> tx_degree;
  std::vector<int> rx_degree;
  Weight max_load = 0;  // W
  int max_degree = 0;   // Delta
};

NodeMetrics node_metrics(const BipartiteGraph& graph);
inline NodeMetrics node_metrics(const Instance& instance) {
  return node_metrics(instance.graph());
}

/// W + d * Delta. Every packet costs at least d, a station of degree Delta
/// needs at least Delta packets, and durations must add up to at least W.
Weight lower_bound(const BipartiteGraph& graph, Weight overhead);
inline Weight lower_bound(const Instance& instance) {
  return lower_bound(instance.graph(), instance.overhead());
}

/// Sum over packets of (duration + overhead).
Weight makespan(const Schedule& schedule, Weight overhead);

enum class ViolationKind {
  kTransmitterConflict,
  kReceiverConflict,
  kNonPositiveAmount,
  kDurationMismatch,
  kUnknownEdge,
  kUnderCoverage,
  kOverCoverage,
};

std::string to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  int packet = -1;  // -1 for coverage violations, which are per edge
  int tx = -1;      // -1 when the violation is not tied to a transmitter
  int rx = -1;
  Weight amount = 0;  // magnitude: excess, shortfall, or offending value
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  std::string summary() const;
};

/// Checks every packet is a matching with positive amounts and
/// duration == max amount, and that per-edge coverage is exact.
ValidationReport validate_schedule(const Instance& instance,
                                   const Schedule& schedule);

}  // namespace pbs

#endif  // PBS_CORE_MODEL_HPP_
