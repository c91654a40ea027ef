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

#include "pbs/core_model.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace pbs {

Instance::Instance(int n_tx, int n_rx, Weight overhead, std::vector<Edge> edges)
    : graph_{n_tx, n_rx, std::move(edges)}, overhead_(overhead) {
  if (n_tx < 1 || n_rx < 1) {
    throw std::invalid_argument("station counts must be >= 1");
  }
  if (overhead < 1) throw std::invalid_argument("overhead must be >= 1");
  for (const Edge& e : graph_.edges) {
    if (e.tx < 0 || e.tx >= n_tx || e.rx < 0 || e.rx >= n_rx) {
      throw std::invalid_argument("edge endpoint out of range");
    }
    if (e.weight < 1) throw std::invalid_argument("edge weight must be >= 1");
  }
  std::sort(graph_.edges.begin(), graph_.edges.end(),
            [](const Edge& a, const Edge& b) {
              return std::pair(a.tx, a.rx) < std::pair(b.tx, b.rx);
            });
  auto dup = std::adjacent_find(
      graph_.edges.begin(), graph_.edges.end(),
      [](const Edge& a, const Edge& b) { return a.tx == b.tx && a.rx == b.rx; });
  if (dup != graph_.edges.end()) {
    throw std::invalid_argument("duplicate edge (" + std::to_string(dup->tx + 1) +
                                "," + std::to_string(dup->rx + 1) + ")");
  }
}

Packet make_packet(std::vector<PacketItem> items) {
  std::sort(items.begin(), items.end(),
            [](const PacketItem& a, const PacketItem& b) {
              return std::pair(a.tx, a.rx) < std::pair(b.tx, b.rx);
            });
  Weight duration = 0;
  for (const PacketItem& it : items) duration = std::max(duration, it.amount);
  return Packet{duration, std::move(items)};
}

NodeMetrics node_metrics(const BipartiteGraph& graph) {
  NodeMetrics m;
  m.tx_load.assign(graph.n_tx, 0);
  m.rx_load.assign(graph.n_rx, 0);
  m.tx_degree.assign(graph.n_tx, 0);
  m.rx_degree.assign(graph.n_rx, 0);
  for (const Edge& e : graph.edges) {
    if (e.weight <= 0) continue;
    m.tx_load[e.tx] += e.weight;
    m.rx_load[e.rx] += e.weight;
    ++m.tx_degree[e.tx];
    ++m.rx_degree[e.rx];
  }
  for (Weight t : m.tx_load) m.max_load = std::max(m.max_load, t);
  for (Weight t : m.rx_load) m.max_load = std::max(m.max_load, t);
  for (int k : m.tx_degree) m.max_degree = std::max(m.max_degree, k);
  for (int k : m.rx_degree) m.max_degree = std::max(m.max_degree, k);
  return m;
}

Weight lower_bound(const BipartiteGraph& graph, Weight overhead) {
  const NodeMetrics m = node_metrics(graph);
  return m.max_load + overhead * m.max_degree;
}

Weight makespan(const Schedule& schedule, Weight overhead) {
  Weight total = 0;
  for (const Packet& p : schedule.packets) total += p.duration + overhead;
  return total;
}

std::string to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kTransmitterConflict: return "transmitter-conflict";
    case ViolationKind::kReceiverConflict: return "receiver-conflict";
    case ViolationKind::kNonPositiveAmount: return "non-positive-amount";
    case ViolationKind::kDurationMismatch: return "duration-mismatch";
    case ViolationKind::kUnknownEdge: return "unknown-edge";
    case ViolationKind::kUnderCoverage: return "under-coverage";
    case ViolationKind::kOverCoverage: return "over-coverage";
  }
  return "unknown";
}

std::string ValidationReport::summary() const {
  if (ok()) return "ok";
  std::ostringstream out;
  for (const Violation& v : violations) out << v.message << '\n';
  return out.str();
}

namespace {

std::string where(int packet, int tx, int rx) {
  std::ostringstream out;
  if (packet >= 0) out << "packet " << packet + 1;
  if (tx >= 0 && rx >= 0) {
    out << (packet >= 0 ? " " : "") << "edge (" << tx + 1 << "," << rx + 1 << ")";
  } else if (tx >= 0) {
    out << " transmitter " << tx + 1;
  } else if (rx >= 0) {
    out << " receiver " << rx + 1;
  }
  return out.str();
}

}  // namespace

ValidationReport validate_schedule(const Instance& instance,
                                   const Schedule& schedule) {
  ValidationReport report;
  auto add = [&](ViolationKind kind, int packet, int tx, int rx, Weight amount) {
    std::string msg = to_string(kind) + " at " + where(packet, tx, rx);
    if (amount != 0) msg += " by " + std::to_string(amount);
    report.violations.push_back(Violation{kind, packet, tx, rx, amount, std::move(msg)});
  };

  std::map<std::pair<int, int>, Weight> demand;
  for (const Edge& e : instance.edges()) demand[{e.tx, e.rx}] = e.weight;
  std::map<std::pair<int, int>, Weight> sent;

  for (int p = 0; p < static_cast<int>(schedule.packets.size()); ++p) {
    const Packet& packet = schedule.packets[p];
    std::vector<char> tx_used(instance.n_tx(), 0);
    std::vector<char> rx_used(instance.n_rx(), 0);
    Weight max_amount = 0;
    for (const PacketItem& it : packet.items) {
      const bool in_range = it.tx >= 0 && it.tx < instance.n_tx() &&
                            it.rx >= 0 && it.rx < instance.n_rx();
      if (!in_range || !demand.contains({it.tx, it.rx})) {
        add(ViolationKind::kUnknownEdge, p, it.tx, it.rx, 0);
        continue;
      }
      if (tx_used[it.tx]) add(ViolationKind::kTransmitterConflict, p, it.tx, -1, 0);
      if (rx_used[it.rx]) add(ViolationKind::kReceiverConflict, p, -1, it.rx, 0);
      tx_used[it.tx] = rx_used[it.rx] = 1;
      if (it.amount <= 0) {
        add(ViolationKind::kNonPositiveAmount, p, it.tx, it.rx, it.amount);
        continue;
      }
      if (it.amount > packet.duration) {
        add(ViolationKind::kDurationMismatch, p, it.tx, it.rx,
            it.amount - packet.duration);
      }
      max_amount = std::max(max_amount, it.amount);
      sent[{it.tx, it.rx}] += it.amount;
    }
    if (packet.items.empty() || (max_amount > 0 && max_amount < packet.duration)) {
      add(ViolationKind::kDurationMismatch, p, -1, -1, packet.duration - max_amount);
    }
  }

  for (const auto& [key, need] : demand) {
    auto it = sent.find(key);
    const Weight got = it == sent.end() ? 0 : it->second;
    if (got < need) add(ViolationKind::kUnderCoverage, -1, key.first, key.second, need - got);
    if (got > need) add(ViolationKind::kOverCoverage, -1, key.first, key.second, got - need);
  }
  return report;
}

}  // namespace pbs
