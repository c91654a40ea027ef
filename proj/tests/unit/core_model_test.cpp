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

#include <gtest/gtest.h>

#include <random>

#include "test_support.hpp"

namespace pbs {
namespace {

using testing::instance1;

TEST(NodeMetricsTest, ThreeEdgeExample) {
  const Instance inst = instance1(2, 2, 1, {{1, 1, 3}, {1, 2, 2}, {2, 1, 2}});
  const NodeMetrics m = node_metrics(inst);
  EXPECT_EQ(m.tx_load[0], 5);
  EXPECT_EQ(m.rx_load[0], 5);
  EXPECT_EQ(m.tx_load[1], 2);
  EXPECT_EQ(m.rx_load[1], 2);
  EXPECT_EQ(m.max_load, 5);
  EXPECT_EQ(m.max_degree, 2);
}

TEST(NodeMetricsTest, SingleEdge) {
  const NodeMetrics m = node_metrics(instance1(1, 1, 1, {{1, 1, 4}}));
  EXPECT_EQ(m.max_load, 4);
  EXPECT_EQ(m.max_degree, 1);
}

TEST(NodeMetricsTest, EmptyEdgeSet) {
  const NodeMetrics m = node_metrics(instance1(3, 2, 1, {}));
  EXPECT_EQ(m.max_load, 0);
  EXPECT_EQ(m.max_degree, 0);
}

TEST(NodeMetricsTest, TransposeKeepsMaxima) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const Instance inst = testing::random_instance(rng, 6, 20, 5, 0.5);
    std::vector<Edge> flipped;
    for (const Edge& e : inst.edges()) flipped.push_back({e.rx, e.tx, e.weight});
    const Instance t(inst.n_rx(), inst.n_tx(), inst.overhead(), flipped);
    EXPECT_EQ(node_metrics(inst).max_load, node_metrics(t).max_load);
    EXPECT_EQ(node_metrics(inst).max_degree, node_metrics(t).max_degree);
  }
}

TEST(LowerBoundTest, WorkedExamples) {
  EXPECT_EQ(lower_bound(instance1(2, 2, 1, {{1, 1, 3}, {1, 2, 2}, {2, 1, 2}})), 7);
  EXPECT_EQ(lower_bound(instance1(1, 1, 3, {{1, 1, 4}})), 7);
  EXPECT_EQ(lower_bound(instance1(1, 2, 1, {{1, 1, 2}, {1, 2, 2}})), 6);
  EXPECT_EQ(lower_bound(instance1(2, 2, 9, {})), 0);
}

TEST(MakespanTest, SumsDurationPlusOverhead) {
  Schedule s;
  s.packets = {Packet{3, {}}, Packet{2, {}}};
  EXPECT_EQ(makespan(s, 1), 7);
  EXPECT_EQ(makespan(Schedule{}, 5), 0);
  s.packets = {Packet{2, {}}, Packet{2, {}}, Packet{2, {}}};
  EXPECT_EQ(makespan(s, 2), 12);
}

TEST(InstanceTest, RejectsInvalidInput) {
  EXPECT_THROW(Instance(0, 1, 1, {}), std::invalid_argument);
  EXPECT_THROW(Instance(1, 1, 0, {}), std::invalid_argument);
  EXPECT_THROW(Instance(1, 1, 1, {{0, 0, 0}}), std::invalid_argument);
  EXPECT_THROW(Instance(1, 1, 1, {{0, 1, 2}}), std::invalid_argument);
  EXPECT_THROW(Instance(2, 2, 1, {{0, 1, 2}, {0, 1, 3}}), std::invalid_argument);
}

TEST(InstanceTest, SortsEdges) {
  const Instance inst(2, 2, 1, {{1, 0, 1}, {0, 1, 2}, {0, 0, 3}});
  EXPECT_EQ(inst.edges()[0], (Edge{0, 0, 3}));
  EXPECT_EQ(inst.edges()[2], (Edge{1, 0, 1}));
}

TEST(ValidateScheduleTest, ExactSinglePacketIsOk) {
  const Instance inst = instance1(1, 1, 1, {{1, 1, 3}});
  const Schedule s{{make_packet({{0, 0, 3}})}};
  EXPECT_TRUE(validate_schedule(inst, s).ok());
}

TEST(ValidateScheduleTest, ReportsUnderCoverage) {
  const Instance inst = instance1(1, 1, 1, {{1, 1, 3}});
  const ValidationReport r = validate_schedule(inst, Schedule{{make_packet({{0, 0, 2}})}});
  ASSERT_EQ(r.violations.size(), 1u);
  EXPECT_EQ(r.violations[0].kind, ViolationKind::kUnderCoverage);
  EXPECT_EQ(r.violations[0].tx, 0);
  EXPECT_EQ(r.violations[0].rx, 0);
  EXPECT_EQ(r.violations[0].amount, 1);
}

TEST(ValidateScheduleTest, ReportsTransmitterConflict) {
  const Instance inst = instance1(1, 2, 1, {{1, 1, 2}, {1, 2, 2}});
  const ValidationReport r =
      validate_schedule(inst, Schedule{{make_packet({{0, 0, 2}, {0, 1, 2}})}});
  ASSERT_EQ(r.violations.size(), 1u);
  EXPECT_EQ(r.violations[0].kind, ViolationKind::kTransmitterConflict);
  EXPECT_EQ(r.violations[0].tx, 0);
  EXPECT_EQ(r.violations[0].packet, 0);
}

TEST(ValidateScheduleTest, ReportsOtherKinds) {
  const Instance inst = instance1(2, 2, 1, {{1, 1, 2}, {2, 1, 1}});
  Schedule s;
  s.packets.push_back(Packet{1, {{0, 0, 2}}});              // amount > duration
  s.packets.push_back(Packet{5, {{1, 0, 1}}});              // duration > max amount
  s.packets.push_back(Packet{1, {{1, 1, 1}}});              // unknown edge
  s.packets.push_back(Packet{1, {{0, 0, 1}, {1, 0, 1}}});   // receiver conflict
  const ValidationReport r = validate_schedule(inst, s);
  auto count = [&](ViolationKind k) {
    return std::count_if(r.violations.begin(), r.violations.end(),
                         [&](const Violation& v) { return v.kind == k; });
  };
  EXPECT_EQ(count(ViolationKind::kDurationMismatch), 2);
  EXPECT_EQ(count(ViolationKind::kUnknownEdge), 1);
  EXPECT_EQ(count(ViolationKind::kReceiverConflict), 1);
  EXPECT_EQ(count(ViolationKind::kOverCoverage), 2);
  EXPECT_FALSE(r.summary().empty());
}

TEST(ValidateScheduleTest, EmptyPacketIsRejected) {
  const Instance inst = instance1(1, 1, 1, {{1, 1, 1}});
  Schedule s{{make_packet({{0, 0, 1}}), Packet{0, {}}}};
  EXPECT_FALSE(validate_schedule(inst, s).ok());
}

}  // namespace
}  // namespace pbs
