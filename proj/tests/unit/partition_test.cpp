// Copyright 2026 The ddeg Authors
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

#include "ddeg/partition.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "ddeg/error.hpp"

namespace ddeg {
namespace {

PartitionConfig relaxed() {
  PartitionConfig cfg;
  cfg.k = 16;
  cfg.m = 8;
  cfg.lambda = 2;
  cfg.alpha = 0.01;
  cfg.strict = false;
  cfg.relax_a3 = 1.0 / 512;
  cfg.max_attempts = 50;
  return cfg;
}

TEST(EligibleSetTest, TrivialCases) {
  PartitionConfig cfg = relaxed();
  EXPECT_TRUE(eligible_set(complete_graph(40), cfg).empty());
  EXPECT_TRUE(eligible_set(empty_graph(40), cfg).empty());
}

TEST(EligibleSetTest, MembershipRecomputed) {
  const Graph g = generate_gnp(1024, 0.5, 1);
  const PartitionConfig cfg = relaxed();
  const auto e = eligible_set(g, cfg);
  EXPECT_FALSE(e.empty());
  const double l = std::log(1024.0);
  const ClusterParams p{cfg.m, cfg.lambda, VertexSet::full(1024)};
  for (Vertex v = 0; v < 1024; v += 5) {
    const double d = static_cast<double>(g.degree(v));
    const bool expect = d >= cfg.m * l * l && 2 * g.degree(v) <= 1024 &&
                        static_cast<double>(theta_moment(g, v, p).w_star.size()) <=
                            cfg.alpha * 1024;
    EXPECT_EQ(e.contains(v), expect) << v;
  }
}

class PartitionRunTest : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    graph_ = new Graph(generate_gnp(1024, 0.5, 2));
    eligible_ = new VertexSet(eligible_set(*graph_, relaxed()));
  }
  static void TearDownTestSuite() {
    delete graph_;
    delete eligible_;
  }
  static Graph* graph_;
  static VertexSet* eligible_;
};

Graph* PartitionRunTest::graph_ = nullptr;
VertexSet* PartitionRunTest::eligible_ = nullptr;

TEST_F(PartitionRunTest, SucceedsAndVerifies) {
  const auto cfg = relaxed();
  const auto res = run_partition(*graph_, *eligible_, cfg, 3);
  EXPECT_GE(res.attempts_used, 1u);
  EXPECT_EQ(res.event_log.size(), res.attempts_used);
  EXPECT_EQ(res.u_list.size(), res.t);
  EXPECT_LE(res.t, cfg.k);
  const auto rep = verify_partition(*graph_, res, cfg);
  EXPECT_TRUE(rep.exact_ok());
  EXPECT_DOUBLE_EQ(rep.gamma_recomputed, res.gamma);
  for (std::size_t i = 0; i < res.t; ++i) EXPECT_TRUE(res.v_sets[i].contains(res.u_list[i]));
  EXPECT_FALSE(res.violations.empty());  // desk-scale n breaks the k window
}

TEST_F(PartitionRunTest, Deterministic) {
  const auto cfg = relaxed();
  const auto a = run_partition(*graph_, *eligible_, cfg, 5);
  const auto b = run_partition(*graph_, *eligible_, cfg, 5);
  EXPECT_EQ(a.u_list, b.u_list);
  EXPECT_EQ(a.attempts_used, b.attempts_used);
  EXPECT_EQ(a.s, b.s);
  EXPECT_EQ(a.gamma, b.gamma);
}

TEST_F(PartitionRunTest, StrictModeRejectsDeskScaleHypotheses) {
  PartitionConfig cfg = relaxed();
  cfg.strict = true;
  EXPECT_THROW(run_partition(*graph_, *eligible_, cfg, 1), PreconditionError);
}

TEST_F(PartitionRunTest, IneligibleInputRejected) {
  EXPECT_THROW(run_partition(*graph_, VertexSet::full(1024), relaxed(), 1), PreconditionError);
}

TEST_F(PartitionRunTest, ExhaustionCarriesLog) {
  PartitionConfig cfg = relaxed();
  cfg.relax_a2 = 1e-9;  // A2 can never hold
  cfg.max_attempts = 3;
  try {
    run_partition(*graph_, *eligible_, cfg, 1);
    FAIL();
  } catch (const AttemptsExhausted& e) {
    ASSERT_EQ(e.log().size(), 3u);
    for (const auto& r : e.log()) EXPECT_FALSE(r.a2);
  }
}

TEST_F(PartitionRunTest, VerifierNamesViolatingPair) {
  const auto cfg = relaxed();
  auto res = run_partition(*graph_, *eligible_, cfg, 7);
  ASSERT_GE(res.t, 2u);
  const Vertex u0 = res.u_list[0], u1 = res.u_list[1];
  const double div = static_cast<double>(diversity(*graph_, u0, u1, res.s));
  const double base = static_cast<double>(std::max(graph_->degree(u0), graph_->degree(u1))) /
                      (5.0 * cfg.m);
  // Push d_0 so the (0, 1) pair misses its bound by exactly one.
  res.d_list[0] = div - base - res.d_list[1] + 1;
  const auto rep = verify_partition(*graph_, res, cfg);
  EXPECT_FALSE(rep.checks[3].ok);
  EXPECT_NE(rep.checks[3].detail.find("(" + std::to_string(u0) + ", " + std::to_string(u1)),
            std::string::npos);
}

TEST(VerifyPartitionTest, DetectsOverlapAndMissingCentre) {
  const Graph g = generate_gnp(30, 0.5, 1);
  PartitionConfig cfg = relaxed();
  cfg.alpha = 1;
  PartitionResult res;
  res.t = 2;
  res.u_list = {0, 1};
  res.v_sets = {VertexSet::of(30, std::vector<Vertex>{0, 5}),
                VertexSet::of(30, std::vector<Vertex>{1, 5})};
  res.d_list = {100, 100};
  res.s = VertexSet::of(30, std::vector<Vertex>{10, 11});
  auto rep = verify_partition(g, res, cfg);
  EXPECT_FALSE(rep.checks[0].ok);
  res.v_sets[1] = VertexSet::of(30, std::vector<Vertex>{2});
  rep = verify_partition(g, res, cfg);
  EXPECT_FALSE(rep.checks[0].ok);
  EXPECT_NE(rep.checks[0].detail.find("u_1"), std::string::npos);
}

}  // namespace
}  // namespace ddeg
