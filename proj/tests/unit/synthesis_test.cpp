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


#include "ddeg/synthesis.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <gtest/gtest.h>

#include "brute.hpp"
#include "ddeg/error.hpp"
#include "ddeg/oracles.hpp"

namespace ddeg {
namespace {

Graph disjoint_cliques(std::size_t count, std::size_t size) {
  GraphBuilder b(count * size);
  for (std::size_t c = 0; c < count; ++c) {
    for (std::size_t i = 0; i < size; ++i) {
      for (std::size_t j = i + 1; j < size; ++j) {
        b.add_edge(static_cast<Vertex>(c * size + i), static_cast<Vertex>(c * size + j));
      }
    }
  }
  return std::move(b).build();
}

// Blow-up of a sparse 8-vertex graph with independent classes.
Graph blow_up(std::size_t n) {
  const Graph base = generate_gnp(8, 0.3, 3);
  const std::size_t s = n / 8;
  GraphBuilder b(n);
  for (Vertex x = 0; x < 8; ++x) {
    for (Vertex y = x + 1; y < 8; ++y) {
      if (!base.adjacent(x, y)) continue;
      for (std::size_t i = 0; i < s; ++i) {
        for (std::size_t j = 0; j < s; ++j) {
          b.add_edge(static_cast<Vertex>(x * s + i), static_cast<Vertex>(y * s + j));
        }
      }
    }
  }
  return std::move(b).build();
}

bool trace_has(const SynthesisResult& r, const std::string& needle) {
  return std::any_of(r.trace.begin(), r.trace.end(),
                     [&](const std::string& l) { return l.find(needle) != std::string::npos; });
}

TEST(SynthesisBudget, ScheduleFollowsExponents) {
  for (double k : {16.0, 45.0, 512.0, 4096.0}) {
    const auto b = SynthesisBudget::for_k(k);
    const double lk = std::log2(k);
    EXPECT_NEAR(std::log2(b.lambda), std::pow(lk, 4.0 / 9.0), 1e-12) << k;
    EXPECT_NEAR(std::log2(b.t), std::pow(lk, 5.0 / 9.0), 1e-12) << k;
    EXPECT_NEAR(std::log2(b.m), std::pow(lk, 2.0 / 3.0), 1e-12) << k;
  }
  const auto b = SynthesisBudget::for_k(512);
  EXPECT_NEAR(b.lambda, 6.29962, 1e-4);  // 2^(9^(4/9))
}

TEST(SynthesisBudget, GrowthFunctions) {
  SynthesisBudget b;
  EXPECT_DOUBLE_EQ(b.g1(1), 1.0);
  EXPECT_NEAR(b.g1(std::exp(8.0)), std::exp(4.0), 1e-9);  // (ln x)^(2/3) = 4
  EXPECT_DOUBLE_EQ(b.g2(16), 16.0);
  EXPECT_DOUBLE_EQ(b.x0(), std::exp(1.0));
  // g1' matches a central difference and decreases past x0.
  for (double x : {5.0, 20.0, 100.0}) {
    const double h = 1e-5 * x;
    EXPECT_NEAR(b.g1_prime(x), (b.g1(x + h) - b.g1(x - h)) / (2 * h), 1e-6);
    EXPECT_GT(b.g1_prime(x), b.g1_prime(2 * x));
  }
}

TEST(SynthesisBudget, SubsetTargets) {
  // n = 1024, k = 64: the switch is at |V|^(1/2) = n^2/k^3 = 4.
  EXPECT_DOUBLE_EQ(SynthesisBudget::k_of(1024, 1024, 64), 64.0);
  EXPECT_NEAR(SynthesisBudget::k_of(128, 1024, 64), 16.0, 1e-12);
  EXPECT_DOUBLE_EQ(SynthesisBudget::k_of(9, 1024, 64), 2.25);
  // Below the switch for k = 32 the linear branch applies.
  EXPECT_DOUBLE_EQ(SynthesisBudget::k_of(128, 1024, 32), 4.0);
}

TEST(Synthesize, BaseCaseUsesExactOracle) {
  const Graph g = disjoint_cliques(4, 4);  // hom = 4 = 16^2 / 4^3
  auto b = SynthesisBudget::for_k(4);
  const auto r = synthesize(g, b, 1);
  EXPECT_EQ(r.set.provenance, "base:f_exact");
  EXPECT_EQ(r.set.u_set.size(), brute::f(g));
  EXPECT_EQ(r.set.spec.variant(), Variant::kTrivial);
  ASSERT_EQ(r.trace.size(), 1u);
  EXPECT_NE(r.trace[0].find("base"), std::string::npos);
}

TEST(Synthesize, Preconditions) {
  auto b = SynthesisBudget::for_k(4);
  EXPECT_THROW(synthesize(generate_gnp(17, 0.5, 1), b, 1), PreconditionError);  // n > k^2
  EXPECT_THROW(synthesize(complete_graph(16), b, 1), PreconditionError);        // hom 16 > 4
  b.check_hom = false;
  EXPECT_NO_THROW(synthesize(complete_graph(16), b, 1));
}

TEST(Synthesize, Deterministic) {
  const Graph g = generate_gnp(400, 0.5, 6);
  const auto b = SynthesisBudget::for_k(20);
  const auto r1 = synthesize(g, b, 42);
  const auto r2 = synthesize(g, b, 42);
  EXPECT_EQ(r1.trace, r2.trace);
  EXPECT_EQ(r1.set.u_set, r2.set.u_set);
  EXPECT_EQ(r1.set.alpha, r2.set.alpha);
  EXPECT_EQ(r1.set.provenance, r2.set.provenance);
}

TEST(Synthesize, DisjointCliquesTakeTheSparseRoute) {
  // 32 copies of K_32: hom = 32 = n^2/k^3 with k = 32, every degree below k^(3/2)/T.
  const Graph g = disjoint_cliques(32, 32);
  const auto r = synthesize(g, SynthesisBudget::for_k(32), 3);
  EXPECT_TRUE(trace_has(r, "case3")) << r.trace.front();
  const auto w = realize_witness(g, r.set, 10, 1);
  EXPECT_TRUE(verify_witness(g, w));
  EXPECT_GE(w.value, 1u);
}

TEST(Synthesize, LargeClustersTakeTheSplitRoute) {
  const Graph g = blow_up(2048);
  auto b = SynthesisBudget::for_k(46);
  const auto r = synthesize(g, b, 3);
  EXPECT_TRUE(trace_has(r, "case1"));
  EXPECT_TRUE(trace_has(r, "control=S0"));
  const auto w = realize_witness(g, r.set, 10, 1);
  EXPECT_TRUE(verify_witness(g, w));
}

TEST(Synthesize, ClaimedAlphaReproduces) {
  const Graph g = generate_gnp(600, 0.5, 2);
  const auto r = synthesize(g, SynthesisBudget::for_k(25), 5);
  ControlledSet again = r.set;
  measure(g, again, 200, 12345);
  const double u = static_cast<double>(r.set.u_set.size());
  EXPECT_LE(std::abs(again.alpha - r.set.alpha) * u,
            3 * std::max(again.half_width_sum, r.set.half_width_sum));
}

}  // namespace
}  // namespace ddeg
