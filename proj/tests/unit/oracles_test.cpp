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

#include "ddeg/oracles.hpp"

#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "brute.hpp"
#include "ddeg/error.hpp"

namespace ddeg {
namespace {

TEST(HomExactTest, Examples) {
  const auto k5 = hom_exact(complete_graph(5));
  EXPECT_EQ(k5.value, 5u);
  EXPECT_EQ(k5.kind, HomKind::kClique);
  EXPECT_EQ(hom_exact(cycle_graph(5)).value, 2u);
  EXPECT_EQ(hom_exact(path_graph(4)).value, 2u);
  EXPECT_EQ(hom_exact(empty_graph(6)).kind, HomKind::kIndependent);
}

TEST(HomExactTest, GuardNamesLimit) {
  try {
    hom_exact(empty_graph(10), 8);
    FAIL();
  } catch (const SizeLimitError& e) {
    EXPECT_EQ(e.limit(), 8u);
  }
}

TEST(HomExactTest, MatchesBruteForceAndWitnessVerifies) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const std::size_t n = 3 + seed % 10;
    const Graph g = generate_gnp(n, 0.2 + 0.01 * static_cast<double>(seed), seed);
    const auto r = hom_exact(g);
    EXPECT_EQ(r.value, brute::hom(g)) << seed;
    EXPECT_EQ(r.witness.size(), r.value);
    EXPECT_TRUE(r.kind == HomKind::kClique ? is_clique(g, r.witness)
                                           : is_independent(g, r.witness));
  }
}

TEST(HomExactTest, ComplementSymmetry) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = generate_gnp(40, 0.5, seed);
    EXPECT_EQ(hom_exact(g).value, hom_exact(complement(g)).value);
  }
}

TEST(HomExactTest, CompleteGraphs) {
  for (std::size_t n : {1u, 2u, 17u, 64u, 100u}) EXPECT_EQ(hom_exact(complete_graph(n)).value, n);
}

TEST(HomExactTest, RandomWindow) {
  for (std::size_t n : {16u, 32u, 64u}) {
    const double lg = std::log2(static_cast<double>(n));
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      const auto v = static_cast<double>(hom_exact(generate_gnp(n, 0.5, seed)).value);
      EXPECT_GE(v, lg / 2);
      EXPECT_LE(v, 2 * lg + 2);
    }
  }
}

TEST(FExactTest, Examples) {
  for (std::size_t n : {1u, 4u, 12u}) EXPECT_EQ(f_exact(complete_graph(n)).value, 1u);
  EXPECT_EQ(f_exact(path_graph(3)).value, 2u);
  EXPECT_EQ(f_exact(star_graph(3)).value, 2u);
  EXPECT_THROW(f_exact(empty_graph(21)), SizeLimitError);
}

TEST(FExactTest, MatchesBruteForce) {
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    const std::size_t n = 2 + seed % 9;
    const Graph g = generate_gnp(n, 0.5, 1000 + seed);
    const auto w = f_exact(g);
    EXPECT_EQ(w.value, brute::f(g)) << seed;
    EXPECT_TRUE(verify_witness(g, w));
  }
}

TEST(FExactTest, ComplementSymmetryAndDegreeBound) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Graph g = generate_gnp(1 + seed % 10, 0.1 * static_cast<double>(seed % 10), seed);
    const auto v = f_exact(g).value;
    EXPECT_EQ(v, f_exact(complement(g)).value);
    EXPECT_LE(v, g.max_degree() + 1);
  }
}

TEST(FExactTest, LargestGuardRuns) {
  const Graph g = generate_gnp(20, 0.5, 3);
  const auto w = f_exact(g);
  EXPECT_TRUE(verify_witness(g, w));
  EXPECT_LE(w.value, g.max_degree() + 1);
}

TEST(WitnessTest, VerifyRejectsCollisions) {
  const Graph g = path_graph(3);
  DistinctDegreeWitness w{VertexSet::full(3), VertexSet::full(3), 3};
  EXPECT_FALSE(verify_witness(g, w));
  w = distinct_degree_witness(g, VertexSet::full(3), VertexSet::full(3));
  EXPECT_EQ(w.value, 2u);
  EXPECT_TRUE(verify_witness(g, w));
}

TEST(TuranTest, Examples) {
  EXPECT_EQ(turan_independent_set(empty_graph(5)).size(), 5u);
  EXPECT_GE(turan_independent_set(complete_graph(5)).size(), 1u);
  EXPECT_GE(turan_independent_set(cycle_graph(5)).size(), 2u);
}

TEST(TuranTest, BoundAndIndependence) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Graph g = generate_gnp(150, 0.05 + 0.03 * static_cast<double>(seed % 10), seed);
    const auto s = turan_independent_set(g);
    EXPECT_TRUE(is_independent(g, s));
    EXPECT_GE(static_cast<double>(s.size()), 150.0 / (g.average_degree() + 1) - 1e-9);
  }
}

void expect_regular_certificate(const Graph& g, const VertexSet& a) {
  const double lg = std::log2(static_cast<double>(g.order()));
  ASSERT_FALSE(a.empty());
  EXPECT_GE(static_cast<double>(a.size()), static_cast<double>(g.order()) / (30 * lg));
  std::size_t lo = g.order(), hi = 0;
  for (Vertex v : a.members()) {
    std::size_t d = 0;
    for (Vertex u : a.members()) d += g.adjacent(u, v) ? 1 : 0;
    lo = std::min(lo, d);
    hi = std::max(hi, d);
  }
  EXPECT_LE(static_cast<double>(hi), 5 * lg * static_cast<double>(lo));
}

TEST(RegularizeTest, RegularGraphsKeepEverything) {
  EXPECT_EQ(regularize(complete_graph(5)).size(), 5u);
  EXPECT_EQ(regularize(cycle_graph(9)).size(), 9u);
  EXPECT_EQ(regularize(empty_graph(4)).size(), 4u);
  EXPECT_THROW(regularize(empty_graph(1)), PreconditionError);
}

TEST(RegularizeTest, CertifiesByRecomputation) {
  expect_regular_certificate(generate_gnp(64, 0.5, 1), regularize(generate_gnp(64, 0.5, 1)));
  // Star: centre degree 40 against leaf degree 1 forces a real search.
  const Graph star = star_graph(40);
  expect_regular_certificate(star, regularize(star));
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Graph g = generate_gnp(120, 0.02, seed);
    expect_regular_certificate(g, regularize(g));
  }
}

TEST(FLowerGreedyTest, Examples) {
  EXPECT_EQ(f_lower_greedy(complete_graph(5), 3).value, 1u);
  EXPECT_EQ(f_lower_greedy(path_graph(3), 4).value, 2u);
  EXPECT_THROW(f_lower_greedy(path_graph(3), 0), PreconditionError);
}

TEST(FLowerGreedyTest, NeverExceedsExact) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Graph g = generate_gnp(4 + seed % 11, 0.5, 500 + seed);
    const auto w = f_lower_greedy(g, 6, seed);
    EXPECT_TRUE(verify_witness(g, w));
    EXPECT_LE(w.value, f_exact(g).value);
  }
}

TEST(FLowerGreedyTest, Deterministic) {
  const Graph g = generate_gnp(200, 0.5, 8);
  const auto a = f_lower_greedy(g, 5, 3);
  const auto b = f_lower_greedy(g, 5, 3);
  EXPECT_EQ(a.host, b.host);
  EXPECT_EQ(a.marked, b.marked);
}

}  // namespace
}  // namespace ddeg
