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


#include "ddeg/extractor.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "ddeg/bad.hpp"
#include "ddeg/error.hpp"

namespace ddeg {
namespace {

std::string message_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const PreconditionError& e) {
    return e.what();
  }
  return "";
}

VertexSet first_k(std::size_t n, std::size_t k) {
  VertexSet s(n);
  for (Vertex v = 0; v < k; ++v) s.insert(v);
  return s;
}

TEST(PressureHypotheses, NamesViolatingPair) {
  // 0 and 1 are twins.
  const std::pair<Vertex, Vertex> edges[] = {{0, 2}, {1, 2}, {0, 3}, {1, 3}};
  const Graph g = from_edge_list(4, edges);
  PressureInstance inst{VertexSet::of(4, std::vector<Vertex>{0, 1}), VertexSet::full(4), 1, 1, 0};
  const auto msg = message_of([&] { check_pressure_hypotheses(g, inst); });
  EXPECT_NE(msg.find("pair (0, 1)"), std::string::npos) << msg;
}

TEST(PressureHypotheses, NamesViolatingVertex) {
  const std::pair<Vertex, Vertex> edges[] = {{0, 2}, {1, 2}, {0, 3}};
  const Graph g = from_edge_list(4, edges);
  PressureInstance inst{VertexSet::of(4, std::vector<Vertex>{0, 1}),
                        VertexSet::of(4, std::vector<Vertex>{2, 3}), 1, 0.5, 0};
  const auto msg = message_of([&] { check_pressure_hypotheses(g, inst); });
  EXPECT_NE(msg.find("vertex 2"), std::string::npos) << msg;
  inst.gamma = 1;
  EXPECT_NO_THROW(check_pressure_hypotheses(g, inst));
  inst.gamma = 0.4;  // below 1/|U|
  EXPECT_THROW(check_pressure_hypotheses(g, inst), PreconditionError);
}

TEST(PressureTrim, RespectsCapsExactly) {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const Graph g = generate_gnp(96, 0.5, seed);
    const std::size_t u = 2 + seed % 3;
    PressureInstance inst{first_k(96, u), VertexSet::full(96), 1, 1, 0};
    const auto rep = pressure_pipeline(g, inst, 200, seed);
    const double uu = static_cast<double>(u);
    EXPECT_LE(rep.trimmed.d, std::pow(uu, 1.5));
    EXPECT_LE(static_cast<double>(rep.trimmed.s.size()), rep.trimmed.d * uu * uu);
    const auto m = inst.u_set.members();
    for (std::size_t i = 0; i < m.size(); ++i) {
      for (std::size_t j = i + 1; j < m.size(); ++j) {
        EXPECT_GE(static_cast<double>(diversity(g, m[i], m[j], rep.trimmed.s)), rep.trimmed.d);
      }
    }
  }
}

TEST(PressureTrim, CapsLargeD) {
  const Graph g = generate_gnp(200, 0.5, 9);
  PressureInstance inst{first_k(200, 4), VertexSet::full(200), 50, 1, 0};
  const auto rep = pressure_pipeline(g, inst, 200, 1);
  EXPECT_DOUBLE_EQ(rep.trimmed.d, 8.0);  // 4^(3/2)
  EXPECT_LE(rep.trimmed.s.size(), 128u);
}

TEST(Pressure, BetaAndTargetFormulas) {
  const Graph g = generate_gnp(400, 0.5, 2);
  PressureInstance inst{first_k(400, 16), VertexSet::full(400), 64, 1, 0};
  const auto rep = pressure_pipeline(g, inst, 400, 3);
  const double root = std::sqrt(16 * std::log(16.0));
  EXPECT_DOUBLE_EQ(rep.trimmed.beta, 1.0 / (10 * root));
  EXPECT_DOUBLE_EQ(rep.target, 40 * root / 64);
  EXPECT_EQ(rep.set.spec.variant(), Variant::kBlended);
  EXPECT_EQ(rep.set.provenance, "pressure");
}

TEST(Pressure, PowerGadgetMeetsPairTarget) {
  // gamma = 1, D = |U|^(3/2).
  const Graph g = generate_gnp(400, 0.5, 2);
  PressureInstance inst{first_k(400, 16), VertexSet::full(400), 64, 1, 0};
  const auto rep = pressure_pipeline(g, inst, 2000, 5);
  EXPECT_TRUE(rep.target_met) << rep.worst_slack;
  const double u = 16;
  EXPECT_LE(rep.set.alpha, (u - 1) / 2 * rep.target + rep.set.half_width_sum / u);
}

TEST(Pressure, SingletonOverlapGadget) {
  // u_i is joined to its own block of u vertices; gamma = 1/u, D = u.
  const std::size_t u = 24;
  const std::size_t n = u + u * u;
  GraphBuilder b(n);
  for (Vertex i = 0; i < u; ++i) {
    for (std::size_t j = 0; j < u; ++j) b.add_edge(i, static_cast<Vertex>(u + i * u + j));
  }
  const Graph g = std::move(b).build();
  PressureInstance inst{first_k(n, u), first_k(n, n) - first_k(n, u),
                        static_cast<double>(u), 1.0 / u, 0};
  const auto rep = pressure_pipeline(g, inst, 2000, 8);
  EXPECT_DOUBLE_EQ(rep.target, 40 * std::sqrt(std::log(24.0)) / 24);
  EXPECT_TRUE(rep.target_met);
  // alpha <= (u - 1)/2 * 40 sqrt(log u) / u < 20 sqrt(log u)
  EXPECT_LE(rep.set.alpha, 20 * std::sqrt(std::log(24.0)) + rep.set.half_width_sum / u);
}

TEST(Pressure, ClaimedAlphaReproducesOnFreshSeed) {
  const Graph g = generate_gnp(300, 0.5, 4);
  PressureInstance inst{first_k(300, 12), VertexSet::full(300), 40, 1, 0};
  const auto rep = pressure_pipeline(g, inst, 1000, 1);
  ControlledSet again = rep.set;
  measure(g, again, 1000, 999);
  const double u = 12;
  EXPECT_LE(std::abs(again.alpha - rep.set.alpha) * u,
            3 * std::max(again.half_width_sum, rep.set.half_width_sum));
}

TEST(GnpInstance, FollowsTheRandomGraphRecipe) {
  const Graph g = generate_gnp(512, 0.5, 1);
  const auto inst = gnp_pressure_instance(g, 0.5, 1.0);
  EXPECT_EQ(inst.u_set.size(), 51u);  // round(131072^(1/3)) = round(50.80)
  EXPECT_EQ(inst.u_set.first(), 0u);
  EXPECT_DOUBLE_EQ(inst.d, 64.0);
  EXPECT_DOUBLE_EQ(inst.gamma, 1.0);
  EXPECT_EQ(inst.s.size(), 512u);
  EXPECT_NO_THROW(check_pressure_hypotheses(g, inst));
}

TEST(GreedyInstance, SatisfiesItsOwnHypotheses) {
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    const Graph g = generate_gnp(150, 0.3, seed);
    const auto inst = greedy_pressure_instance(g, 20, 20, seed);
    EXPECT_GE(inst.u_set.size(), 2u);
    EXPECT_LE(inst.u_set.size(), 20u);
    EXPECT_GE(inst.d, 20);
    EXPECT_NO_THROW(check_pressure_hypotheses(g, inst));
  }
}

TEST(SeparatedSubset, GapRule) {
  const std::vector<double> v{5.0, 0.0, 2.0, 2.5, 7.1, 4.6};
  const auto idx = separated_subset(v, 2.0);
  // sorted: 0 (1), 2 (2), 2.5 (3), 4.6 (5), 5 (0), 7.1 (4); a gap of exactly 2 is dropped
  EXPECT_EQ(idx, (std::vector<std::size_t>{1, 3, 5, 4}));
}

TEST(LiftSpec, MapsDomainsAndOrder) {
  const std::vector<Vertex> labels{3, 5, 8};
  const auto inner = DistributionSpec::product(
      {DistributionSpec::blended({2, 0}, VertexSet::of(3, std::vector<Vertex>{0, 1}), 0.2),
       DistributionSpec::uniform_constant(VertexSet::of(3, std::vector<Vertex>{2}))});
  const auto up = lift_spec(inner, labels, 10);
  EXPECT_EQ(up.universe(), 10u);
  EXPECT_EQ(up.domain(), VertexSet::of(10, std::vector<Vertex>{3, 5, 8}));
  EXPECT_EQ(up.children()[0].order(), (std::vector<Vertex>{8, 3}));
  const auto full = complete_spec(up);
  EXPECT_EQ(full.domain().size(), 10u);
  EXPECT_EQ(full.children().size(), 3u);
  EXPECT_EQ(full.children()[2].variant(), Variant::kTrivial);
}

ControlledSet trivial_set(std::size_t n, const VertexSet& v, const VertexSet& u) {
  ControlledSet cs;
  cs.u_set = u;
  cs.spec = DistributionSpec::trivial(v);
  cs.s = v;
  cs.provenance = "test";
  return cs;
}

MergeSchedule linear_schedule(double m) {
  MergeSchedule s;
  s.f = [](double x) { return 100 * x; };
  s.f_prime = [](double) { return 100.0; };
  s.m0 = 1;
  s.m = m;
  s.m_big = 2 * m;
  return s;
}

TEST(Merge, TrivialSetsPass) {
  const Graph g = generate_gnp(40, 0.5, 3);
  std::vector<ControlledSet> sets{
      trivial_set(40, first_k(40, 20), VertexSet::of(40, std::vector<Vertex>{0, 1, 2})),
      trivial_set(40, first_k(40, 40) - first_k(40, 20),
                  VertexSet::of(40, std::vector<Vertex>{20, 21}))};
  const auto rep =
      merge_controlled(g, sets, DistributionSpec::trivial(VertexSet(40)), linear_schedule(4),
                       200, 1);
  EXPECT_TRUE(rep.violations.empty()) << rep.violations.front();
  EXPECT_TRUE(rep.bound_ok);
  EXPECT_EQ(rep.set.u_set.size(), 5u);
  EXPECT_EQ(rep.set.spec.domain().size(), 40u);
}

TEST(Merge, DominatingSetShortCircuits) {
  const Graph g = generate_gnp(40, 0.5, 3);
  std::vector<ControlledSet> sets{
      trivial_set(40, first_k(40, 10), first_k(40, 2)),
      trivial_set(40, first_k(40, 30) - first_k(40, 10), first_k(40, 15) - first_k(40, 10))};
  const auto rep =
      merge_controlled(g, sets, DistributionSpec::trivial(VertexSet(40)), linear_schedule(3),
                       200, 1);
  EXPECT_TRUE(rep.dominated);
  EXPECT_EQ(rep.used, (std::vector<std::size_t>{1}));
  EXPECT_EQ(rep.set.u_set, sets[1].u_set);
}

TEST(Merge, PrefixRuleSizes) {
  const std::size_t n = 60;
  const Graph g = generate_gnp(n, 0.5, 5);
  const std::size_t sizes[] = {2, 4, 1, 3, 5, 2};
  for (double m : {3.0, 5.0, 6.0, 8.0, 12.0}) {
    std::vector<ControlledSet> sets;
    Vertex next = 0;
    for (std::size_t s : sizes) {
      const VertexSet v = first_k(n, next + 8) - first_k(n, next);
      sets.push_back(trivial_set(n, v, first_k(n, next + s) - first_k(n, next)));
      next += 8;
    }
    const auto rep = merge_controlled(g, sets, DistributionSpec::trivial(VertexSet(n)),
                                      linear_schedule(m), 200, 2);
    const double u = static_cast<double>(rep.set.u_set.size());
    if (rep.dominated) {
      EXPECT_GT(u, m);
    } else {
      EXPECT_GE(u, m);
      EXPECT_LE(u, 2 * m);
      EXPECT_EQ(rep.used.front(), 4u);  // largest first
    }
  }
}

TEST(Merge, OverlappingInputsNamed) {
  const Graph g = generate_gnp(20, 0.5, 3);
  std::vector<ControlledSet> sets{trivial_set(20, first_k(20, 10), first_k(20, 2)),
                                  trivial_set(20, first_k(20, 12) - first_k(20, 8),
                                              first_k(20, 10) - first_k(20, 8))};
  const auto msg = message_of([&] {
    merge_controlled(g, sets, DistributionSpec::trivial(VertexSet(20)), linear_schedule(2), 200,
                     1);
  });
  EXPECT_NE(msg.find("input 1"), std::string::npos) << msg;
}

TEST(Merge, ThreeGadgetsUnderUniformConstantControl) {
  // Three twin pairs+1 (sizes 3); set j is joined to j*D vertices of S.
  const std::size_t d = 20;
  const std::size_t n = 9 + 2 * d;
  GraphBuilder b(n);
  for (std::size_t j = 0; j < 3; ++j) {
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t s = 0; s < j * d; ++s) b.add_edge(static_cast<Vertex>(3 * j + i), static_cast<Vertex>(9 + s));
    }
  }
  const Graph g = std::move(b).build();
  std::vector<ControlledSet> sets;
  for (std::size_t j = 0; j < 3; ++j) {
    const VertexSet v = first_k(n, 3 * j + 3) - first_k(n, 3 * j);
    auto cs = trivial_set(n, v, v);
    measure(g, cs, 200, j);
    sets.push_back(cs);
  }
  MergeSchedule sched;
  sched.f = [](double x) { return 4 * std::sqrt(x); };
  sched.f_prime = [](double x) { return 2 / std::sqrt(x); };
  sched.m0 = 1;
  sched.m = 7;
  sched.m_big = 14;
  const VertexSet s = first_k(n, n) - first_k(n, 9);
  const auto rep = merge_controlled(g, sets, DistributionSpec::uniform_constant(s), sched,
                                    20000, 4);
  EXPECT_TRUE(rep.violations.empty()) << rep.violations.front();
  EXPECT_TRUE(rep.bound_ok);
  EXPECT_EQ(rep.set.u_set.size(), 9u);
  // 9 twin pairs at 1, 18 pairs at 2.5/D, 9 pairs at 2.5/(2D).
  const double expected = 9 + 18 * 2.5 / d + 9 * 2.5 / (2 * d);
  EXPECT_NEAR(rep.set.alpha * 9, expected, 3 * rep.set.half_width_sum);
}

TEST(RealizeWitness, CompleteGraphGivesOne) {
  const Graph g = complete_graph(12);
  ControlledSet cs;
  cs.u_set = VertexSet::full(12);
  cs.spec = DistributionSpec::trivial(VertexSet::full(12));
  cs.s = VertexSet::full(12);
  const auto w = realize_witness(g, cs, 20, 1);
  EXPECT_EQ(w.value, 1u);
  EXPECT_TRUE(verify_witness(g, w));
}

TEST(RealizeWitness, SeparatedExpectedDegrees) {
  // u_i has 20 i private leaves: expected degree 10 i under Trivial.
  const std::size_t k = 6;
  std::size_t n = k;
  for (std::size_t i = 0; i < k; ++i) n += 20 * i;
  GraphBuilder b(n);
  Vertex next = k;
  for (Vertex i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < 20 * i; ++j) b.add_edge(i, next++);
  }
  const Graph g = std::move(b).build();
  ControlledSet cs;
  cs.u_set = first_k(n, k);
  cs.spec = DistributionSpec::trivial(VertexSet::full(n));
  cs.s = VertexSet::full(n);
  const auto w = realize_witness(g, cs, 50, 3);
  EXPECT_EQ(w.value, k);
  // Independent recount.
  std::vector<std::size_t> degs;
  w.marked.for_each([&](Vertex u) { degs.push_back(g.degree_in(u, w.host)); });
  std::sort(degs.begin(), degs.end());
  EXPECT_EQ(std::adjacent_find(degs.begin(), degs.end()), degs.end());
  EXPECT_TRUE(w.marked.is_subset_of(w.host));
}

TEST(RealizeWitness, AlwaysRecountsOnRandomGraphs) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const Graph g = generate_gnp(200, 0.5, seed);
    const auto inst = gnp_pressure_instance(g, 0.5, 1.0);
    const auto rep = pressure_pipeline(g, inst, 200, seed);
    const auto w = realize_witness(g, rep.set, 5, seed);
    EXPECT_GE(w.value, 1u);
    EXPECT_LE(w.value, g.max_degree() + 1);
    std::vector<std::size_t> degs;
    w.marked.for_each([&](Vertex u) { degs.push_back(g.degree_in(u, w.host)); });
    std::sort(degs.begin(), degs.end());
    EXPECT_EQ(std::adjacent_find(degs.begin(), degs.end()), degs.end());
    EXPECT_EQ(degs.size(), w.value);
  }
}

}  // namespace
}  // namespace ddeg
