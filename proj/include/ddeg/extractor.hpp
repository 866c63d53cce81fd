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


#ifndef DDEG_EXTRACTOR_HPP_
#define DDEG_EXTRACTOR_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "ddeg/distributions.hpp"
#include "ddeg/graph.hpp"
#include "ddeg/oracles.hpp"

namespace ddeg {

struct PressureInstance {
  VertexSet u_set;
  VertexSet s;
  double d = 1;       // pairwise diversity floor over s
  double gamma = 1;   // each s-vertex sees at most gamma |U| of u_set
  double beta = 0;    // filled by the pipeline
};

struct ControlledSet {
  VertexSet u_set;
  DistributionSpec spec;
  // Vertices the expected degrees were summed over when measuring.
  VertexSet s;
  double alpha = 0;           // measured bad(U) / |U|
  double half_width_sum = 0;  // sum of per-pair half-widths
  double max_pair = 0;        // largest per-pair point estimate
  std::string provenance;
};

// Measures bad over cs.s and fills alpha / half_width_sum / max_pair.
// Sets with fewer than two vertices get alpha 0.
void measure(const Graph& g, ControlledSet& cs, std::size_t n_samples, std::uint64_t seed);

struct PressureReport {
  ControlledSet set;
  PressureInstance trimmed;
  double target = 0;       // 40 sqrt(gamma |U| ln |U|) / D
  double worst_slack = 0;  // max over pairs of point - (target + 3 hw)
  bool target_met = false;
};

// Throws PreconditionError naming the offending pair or vertex when
// hypothesis (i) or (ii) fails.
void check_pressure_hypotheses(const Graph& g, const PressureInstance& inst);

PressureReport pressure_pipeline(const Graph& g, const PressureInstance& inst,
                                 std::size_t n_samples, std::uint64_t seed);

// U = first ceil(c (n^2 p)^(1/3)) vertices, D = np/4, S = V,
// gamma = min(1, 2p).
PressureInstance gnp_pressure_instance(const Graph& g, double p, double c);

// max over v in s of |N(v) & U| / |U|.
double measured_balance(const Graph& g, const VertexSet& u_set, const VertexSet& s);

// Greedy instance for an arbitrary graph: vertices are scanned in a
// seeded order and kept when their diversity to every kept vertex is at
// least d_floor. Stops at max_size.
PressureInstance greedy_pressure_instance(const Graph& g, std::size_t max_size,
                                          double d_floor, std::uint64_t seed);

struct MergeSchedule {
  std::function<double(double)> f;
  std::function<double(double)> f_prime;
  double m0 = 1;
  double m = 1;        // M: target size
  double m_big = 2;    // M_0
};

struct MergeReport {
  ControlledSet set;
  std::vector<std::size_t> used;  // indices of the inputs kept, in merge order
  bool dominated = false;         // |U_1| > M short-circuit
  double bound = 0;               // |U| f(|U|)
  bool bound_ok = false;
  std::vector<std::string> violations;
};

// Inputs carry their V_i in ControlledSet::s. cross_spec lives on S.
MergeReport merge_controlled(const Graph& g, std::span<const ControlledSet> sets,
                             const DistributionSpec& cross_spec, const MergeSchedule& sched,
                             std::size_t n_samples, std::uint64_t seed);

DistinctDegreeWitness realize_witness(const Graph& g, const ControlledSet& cs,
                                      std::size_t trials, std::uint64_t seed);

// Vertices sorted by value, kept when more than gap above the last kept.
std::vector<std::size_t> separated_subset(std::span<const double> values, double gap);

// Maps a spec on a subgraph's universe into the parent universe.
DistributionSpec lift_spec(const DistributionSpec& spec, std::span<const Vertex> labels,
                           std::size_t universe);
VertexSet lift_set(const VertexSet& s, std::span<const Vertex> labels, std::size_t universe);

// spec x Trivial(rest), flattening products.
DistributionSpec complete_spec(const DistributionSpec& spec);

}  // namespace ddeg

#endif  // DDEG_EXTRACTOR_HPP_
