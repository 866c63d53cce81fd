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

#ifndef DDEG_CLUSTERS_HPP_
#define DDEG_CLUSTERS_HPP_

#include <cstddef>
#include <vector>

#include "ddeg/graph.hpp"

namespace ddeg {

struct ClusterParams {
  double m = 16;       // M > 1
  double lambda = 2;   // lambda > 1
  VertexSet s;         // ambient set S
};

// Throws PreconditionError unless M > 1, lambda > 1 and S matches g.
void validate(const ClusterParams& params, const Graph& g);

// div * M <= 4^t * d, evaluated without dividing.
bool within_cluster_threshold(std::size_t div, std::size_t t, double d, double m);

// W_t^S(v; M) = {u : div^S(u, v) <= (4^t / M) d^S(v)}; always contains v.
VertexSet cluster_neighbourhood(const Graph& g, Vertex v, std::size_t t,
                                const ClusterParams& params);

struct ClusterView {
  Vertex v = 0;
  std::size_t ds = 0;          // d^S(v)
  bool degenerate = false;     // d^S(v) == 0: every threshold is 0
  std::size_t t_moment = 0;    // min{t : |W_{t+1}| <= lambda |W_t|}
  VertexSet w_star;            // W_T
  VertexSet w_plus;            // W_{T+1}
  std::vector<std::size_t> level_sizes;  // |W_0| .. |W_{T+1}|
};

ClusterView theta_moment(const Graph& g, Vertex v, const ClusterParams& params);
// One view per vertex, computed in parallel.
std::vector<ClusterView> theta_moments(const Graph& g, const ClusterParams& params);

struct ClusterInvariantReport {
  bool nesting = false;        // W_t subset of W_{t+1} for t <= T
  bool power_lower = false;    // |W_*| >= lambda^T
  bool moment_log = false;     // T <= log_lambda n
  bool moment_log_s = false;   // T <= log_lambda |S|
  bool growth_cap = false;     // |W_+| <= lambda |W_*|
  bool minimal = false;        // no earlier level met the stopping rule
  bool ok() const { return nesting && power_lower && moment_log && growth_cap && minimal; }
};

// Recomputes every level from cluster_neighbourhood and checks the view.
ClusterInvariantReport check_cluster_invariants(const Graph& g, const ClusterView& view,
                                                const ClusterParams& params);

struct ClusterBoundVerdict {
  bool precondition_met = false;  // 4^(t+1) < M and d^S(v) > 0
  bool holds = false;             // |W_t| <= 2 max degree
  std::size_t size = 0;
  std::size_t bound = 0;
};

ClusterBoundVerdict check_cluster_bound(const Graph& g, Vertex v, std::size_t t,
                                        const ClusterParams& params);

enum class DisjointRoute { kDegreeCondition, kMutualExclusion, kInapplicable };

const char* route_name(DisjointRoute r);

struct DisjointnessVerdict {
  DisjointRoute route = DisjointRoute::kInapplicable;
  bool disjoint = false;
  std::size_t intersection = 0;
};

// Route kDegreeCondition: v2 outside W_{t1+1}(v1) and
// 3 * 4^t1 * d(v1) >= 4^t2 * d(v2). Route kMutualExclusion: each vertex
// lies outside the other's next level. Otherwise kInapplicable; the
// intersection is still measured.
DisjointnessVerdict check_disjointness(const Graph& g, Vertex v1, std::size_t t1, Vertex v2,
                                       std::size_t t2, const ClusterParams& params);

struct DiverseSet {
  VertexSet u;
  double delta = 0;       // |A| / n
  double threshold = 0;   // 4^t d / M
  std::size_t auxiliary_edges = 0;
};

// Requires |W_t(v)| <= n / |A| and d^S(v) >= d for all v in A; the first
// offending vertex is named in the error. The result is re-verified for
// |U| >= delta |A| / 2 and pairwise div^S >= 4^t d / M.
DiverseSet extract_diverse_set(const Graph& g, const VertexSet& a, std::size_t t, double d,
                               const ClusterParams& params);

}  // namespace ddeg

#endif  // DDEG_CLUSTERS_HPP_
