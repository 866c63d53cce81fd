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

#include "ddeg/clusters.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ddeg/error.hpp"
#include "ddeg/oracles.hpp"
#include "ddeg/parallel.hpp"

namespace ddeg {

namespace {

// div^S(u, v) for every u, with div(v, v) = 0.
std::vector<std::size_t> diversities_from(const Graph& g, Vertex v, const VertexSet& s) {
  std::vector<std::size_t> out(g.order(), 0);
  const auto rv = g.row(v);
  const auto m = s.words();
  for (Vertex u = 0; u < g.order(); ++u) {
    const auto ru = g.row(u);
    std::size_t c = 0;
    for (std::size_t w = 0; w < rv.size(); ++w) c += std::popcount((ru[w] ^ rv[w]) & m[w]);
    out[u] = c;
  }
  return out;
}

double pow4(std::size_t t) { return std::ldexp(1.0, static_cast<int>(2 * t)); }

VertexSet level(const std::vector<std::size_t>& div, std::size_t t, double d, double m) {
  VertexSet w(div.size());
  for (Vertex u = 0; u < div.size(); ++u)
    if (within_cluster_threshold(div[u], t, d, m)) w.insert(u);
  return w;
}

}  // namespace

void validate(const ClusterParams& params, const Graph& g) {
  if (!(params.m > 1.0)) throw PreconditionError("clusters: M must exceed 1");
  if (!(params.lambda > 1.0)) throw PreconditionError("clusters: lambda must exceed 1");
  if (params.s.universe() != g.order()) {
    throw PreconditionError("clusters: S must be a subset of the graph's vertices");
  }
}

bool within_cluster_threshold(std::size_t div, std::size_t t, double d, double m) {
  return static_cast<double>(div) * m <= pow4(t) * d;
}

VertexSet cluster_neighbourhood(const Graph& g, Vertex v, std::size_t t,
                                const ClusterParams& params) {
  validate(params, g);
  if (v >= g.order()) throw PreconditionError("clusters: vertex out of range");
  const double d = static_cast<double>(g.degree_in(v, params.s));
  return level(diversities_from(g, v, params.s), t, d, params.m);
}

ClusterView theta_moment(const Graph& g, Vertex v, const ClusterParams& params) {
  validate(params, g);
  if (v >= g.order()) throw PreconditionError("clusters: vertex out of range");
  ClusterView view;
  view.v = v;
  view.ds = g.degree_in(v, params.s);
  view.degenerate = view.ds == 0;
  const double d = static_cast<double>(view.ds);
  const auto div = diversities_from(g, v, params.s);
  std::vector<std::size_t> sorted = div;
  std::sort(sorted.begin(), sorted.end());
  auto size_at = [&](std::size_t t) {
    return static_cast<std::size_t>(
        std::partition_point(sorted.begin(), sorted.end(),
                             [&](std::size_t x) {
                               return within_cluster_threshold(x, t, d, params.m);
                             }) -
        sorted.begin());
  };
  view.level_sizes.push_back(size_at(0));
  std::size_t t = 0;
  for (;; ++t) {
    view.level_sizes.push_back(size_at(t + 1));
    if (static_cast<double>(view.level_sizes[t + 1]) <=
        params.lambda * static_cast<double>(view.level_sizes[t])) {
      break;
    }
  }
  view.t_moment = t;
  view.w_star = level(div, t, d, params.m);
  view.w_plus = level(div, t + 1, d, params.m);
  return view;
}

std::vector<ClusterView> theta_moments(const Graph& g, const ClusterParams& params) {
  validate(params, g);
  std::vector<ClusterView> views(g.order());
  parallel_for(g.order(), [&](std::size_t v) {
    views[v] = theta_moment(g, static_cast<Vertex>(v), params);
  });
  return views;
}

ClusterInvariantReport check_cluster_invariants(const Graph& g, const ClusterView& view,
                                                const ClusterParams& params) {
  ClusterInvariantReport r;
  const std::size_t big_t = view.t_moment;
  std::vector<VertexSet> levels;
  for (std::size_t t = 0; t <= big_t + 1; ++t) {
    levels.push_back(cluster_neighbourhood(g, view.v, t, params));
  }
  r.nesting = levels.front().contains(view.v);
  for (std::size_t t = 0; t + 1 < levels.size(); ++t) {
    r.nesting = r.nesting && levels[t].is_subset_of(levels[t + 1]);
  }
  const bool views_match = levels[big_t] == view.w_star && levels[big_t + 1] == view.w_plus;
  const double lam_t = std::pow(params.lambda, static_cast<double>(big_t));
  const double star = static_cast<double>(view.w_star.size());
  // Small slack on lambda^T absorbs pow() rounding at exact powers.
  r.power_lower = views_match && star >= lam_t * (1 - 1e-12);
  const double log_lam = std::log(params.lambda);
  r.moment_log = static_cast<double>(big_t) <=
                 std::log(static_cast<double>(g.order())) / log_lam + 1e-9;
  r.moment_log_s = !params.s.empty() &&
                   static_cast<double>(big_t) <=
                       std::log(static_cast<double>(params.s.size())) / log_lam + 1e-9;
  r.growth_cap = views_match && static_cast<double>(view.w_plus.size()) <= params.lambda * star;
  // The moment is the first level that stops growing by lambda.
  r.minimal = true;
  for (std::size_t t = 0; t < big_t; ++t) {
    if (static_cast<double>(levels[t + 1].size()) <=
        params.lambda * static_cast<double>(levels[t].size())) {
      r.minimal = false;
    }
  }
  return r;
}

ClusterBoundVerdict check_cluster_bound(const Graph& g, Vertex v, std::size_t t,
                                        const ClusterParams& params) {
  ClusterBoundVerdict r;
  r.size = cluster_neighbourhood(g, v, t, params).size();
  r.bound = 2 * g.max_degree();
  r.precondition_met = pow4(t + 1) < params.m && g.degree_in(v, params.s) > 0;
  r.holds = r.size <= r.bound;
  return r;
}

const char* route_name(DisjointRoute r) {
  switch (r) {
    case DisjointRoute::kDegreeCondition: return "degree_condition";
    case DisjointRoute::kMutualExclusion: return "mutual_exclusion";
    case DisjointRoute::kInapplicable: return "inapplicable";
  }
  return "?";
}

DisjointnessVerdict check_disjointness(const Graph& g, Vertex v1, std::size_t t1, Vertex v2,
                                       std::size_t t2, const ClusterParams& params) {
  const VertexSet w1 = cluster_neighbourhood(g, v1, t1, params);
  const VertexSet w2 = cluster_neighbourhood(g, v2, t2, params);
  const VertexSet next1 = cluster_neighbourhood(g, v1, t1 + 1, params);
  const VertexSet next2 = cluster_neighbourhood(g, v2, t2 + 1, params);
  const double d1 = static_cast<double>(g.degree_in(v1, params.s));
  const double d2 = static_cast<double>(g.degree_in(v2, params.s));
  DisjointnessVerdict r;
  if (!next1.contains(v2) && 3.0 * pow4(t1) * d1 >= pow4(t2) * d2) {
    r.route = DisjointRoute::kDegreeCondition;
  } else if (!next1.contains(v2) && !next2.contains(v1)) {
    r.route = DisjointRoute::kMutualExclusion;
  }
  r.intersection = w1.intersection_size(w2);
  r.disjoint = r.intersection == 0;
  return r;
}

DiverseSet extract_diverse_set(const Graph& g, const VertexSet& a, std::size_t t, double d,
                               const ClusterParams& params) {
  validate(params, g);
  if (a.empty() || a.universe() != g.order()) {
    throw PreconditionError("extract_diverse_set: A must be a nonempty vertex subset");
  }
  const std::size_t n = g.order();
  const std::size_t m = a.size();
  a.for_each([&](Vertex v) {
    if (static_cast<double>(g.degree_in(v, params.s)) < d) {
      throw PreconditionError("extract_diverse_set: vertex " + std::to_string(v) +
                              " has d^S below d");
    }
    // |W_t(v)| <= n / m, kept in integers.
    if (cluster_neighbourhood(g, v, t, params).size() * m > n) {
      throw PreconditionError("extract_diverse_set: vertex " + std::to_string(v) +
                              " has |W_t(v)| above n/|A|");
    }
  });

  DiverseSet out;
  out.delta = static_cast<double>(m) / static_cast<double>(n);
  out.threshold = pow4(t) * d / params.m;
  const auto members = a.members();
  GraphBuilder h(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      const std::size_t div = diversity(g, members[i], members[j], params.s);
      if (static_cast<double>(div) * params.m < pow4(t) * d) {
        h.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
        ++out.auxiliary_edges;
      }
    }
  }
  const Graph aux = std::move(h).build();
  out.u = VertexSet(n);
  turan_independent_set(aux).for_each([&](Vertex i) { out.u.insert(members[i]); });

  // delta m / 2 = m^2 / (2n).
  bool ok = 2 * n * out.u.size() >= m * m;
  const auto chosen = out.u.members();
  for (std::size_t i = 0; ok && i < chosen.size(); ++i) {
    for (std::size_t j = i + 1; ok && j < chosen.size(); ++j) {
      ok = static_cast<double>(diversity(g, chosen[i], chosen[j], params.s)) * params.m >=
           pow4(t) * d;
    }
  }
  if (!ok) throw ConstructionError("extract_diverse_set: output failed re-verification");
  return out;
}

}  // namespace ddeg
