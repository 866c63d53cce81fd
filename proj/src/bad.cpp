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

#include "ddeg/bad.hpp"

#include <algorithm>
#include <cmath>

#include "ddeg/error.hpp"
#include "ddeg/parallel.hpp"
#include "ddeg/rng.hpp"

namespace ddeg {

namespace {

void check_samples(std::size_t n_samples) {
  if (n_samples < kMinBadSamples) {
    throw PreconditionError("bad: at least 100 samples are required");
  }
}

}  // namespace

double wilson_half_width(double proportion, std::size_t samples) {
  if (samples == 0) return 0.0;
  const double n = static_cast<double>(samples);
  const double z2 = kConfidenceZ * kConfidenceZ;
  const double q = std::clamp(proportion, 0.0, 1.0);
  return kConfidenceZ / (1.0 + z2 / n) *
         std::sqrt(q * (1.0 - q) / n + z2 / (4.0 * n * n));
}

BadEstimate small_ball(std::vector<double>& xs) {
  BadEstimate e;
  e.samples = xs.size();
  if (xs.empty()) return e;
  std::sort(xs.begin(), xs.end());
  std::size_t best = 0, j = 0;
  double centre = xs.front() + 1.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (j < i) j = i;
    while (j + 1 < xs.size() && xs[j + 1] - xs[i] <= 2.0) ++j;
    if (j - i + 1 > best) {
      best = j - i + 1;
      centre = xs[i] + 1.0;
    }
  }
  e.point = static_cast<double>(best) / static_cast<double>(xs.size());
  e.window_center = centre;
  e.half_width = wilson_half_width(e.point, e.samples);
  return e;
}

ExpectedDegreeTable::ExpectedDegreeTable(const Graph& g, const DistributionSpec& spec,
                                         std::span<const Vertex> targets, const VertexSet& s,
                                         std::size_t n_samples, std::uint64_t seed)
    : targets_(targets.begin(), targets.end()), samples_(n_samples), empty_s_(s.empty()) {
  check_samples(n_samples);
  if (spec.universe() != g.order() || s.universe() != g.order()) {
    throw PreconditionError("bad: spec, S and graph must share the vertex universe");
  }
  if (!s.is_subset_of(spec.domain())) {
    throw PreconditionError("bad: S must lie inside the domain of the distribution");
  }
  for (Vertex t : targets_)
    if (t >= g.order()) throw PreconditionError("bad: vertex out of range");
  values_.assign(samples_ * targets_.size(), 0.0);
  if (empty_s_) return;
  const Rng root(seed);
  const std::size_t k = targets_.size();
  parallel_for(samples_, [&](std::size_t i) {
    Rng rng = root.substream(i);
    thread_local std::vector<double> dense;
    sample_into(g, spec, rng, dense);
    for (std::size_t t = 0; t < k; ++t) {
      values_[i * k + t] = expected_degree_dense(g, targets_[t], dense, s);
    }
  });
}

BadEstimate ExpectedDegreeTable::pair(std::size_t i, std::size_t j) const {
  if (i == j || i >= targets_.size() || j >= targets_.size()) {
    throw PreconditionError("bad: pair needs two distinct targets");
  }
  if (targets_[i] == targets_[j]) throw PreconditionError("bad: u and v must differ");
  if (empty_s_) {
    BadEstimate e;
    e.point = 1.0;
    e.samples = samples_;
    e.half_width = wilson_half_width(1.0, samples_);
    e.window_center = 0.0;
    return e;
  }
  std::vector<double> xs(samples_);
  for (std::size_t n = 0; n < samples_; ++n) xs[n] = at(n, i) - at(n, j);
  return small_ball(xs);
}

BadEstimate bad_pair(const Graph& g, const DistributionSpec& spec, Vertex u, Vertex v,
                     const VertexSet& s, std::size_t n_samples, std::uint64_t seed) {
  if (u == v) throw PreconditionError("bad: u and v must differ");
  const Vertex pair[] = {u, v};
  return ExpectedDegreeTable(g, spec, pair, s, n_samples, seed).pair(0, 1);
}

BadSetResult bad_set(const Graph& g, const DistributionSpec& spec, const VertexSet& u_set,
                     const VertexSet& s, std::size_t n_samples, std::uint64_t seed) {
  if (u_set.size() < 2) throw PreconditionError("bad_set: U needs at least two vertices");
  const auto members = u_set.members();
  const ExpectedDegreeTable table(g, spec, members, s, n_samples, seed);
  const std::size_t k = members.size();
  std::vector<BadEstimate> est(k * (k - 1) / 2);
  parallel_for(k, [&](std::size_t i) {
    std::size_t base = i * (2 * k - i - 1) / 2;
    for (std::size_t j = i + 1; j < k; ++j) est[base + (j - i - 1)] = table.pair(i, j);
  });
  BadSetResult r;
  for (const auto& e : est) {
    r.sum += e.point;
    r.half_width_sum += e.half_width;
    r.max_point = std::max(r.max_point, e.point);
  }
  r.pairs = est.size();
  r.alpha = r.sum / static_cast<double>(k);
  return r;
}

BadSetResult bad_cross(const Graph& g, const DistributionSpec& spec, const VertexSet& u_set,
                       const VertexSet& v_set, const VertexSet& s, std::size_t n_samples,
                       std::uint64_t seed) {
  if (u_set.empty() || v_set.empty()) {
    throw PreconditionError("bad_cross: both sets must be nonempty");
  }
  if (u_set.intersects(v_set)) throw PreconditionError("bad_cross: sets must be disjoint");
  const auto us = u_set.members();
  const auto vs = v_set.members();
  std::vector<Vertex> all(us);
  all.insert(all.end(), vs.begin(), vs.end());
  const ExpectedDegreeTable table(g, spec, all, s, n_samples, seed);
  std::vector<BadEstimate> est(us.size() * vs.size());
  parallel_for(us.size(), [&](std::size_t i) {
    for (std::size_t j = 0; j < vs.size(); ++j) {
      est[i * vs.size() + j] = table.pair(i, us.size() + j);
    }
  });
  BadSetResult r;
  for (const auto& e : est) {
    r.sum += e.point;
    r.half_width_sum += e.half_width;
    r.max_point = std::max(r.max_point, e.point);
  }
  r.pairs = est.size();
  r.alpha = r.sum / static_cast<double>(all.size());
  return r;
}

ProductDominationReport check_product_domination(const Graph& g,
                                                 std::span<const DistributionSpec> specs,
                                                 Vertex u, Vertex v,
                                                 std::span<const VertexSet> s_list,
                                                 std::size_t n_samples, std::uint64_t seed) {
  if (specs.empty() || specs.size() != s_list.size()) {
    throw PreconditionError("product domination: need one S piece per factor");
  }
  VertexSet s_all(g.order());
  for (std::size_t i = 0; i < specs.size(); ++i) {
    if (!s_list[i].is_subset_of(specs[i].domain())) {
      throw PreconditionError("product domination: S piece outside its factor domain");
    }
    s_all = s_all | s_list[i];
  }
  const auto product = DistributionSpec::product({specs.begin(), specs.end()});
  ProductDominationReport rep;
  rep.product = bad_pair(g, product, u, v, s_all, n_samples, seed);
  for (std::size_t i = 0; i < specs.size(); ++i) {
    rep.components.push_back(
        bad_pair(g, specs[i], u, v, s_list[i], n_samples, derive_seed(seed, i + 1)));
    if (rep.components[i].point < rep.components[rep.argmin].point) rep.argmin = i;
  }
  const auto& best = rep.components[rep.argmin];
  rep.holds = rep.product.point <= best.point + best.half_width + rep.product.half_width;
  return rep;
}

double blended_bad_bound(double beta, double big_d, double gamma, std::size_t u_size,
                         double max_ds) {
  if (!(beta > 0) || !(big_d > 0) || !(gamma > 0) || u_size == 0) {
    throw PreconditionError("blended_bad_bound: parameters must be positive");
  }
  return 2.0 / (beta * big_d) +
         2.0 * max_ds * std::exp(-0.045 / (gamma * beta * beta * static_cast<double>(u_size)));
}

}  // namespace ddeg
