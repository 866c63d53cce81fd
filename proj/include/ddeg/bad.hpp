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

#ifndef DDEG_BAD_HPP_
#define DDEG_BAD_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "ddeg/distributions.hpp"
#include "ddeg/graph.hpp"

namespace ddeg {

// Two-sided 99% normal quantile used for every reported half-width.
inline constexpr double kConfidenceZ = 2.5758293035489004;
inline constexpr std::size_t kMinBadSamples = 100;

struct BadEstimate {
  double point = 0;
  std::size_t samples = 0;
  double half_width = 0;
  double window_center = 0;
};

// Wilson score half-width for a proportion at kConfidenceZ.
double wilson_half_width(double proportion, std::size_t samples);

// Largest fraction of xs inside a closed interval of length 2, with the
// centre of one maximizing interval. Sorts xs in place.
BadEstimate small_ball(std::vector<double>& xs);

// N draws from spec (draw i uses Rng(seed).substream(i)) and, for each,
// the expected S-degree of every target. Sampling runs on the shared
// thread pool; results do not depend on the thread count.
class ExpectedDegreeTable {
 public:
  ExpectedDegreeTable(const Graph& g, const DistributionSpec& spec,
                      std::span<const Vertex> targets, const VertexSet& s,
                      std::size_t n_samples, std::uint64_t seed);

  std::size_t samples() const { return samples_; }
  std::size_t targets() const { return targets_.size(); }
  Vertex target(std::size_t i) const { return targets_[i]; }
  double at(std::size_t sample, std::size_t target) const {
    return values_[sample * targets_.size() + target];
  }
  // bad between targets i and j, i != j.
  BadEstimate pair(std::size_t i, std::size_t j) const;

 private:
  std::vector<Vertex> targets_;
  std::size_t samples_ = 0;
  bool empty_s_ = false;
  std::vector<double> values_;
};

BadEstimate bad_pair(const Graph& g, const DistributionSpec& spec, Vertex u, Vertex v,
                     const VertexSet& s, std::size_t n_samples, std::uint64_t seed);

struct BadSetResult {
  double sum = 0;
  // sum / |U| for a single set; sum / (|U| + |V|) for a cross set.
  double alpha = 0;
  double half_width_sum = 0;
  double max_point = 0;
  std::size_t pairs = 0;
};

// Sum over unordered pairs of U.
BadSetResult bad_set(const Graph& g, const DistributionSpec& spec, const VertexSet& u_set,
                     const VertexSet& s, std::size_t n_samples, std::uint64_t seed);
// Sum over U x V.
BadSetResult bad_cross(const Graph& g, const DistributionSpec& spec, const VertexSet& u_set,
                       const VertexSet& v_set, const VertexSet& s, std::size_t n_samples,
                       std::uint64_t seed);

struct ProductDominationReport {
  BadEstimate product;
  std::vector<BadEstimate> components;
  std::size_t argmin = 0;
  bool holds = false;
};

// Compares bad under the product of specs (on the union of s_list) with
// bad under each factor alone on its own piece. holds is true when the
// product point is at most the smallest factor point plus both
// half-widths.
ProductDominationReport check_product_domination(const Graph& g,
                                                 std::span<const DistributionSpec> specs,
                                                 Vertex u, Vertex v,
                                                 std::span<const VertexSet> s_list,
                                                 std::size_t n_samples, std::uint64_t seed);

// 2/(beta D) + 2 max_ds exp(-0.045 / (gamma beta^2 |U|)).
double blended_bad_bound(double beta, double big_d, double gamma, std::size_t u_size,
                         double max_ds);

}  // namespace ddeg

#endif  // DDEG_BAD_HPP_
