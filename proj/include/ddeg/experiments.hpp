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


#ifndef DDEG_EXPERIMENTS_HPP_
#define DDEG_EXPERIMENTS_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace ddeg {

enum class TailKind { kChernoffLower, kChernoffUpper, kHoeffding, kBinomial, kQuarter };

const char* tail_kind_name(TailKind k);
TailKind tail_kind_from(const std::string& name);

struct TailParams {
  double mu = 0;               // Chernoff mean
  double delta = 0;            // Chernoff deviation, in [0, 1]
  double t = 0;                // Hoeffding deviation, > 0
  std::vector<double> ranges;  // Hoeffding b_i - a_i
  std::size_t n = 0;           // binomial trials
  double p = 0;                // binomial success probability
  double l = 0;                // binomial threshold L > 0
};

// Chernoff lower: exp(-delta^2 mu / 2); upper: exp(-delta^2 mu / 4).
// Hoeffding: 2 exp(-2 t^2 / sum ranges^2). Binomial: (e n p / L)^L.
// Quarter: the constant 1/4, after checking p in (1/n, 1).
double tail_bound(TailKind kind, const TailParams& params);

// P(X >= k) for X ~ Bin(n, p), summed exactly in log space.
double binomial_upper_tail(std::size_t n, double p, std::size_t k);
// Whether P(X >= np) > 1/4 holds by exact summation.
bool quarter_bound_holds(std::size_t n, double p);

struct LinearFit {
  double slope = 0;
  double intercept = 0;
  double slope_se = 0;
  double intercept_se = 0;
  std::size_t points = 0;
};

// Ordinary least squares; needs at least 4 points and two distinct x.
LinearFit least_squares(const std::vector<double>& xs, const std::vector<double>& ys);

struct ExperimentPlan {
  std::vector<std::size_t> ns;
  std::vector<double> ps;
  std::vector<std::uint64_t> seeds;
  std::size_t n_samples = 200;  // Monte Carlo samples per bad estimate
  std::size_t trials = 10;      // realize_witness trials
  double c = 1;                 // |U| = c (n^2 p)^(1/3)
  std::size_t hom_exact_max = 64;
  std::size_t max_n = 16384;    // resource cap on every grid point
  double slope_lo = 0.5;
  double slope_hi = 0.8;
  std::string budget_label() const;
};

struct Measurement {
  std::size_t n = 0;
  double p = 0;
  std::uint64_t seed = 0;
  std::string metric;
  double value = 0;
  double half_width = 0;
  std::string budget;
};

struct ScalingReport {
  std::string name;
  std::vector<Measurement> rows;
  std::optional<LinearFit> fit;
  double window_lo = 0;
  double window_hi = 0;
  bool pass = false;
  std::vector<std::string> notes;
};

// Exact hom for n <= hom_exact_max, otherwise a greedy lower bound
// (metric "hom_lower"). pass: every exact value lies in
// [log2(n)/2, log2(n)/p + 2]; p = 1 rows must equal n.
ScalingReport hom_scaling(const ExperimentPlan& plan);

enum class ScalingAxis { kN, kP };

// Pressure pipeline on the random-graph instance plus realize_witness.
// Axis kN varies n at ps[0]; kP varies p at ns[0]. The fit is log f_hat
// against log n (or log p) over every (point, seed) row.
ScalingReport f_scaling(const ExperimentPlan& plan, ScalingAxis axis);

// max(f hom, sqrt(f^3 hom)) / n with exact oracles; n <= 20.
ScalingReport regime_map(const ExperimentPlan& plan);

const char* build_commit();

void write_csv(std::ostream& out, const std::vector<Measurement>& rows);
std::string report_to_json(const ScalingReport& report);

}  // namespace ddeg

#endif  // DDEG_EXPERIMENTS_HPP_
