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


#ifndef DDEG_SYNTHESIS_HPP_
#define DDEG_SYNTHESIS_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "ddeg/extractor.hpp"
#include "ddeg/graph.hpp"

namespace ddeg {

struct SynthesisBudget {
  double k = 4;
  // g1(x) = c1 exp(c2 (ln x)^(2/3)), g2(x) = c (log2 x)^2.
  double c1 = 1;
  double c2 = 1;
  double c = 1;
  // Cluster and threshold schedule; for_k fills these from k.
  double lambda = 2;
  double t = 2;
  double m = 4;
  std::size_t depth_cap = 3;
  std::size_t n_samples = 200;
  std::size_t base_limit = 16;  // f_exact below this order
  std::size_t max_children = 8;
  std::size_t memo_limit = 256;
  std::size_t partition_attempts = 40;
  double relax_floor = 0.01;
  double relax_a2 = 1;
  double relax_a3 = 1.0 / 512;
  bool check_hom = true;

  // log2 lambda = (log2 k)^(4/9), log2 T = (log2 k)^(5/9), log2 M = (log2 k)^(2/3).
  static SynthesisBudget for_k(double k);

  double g1(double x) const;
  double g1_prime(double x) const;
  double g2(double x) const;
  double x0() const;  // e^(c2^3); g1' decreases past it
  // Target for a subset of order v inside an n-vertex graph with target k.
  static double k_of(double v, double n, double k);
};

struct SynthesisResult {
  ControlledSet set;
  std::vector<std::string> trace;
};

// Throws PreconditionError when n > k^2, or when check_hom is set, n <= 128
// and hom(G) > n^2 / k^3.
SynthesisResult synthesize(const Graph& g, const SynthesisBudget& budget, std::uint64_t seed);

}  // namespace ddeg

#endif  // DDEG_SYNTHESIS_HPP_
