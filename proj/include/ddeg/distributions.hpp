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

#ifndef DDEG_DISTRIBUTIONS_HPP_
#define DDEG_DISTRIBUTIONS_HPP_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "ddeg/graph.hpp"
#include "ddeg/rng.hpp"

namespace ddeg {

inline constexpr double kProbLow = 0.1;
inline constexpr double kProbHigh = 0.9;
inline constexpr double kMaxBeta = 0.4;

// Probability vector on a domain T. Stored densely over the whole universe;
// coordinates outside T hold 0 and are never read through at().
class ProbVector {
 public:
  ProbVector() = default;
  // Throws PreconditionError if a coordinate in the domain is outside
  // [0.1, 0.9] or the sizes disagree.
  ProbVector(VertexSet domain, std::vector<double> dense);

  const VertexSet& domain() const { return domain_; }
  std::size_t universe() const { return domain_.universe(); }
  double at(Vertex v) const;
  std::span<const double> dense() const { return values_; }

 private:
  VertexSet domain_;
  std::vector<double> values_;
};

enum class Variant { kTrivial, kUniformConstant, kBlended, kProduct };

const char* variant_name(Variant v);

// Immutable description of a distribution on [0.1, 0.9]^T. The four
// constructors are the only ways to build one.
class DistributionSpec {
 public:
  DistributionSpec() = default;

  static DistributionSpec trivial(VertexSet t);
  static DistributionSpec uniform_constant(VertexSet t);
  // Domain is s. order lists u_1..u_k; it must be nonempty, duplicate-free
  // and inside the universe. beta must lie in (0, 0.4].
  static DistributionSpec blended(std::vector<Vertex> order, VertexSet s, double beta);
  // Children must share a universe and have pairwise-disjoint domains.
  static DistributionSpec product(std::vector<DistributionSpec> children);

  Variant variant() const { return variant_; }
  const VertexSet& domain() const { return domain_; }
  std::size_t universe() const { return domain_.universe(); }
  const std::vector<Vertex>& order() const { return order_; }
  double beta() const { return beta_; }
  const std::vector<DistributionSpec>& children() const { return children_; }

 private:
  Variant variant_ = Variant::kTrivial;
  VertexSet domain_;
  std::vector<Vertex> order_;
  double beta_ = 0;
  std::vector<DistributionSpec> children_;
};

// Draw order: Trivial draws nothing, UniformConstant draws one uniform,
// Blended draws one per u_i in order, Product recurses into children in
// order. A ScriptedSource therefore pins every coefficient.
ProbVector sample(const Graph& g, const DistributionSpec& spec, UniformSource& source);

// Same as sample() but writes into a caller-owned dense buffer of size n.
// Coordinates outside the domain are set to 0.
void sample_into(const Graph& g, const DistributionSpec& spec, UniformSource& source,
                 std::vector<double>& dense);

// sum of p_v over N^S(u). s must lie inside p's domain.
double expected_degree(const Graph& g, Vertex u, const ProbVector& p, const VertexSet& s);
// Unchecked variant over a dense buffer.
double expected_degree_dense(const Graph& g, Vertex u, std::span<const double> p,
                             const VertexSet& s);

// Includes v iff the next uniform is < p_v, visiting vertices in label
// order. p must be defined on all of V.
VertexSet realize_subgraph(const Graph& g, const ProbVector& p, UniformSource& source);

// JSON form: {"version":1,"variant":...,"universe":n,"domain":[...],
// "params":{...},"children":[...]}.
std::string spec_to_json(const DistributionSpec& spec);
DistributionSpec spec_from_json(const std::string& text);

}  // namespace ddeg

#endif  // DDEG_DISTRIBUTIONS_HPP_
