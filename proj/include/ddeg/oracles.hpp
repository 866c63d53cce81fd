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

#ifndef DDEG_ORACLES_HPP_
#define DDEG_ORACLES_HPP_

#include <cstddef>
#include <cstdint>

#include "ddeg/graph.hpp"

namespace ddeg {

enum class HomKind { kClique, kIndependent };

// Largest homogeneous set with a witness.
struct HomResult {
  std::size_t value = 0;
  VertexSet witness;
  HomKind kind = HomKind::kClique;
};

// A host set U together with marked vertices of U whose degrees in G[U] are
// pairwise distinct.
struct DistinctDegreeWitness {
  VertexSet host;
  VertexSet marked;
  std::size_t value = 0;
};

inline constexpr std::size_t kHomExactLimit = 128;
inline constexpr std::size_t kFExactLimit = 20;

// Maximum clique on a bitset graph by branch and bound with a greedy
// colouring bound.
VertexSet max_clique(const Graph& g);

// max(omega(G), alpha(G)); alpha is omega of the complement. Ties go to the
// clique.
HomResult hom_exact(const Graph& g, std::size_t limit = kHomExactLimit);

// Exhaustive over all nonempty hosts: f(G) as the largest number of distinct
// degree values in an induced subgraph.
DistinctDegreeWitness f_exact(const Graph& g, std::size_t limit = kFExactLimit);

// Repeatedly takes a minimum-degree vertex of the remaining graph and drops
// its neighbours. Guarantees at least n / (avg degree + 1) vertices.
VertexSet turan_independent_set(const Graph& g);

// Large induced subgraph H = G[A] with |A| >= n / (30 log2 n) and
// max degree <= 5 log2 n * min degree, certified before return.
VertexSet regularize(const Graph& g);

// Randomised local search over hosts. Always returns a verified witness.
DistinctDegreeWitness f_lower_greedy(const Graph& g, std::size_t effort,
                                     std::uint64_t seed = 0);

// Degrees in G[host] of every vertex of host; other entries are zero.
std::vector<std::size_t> induced_degrees(const Graph& g, const VertexSet& host);

// Picks one vertex per distinct induced degree value among candidates
// (lowest label first). candidates must be a subset of host.
DistinctDegreeWitness distinct_degree_witness(const Graph& g, const VertexSet& host,
                                              const VertexSet& candidates);

// Recomputes induced degrees and checks marked is inside host with pairwise
// distinct degrees and value == |marked|.
bool verify_witness(const Graph& g, const DistinctDegreeWitness& w);

bool is_clique(const Graph& g, const VertexSet& s);
bool is_independent(const Graph& g, const VertexSet& s);

}  // namespace ddeg

#endif  // DDEG_ORACLES_HPP_
