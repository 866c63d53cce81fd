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

#ifndef DDEG_GRAPH_HPP_
#define DDEG_GRAPH_HPP_

#include <bit>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace ddeg {

using Vertex = std::uint32_t;
using Word = std::uint64_t;

constexpr std::size_t kWordBits = 64;

constexpr std::size_t words_for(std::size_t bits) {
  return (bits + kWordBits - 1) / kWordBits;
}

// Subset of {0, ..., universe-1} stored as a bitmask with cached
// cardinality.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe);

  static VertexSet full(std::size_t universe);
  static VertexSet of(std::size_t universe, std::span<const Vertex> members);
  static VertexSet from_words(std::size_t universe, std::vector<Word> words);

  std::size_t universe() const { return universe_; }
  std::size_t size() const { return count_; }
  bool empty() const { return count_ == 0; }
  std::span<const Word> words() const { return words_; }

  bool contains(Vertex v) const {
    return v < universe_ && ((words_[v / kWordBits] >> (v % kWordBits)) & 1U);
  }
  // Both return whether the set changed.
  bool insert(Vertex v);
  bool erase(Vertex v);

  std::vector<Vertex> members() const;
  // Smallest member, or universe() when empty.
  Vertex first() const;

  template <class Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      Word bits = words_[w];
      while (bits != 0) {
        const int b = std::countr_zero(bits);
        fn(static_cast<Vertex>(w * kWordBits + b));
        bits &= bits - 1;
      }
    }
  }

  VertexSet operator&(const VertexSet& o) const;
  VertexSet operator|(const VertexSet& o) const;
  VertexSet operator-(const VertexSet& o) const;
  VertexSet complement() const;
  bool is_subset_of(const VertexSet& o) const;
  bool intersects(const VertexSet& o) const;
  std::size_t intersection_size(const VertexSet& o) const;

  bool operator==(const VertexSet& o) const {
    return universe_ == o.universe_ && words_ == o.words_;
  }

 private:
  void recount();
  void check_same_universe(const VertexSet& o) const;

  std::size_t universe_ = 0;
  std::size_t count_ = 0;
  std::vector<Word> words_;
};

// Immutable simple undirected graph on 0..n-1 with one bit row per vertex.
// Rows are padded to whole 64-bit words.
class Graph {
 public:
  Graph() = default;

  std::size_t order() const { return n_; }
  std::size_t edge_count() const { return edges_; }
  std::size_t words_per_row() const { return wpr_; }

  std::span<const Word> row(Vertex u) const {
    return {rows_.data() + static_cast<std::size_t>(u) * wpr_, wpr_};
  }
  bool adjacent(Vertex u, Vertex v) const {
    return (row(u)[v / kWordBits] >> (v % kWordBits)) & 1U;
  }
  std::size_t degree(Vertex u) const { return degrees_[u]; }
  std::size_t degree_in(Vertex u, const VertexSet& s) const;
  // N^S(u); the unrestricted neighbourhood when s is omitted.
  VertexSet neighbours(Vertex u) const;
  VertexSet neighbours(Vertex u, const VertexSet& s) const;

  std::size_t max_degree() const;
  std::size_t min_degree() const;
  double average_degree() const;

  // Edges (u, v) with u < v in lexicographic order.
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  bool operator==(const Graph& o) const {
    return n_ == o.n_ && rows_ == o.rows_;
  }

 private:
  friend class GraphBuilder;

  std::size_t n_ = 0;
  std::size_t wpr_ = 0;
  std::size_t edges_ = 0;
  std::vector<Word> rows_;
  std::vector<std::size_t> degrees_;
};

class GraphBuilder {
 public:
  explicit GraphBuilder(std::size_t n);

  // Returns false if the edge was already present. Loops and out-of-range
  // endpoints throw PreconditionError.
  bool add_edge(Vertex u, Vertex v);
  Graph build() &&;

 private:
  Graph g_;
};

Graph empty_graph(std::size_t n);
Graph complete_graph(std::size_t n);
Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph star_graph(std::size_t leaves);
Graph from_edge_list(std::size_t n,
                     std::span<const std::pair<Vertex, Vertex>> edges);

// G(n, p) under Rng(seed): pairs (u, v), u < v, are visited in lexicographic
// order and each consumes one uniform draw x, with the edge present iff
// x < p.
Graph generate_gnp(std::size_t n, double p, std::uint64_t seed);

// |N^S(u) xor N^S(v)|. Throws PreconditionError when u == v.
std::size_t diversity(const Graph& g, Vertex u, Vertex v, const VertexSet& s);
// |N(u) xor N(v)| over the whole vertex set.
std::size_t diversity(const Graph& g, Vertex u, Vertex v);

Graph complement(const Graph& g);

struct InducedSubgraph {
  Graph graph;
  // labels[i] is the original vertex behind vertex i of graph.
  std::vector<Vertex> labels;
};

// Relabels s to 0..|s|-1 in increasing order. Throws on empty s.
InducedSubgraph induced(const Graph& g, const VertexSet& s);

// Text format: "n m" then m lines "u v" with u < v. Loader rejects
// duplicate edges, loops and out-of-range labels.
Graph read_graph(std::istream& in);
Graph load_graph(const std::string& path);
void write_graph(std::ostream& out, const Graph& g);

}  // namespace ddeg

#endif  // DDEG_GRAPH_HPP_
