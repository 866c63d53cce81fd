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

#include "ddeg/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

#include "ddeg/error.hpp"
#include "ddeg/rng.hpp"

namespace ddeg {

// ---------------------------------------------------------------- VertexSet

VertexSet::VertexSet(std::size_t universe)
    : universe_(universe), words_(words_for(universe), 0) {}

VertexSet VertexSet::full(std::size_t universe) {
  VertexSet s(universe);
  for (auto& w : s.words_) w = ~Word{0};
  if (universe % kWordBits != 0 && !s.words_.empty()) {
    s.words_.back() = (Word{1} << (universe % kWordBits)) - 1;
  }
  s.count_ = universe;
  return s;
}

VertexSet VertexSet::of(std::size_t universe, std::span<const Vertex> members) {
  VertexSet s(universe);
  for (Vertex v : members) {
    if (v >= universe) {
      throw PreconditionError("vertex " + std::to_string(v) +
                              " out of range for universe " +
                              std::to_string(universe));
    }
    s.insert(v);
  }
  return s;
}

VertexSet VertexSet::from_words(std::size_t universe, std::vector<Word> words) {
  if (words.size() != words_for(universe)) {
    throw PreconditionError("VertexSet::from_words: word count mismatch");
  }
  if (universe % kWordBits != 0 && !words.empty() &&
      (words.back() >> (universe % kWordBits)) != 0) {
    throw PreconditionError("VertexSet::from_words: bits beyond universe");
  }
  VertexSet s;
  s.universe_ = universe;
  s.words_ = std::move(words);
  s.recount();
  return s;
}

bool VertexSet::insert(Vertex v) {
  if (v >= universe_) {
    throw PreconditionError("vertex " + std::to_string(v) + " out of range");
  }
  Word& w = words_[v / kWordBits];
  const Word bit = Word{1} << (v % kWordBits);
  if (w & bit) return false;
  w |= bit;
  ++count_;
  return true;
}

bool VertexSet::erase(Vertex v) {
  if (v >= universe_) return false;
  Word& w = words_[v / kWordBits];
  const Word bit = Word{1} << (v % kWordBits);
  if (!(w & bit)) return false;
  w &= ~bit;
  --count_;
  return true;
}

std::vector<Vertex> VertexSet::members() const {
  std::vector<Vertex> out;
  out.reserve(count_);
  for_each([&](Vertex v) { out.push_back(v); });
  return out;
}

Vertex VertexSet::first() const {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] != 0) {
      return static_cast<Vertex>(w * kWordBits + std::countr_zero(words_[w]));
    }
  }
  return static_cast<Vertex>(universe_);
}

void VertexSet::recount() {
  count_ = 0;
  for (Word w : words_) count_ += std::popcount(w);
}

void VertexSet::check_same_universe(const VertexSet& o) const {
  if (universe_ != o.universe_) {
    throw PreconditionError("vertex sets over different universes (" +
                            std::to_string(universe_) + " vs " +
                            std::to_string(o.universe_) + ")");
  }
}

VertexSet VertexSet::operator&(const VertexSet& o) const {
  check_same_universe(o);
  VertexSet r(universe_);
  for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] & o.words_[i];
  r.recount();
  return r;
}

VertexSet VertexSet::operator|(const VertexSet& o) const {
  check_same_universe(o);
  VertexSet r(universe_);
  for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] | o.words_[i];
  r.recount();
  return r;
}

VertexSet VertexSet::operator-(const VertexSet& o) const {
  check_same_universe(o);
  VertexSet r(universe_);
  for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] & ~o.words_[i];
  r.recount();
  return r;
}

VertexSet VertexSet::complement() const { return full(universe_) - *this; }

bool VertexSet::is_subset_of(const VertexSet& o) const {
  check_same_universe(o);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & ~o.words_[i]) return false;
  }
  return true;
}

bool VertexSet::intersects(const VertexSet& o) const {
  check_same_universe(o);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & o.words_[i]) return true;
  }
  return false;
}

std::size_t VertexSet::intersection_size(const VertexSet& o) const {
  check_same_universe(o);
  std::size_t c = 0;
  for (std::size_t i = 0; i < words_.size(); ++i) c += std::popcount(words_[i] & o.words_[i]);
  return c;
}

// -------------------------------------------------------------------- Graph

std::size_t Graph::degree_in(Vertex u, const VertexSet& s) const {
  const auto r = row(u);
  const auto m = s.words();
  std::size_t c = 0;
  for (std::size_t i = 0; i < wpr_; ++i) c += std::popcount(r[i] & m[i]);
  return c;
}

VertexSet Graph::neighbours(Vertex u) const {
  const auto r = row(u);
  return VertexSet::from_words(n_, std::vector<Word>(r.begin(), r.end()));
}

VertexSet Graph::neighbours(Vertex u, const VertexSet& s) const {
  return neighbours(u) & s;
}

std::size_t Graph::max_degree() const {
  return degrees_.empty() ? 0 : *std::max_element(degrees_.begin(), degrees_.end());
}

std::size_t Graph::min_degree() const {
  return degrees_.empty() ? 0 : *std::min_element(degrees_.begin(), degrees_.end());
}

double Graph::average_degree() const {
  return n_ == 0 ? 0.0 : 2.0 * static_cast<double>(edges_) / static_cast<double>(n_);
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(edges_);
  for (Vertex u = 0; u < n_; ++u) {
    const auto r = row(u);
    for (std::size_t w = (u + 1) / kWordBits; w < wpr_; ++w) {
      Word bits = r[w];
      if (w == (u + 1) / kWordBits) bits &= ~Word{0} << ((u + 1) % kWordBits);
      while (bits) {
        out.emplace_back(u, static_cast<Vertex>(w * kWordBits + std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
  }
  return out;
}

GraphBuilder::GraphBuilder(std::size_t n) {
  g_.n_ = n;
  g_.wpr_ = words_for(n);
  g_.rows_.assign(n * g_.wpr_, 0);
  g_.degrees_.assign(n, 0);
}

bool GraphBuilder::add_edge(Vertex u, Vertex v) {
  if (u >= g_.n_ || v >= g_.n_) {
    throw PreconditionError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                            ") out of range for n = " + std::to_string(g_.n_));
  }
  if (u == v) throw PreconditionError("loop at vertex " + std::to_string(u));
  Word& a = g_.rows_[static_cast<std::size_t>(u) * g_.wpr_ + v / kWordBits];
  const Word bit_v = Word{1} << (v % kWordBits);
  if (a & bit_v) return false;
  a |= bit_v;
  g_.rows_[static_cast<std::size_t>(v) * g_.wpr_ + u / kWordBits] |= Word{1} << (u % kWordBits);
  ++g_.degrees_[u];
  ++g_.degrees_[v];
  ++g_.edges_;
  return true;
}

Graph GraphBuilder::build() && { return std::move(g_); }

Graph empty_graph(std::size_t n) { return GraphBuilder(n).build(); }

Graph complete_graph(std::size_t n) {
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) b.add_edge(u, v);
  return std::move(b).build();
}

Graph path_graph(std::size_t n) {
  GraphBuilder b(n);
  for (Vertex u = 0; u + 1 < n; ++u) b.add_edge(u, u + 1);
  return std::move(b).build();
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw PreconditionError("cycle needs at least 3 vertices");
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u) b.add_edge(u, static_cast<Vertex>((u + 1) % n));
  return std::move(b).build();
}

Graph star_graph(std::size_t leaves) {
  GraphBuilder b(leaves + 1);
  for (Vertex v = 1; v <= leaves; ++v) b.add_edge(0, v);
  return std::move(b).build();
}

Graph from_edge_list(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges) {
  GraphBuilder b(n);
  for (const auto& [u, v] : edges) {
    if (!b.add_edge(u, v)) {
      throw PreconditionError("duplicate edge (" + std::to_string(u) + ", " +
                              std::to_string(v) + ")");
    }
  }
  return std::move(b).build();
}

Graph generate_gnp(std::size_t n, double p, std::uint64_t seed) {
  if (n < 1) throw PreconditionError("generate_gnp: n must be >= 1");
  if (!(p >= 0.0 && p <= 1.0)) {
    throw PreconditionError("generate_gnp: p must lie in [0, 1]");
  }
  Rng rng(seed);
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (rng.uniform() < p) b.add_edge(u, v);
    }
  }
  return std::move(b).build();
}

std::size_t diversity(const Graph& g, Vertex u, Vertex v, const VertexSet& s) {
  if (u == v) throw PreconditionError("diversity: u and v must differ");
  if (s.universe() != g.order()) {
    throw PreconditionError("diversity: set universe does not match graph order");
  }
  const auto a = g.row(u);
  const auto b = g.row(v);
  const auto m = s.words();
  std::size_t c = 0;
  for (std::size_t i = 0; i < a.size(); ++i) c += std::popcount((a[i] ^ b[i]) & m[i]);
  return c;
}

std::size_t diversity(const Graph& g, Vertex u, Vertex v) {
  if (u == v) throw PreconditionError("diversity: u and v must differ");
  const auto a = g.row(u);
  const auto b = g.row(v);
  std::size_t c = 0;
  for (std::size_t i = 0; i < a.size(); ++i) c += std::popcount(a[i] ^ b[i]);
  return c;
}

Graph complement(const Graph& g) {
  const std::size_t n = g.order();
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v)) b.add_edge(u, v);
  return std::move(b).build();
}

InducedSubgraph induced(const Graph& g, const VertexSet& s) {
  if (s.empty()) throw PreconditionError("induced: vertex set is empty");
  if (s.universe() != g.order()) {
    throw PreconditionError("induced: set universe does not match graph order");
  }
  InducedSubgraph out;
  out.labels = s.members();
  const std::size_t m = out.labels.size();
  GraphBuilder b(m);
  for (Vertex i = 0; i < m; ++i)
    for (Vertex j = i + 1; j < m; ++j)
      if (g.adjacent(out.labels[i], out.labels[j])) b.add_edge(i, j);
  out.graph = std::move(b).build();
  return out;
}

Graph read_graph(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  auto next_line = [&](std::string& out) {
    while (std::getline(in, out)) {
      ++line_no;
      if (!out.empty() && out.back() == '\r') out.pop_back();
      if (out.find_first_not_of(" \t") != std::string::npos) return true;
    }
    return false;
  };
  if (!next_line(line)) throw PreconditionError("graph file: missing header");
  long long n = -1, m = -1;
  {
    std::istringstream hs(line);
    std::string extra;
    if (!(hs >> n >> m) || (hs >> extra) || n < 1 || m < 0) {
      throw PreconditionError("graph file: bad header line '" + line + "'");
    }
  }
  GraphBuilder b(static_cast<std::size_t>(n));
  for (long long i = 0; i < m; ++i) {
    if (!next_line(line)) {
      throw PreconditionError("graph file: expected " + std::to_string(m) +
                              " edges, found " + std::to_string(i));
    }
    std::istringstream es(line);
    long long u = -1, v = -1;
    std::string extra;
    if (!(es >> u >> v) || (es >> extra)) {
      throw PreconditionError("graph file line " + std::to_string(line_no) +
                              ": malformed edge");
    }
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw PreconditionError("graph file line " + std::to_string(line_no) +
                              ": label out of range");
    }
    if (u == v) {
      throw PreconditionError("graph file line " + std::to_string(line_no) + ": loop");
    }
    if (u > v) {
      throw PreconditionError("graph file line " + std::to_string(line_no) +
                              ": edges must be written with u < v");
    }
    if (!b.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v))) {
      throw PreconditionError("graph file line " + std::to_string(line_no) +
                              ": duplicate edge");
    }
  }
  if (next_line(line)) throw PreconditionError("graph file: trailing content");
  return std::move(b).build();
}

Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot open graph file '" + path + "'");
  return read_graph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
  out << g.order() << ' ' << g.edge_count() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

}  // namespace ddeg
