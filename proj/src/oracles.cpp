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

#include "ddeg/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "ddeg/error.hpp"
#include "ddeg/parallel.hpp"
#include "ddeg/rng.hpp"

namespace ddeg {

namespace {

// ------------------------------------------------------------- max clique

class CliqueSearch {
 public:
  explicit CliqueSearch(const Graph& g) : g_(g), wpr_(g.words_per_row()) {}

  std::vector<Vertex> run() {
    std::vector<Word> all(wpr_, 0);
    for (Vertex v = 0; v < g_.order(); ++v) all[v / kWordBits] |= Word{1} << (v % kWordBits);
    std::vector<Vertex> current;
    expand(all, current);
    return best_;
  }

 private:
  static bool none(const std::vector<Word>& s) {
    return std::all_of(s.begin(), s.end(), [](Word w) { return w == 0; });
  }

  // Greedy sequential colouring of p; order[i] is coloured bound[i] and
  // bounds are non-decreasing.
  void colour(const std::vector<Word>& p, std::vector<Vertex>& order,
              std::vector<std::size_t>& bound) const {
    std::vector<Word> uncoloured = p;
    std::size_t c = 0;
    while (!none(uncoloured)) {
      ++c;
      std::vector<Word> avail = uncoloured;
      for (std::size_t w = 0; w < wpr_; ++w) {
        while (avail[w]) {
          const auto v = static_cast<Vertex>(w * kWordBits + std::countr_zero(avail[w]));
          const Word bit = Word{1} << (v % kWordBits);
          avail[w] &= ~bit;
          uncoloured[w] &= ~bit;
          const auto r = g_.row(v);
          for (std::size_t x = w; x < wpr_; ++x) avail[x] &= ~r[x];
          order.push_back(v);
          bound.push_back(c);
        }
      }
    }
  }

  void expand(std::vector<Word> p, std::vector<Vertex>& current) {
    std::vector<Vertex> order;
    std::vector<std::size_t> bound;
    colour(p, order, bound);
    for (std::size_t i = order.size(); i-- > 0;) {
      if (current.size() + bound[i] <= best_.size()) return;
      const Vertex v = order[i];
      current.push_back(v);
      std::vector<Word> next(wpr_);
      const auto r = g_.row(v);
      for (std::size_t w = 0; w < wpr_; ++w) next[w] = p[w] & r[w];
      if (none(next)) {
        if (current.size() > best_.size()) best_ = current;
      } else {
        expand(std::move(next), current);
      }
      current.pop_back();
      p[v / kWordBits] &= ~(Word{1} << (v % kWordBits));
    }
  }

  const Graph& g_;
  std::size_t wpr_;
  std::vector<Vertex> best_;
};

std::size_t distinct_count(const Graph& g, std::uint32_t mask,
                           const std::vector<std::uint32_t>& rows) {
  std::uint32_t seen = 0;
  std::uint32_t m = mask;
  while (m) {
    const int v = std::countr_zero(m);
    m &= m - 1;
    seen |= std::uint32_t{1} << std::popcount(rows[v] & mask);
  }
  (void)g;
  return static_cast<std::size_t>(std::popcount(seen));
}

bool certify_regular(const Graph& g, const VertexSet& a, double log_n) {
  const std::size_t n = g.order();
  if (a.empty() || static_cast<double>(a.size()) * 30.0 * log_n < static_cast<double>(n)) {
    return false;
  }
  std::size_t lo = n, hi = 0;
  a.for_each([&](Vertex v) {
    const std::size_t d = g.degree_in(v, a);
    lo = std::min(lo, d);
    hi = std::max(hi, d);
  });
  return static_cast<double>(hi) <= 5.0 * log_n * static_cast<double>(lo);
}

// Alternately strips vertices whose degree inside the current set is too
// small or too large relative to the ratio target, stopping once the set
// certifies or falls below the size floor.
VertexSet peel(const Graph& g, VertexSet a, double log_n, bool drop_low_first) {
  const std::size_t n = g.order();
  const double floor_size = static_cast<double>(n) / (30.0 * log_n);
  bool drop_low = drop_low_first;
  for (std::size_t round = 0; round < 4 * n + 4; ++round) {
    if (certify_regular(g, a, log_n)) return a;
    if (static_cast<double>(a.size()) < floor_size) break;
    std::vector<std::pair<std::size_t, Vertex>> deg;
    deg.reserve(a.size());
    a.for_each([&](Vertex v) { deg.emplace_back(g.degree_in(v, a), v); });
    std::sort(deg.begin(), deg.end());
    const double hi = static_cast<double>(deg.back().first);
    const double lo = static_cast<double>(deg.front().first);
    bool changed = false;
    if (drop_low) {
      for (const auto& [d, v] : deg) {
        if (static_cast<double>(d) * 5.0 * log_n < hi) changed |= a.erase(v);
      }
    } else {
      for (const auto& [d, v] : deg) {
        if (static_cast<double>(d) > 5.0 * log_n * lo) changed |= a.erase(v);
      }
    }
    if (!changed) {
      // Nothing strictly violates from this side; remove one extreme vertex.
      a.erase(drop_low ? deg.front().second : deg.back().second);
    }
    drop_low = !drop_low;
  }
  return VertexSet(n);
}

// Incremental host state for the local search in f_lower_greedy.
class HostState {
 public:
  HostState(const Graph& g, const VertexSet& host)
      : g_(g), deg_(g.order(), 0), in_(g.order(), 0), hist_(g.order() + 1, 0) {
    host.for_each([&](Vertex v) { in_[v] = 1; });
    for (Vertex v = 0; v < g.order(); ++v) deg_[v] = g.degree_in(v, host);
    host.for_each([&](Vertex v) { bump(deg_[v], +1); });
  }

  std::size_t distinct() const { return distinct_; }

  void toggle(Vertex v) {
    const bool removing = in_[v] != 0;
    if (removing) {
      bump(deg_[v], -1);
      in_[v] = 0;
    }
    const auto r = g_.row(v);
    for (std::size_t w = 0; w < r.size(); ++w) {
      Word bits = r[w];
      while (bits) {
        const auto x = static_cast<Vertex>(w * kWordBits + std::countr_zero(bits));
        bits &= bits - 1;
        if (in_[x]) bump(deg_[x], -1);
        deg_[x] = removing ? deg_[x] - 1 : deg_[x] + 1;
        if (in_[x]) bump(deg_[x], +1);
      }
    }
    if (!removing) {
      in_[v] = 1;
      bump(deg_[v], +1);
    }
  }

  VertexSet host() const {
    VertexSet s(g_.order());
    for (Vertex v = 0; v < g_.order(); ++v)
      if (in_[v]) s.insert(v);
    return s;
  }

 private:
  void bump(std::size_t d, int delta) {
    if (delta > 0) {
      if (hist_[d]++ == 0) ++distinct_;
    } else {
      if (--hist_[d] == 0) --distinct_;
    }
  }

  const Graph& g_;
  std::vector<std::size_t> deg_;
  std::vector<char> in_;
  std::vector<std::size_t> hist_;
  std::size_t distinct_ = 0;
};

}  // namespace

bool is_clique(const Graph& g, const VertexSet& s) {
  const auto m = s.members();
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j)
      if (!g.adjacent(m[i], m[j])) return false;
  return true;
}

bool is_independent(const Graph& g, const VertexSet& s) {
  bool ok = true;
  s.for_each([&](Vertex v) { ok = ok && g.degree_in(v, s) == 0; });
  return ok;
}

VertexSet max_clique(const Graph& g) {
  VertexSet out(g.order());
  if (g.order() == 0) return out;
  for (Vertex v : CliqueSearch(g).run()) out.insert(v);
  return out;
}

HomResult hom_exact(const Graph& g, std::size_t limit) {
  if (g.order() > limit) {
    throw SizeLimitError("hom_exact: graph has " + std::to_string(g.order()) +
                             " vertices, above the exact-search guard",
                         limit);
  }
  HomResult r;
  VertexSet clique = max_clique(g);
  VertexSet indep = max_clique(complement(g));
  if (indep.size() > clique.size()) {
    r.value = indep.size();
    r.witness = std::move(indep);
    r.kind = HomKind::kIndependent;
  } else {
    r.value = clique.size();
    r.witness = std::move(clique);
    r.kind = HomKind::kClique;
  }
  const bool ok = r.kind == HomKind::kClique ? is_clique(g, r.witness)
                                             : is_independent(g, r.witness);
  if (!ok || r.witness.size() != r.value) {
    throw ConstructionError("hom_exact: witness failed verification");
  }
  return r;
}

std::vector<std::size_t> induced_degrees(const Graph& g, const VertexSet& host) {
  std::vector<std::size_t> deg(g.order(), 0);
  host.for_each([&](Vertex v) { deg[v] = g.degree_in(v, host); });
  return deg;
}

DistinctDegreeWitness distinct_degree_witness(const Graph& g, const VertexSet& host,
                                              const VertexSet& candidates) {
  if (!candidates.is_subset_of(host)) {
    throw PreconditionError("distinct_degree_witness: candidates must lie in the host");
  }
  DistinctDegreeWitness w;
  w.host = host;
  w.marked = VertexSet(g.order());
  std::vector<char> seen(g.order() + 1, 0);
  candidates.for_each([&](Vertex v) {
    const std::size_t d = g.degree_in(v, host);
    if (!seen[d]) {
      seen[d] = 1;
      w.marked.insert(v);
    }
  });
  w.value = w.marked.size();
  return w;
}

bool verify_witness(const Graph& g, const DistinctDegreeWitness& w) {
  if (w.host.universe() != g.order() || w.marked.universe() != g.order()) return false;
  if (!w.marked.is_subset_of(w.host) || w.marked.size() != w.value) return false;
  std::vector<char> seen(g.order() + 1, 0);
  bool ok = true;
  w.marked.for_each([&](Vertex v) {
    const std::size_t d = g.degree_in(v, w.host);
    if (seen[d]) ok = false;
    seen[d] = 1;
  });
  return ok;
}

DistinctDegreeWitness f_exact(const Graph& g, std::size_t limit) {
  const std::size_t n = g.order();
  limit = std::min<std::size_t>(limit, 31);
  if (n > limit) {
    throw SizeLimitError("f_exact: graph has " + std::to_string(n) +
                             " vertices, above the exhaustive-search guard",
                         limit);
  }
  std::vector<std::uint32_t> rows(n);
  for (Vertex v = 0; v < n; ++v) rows[v] = static_cast<std::uint32_t>(g.row(v)[0]);

  const std::uint64_t total = (std::uint64_t{1} << n) - 1;  // masks 1..total
  constexpr std::uint64_t kChunk = 1 << 14;
  const std::size_t chunks = static_cast<std::size_t>((total + kChunk - 1) / kChunk);
  std::vector<std::pair<std::size_t, std::uint32_t>> local(chunks, {0, 0});
  const std::size_t cap = g.max_degree() + 1;
  parallel_for(chunks, [&](std::size_t c) {
    std::pair<std::size_t, std::uint32_t> best{0, 0};
    const std::uint64_t lo = 1 + c * kChunk;
    const std::uint64_t hi = std::min<std::uint64_t>(total, lo + kChunk - 1);
    for (std::uint64_t m = lo; m <= hi; ++m) {
      const auto mask = static_cast<std::uint32_t>(m);
      if (static_cast<std::size_t>(std::popcount(mask)) <= best.first) continue;
      const std::size_t v = distinct_count(g, mask, rows);
      if (v > best.first) best = {v, mask};
      if (best.first == cap) break;
    }
    local[c] = best;
  });
  std::pair<std::size_t, std::uint32_t> best{0, 0};
  for (const auto& b : local)
    if (b.first > best.first) best = b;

  VertexSet host(n);
  for (Vertex v = 0; v < n; ++v)
    if ((best.second >> v) & 1U) host.insert(v);
  auto w = distinct_degree_witness(g, host, host);
  if (w.value != best.first || !verify_witness(g, w)) {
    throw ConstructionError("f_exact: witness failed verification");
  }
  return w;
}

VertexSet turan_independent_set(const Graph& g) {
  const std::size_t n = g.order();
  VertexSet result(n);
  if (n == 0) return result;
  std::vector<std::size_t> deg(n);
  std::vector<char> alive(n, 1);
  for (Vertex v = 0; v < n; ++v) deg[v] = g.degree(v);
  std::size_t remaining = n;
  auto kill = [&](Vertex x) {
    alive[x] = 0;
    --remaining;
    const auto r = g.row(x);
    for (std::size_t w = 0; w < r.size(); ++w) {
      Word bits = r[w];
      while (bits) {
        const auto y = static_cast<Vertex>(w * kWordBits + std::countr_zero(bits));
        bits &= bits - 1;
        if (alive[y]) --deg[y];
      }
    }
  };
  while (remaining > 0) {
    Vertex pick = 0;
    std::size_t best = n + 1;
    for (Vertex v = 0; v < n; ++v) {
      if (alive[v] && deg[v] < best) {
        best = deg[v];
        pick = v;
      }
    }
    result.insert(pick);
    std::vector<Vertex> drop{pick};
    const auto r = g.row(pick);
    for (std::size_t w = 0; w < r.size(); ++w) {
      Word bits = r[w];
      while (bits) {
        const auto y = static_cast<Vertex>(w * kWordBits + std::countr_zero(bits));
        bits &= bits - 1;
        if (alive[y]) drop.push_back(y);
      }
    }
    for (Vertex x : drop) kill(x);
  }
  // |I| * (avg degree + 1) >= n, in integers: |I| * (2m + n) >= n^2.
  const auto lhs = static_cast<unsigned __int128>(result.size()) * (2 * g.edge_count() + n);
  const auto rhs = static_cast<unsigned __int128>(n) * n;
  if (!is_independent(g, result) || lhs < rhs) {
    throw ConstructionError("turan_independent_set: result failed verification");
  }
  return result;
}

VertexSet regularize(const Graph& g) {
  const std::size_t n = g.order();
  if (n < 2) throw PreconditionError("regularize: needs at least 2 vertices");
  const double log_n = std::log2(static_cast<double>(n));

  std::vector<VertexSet> starts;
  starts.push_back(VertexSet::full(n));
  // Dyadic degree buckets; degree 0 forms its own bucket.
  std::vector<VertexSet> buckets;
  for (Vertex v = 0; v < n; ++v) {
    const std::size_t d = g.degree(v);
    const std::size_t b = d == 0 ? 0 : 1 + static_cast<std::size_t>(std::bit_width(d) - 1);
    if (buckets.size() <= b) buckets.resize(b + 1, VertexSet(n));
    buckets[b].insert(v);
  }
  for (auto& b : buckets)
    if (!b.empty()) starts.push_back(std::move(b));

  VertexSet best(n);
  auto consider = [&](const VertexSet& a) {
    if (a.size() > best.size() && certify_regular(g, a, log_n)) best = a;
  };
  consider(starts.front());
  if (best.size() == n) return best;
  consider(turan_independent_set(g));
  for (const auto& s : starts) {
    consider(peel(g, s, log_n, true));
    consider(peel(g, s, log_n, false));
  }
  if (best.empty()) {
    throw ConstructionError(
        "regularize: no candidate certified |A| >= n/(30 log2 n) and "
        "max degree <= 5 log2 n * min degree");
  }
  return best;
}

DistinctDegreeWitness f_lower_greedy(const Graph& g, std::size_t effort,
                                     std::uint64_t seed) {
  if (effort < 1) throw PreconditionError("f_lower_greedy: effort must be >= 1");
  const std::size_t n = g.order();
  if (n == 0) throw PreconditionError("f_lower_greedy: empty graph");
  const Rng root(seed);

  VertexSet best_host = VertexSet::full(n);
  std::size_t best_value = HostState(g, best_host).distinct();

  for (std::size_t it = 0; it < effort; ++it) {
    Rng rng = root.substream(it);
    VertexSet start(n);
    if (it == 0) {
      start = VertexSet::full(n);
    } else {
      for (Vertex v = 0; v < n; ++v)
        if (rng.uniform() < 0.5) start.insert(v);
      if (start.empty()) start.insert(static_cast<Vertex>(rng.below(n)));
    }
    HostState state(g, start);
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), Vertex{0});
    bool improved = true;
    for (int pass = 0; pass < 3 && improved; ++pass) {
      improved = false;
      for (std::size_t i = n; i > 1; --i) std::swap(order[i - 1], order[rng.below(i)]);
      for (Vertex v : order) {
        const std::size_t before = state.distinct();
        state.toggle(v);
        if (state.distinct() > before) {
          improved = true;
        } else {
          state.toggle(v);
        }
      }
    }
    if (state.distinct() > best_value) {
      best_value = state.distinct();
      best_host = state.host();
    }
  }
  if (best_host.empty()) best_host.insert(0);
  auto w = distinct_degree_witness(g, best_host, best_host);
  if (!verify_witness(g, w)) {
    throw ConstructionError("f_lower_greedy: witness failed verification");
  }
  return w;
}

}  // namespace ddeg
