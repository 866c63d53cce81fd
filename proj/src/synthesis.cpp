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


#include "ddeg/synthesis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>

#include "ddeg/clusters.hpp"
#include "ddeg/error.hpp"
#include "ddeg/oracles.hpp"
#include "ddeg/partition.hpp"
#include "ddeg/rng.hpp"

namespace ddeg {

SynthesisBudget SynthesisBudget::for_k(double k) {
  if (!(k >= 1)) throw PreconditionError("synthesis: k must be at least 1");
  SynthesisBudget b;
  b.k = k;
  const double lk = std::log2(k);
  b.lambda = std::max(1.5, std::exp2(std::pow(lk, 4.0 / 9.0)));
  b.t = std::exp2(std::pow(lk, 5.0 / 9.0));
  b.m = std::max(1.5, std::exp2(std::pow(lk, 2.0 / 3.0)));
  return b;
}

double SynthesisBudget::g1(double x) const {
  const double l = std::max(0.0, std::log(x));
  return c1 * std::exp(c2 * std::cbrt(l * l));
}

double SynthesisBudget::g1_prime(double x) const {
  const double l = std::log(x);
  if (!(l > 0)) return std::numeric_limits<double>::infinity();
  return 2.0 * c1 * c2 / 3.0 * std::exp(c2 * std::cbrt(l * l)) / (x * std::cbrt(l));
}

double SynthesisBudget::g2(double x) const {
  const double l = std::max(1.0, std::log2(x));
  return c * l * l;
}

double SynthesisBudget::x0() const { return std::exp(c2 * c2 * c2); }

double SynthesisBudget::k_of(double v, double n, double k) {
  if (std::sqrt(v) >= n * n / (k * k * k)) return k * std::cbrt((v / n) * (v / n));
  return v * k * k * k / (n * n);
}

namespace {

ControlledSet lift(const ControlledSet& cs, std::span<const Vertex> labels,
                   std::size_t universe) {
  ControlledSet out;
  out.u_set = lift_set(cs.u_set, labels, universe);
  out.spec = lift_spec(cs.spec, labels, universe);
  out.s = lift_set(cs.s, labels, universe);
  out.alpha = cs.alpha;
  out.half_width_sum = cs.half_width_sum;
  out.max_pair = cs.max_pair;
  out.provenance = cs.provenance;
  return out;
}

std::uint64_t fingerprint(const Graph& g) {
  std::uint64_t h = splitmix64(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    for (std::uint64_t w : g.row(v)) h = splitmix64(h ^ w);
  }
  return h;
}

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(4);
  os << x;
  return os.str();
}

class Synthesizer {
 public:
  Synthesizer(const SynthesisBudget& b, std::uint64_t seed) : b_(b), seed_(seed) {}

  ControlledSet solve(const Graph& h, double kk, std::size_t depth, const std::string& path);

  std::vector<std::string> trace;

 private:
  struct Strategy {
    std::vector<Vertex> u_list;
    std::vector<VertexSet> v_sets;
    VertexSet s;
    double beta_inv = 1;
  };

  void log(const std::string& path, const std::string& msg) {
    trace.push_back(path + ": " + msg);
  }
  std::uint64_t node_seed(std::uint64_t fp, double kk, std::size_t depth) const {
    return derive_seed(derive_seed(seed_, fp), static_cast<std::uint64_t>(kk * 1024) ^ depth);
  }
  bool valid(const ControlledSet& cs) const {
    const double u = static_cast<double>(cs.u_set.size());
    if (u < 2) return true;
    return cs.alpha * u <= u * b_.g1(u) + cs.half_width_sum;
  }
  bool better(const ControlledSet& a, const ControlledSet& b) const {
    const bool va = valid(a), vb = valid(b);
    if (va != vb) return va;
    return a.u_set.size() > b.u_set.size();
  }

  ControlledSet base(const Graph& h, std::uint64_t seed, const std::string& path);
  ControlledSet o2(const Graph& h, double kk, std::uint64_t seed, const std::string& path);
  ControlledSet child(const Graph& h, const VertexSet& v, double kk, double n, std::size_t depth,
                      std::uint64_t seed, const std::string& path);
  std::optional<ControlledSet> cases(const Graph& h, double kk, std::size_t depth,
                                     std::uint64_t seed, const std::string& path);
  ControlledSet case1(const Graph& h, Vertex v0, const ClusterView& view, double kk,
                      std::size_t depth, std::uint64_t seed, const std::string& path);
  ControlledSet run_strategy(const Graph& h, const Strategy& st, double kk, std::size_t depth,
                             std::uint64_t seed, const std::string& path);
  ControlledSet merge(const Graph& h, std::vector<ControlledSet> kids,
                      const DistributionSpec& cross, double kk, std::uint64_t seed,
                      const std::string& path);
  PartitionConfig partition_config(double kk, double alpha) const;

  const SynthesisBudget& b_;
  std::uint64_t seed_;
  std::map<std::tuple<std::uint64_t, std::size_t, double, std::size_t>, ControlledSet> memo_;
};

ControlledSet Synthesizer::base(const Graph& h, std::uint64_t seed, const std::string& path) {
  const auto w = f_exact(h);
  ControlledSet cs;
  cs.u_set = w.marked;
  cs.spec = DistributionSpec::trivial(VertexSet::full(h.order()));
  cs.s = VertexSet::full(h.order());
  cs.provenance = "base:f_exact";
  measure(h, cs, b_.n_samples, seed);
  log(path, "base n=" + std::to_string(h.order()) + " f=" + std::to_string(w.value));
  return cs;
}

ControlledSet Synthesizer::o2(const Graph& h, double kk, std::uint64_t seed,
                              const std::string& path) {
  const std::size_t n = h.order();
  if (n <= b_.base_limit) return base(h, seed, path);
  const double density = h.average_degree() / static_cast<double>(n - 1);
  const double q = std::min(density, 1.0 - density);
  const double floor = std::max(1.0, static_cast<double>(n) * q / 4.0);
  const auto size = static_cast<std::size_t>(std::max(2.0, std::ceil(kk)));
  PressureInstance inst = greedy_pressure_instance(h, size, floor, derive_seed(seed, 11));
  ControlledSet cs;
  if (inst.u_set.size() >= 2) {
    try {
      cs = pressure_pipeline(h, inst, b_.n_samples, derive_seed(seed, 12)).set;
      cs.provenance = "o2:pressure";
    } catch (const PreconditionError& e) {
      log(path, std::string("o2 pressure rejected: ") + e.what());
    }
  }
  if (cs.u_set.universe() == 0) {
    cs.u_set = VertexSet(n);
    cs.u_set.insert(0);
    cs.spec = DistributionSpec::trivial(VertexSet::full(n));
    cs.s = VertexSet::full(n);
    cs.provenance = "o2:singleton";
  }
  log(path, "o2 n=" + std::to_string(n) + " k=" + fmt(kk) + " |U|=" +
                std::to_string(cs.u_set.size()) + " alpha=" + fmt(cs.alpha));
  return cs;
}

ControlledSet Synthesizer::child(const Graph& h, const VertexSet& v, double kk, double n,
                                 std::size_t depth, std::uint64_t seed,
                                 const std::string& path) {
  const auto sub = induced(h, v);
  const double size = static_cast<double>(v.size());
  const double threshold = n * n * n * n / (kk * kk * kk * kk * kk * kk);
  const double k_child = SynthesisBudget::k_of(size, n, kk);
  ControlledSet cs;
  if (size >= threshold) {
    cs = solve(sub.graph, std::max(1.0, k_child), depth + 1, path);
  } else {
    log(path, "O2 branch |V|=" + std::to_string(v.size()));
    cs = o2(sub.graph, std::max(1.0, k_child), derive_seed(seed, 13), path);
  }
  return lift(cs, sub.labels, h.order());
}

PartitionConfig Synthesizer::partition_config(double kk, double alpha) const {
  PartitionConfig cfg;
  cfg.k = static_cast<std::size_t>(std::ceil(kk));
  cfg.m = b_.m;
  cfg.lambda = b_.lambda;
  cfg.alpha = std::clamp(alpha, 1e-9, 1.0);
  cfg.max_attempts = b_.partition_attempts;
  cfg.strict = false;
  cfg.relax_floor = b_.relax_floor;
  cfg.relax_a2 = b_.relax_a2;
  cfg.relax_a3 = b_.relax_a3;
  return cfg;
}

ControlledSet Synthesizer::merge(const Graph& h, std::vector<ControlledSet> kids,
                                 const DistributionSpec& cross, double kk, std::uint64_t seed,
                                 const std::string& path) {
  MergeSchedule sched;
  sched.f = [this](double x) { return b_.g1(x); };
  sched.f_prime = [this](double x) { return b_.g1_prime(x); };
  sched.m0 = b_.x0();
  sched.m = kk / b_.g1(kk);
  sched.m_big = 2 * kk;
  const auto rep = merge_controlled(h, kids, cross, sched, b_.n_samples, seed);
  std::ostringstream os;
  os << "merge inputs=" << kids.size() << " used=" << rep.used.size() << " |U|="
     << rep.set.u_set.size() << " alpha=" << fmt(rep.set.alpha)
     << " bound_ok=" << (rep.bound_ok ? 1 : 0) << " violations=" << rep.violations.size();
  log(path, os.str());
  for (const auto& v : rep.violations) log(path, "  " + v);
  return rep.set;
}

ControlledSet Synthesizer::case1(const Graph& h, Vertex v0, const ClusterView& view, double kk,
                                 std::size_t depth, std::uint64_t seed,
                                 const std::string& path) {
  const std::size_t n = h.order();
  const auto s0_size = static_cast<std::size_t>(std::ceil(4 * kk));
  VertexSet s0(n);
  for (Vertex w : view.w_star.members()) {
    if (s0.size() >= s0_size) break;
    s0.insert(w);
  }
  const VertexSet nb = h.neighbours(v0);
  VertexSet y(n), ybar(n);
  for (Vertex v = 0; v < n; ++v) {
    const double ds = static_cast<double>(h.degree_in(v, s0));
    if (nb.contains(v)) {
      if (ds <= 3 * kk) y.insert(v);
    } else if (ds >= kk) {
      ybar.insert(v);
    }
  }
  const VertexSet v1 = nb - (y | s0);
  const VertexSet v2 = VertexSet::full(n) - (nb | ybar | s0);
  std::ostringstream os;
  os << "case1 v0=" << v0 << " t=" << view.t_moment << " |S0|=" << s0.size() << " |Y|="
     << y.size() << " |Ybar|=" << ybar.size() << " |V1|=" << v1.size() << " |V2|=" << v2.size()
     << " control=S0";
  log(path, os.str());
  std::vector<ControlledSet> kids;
  const VertexSet* parts[] = {&v1, &v2};
  for (std::size_t i = 0; i < 2; ++i) {
    if (parts[i]->empty()) continue;
    kids.push_back(child(h, *parts[i], kk, static_cast<double>(n), depth,
                         derive_seed(seed, 20 + i), path + "/" + std::to_string(i + 1)));
  }
  if (kids.empty()) throw ConstructionError("case1: both sides are empty");
  auto cs = merge(h, std::move(kids), DistributionSpec::uniform_constant(s0), kk,
                  derive_seed(seed, 22), path);
  cs.provenance = "case1";
  return cs;
}

ControlledSet Synthesizer::run_strategy(const Graph& h, const Strategy& st, double kk,
                                        std::size_t depth, std::uint64_t seed,
                                        const std::string& path) {
  const std::size_t n = h.order();
  const double beta = std::min(kMaxBeta, 1.0 / st.beta_inv);
  const auto cross = DistributionSpec::blended(st.u_list, st.s, beta);
  const double t = static_cast<double>(st.u_list.size());
  if (t >= kk / (b_.lambda * b_.lambda * b_.lambda)) {
    ControlledSet cs;
    cs.u_set = VertexSet::of(n, st.u_list);
    cs.spec = complete_spec(cross);
    cs.s = VertexSet::full(n);
    cs.provenance = "direct";
    measure(h, cs, b_.n_samples, derive_seed(seed, 30));
    log(path, "(a) t=" + std::to_string(st.u_list.size()) + " beta=" + fmt(beta) +
                  " alpha=" + fmt(cs.alpha));
    return cs;
  }
  const double nn = static_cast<double>(n);
  const double threshold = nn * nn * nn * nn / std::pow(kk, 6);
  std::vector<std::size_t> groups[2];
  double mass[2] = {0, 0};
  for (std::size_t i = 0; i < st.v_sets.size(); ++i) {
    const double sz = static_cast<double>(st.v_sets[i].size());
    const int j = sz >= threshold ? 0 : 1;
    groups[j].push_back(i);
    mass[j] += sz;
  }
  const int j = mass[0] >= mass[1] ? 0 : 1;
  auto& pick = groups[j];
  std::stable_sort(pick.begin(), pick.end(), [&](std::size_t a, std::size_t c) {
    return st.v_sets[a].size() > st.v_sets[c].size();
  });
  if (pick.size() > b_.max_children) pick.resize(b_.max_children);
  log(path, "(b) t=" + std::to_string(st.u_list.size()) + " group=I" + std::to_string(j + 1) +
                " children=" + std::to_string(pick.size()));
  std::vector<ControlledSet> kids;
  for (std::size_t i : pick) {
    if (st.v_sets[i].empty()) continue;
    kids.push_back(child(h, st.v_sets[i], kk, nn, depth, derive_seed(seed, 40 + i),
                         path + "/V" + std::to_string(i)));
  }
  if (kids.empty()) throw ConstructionError("strategy: no nonempty V_i");
  return merge(h, std::move(kids), cross, kk, derive_seed(seed, 31), path);
}

std::optional<ControlledSet> Synthesizer::cases(const Graph& h, double kk, std::size_t depth,
                                                std::uint64_t seed, const std::string& path) {
  const std::size_t n = h.order();
  const double nn = static_cast<double>(n);
  ClusterParams params;
  params.m = b_.m;
  params.lambda = b_.lambda;
  params.s = VertexSet::full(n);
  const auto views = theta_moments(h, params);
  const double lo = std::pow(kk, 1.5) / b_.t;
  VertexSet a1(n), a2(n), a3(n);
  for (Vertex v = 0; v < n; ++v) {
    const double d = static_cast<double>(h.degree(v));
    if (2 * h.degree(v) >= n) continue;
    if (d < lo) {
      a3.insert(v);
    } else if (d > lo) {
      (static_cast<double>(views[v].w_star.size()) >= 4 * kk ? a1 : a2).insert(v);
    }
  }
  log(path, "n=" + std::to_string(n) + " k=" + fmt(kk) + " |A1|=" + std::to_string(a1.size()) +
                " |A2|=" + std::to_string(a2.size()) + " |A3|=" + std::to_string(a3.size()));

  if (!a1.empty()) {
    try {
      const Vertex v0 = a1.first();
      return case1(h, v0, views[v0], kk, depth, derive_seed(seed, 1), path);
    } catch (const std::exception& e) {
      log(path, std::string("case1 failed: ") + e.what());
    }
  }
  if (4 * a2.size() >= n) {
    try {
      const auto cfg = partition_config(kk, 4 * kk / nn);
      const VertexSet a = a2 & eligible_set(h, cfg);
      log(path, "case2 eligible=" + std::to_string(a.size()));
      if (a.empty()) throw ConstructionError("no eligible vertex in A2");
      const auto res = run_partition(h, a, cfg, derive_seed(seed, 2));
      log(path, "case2 partition t=" + std::to_string(res.t) + " attempts=" +
                    std::to_string(res.attempts_used));
      Strategy st{res.u_list, res.v_sets, res.s, 10 * std::sqrt(kk * std::log(std::max(kk, 2.0)))};
      auto cs = run_strategy(h, st, kk, depth, derive_seed(seed, 3), path);
      cs.provenance = "case2:" + cs.provenance;
      return cs;
    } catch (const std::exception& e) {
      log(path, std::string("case2 failed: ") + e.what());
    }
  }
  if (4 * a3.size() >= n && a3.size() >= 2) {
    try {
      const auto sub = induced(h, a3);
      const VertexSet reg = regularize(sub.graph);
      const auto inner = induced(sub.graph, reg);
      std::vector<Vertex> labels(inner.labels.size());
      for (std::size_t i = 0; i < labels.size(); ++i) labels[i] = sub.labels[inner.labels[i]];
      const double m = static_cast<double>(reg.size());
      const auto cfg = partition_config(kk, 2 * std::pow(kk, 1.5) / (b_.t * m));
      const VertexSet a = eligible_set(inner.graph, cfg);
      log(path, "case3 |H|=" + std::to_string(reg.size()) + " eligible=" +
                    std::to_string(a.size()));
      if (a.empty()) throw ConstructionError("no eligible vertex in H");
      const auto res = run_partition(inner.graph, a, cfg, derive_seed(seed, 4));
      Strategy st;
      for (Vertex u : res.u_list) st.u_list.push_back(labels[u]);
      for (const auto& v : res.v_sets) st.v_sets.push_back(lift_set(v, labels, n));
      st.s = lift_set(res.s, labels, n);
      const double lk = std::log(std::max(kk, 2.0));
      st.beta_inv = 10 * std::sqrt(std::max(res.gamma, 1e-12) *
                                   static_cast<double>(res.u_list.size()) * lk * lk * lk * lk);
      log(path, "case3 partition t=" + std::to_string(res.t) + " gamma=" + fmt(res.gamma));
      auto cs = run_strategy(h, st, kk, depth, derive_seed(seed, 5), path);
      cs.provenance = "case3:" + cs.provenance;
      return cs;
    } catch (const std::exception& e) {
      log(path, std::string("case3 failed: ") + e.what());
    }
  }
  return std::nullopt;
}

ControlledSet Synthesizer::solve(const Graph& h, double kk, std::size_t depth,
                                 const std::string& path) {
  const std::size_t n = h.order();
  const std::uint64_t fp = fingerprint(h);
  const std::uint64_t seed = node_seed(fp, kk, depth);
  if (n <= b_.base_limit) return base(h, seed, path);
  const auto key = std::make_tuple(fp, n, kk, depth);
  if (n <= b_.memo_limit) {
    if (auto it = memo_.find(key); it != memo_.end()) {
      log(path, "memo hit n=" + std::to_string(n));
      return it->second;
    }
  }
  ControlledSet best;
  if (depth >= b_.depth_cap) {
    log(path, "depth cap");
    best = o2(h, kk, derive_seed(seed, 7), path);
  } else {
    std::size_t below = 0;
    for (Vertex v = 0; v < n; ++v) below += 2 * h.degree(v) < n ? 1 : 0;
    const bool swap = 2 * below < n;
    if (swap) log(path, "complement");
    const Graph work = swap ? complement(h) : Graph();
    const Graph& g = swap ? work : h;
    auto found = cases(g, kk, depth, seed, path);
    ControlledSet fallback = o2(g, kk, derive_seed(seed, 7), path);
    if (found && better(*found, fallback)) {
      best = std::move(*found);
      log(path, "keep " + best.provenance);
    } else {
      best = std::move(fallback);
      log(path, found ? "keep o2 over " + found->provenance : "no case applied, keep o2");
    }
    if (swap) {
      measure(h, best, b_.n_samples, derive_seed(seed, 8));
      best.provenance += "+complement";
    }
  }
  if (n <= b_.memo_limit) memo_.emplace(key, best);
  return best;
}

}  // namespace

SynthesisResult synthesize(const Graph& g, const SynthesisBudget& budget, std::uint64_t seed) {
  const std::size_t n = g.order();
  if (n == 0) throw PreconditionError("synthesize: empty graph");
  const double k = budget.k;
  if (static_cast<double>(n) > k * k) {
    throw PreconditionError("synthesize: need n <= k^2");
  }
  if (budget.check_hom && n <= kHomExactLimit) {
    const auto hom = hom_exact(g);
    if (static_cast<double>(hom.value) > static_cast<double>(n) * n / (k * k * k)) {
      throw PreconditionError("synthesize: hom(G) = " + std::to_string(hom.value) +
                              " exceeds n^2/k^3");
    }
  }
  Synthesizer s(budget, seed);
  SynthesisResult out;
  out.set = s.solve(g, k, 0, "root");
  out.trace = std::move(s.trace);
  return out;
}

}  // namespace ddeg
