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

#include "ddeg/partition.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <sstream>
#include <utility>

#include "ddeg/parallel.hpp"
#include "ddeg/rng.hpp"

namespace ddeg {

namespace {

double ln(double x) { return std::log(x); }

ClusterParams full_params(const Graph& g, const PartitionConfig& cfg) {
  return {cfg.m, cfg.lambda, VertexSet::full(g.order())};
}

std::size_t dyadic_floor(std::size_t x) { return std::size_t{1} << (std::bit_width(x) - 1); }

void check_config(const PartitionConfig& cfg) {
  if (cfg.k < 1) throw PreconditionError("partition: k must be positive");
  if (cfg.max_attempts < 1) throw PreconditionError("partition: max_attempts must be positive");
  if (!(cfg.m > 1) || !(cfg.lambda > 1)) {
    throw PreconditionError("partition: M and lambda must exceed 1");
  }
  if (!(cfg.alpha > 0 && cfg.alpha <= 1)) {
    throw PreconditionError("partition: alpha must lie in (0, 1]");
  }
  for (double r : {cfg.relax_floor, cfg.relax_a2, cfg.relax_a3, cfg.relax_ii, cfg.relax_v}) {
    if (!(r > 0)) throw PreconditionError("partition: relaxation factors must be positive");
  }
}

// Construction hypotheses on (n, k, M, lambda, alpha, |A|). In strict mode
// the first violation throws; in relaxed mode all are returned.
std::vector<std::string> hypothesis_violations(const Graph& g, const VertexSet& a,
                                               const PartitionConfig& cfg) {
  const double n = static_cast<double>(g.order());
  const double l = ln(n);
  std::vector<std::string> out;
  auto need = [&](bool ok, const std::string& what) {
    if (!ok) out.push_back(what);
  };
  const auto k = static_cast<double>(cfg.k);
  need(k >= l * l, "k >= log^2 n");
  need(k <= n / (l * l * l), "k <= n / log^3 n");
  need(cfg.m >= 2 && cfg.lambda >= 2, "M, lambda >= 2");
  need(cfg.alpha <= 1.0 / (cfg.lambda * std::pow(l, 5)), "alpha <= 1 / (lambda log^5 n)");
  need(8 * a.size() >= g.order(), "|A| >= n/8");
  return out;
}

struct Attempt {
  AttemptRecord record;
  VertexSet r;
  std::vector<Vertex> u;  // the derived set U in label order
};

}  // namespace

bool PartitionReport::exact_ok() const {
  return checks.size() == 5 && checks[0].ok && checks[2].ok && checks[3].ok;
}

bool PartitionReport::all_ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.ok; });
}

VertexSet eligible_set(const Graph& g, const PartitionConfig& cfg) {
  check_config(cfg);
  const std::size_t n = g.order();
  VertexSet out(n);
  if (n < 2) return out;
  const double floor_deg = cfg.relax_floor * cfg.m * ln(static_cast<double>(n)) *
                           ln(static_cast<double>(n));
  std::vector<Vertex> cand;
  for (Vertex v = 0; v < n; ++v) {
    const double d = static_cast<double>(g.degree(v));
    if (d >= 1 && d >= floor_deg && 2 * g.degree(v) <= n) cand.push_back(v);
  }
  const auto params = full_params(g, cfg);
  std::vector<char> keep(cand.size(), 0);
  parallel_for(cand.size(), [&](std::size_t i) {
    const auto view = theta_moment(g, cand[i], params);
    keep[i] = static_cast<double>(view.w_star.size()) <= cfg.alpha * static_cast<double>(n);
  });
  for (std::size_t i = 0; i < cand.size(); ++i)
    if (keep[i]) out.insert(cand[i]);
  return out;
}

PartitionResult run_partition(const Graph& g, const VertexSet& a, const PartitionConfig& cfg,
                              std::uint64_t seed) {
  check_config(cfg);
  const std::size_t n = g.order();
  if (a.universe() != n || a.empty()) {
    throw PreconditionError("run_partition: A must be a nonempty vertex subset");
  }
  if (!a.is_subset_of(eligible_set(g, cfg))) {
    throw PreconditionError("run_partition: A must lie inside the eligible set");
  }
  PartitionResult res;
  res.violations = hypothesis_violations(g, a, cfg);
  if (cfg.strict && !res.violations.empty()) {
    throw PreconditionError("run_partition: hypothesis violated: " + res.violations.front());
  }
  const double log_n = ln(static_cast<double>(n));

  // Cluster views of A, then pigeonhole into (dyadic |W_*|, moment) buckets.
  const auto members = a.members();
  const auto params = full_params(g, cfg);
  std::vector<ClusterView> views(members.size());
  parallel_for(members.size(),
               [&](std::size_t i) { views[i] = theta_moment(g, members[i], params); });
  std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> buckets;
  for (std::size_t i = 0; i < views.size(); ++i) {
    buckets[{dyadic_floor(views[i].w_star.size()), views[i].t_moment}].push_back(i);
  }
  // Map order is (L, T) ascending, so the first largest bucket wins ties.
  auto best = buckets.begin();
  for (auto it = buckets.begin(); it != buckets.end(); ++it)
    if (it->second.size() > best->second.size()) best = it;
  const std::size_t big_l = best->first.first;
  const std::size_t big_t = best->first.second;
  const std::vector<std::size_t>& b = best->second;
  if (static_cast<double>(b.size()) < static_cast<double>(a.size()) / (log_n * log_n)) {
    res.violations.push_back("|B| >= |A| / log^2 n");
  }
  VertexSet b_set(n);
  for (std::size_t i : b) b_set.insert(members[i]);

  const double p = std::min(32.0 * static_cast<double>(cfg.k) / static_cast<double>(b.size()),
                            1.0 / (4.0 * cfg.lambda * static_cast<double>(big_l)));
  const double p_prime = std::min(1.0, 4.0 * p / 3.0);
  const double pb = p * static_cast<double>(b.size());
  const double a2_cap = cfg.relax_a2 * log_n * log_n *
                        std::max(1.0, p * static_cast<double>(g.max_degree()));
  const double a3_threshold = cfg.relax_a3 * 32768.0 * log_n;
  const auto t_target = static_cast<std::size_t>(std::ceil(pb / 32.0));
  std::vector<std::size_t> view_of(n, views.size());
  for (std::size_t i = 0; i < members.size(); ++i) view_of[members[i]] = i;

  const Rng root(seed);
  for (std::size_t attempt = 0; attempt < cfg.max_attempts; ++attempt) {
    Rng rng = root.substream(attempt);
    AttemptRecord rec;
    rec.index = attempt;
    VertexSet r(n), u_prime(n);
    for (Vertex v = 0; v < n; ++v)
      if (rng.uniform() < 0.75) r.insert(v);
    r.for_each([&](Vertex v) {
      if (rng.uniform() < p_prime) u_prime.insert(v);
    });
    const VertexSet s = VertexSet::full(n) - r;

    std::vector<Vertex> u;
    (b_set & u_prime).for_each([&](Vertex v) {
      const auto& view = views[view_of[v]];
      if ((view.w_plus & u_prime).size() == 1 &&
          2 * view.w_star.intersection_size(r) >= view.w_star.size()) {
        u.push_back(v);
      }
    });
    rec.u_size = u.size();
    const double us = static_cast<double>(u.size());
    rec.a1 = us >= pb / 32.0 && us <= 2.0 * pb;

    const VertexSet u_set = VertexSet::of(n, u);
    rec.a2 = true;
    for (Vertex v = 0; v < n && rec.a2; ++v) {
      rec.a2 = static_cast<double>(g.degree_in(v, u_set)) <= a2_cap;
    }

    auto concentrated = [&](Vertex x, Vertex y) {
      const double full = static_cast<double>(diversity(g, x, y));
      if (full < a3_threshold) return true;
      const double part = static_cast<double>(diversity(g, x, y, s));
      return std::abs(part - full / 4.0) <= 0.05 * full;
    };
    rec.a3 = true;
    for (std::size_t i = 0; i < u.size() && rec.a3; ++i) {
      for (std::size_t j = i + 1; j < u.size() && rec.a3; ++j) rec.a3 = concentrated(u[i], u[j]);
      (views[view_of[u[i]]].w_star & r).for_each([&](Vertex w) {
        if (rec.a3 && w != u[i]) rec.a3 = concentrated(u[i], w);
      });
    }

    if (!(rec.a1 && rec.a2 && rec.a3)) {
      res.event_log.push_back(rec);
      continue;
    }

    PartitionResult cand = res;
    cand.t = std::max<std::size_t>(1, t_target);
    cand.u_list.assign(u.begin(), u.begin() + static_cast<std::ptrdiff_t>(cand.t));
    cand.s = s;
    for (Vertex ui : cand.u_list) {
      cand.v_sets.push_back(views[view_of[ui]].w_star & r);
      cand.d_list.push_back(0.3 * std::ldexp(1.0, static_cast<int>(2 * big_t)) *
                            static_cast<double>(g.degree(ui)) / cfg.m);
    }
    const VertexSet final_u = VertexSet::of(n, cand.u_list);
    std::size_t worst = 0;
    s.for_each([&](Vertex v) { worst = std::max(worst, g.degree_in(v, final_u)); });
    cand.gamma = static_cast<double>(worst) / static_cast<double>(cand.t);
    cand.bucket_l = big_l;
    cand.bucket_t = big_t;
    cand.bucket_size = b.size();
    cand.p = p;

    rec.verified = verify_partition(g, cand, cfg).exact_ok();
    res.event_log.push_back(rec);
    if (!rec.verified) {
      if (cfg.strict) {
        throw ConstructionError(
            "run_partition: construction bug, events held but conclusions (i)/(iii)/(iv) failed");
      }
      continue;
    }
    cand.event_log = res.event_log;
    cand.attempts_used = attempt + 1;
    return cand;
  }
  std::ostringstream msg;
  msg << "run_partition: no attempt satisfied A1, A2 and A3 within " << cfg.max_attempts
      << " attempts";
  throw AttemptsExhausted(msg.str(), res.event_log);
}

PartitionReport verify_partition(const Graph& g, const PartitionResult& res,
                                 const PartitionConfig& cfg) {
  const std::size_t n = g.order();
  const double log_n = ln(static_cast<double>(std::max<std::size_t>(n, 2)));
  PartitionReport rep;
  const std::size_t t = res.u_list.size();
  const bool shape_ok = res.v_sets.size() == t && res.d_list.size() == t && t == res.t &&
                        res.s.universe() == n;

  // (i): u_i in V_i, |V_i| <= alpha n, V_1..V_t and S pairwise disjoint.
  {
    ConclusionCheck c{"(i)", shape_ok, 0, cfg.alpha * static_cast<double>(n), ""};
    VertexSet seen = shape_ok ? res.s : VertexSet(n);
    for (std::size_t i = 0; c.ok && i < t; ++i) {
      const auto& vi = res.v_sets[i];
      c.measured = std::max(c.measured, static_cast<double>(vi.size()));
      if (vi.universe() != n || !vi.contains(res.u_list[i])) {
        c.ok = false;
        c.detail = "u_" + std::to_string(i) + " not in V_" + std::to_string(i);
      } else if (static_cast<double>(vi.size()) > c.bound) {
        c.ok = false;
        c.detail = "|V_" + std::to_string(i) + "| exceeds alpha n";
      } else if (seen.intersects(vi)) {
        c.ok = false;
        c.detail = "V_" + std::to_string(i) + " meets an earlier set or S";
      } else {
        seen = seen | vi;
      }
    }
    rep.checks.push_back(c);
  }

  // (ii): t <= k, and if t < k the V_i cover enough vertices.
  {
    ConclusionCheck c{"(ii)", t <= cfg.k, 0, 0, ""};
    double cover = 0;
    for (const auto& vi : res.v_sets) cover += static_cast<double>(vi.size());
    c.measured = cover;
    c.bound = cfg.relax_ii * static_cast<double>(n) / (1000.0 * cfg.lambda * log_n * log_n);
    if (t < cfg.k) c.ok = c.ok && cover >= c.bound;
    if (t > cfg.k) c.detail = "t exceeds k";
    rep.checks.push_back(c);
  }

  // (iii): div^S(u_i, v) <= d_i for v in V_i.
  {
    ConclusionCheck c{"(iii)", shape_ok, 0, 0, ""};
    for (std::size_t i = 0; c.ok && i < t; ++i) {
      res.v_sets[i].for_each([&](Vertex v) {
        if (!c.ok || v == res.u_list[i]) return;
        const auto div = static_cast<double>(diversity(g, res.u_list[i], v, res.s));
        c.measured = std::max(c.measured, div - res.d_list[i]);
        if (div > res.d_list[i]) {
          c.ok = false;
          c.detail = "vertex " + std::to_string(v) + " of V_" + std::to_string(i);
        }
      });
    }
    rep.checks.push_back(c);
  }

  // (iv): div^S(u_i, u_j) >= max(d(u_i), d(u_j)) / (5M) + d_i + d_j.
  {
    ConclusionCheck c{"(iv)", shape_ok, 0, 0, ""};
    double worst_slack = 0;
    bool first = true;
    for (std::size_t i = 0; c.ok && i < t; ++i) {
      for (std::size_t j = i + 1; c.ok && j < t; ++j) {
        const Vertex ui = res.u_list[i], uj = res.u_list[j];
        const auto div = static_cast<double>(diversity(g, ui, uj, res.s));
        const double need =
            static_cast<double>(std::max(g.degree(ui), g.degree(uj))) / (5.0 * cfg.m) +
            res.d_list[i] + res.d_list[j];
        if (first || div - need < worst_slack) {
          worst_slack = div - need;
          c.measured = div;
          c.bound = need;
          first = false;
        }
        if (div < need) {
          c.ok = false;
          c.detail = "pair (" + std::to_string(ui) + ", " + std::to_string(uj) + ")";
        }
      }
    }
    rep.checks.push_back(c);
  }

  // (v): gamma-balance, with gamma recomputed from scratch.
  {
    ConclusionCheck c{"(v)", shape_ok && t > 0, 0, 0, ""};
    if (c.ok) {
      VertexSet u(n);
      for (Vertex x : res.u_list) u.insert(x);
      std::size_t worst = 0;
      res.s.for_each([&](Vertex v) {
        std::size_t cnt = 0;
        for (Vertex x : res.u_list) cnt += g.adjacent(v, x) ? 1 : 0;
        worst = std::max(worst, cnt);
      });
      rep.gamma_recomputed = static_cast<double>(worst) / static_cast<double>(t);
      c.measured = rep.gamma_recomputed;
      c.bound = cfg.relax_v * std::pow(log_n, 5) *
                std::max(static_cast<double>(g.max_degree()) / static_cast<double>(n),
                         1.0 / static_cast<double>(t));
      c.ok = std::abs(rep.gamma_recomputed - res.gamma) <= 1e-12 && c.measured <= c.bound;
      if (std::abs(rep.gamma_recomputed - res.gamma) > 1e-12) c.detail = "stored gamma differs";
    }
    rep.checks.push_back(c);
  }
  return rep;
}

}  // namespace ddeg
