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


#include "ddeg/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>

#include "json.hpp"

#include "ddeg/error.hpp"
#include "ddeg/extractor.hpp"
#include "ddeg/graph.hpp"
#include "ddeg/oracles.hpp"
#include "ddeg/parallel.hpp"
#include "ddeg/rng.hpp"

#ifndef DDEG_COMMIT
#define DDEG_COMMIT "unknown"
#endif

namespace ddeg {

namespace {

std::string num(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

void require(bool ok, const char* what) {
  if (!ok) throw PreconditionError(what);
}

}  // namespace

const char* build_commit() { return DDEG_COMMIT; }

const char* tail_kind_name(TailKind k) {
  switch (k) {
    case TailKind::kChernoffLower: return "chernoff_lower";
    case TailKind::kChernoffUpper: return "chernoff_upper";
    case TailKind::kHoeffding: return "hoeffding";
    case TailKind::kBinomial: return "binomial";
    case TailKind::kQuarter: return "quarter";
  }
  return "unknown";
}

TailKind tail_kind_from(const std::string& name) {
  for (TailKind k : {TailKind::kChernoffLower, TailKind::kChernoffUpper, TailKind::kHoeffding,
                     TailKind::kBinomial, TailKind::kQuarter}) {
    if (name == tail_kind_name(k)) return k;
  }
  throw PreconditionError("tail_bounds: unknown kind '" + name + "'");
}

double tail_bound(TailKind kind, const TailParams& q) {
  switch (kind) {
    case TailKind::kChernoffLower:
    case TailKind::kChernoffUpper: {
      require(q.delta >= 0 && q.delta <= 1, "tail_bounds: delta must lie in [0, 1]");
      require(q.mu >= 0, "tail_bounds: mu must be non-negative");
      const double div = kind == TailKind::kChernoffLower ? 2.0 : 4.0;
      return std::exp(-q.delta * q.delta * q.mu / div);
    }
    case TailKind::kHoeffding: {
      require(q.t > 0, "tail_bounds: t must be positive");
      require(!q.ranges.empty(), "tail_bounds: ranges must be nonempty");
      double sum = 0;
      for (double r : q.ranges) {
        require(r >= 0, "tail_bounds: ranges must be non-negative");
        sum += r * r;
      }
      require(sum > 0, "tail_bounds: ranges must not all vanish");
      return 2.0 * std::exp(-2.0 * q.t * q.t / sum);
    }
    case TailKind::kBinomial: {
      require(q.p >= 0 && q.p <= 1, "tail_bounds: p must lie in [0, 1]");
      require(q.l > 0, "tail_bounds: L must be positive");
      const double np = static_cast<double>(q.n) * q.p;
      if (np == 0) return 0;
      return std::exp(q.l * std::log(std::exp(1.0) * np / q.l));
    }
    case TailKind::kQuarter:
      require(q.n >= 1, "tail_bounds: n must be positive");
      require(q.p > 1.0 / static_cast<double>(q.n) && q.p < 1,
              "tail_bounds: p must lie in (1/n, 1)");
      return 0.25;
  }
  throw PreconditionError("tail_bounds: unknown kind");
}

double binomial_upper_tail(std::size_t n, double p, std::size_t k) {
  require(p >= 0 && p <= 1, "binomial: p must lie in [0, 1]");
  if (k == 0) return 1;
  if (k > n) return 0;
  if (p == 0) return 0;
  if (p == 1) return 1;
  const double nn = static_cast<double>(n);
  const double lp = std::log(p), lq = std::log1p(-p);
  double sum = 0;
  for (std::size_t j = k; j <= n; ++j) {
    const double jj = static_cast<double>(j);
    sum += std::exp(std::lgamma(nn + 1) - std::lgamma(jj + 1) - std::lgamma(nn - jj + 1) +
                    jj * lp + (nn - jj) * lq);
  }
  return std::min(1.0, sum);
}

bool quarter_bound_holds(std::size_t n, double p) {
  // ceil(np) with a guard against products like 100 * 0.3 = 30.000000000000004.
  const double np = static_cast<double>(n) * p;
  const auto k = static_cast<std::size_t>(std::ceil(np - 1e-9 * std::max(1.0, np)));
  return binomial_upper_tail(n, p, k) > 0.25;
}

LinearFit least_squares(const std::vector<double>& xs, const std::vector<double>& ys) {
  require(xs.size() == ys.size(), "fit: x and y sizes differ");
  require(xs.size() >= 4, "fit: at least 4 points are required");
  const double n = static_cast<double>(xs.size());
  const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
  const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / n;
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  require(sxx > 0, "fit: x values must not all coincide");
  LinearFit f;
  f.points = xs.size();
  f.slope = sxy / sxx;
  f.intercept = my - f.slope * mx;
  double ssr = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double r = ys[i] - (f.intercept + f.slope * xs[i]);
    ssr += r * r;
  }
  const double s2 = ssr / (n - 2);
  f.slope_se = std::sqrt(s2 / sxx);
  f.intercept_se = std::sqrt(s2 * (1.0 / n + mx * mx / sxx));
  return f;
}

std::string ExperimentPlan::budget_label() const {
  return "samples=" + std::to_string(n_samples) + ";trials=" + std::to_string(trials) +
         ";c=" + num(c);
}

namespace {

struct GridPoint {
  std::size_t n;
  double p;
  std::uint64_t seed;
};

std::vector<GridPoint> grid(const ExperimentPlan& plan, const std::vector<std::size_t>& ns,
                            const std::vector<double>& ps) {
  require(!plan.seeds.empty(), "experiment: no seeds");
  std::vector<GridPoint> out;
  for (std::size_t n : ns) {
    require(n >= 1 && n <= plan.max_n, "experiment: n outside the resource cap");
    for (double p : ps) {
      require(p >= 0 && p <= 1, "experiment: p must lie in [0, 1]");
      for (std::uint64_t s : plan.seeds) out.push_back({n, p, s});
    }
  }
  return out;
}

std::vector<Measurement> flatten(std::vector<std::vector<Measurement>>&& parts) {
  std::vector<Measurement> rows;
  for (auto& part : parts) {
    for (auto& m : part) rows.push_back(std::move(m));
  }
  return rows;
}

Measurement row(const GridPoint& pt, std::string metric, double value, double hw,
                const std::string& budget) {
  return Measurement{pt.n, pt.p, pt.seed, std::move(metric), value, hw, budget};
}

}  // namespace

ScalingReport hom_scaling(const ExperimentPlan& plan) {
  ScalingReport rep;
  rep.name = "hom_scaling";
  const auto pts = grid(plan, plan.ns, plan.ps);
  const std::string budget = "hom_exact_max=" + std::to_string(plan.hom_exact_max);
  std::vector<std::vector<Measurement>> parts(pts.size());
  std::vector<char> ok(pts.size(), 1);
  parallel_for(pts.size(), [&](std::size_t i) {
    const auto& pt = pts[i];
    const Graph g = generate_gnp(pt.n, pt.p, pt.seed);
    if (pt.n <= plan.hom_exact_max) {
      const double h = static_cast<double>(hom_exact(g).value);
      parts[i].push_back(row(pt, "hom", h, 0, budget));
      const double nn = static_cast<double>(pt.n);
      if (pt.p == 0 || pt.p == 1) {
        ok[i] = h == nn;
      } else {
        const double lo = std::log2(nn) / 2, hi = std::log2(nn) / pt.p + 2;
        ok[i] = h >= lo && h <= hi;
      }
    } else {
      const auto a = turan_independent_set(g).size();
      const auto b = turan_independent_set(complement(g)).size();
      parts[i].push_back(row(pt, "hom_lower", static_cast<double>(std::max(a, b)), 0, budget));
    }
  });
  rep.rows = flatten(std::move(parts));
  rep.pass = std::all_of(ok.begin(), ok.end(), [](char c) { return c != 0; });
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (!ok[i]) {
      rep.notes.push_back("hom outside window at n=" + std::to_string(pts[i].n) + " p=" +
                          num(pts[i].p) + " seed=" + std::to_string(pts[i].seed));
    }
  }
  return rep;
}

ScalingReport f_scaling(const ExperimentPlan& plan, ScalingAxis axis) {
  ScalingReport rep;
  rep.name = axis == ScalingAxis::kN ? "f_scaling_n" : "f_scaling_p";
  rep.window_lo = plan.slope_lo;
  rep.window_hi = plan.slope_hi;
  require(!plan.ns.empty() && !plan.ps.empty(), "f_scaling: empty grid");
  const std::vector<std::size_t> ns =
      axis == ScalingAxis::kN ? plan.ns : std::vector<std::size_t>{plan.ns.front()};
  const std::vector<double> ps =
      axis == ScalingAxis::kN ? std::vector<double>{plan.ps.front()} : plan.ps;
  const auto pts = grid(plan, ns, ps);
  const std::string budget = plan.budget_label();
  std::vector<std::vector<Measurement>> parts(pts.size());
  std::vector<double> f_hat(pts.size());
  std::vector<char> sane(pts.size(), 1);
  parallel_for(pts.size(), [&](std::size_t i) {
    const auto& pt = pts[i];
    require(pt.p > 0, "f_scaling: p must be positive");
    const Graph g = generate_gnp(pt.n, pt.p, pt.seed);
    PressureInstance inst = gnp_pressure_instance(g, pt.p, plan.c);
    inst.gamma = std::min(1.0, std::max(inst.gamma, measured_balance(g, inst.u_set, inst.s)));
    const auto pr = pressure_pipeline(g, inst, plan.n_samples, derive_seed(pt.seed, 1));
    const auto w = realize_witness(g, pr.set, plan.trials, derive_seed(pt.seed, 2));
    const double u = static_cast<double>(pr.set.u_set.size());
    f_hat[i] = static_cast<double>(w.value);
    sane[i] = w.value <= g.max_degree() + 1 && verify_witness(g, w);
    parts[i].push_back(row(pt, "u_size", u, 0, budget));
    parts[i].push_back(row(pt, "alpha", pr.set.alpha, pr.set.half_width_sum / u, budget));
    parts[i].push_back(row(pt, "f_hat", f_hat[i], 0, budget));
    parts[i].push_back(row(pt, "delta_plus_one", static_cast<double>(g.max_degree() + 1), 0,
                           budget));
    parts[i].push_back(
        row(pt, "analytic_upper",
            std::cbrt(static_cast<double>(pt.n) * static_cast<double>(pt.n) * pt.p), 0, budget));
  });
  rep.rows = flatten(std::move(parts));
  std::vector<double> xs, ys;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    xs.push_back(std::log(axis == ScalingAxis::kN ? static_cast<double>(pts[i].n) : pts[i].p));
    ys.push_back(std::log(f_hat[i]));
    if (!sane[i]) rep.notes.push_back("f_hat above max degree + 1 or failed recount");
  }
  bool distinct = false;
  for (double x : xs) distinct = distinct || x != xs.front();
  if (xs.size() >= 4 && distinct) {
    rep.fit = least_squares(xs, ys);
    rep.pass = rep.fit->slope >= rep.window_lo && rep.fit->slope <= rep.window_hi &&
               rep.notes.empty();
  } else {
    rep.notes.push_back("fewer than 4 points or a single x value: no fit");
  }
  return rep;
}

ScalingReport regime_map(const ExperimentPlan& plan) {
  ScalingReport rep;
  rep.name = "regime_map";
  const auto pts = grid(plan, plan.ns, plan.ps);
  for (const auto& pt : pts) {
    if (pt.n > kFExactLimit) throw SizeLimitError("regime_map: n too large", kFExactLimit);
  }
  std::vector<std::vector<Measurement>> parts(pts.size());
  parallel_for(pts.size(), [&](std::size_t i) {
    const auto& pt = pts[i];
    const Graph g = generate_gnp(pt.n, pt.p, pt.seed);
    const double f = static_cast<double>(f_exact(g).value);
    const double h = static_cast<double>(hom_exact(g).value);
    const double ratio = std::max(f * h, std::sqrt(f * f * f * h)) / static_cast<double>(pt.n);
    parts[i].push_back(row(pt, "f", f, 0, "exact"));
    parts[i].push_back(row(pt, "hom", h, 0, "exact"));
    parts[i].push_back(row(pt, "regime", ratio, 0, "exact"));
  });
  rep.rows = flatten(std::move(parts));
  rep.pass = true;
  return rep;
}

void write_csv(std::ostream& out, const std::vector<Measurement>& rows) {
  out << "n,p,seed,metric,value,half_width,budget,commit\n";
  for (const auto& r : rows) {
    out << r.n << ',' << num(r.p) << ',' << r.seed << ',' << r.metric << ',' << num(r.value)
        << ',' << num(r.half_width) << ',' << r.budget << ',' << build_commit() << '\n';
  }
}

std::string report_to_json(const ScalingReport& report) {
  nlohmann::ordered_json j;
  j["name"] = report.name;
  j["pass"] = report.pass;
  j["window"] = {report.window_lo, report.window_hi};
  if (report.fit) {
    j["fit"] = {{"slope", report.fit->slope},
                {"intercept", report.fit->intercept},
                {"slope_se", report.fit->slope_se},
                {"intercept_se", report.fit->intercept_se},
                {"points", report.fit->points}};
  } else {
    j["fit"] = nullptr;
  }
  j["notes"] = report.notes;
  auto rows = nlohmann::ordered_json::array();
  for (const auto& r : report.rows) {
    rows.push_back({{"n", r.n},
                    {"p", r.p},
                    {"seed", r.seed},
                    {"metric", r.metric},
                    {"value", r.value},
                    {"half_width", r.half_width},
                    {"budget", r.budget}});
  }
  j["rows"] = std::move(rows);
  j["commit"] = build_commit();
  return j.dump(2);
}

}  // namespace ddeg
