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


#include "ddeg/extractor.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <sstream>

#include "ddeg/bad.hpp"
#include "ddeg/error.hpp"
#include "ddeg/rng.hpp"

namespace ddeg {

namespace {

std::size_t max_balance(const Graph& g, const VertexSet& u_set, const VertexSet& s) {
  std::size_t best = 0;
  s.for_each([&](Vertex v) { best = std::max(best, g.degree_in(v, u_set)); });
  return best;
}

void flatten_into(const DistributionSpec& spec, std::vector<DistributionSpec>& out) {
  if (spec.domain().empty()) return;
  if (spec.variant() == Variant::kProduct) {
    for (const auto& c : spec.children()) flatten_into(c, out);
  } else {
    out.push_back(spec);
  }
}

}  // namespace

void measure(const Graph& g, ControlledSet& cs, std::size_t n_samples, std::uint64_t seed) {
  cs.alpha = 0;
  cs.half_width_sum = 0;
  cs.max_pair = 0;
  if (cs.u_set.size() < 2) return;
  const auto r = bad_set(g, cs.spec, cs.u_set, cs.s, n_samples, seed);
  cs.alpha = r.alpha;
  cs.half_width_sum = r.half_width_sum;
  cs.max_pair = r.max_point;
}

void check_pressure_hypotheses(const Graph& g, const PressureInstance& inst) {
  const std::size_t n = g.order();
  if (inst.u_set.universe() != n || inst.s.universe() != n) {
    throw PreconditionError("pressure: sets must live on the graph's vertex set");
  }
  const std::size_t u = inst.u_set.size();
  if (u < 2) throw PreconditionError("pressure: U needs at least two vertices");
  if (!(inst.d >= 1)) throw PreconditionError("pressure: D must be at least 1");
  if (!(inst.gamma > 0 && inst.gamma <= 1)) {
    throw PreconditionError("pressure: gamma must lie in (0, 1]");
  }
  if (inst.gamma * static_cast<double>(u) < 1.0 - 1e-12) {
    throw PreconditionError("pressure: gamma must be at least 1/|U|");
  }
  const auto members = inst.u_set.members();
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      const std::size_t div = diversity(g, members[i], members[j], inst.s);
      if (static_cast<double>(div) < inst.d) {
        std::ostringstream os;
        os << "pressure: pair (" << members[i] << ", " << members[j] << ") has diversity "
           << div << " < D = " << inst.d;
        throw PreconditionError(os.str());
      }
    }
  }
  const double cap = inst.gamma * static_cast<double>(u);
  inst.s.for_each([&](Vertex v) {
    const std::size_t c = g.degree_in(v, inst.u_set);
    if (static_cast<double>(c) > cap + 1e-9) {
      std::ostringstream os;
      os << "pressure: vertex " << v << " has " << c << " neighbours in U, above gamma|U| = "
         << cap;
      throw PreconditionError(os.str());
    }
  });
}

PressureReport pressure_pipeline(const Graph& g, const PressureInstance& inst,
                                 std::size_t n_samples, std::uint64_t seed) {
  check_pressure_hypotheses(g, inst);
  PressureReport rep;
  PressureInstance t = inst;
  const auto members = inst.u_set.members();
  const double u = static_cast<double>(members.size());
  t.d = std::min(inst.d, std::pow(u, 1.5));
  if (static_cast<double>(inst.s.size()) > t.d * u * u) {
    // Keep ceil(D) elements of every pairwise symmetric difference.
    const auto take = static_cast<std::size_t>(std::ceil(t.d));
    VertexSet kept(g.order());
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        const auto ri = g.row(members[i]);
        const auto rj = g.row(members[j]);
        const auto sw = inst.s.words();
        std::size_t got = 0;
        for (std::size_t w = 0; w < sw.size() && got < take; ++w) {
          std::uint64_t x = (ri[w] ^ rj[w]) & sw[w];
          while (x != 0 && got < take) {
            const int b = std::countr_zero(x);
            x &= x - 1;
            kept.insert(static_cast<Vertex>(w * kWordBits + b));
            ++got;
          }
        }
      }
    }
    t.s = std::move(kept);
  }
  const double root = std::sqrt(t.gamma * u * std::log(u));
  t.beta = std::min(kMaxBeta, 1.0 / (10.0 * root));
  rep.target = 40.0 * root / t.d;

  DistributionSpec spec = DistributionSpec::blended(members, t.s, t.beta);
  rep.set.spec = complete_spec(spec);
  rep.set.u_set = inst.u_set;
  rep.set.s = VertexSet::full(g.order());
  rep.set.provenance = "pressure";

  const ExpectedDegreeTable table(g, rep.set.spec, members, rep.set.s, n_samples, seed);
  const std::size_t k = members.size();
  double sum = 0, hw = 0, mx = 0;
  double slack = -1e300;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      const BadEstimate e = table.pair(i, j);
      sum += e.point;
      hw += e.half_width;
      mx = std::max(mx, e.point);
      slack = std::max(slack, e.point - (rep.target + 3.0 * e.half_width));
    }
  }
  rep.set.alpha = sum / u;
  rep.set.half_width_sum = hw;
  rep.set.max_pair = mx;
  rep.worst_slack = slack;
  rep.target_met = slack <= 0;
  rep.trimmed = std::move(t);
  return rep;
}

PressureInstance gnp_pressure_instance(const Graph& g, double p, double c) {
  const std::size_t n = g.order();
  if (!(p > 0 && p <= 1)) throw PreconditionError("pressure: p must lie in (0, 1]");
  if (!(c > 0)) throw PreconditionError("pressure: c must be positive");
  const double target = c * std::cbrt(static_cast<double>(n) * static_cast<double>(n) * p);
  const auto size = std::clamp<std::size_t>(static_cast<std::size_t>(std::llround(target)), 2, n);
  PressureInstance inst;
  inst.u_set = VertexSet(n);
  for (Vertex v = 0; v < size; ++v) inst.u_set.insert(v);
  inst.s = VertexSet::full(n);
  inst.d = std::max(1.0, static_cast<double>(n) * p / 4.0);
  inst.gamma = std::min(1.0, 2.0 * p);
  return inst;
}

double measured_balance(const Graph& g, const VertexSet& u_set, const VertexSet& s) {
  if (u_set.empty()) return 0;
  return static_cast<double>(max_balance(g, u_set, s)) /
         static_cast<double>(u_set.size());
}

PressureInstance greedy_pressure_instance(const Graph& g, std::size_t max_size,
                                          double d_floor, std::uint64_t seed) {
  const std::size_t n = g.order();
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), Vertex{0});
  Rng rng(seed);
  for (std::size_t i = n; i > 1; --i) std::swap(order[i - 1], order[rng.below(i)]);
  PressureInstance inst;
  inst.u_set = VertexSet(n);
  inst.s = VertexSet::full(n);
  std::vector<Vertex> kept;
  std::size_t min_div = n;
  for (Vertex v : order) {
    if (kept.size() >= max_size) break;
    std::size_t local = n;
    bool ok = true;
    for (Vertex w : kept) {
      const std::size_t d = diversity(g, v, w);
      if (static_cast<double>(d) < d_floor) {
        ok = false;
        break;
      }
      local = std::min(local, d);
    }
    if (!ok) continue;
    kept.push_back(v);
    inst.u_set.insert(v);
    if (kept.size() > 1) min_div = std::min(min_div, local);
  }
  inst.d = std::max<double>(1.0, static_cast<double>(kept.size() > 1 ? min_div : 1));
  const double u = std::max<double>(1.0, static_cast<double>(kept.size()));
  inst.gamma = std::clamp(measured_balance(g, inst.u_set, inst.s), 1.0 / u, 1.0);
  return inst;
}

std::vector<std::size_t> separated_subset(std::span<const double> values, double gap) {
  std::vector<std::size_t> idx(values.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  std::vector<std::size_t> out;
  for (std::size_t i : idx) {
    if (out.empty() || values[i] - values[out.back()] > gap) out.push_back(i);
  }
  return out;
}

VertexSet lift_set(const VertexSet& s, std::span<const Vertex> labels, std::size_t universe) {
  VertexSet out(universe);
  s.for_each([&](Vertex v) { out.insert(labels[v]); });
  return out;
}

DistributionSpec lift_spec(const DistributionSpec& spec, std::span<const Vertex> labels,
                           std::size_t universe) {
  switch (spec.variant()) {
    case Variant::kTrivial:
      return DistributionSpec::trivial(lift_set(spec.domain(), labels, universe));
    case Variant::kUniformConstant:
      return DistributionSpec::uniform_constant(lift_set(spec.domain(), labels, universe));
    case Variant::kBlended: {
      std::vector<Vertex> order;
      order.reserve(spec.order().size());
      for (Vertex u : spec.order()) order.push_back(labels[u]);
      return DistributionSpec::blended(std::move(order),
                                       lift_set(spec.domain(), labels, universe), spec.beta());
    }
    case Variant::kProduct: {
      std::vector<DistributionSpec> kids;
      for (const auto& c : spec.children()) kids.push_back(lift_spec(c, labels, universe));
      return DistributionSpec::product(std::move(kids));
    }
  }
  throw PreconditionError("lift_spec: unknown variant");
}

DistributionSpec complete_spec(const DistributionSpec& spec) {
  if (spec.domain().size() == spec.universe()) return spec;
  std::vector<DistributionSpec> kids;
  flatten_into(spec, kids);
  kids.push_back(DistributionSpec::trivial(spec.domain().complement()));
  return DistributionSpec::product(std::move(kids));
}

MergeReport merge_controlled(const Graph& g, std::span<const ControlledSet> sets,
                             const DistributionSpec& cross_spec, const MergeSchedule& sched,
                             std::size_t n_samples, std::uint64_t seed) {
  const std::size_t n = g.order();
  if (sets.empty()) throw PreconditionError("merge: no input sets");
  if (cross_spec.universe() != n) throw PreconditionError("merge: cross spec universe");
  const VertexSet& s = cross_spec.domain();
  VertexSet seen = s;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    const auto& cs = sets[i];
    std::ostringstream os;
    os << "merge: input " << i << ": ";
    if (cs.s.universe() != n || cs.u_set.universe() != n || cs.spec.universe() != n) {
      throw PreconditionError(os.str() + "universe differs from the graph");
    }
    if (seen.intersects(cs.s)) throw PreconditionError(os.str() + "V_i overlaps S or another V_j");
    if (!cs.u_set.is_subset_of(cs.s)) throw PreconditionError(os.str() + "U_i not inside V_i");
    if (!cs.spec.domain().is_subset_of(cs.s)) {
      throw PreconditionError(os.str() + "distribution reaches outside V_i");
    }
    seen = seen | cs.s;
  }

  MergeReport rep;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    const double u = static_cast<double>(sets[i].u_set.size());
    if (u >= 2 && sets[i].alpha * u > u * sched.f(u) + sets[i].half_width_sum) {
      std::ostringstream os;
      os << "(ii) input " << i << ": bad " << sets[i].alpha * u << " > |U|f(|U|) = "
         << u * sched.f(u);
      rep.violations.push_back(os.str());
    }
  }

  std::vector<std::size_t> order(sets.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return sets[a].u_set.size() > sets[b].u_set.size();
  });
  const double first = static_cast<double>(sets[order[0]].u_set.size());
  if (first > sched.m) {
    rep.dominated = true;
    rep.used.push_back(order[0]);
  } else {
    double acc = 0;
    for (std::size_t i : order) {
      if (acc >= sched.m) break;
      rep.used.push_back(i);
      acc += static_cast<double>(sets[i].u_set.size());
    }
    if (acc < sched.m) {
      std::ostringstream os;
      os << "(i) total size " << acc << " < M = " << sched.m;
      rep.violations.push_back(os.str());
    }
    if (first < sched.m0) {
      std::ostringstream os;
      os << "(i) largest set " << first << " < m0 = " << sched.m0;
      rep.violations.push_back(os.str());
    }
  }

  // (iii): cross pairs under the control distribution.
  if (!rep.dominated && rep.used.size() > 1) {
    std::vector<Vertex> all;
    std::vector<std::size_t> owner;
    for (std::size_t i : rep.used) {
      sets[i].u_set.for_each([&](Vertex v) {
        all.push_back(v);
        owner.push_back(i);
      });
    }
    const ExpectedDegreeTable table(g, cross_spec, all, s, n_samples, derive_seed(seed, 1));
    const double cap = sched.f_prime(sched.m_big);
    std::size_t bad_pairs = 0;
    double worst = 0;
    std::pair<Vertex, Vertex> worst_pair{0, 0};
    for (std::size_t a = 0; a < all.size(); ++a) {
      for (std::size_t b = a + 1; b < all.size(); ++b) {
        if (owner[a] == owner[b]) continue;
        const BadEstimate e = table.pair(a, b);
        if (e.point > cap + e.half_width) {
          ++bad_pairs;
          if (e.point > worst) {
            worst = e.point;
            worst_pair = {all[a], all[b]};
          }
        }
      }
    }
    if (bad_pairs > 0) {
      std::ostringstream os;
      os << "(iii) " << bad_pairs << " cross pairs above f'(M0) = " << cap << ", worst pair ("
         << worst_pair.first << ", " << worst_pair.second << ") at " << worst;
      rep.violations.push_back(os.str());
    }
  }

  std::vector<DistributionSpec> kids;
  VertexSet u_all(n);
  for (std::size_t i : rep.used) {
    flatten_into(sets[i].spec, kids);
    u_all = u_all | sets[i].u_set;
  }
  if (!rep.dominated) flatten_into(cross_spec, kids);
  ControlledSet& out = rep.set;
  out.u_set = std::move(u_all);
  out.spec = kids.empty() ? DistributionSpec::trivial(VertexSet::full(n))
                          : complete_spec(DistributionSpec::product(std::move(kids)));
  out.s = VertexSet::full(n);
  std::ostringstream prov;
  prov << (rep.dominated ? "merge:dominated" : "merge:") << rep.used.size() << "/" << sets.size();
  out.provenance = prov.str();
  measure(g, out, n_samples, derive_seed(seed, 2));
  const double u = static_cast<double>(out.u_set.size());
  rep.bound = u * sched.f(std::max(u, 1.0));
  rep.bound_ok = out.alpha * u <= rep.bound + out.half_width_sum;
  return rep;
}

DistinctDegreeWitness realize_witness(const Graph& g, const ControlledSet& cs,
                                      std::size_t trials, std::uint64_t seed) {
  const std::size_t n = g.order();
  DistinctDegreeWitness best;
  if (n == 0) return best;
  const auto members = cs.u_set.members();
  {
    const Vertex v0 = members.empty() ? 0 : members.front();
    best.host = VertexSet(n);
    best.host.insert(v0);
    best.marked = best.host;
    best.value = 1;
  }
  if (members.size() < 2 || cs.spec.universe() != n) return best;
  const DistributionSpec spec = complete_spec(cs.spec);
  const VertexSet all = VertexSet::full(n);
  const Rng root(seed);
  std::vector<double> ed(members.size());
  for (std::size_t trial = 0; trial < trials; ++trial) {
    Rng rng = root.substream(trial);
    const ProbVector p = sample(g, spec, rng);
    for (std::size_t i = 0; i < members.size(); ++i) {
      ed[i] = expected_degree_dense(g, members[i], p.dense(), all);
    }
    VertexSet selected(n);
    for (std::size_t i : separated_subset(ed, 2.0)) selected.insert(members[i]);
    if (selected.size() <= best.value) continue;
    VertexSet host = realize_subgraph(g, p, rng) | selected;
    DistinctDegreeWitness w = distinct_degree_witness(g, host, selected);
    if (w.value > best.value && verify_witness(g, w)) best = std::move(w);
  }
  return best;
}

}  // namespace ddeg
