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


// ddeg command-line tool. Every subcommand writes one JSON document (or
// CSV with --format csv) to stdout or --out.

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ddeg/bad.hpp"
#include "ddeg/clusters.hpp"
#include "ddeg/distributions.hpp"
#include "ddeg/error.hpp"
#include "ddeg/experiments.hpp"
#include "ddeg/extractor.hpp"
#include "ddeg/graph.hpp"
#include "ddeg/oracles.hpp"
#include "ddeg/parallel.hpp"
#include "ddeg/partition.hpp"
#include "ddeg/synthesis.hpp"

namespace {

using nlohmann::ordered_json;
using namespace ddeg;

struct Global {
  std::uint64_t seed = 0;
  unsigned threads = 1;
  std::string out;
  std::string format = "json";
};

struct GraphSource {
  std::string path;
  std::size_t n = 0;
  double p = 0.5;

  void attach(CLI::App* cmd) {
    cmd->add_option("--graph", path, "Graph file (\"n m\" header, then edges)");
    cmd->add_option("--n", n, "Order of a generated G(n, p) when --graph is absent");
    cmd->add_option("--p", p, "Edge probability of the generated graph");
  }
  Graph load(std::uint64_t seed) const {
    if (!path.empty()) return load_graph(path);
    if (n == 0) throw PreconditionError("need --graph or --n");
    return generate_gnp(n, p, seed);
  }
};

ordered_json set_json(const VertexSet& s) { return s.members(); }

ordered_json witness_json(const DistinctDegreeWitness& w) {
  return {{"value", w.value}, {"host", set_json(w.host)}, {"marked", set_json(w.marked)}};
}

ordered_json estimate_json(const BadEstimate& e) {
  return {{"point", e.point},
          {"half_width", e.half_width},
          {"samples", e.samples},
          {"window_center", e.window_center}};
}

ordered_json controlled_json(const ControlledSet& cs) {
  return {{"u_set", set_json(cs.u_set)},
          {"size", cs.u_set.size()},
          {"alpha", cs.alpha},
          {"half_width_sum", cs.half_width_sum},
          {"max_pair", cs.max_pair},
          {"provenance", cs.provenance}};
}

std::string csv_cell(const ordered_json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string s;
    for (const auto& x : v) {
      if (!s.empty()) s += ' ';
      s += x.is_primitive() ? csv_cell(x) : x.dump();
    }
    return s;
  }
  if (v.is_object()) {
    std::string s = v.dump();
    for (auto& c : s) if (c == ',') c = ';';
    return s;
  }
  return v.dump();
}

void emit(const Global& gl, const ordered_json& doc) {
  std::ostringstream os;
  if (gl.format == "csv") {
    os << "key,value\n";
    for (auto it = doc.begin(); it != doc.end(); ++it) os << it.key() << ',' << csv_cell(*it) << '\n';
  } else {
    os << doc.dump(2) << '\n';
  }
  if (gl.out.empty()) {
    std::cout << os.str();
  } else {
    std::ofstream f(gl.out, std::ios::binary);
    if (!f) throw PreconditionError("cannot open --out file " + gl.out);
    f << os.str();
  }
}

void emit_text(const Global& gl, const std::string& text) {
  if (gl.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(gl.out, std::ios::binary);
    if (!f) throw PreconditionError("cannot open --out file " + gl.out);
    f << text;
  }
}

std::vector<std::uint64_t> seed_list(std::uint64_t base, std::size_t count) {
  std::vector<std::uint64_t> s;
  for (std::size_t i = 0; i < count; ++i) s.push_back(base + i);
  return s;
}

DistributionSpec spec_from_args(const std::string& spec_path, const std::string& variant,
                                const Graph& g, const std::vector<Vertex>& order, double beta) {
  const std::size_t n = g.order();
  if (!spec_path.empty()) {
    std::ifstream f(spec_path);
    if (!f) throw PreconditionError("cannot open spec file " + spec_path);
    std::stringstream ss;
    ss << f.rdbuf();
    return spec_from_json(ss.str());
  }
  if (variant == "trivial") return DistributionSpec::trivial(VertexSet::full(n));
  if (variant == "uniform_constant") return DistributionSpec::uniform_constant(VertexSet::full(n));
  if (variant == "blended") {
    return DistributionSpec::blended(order, VertexSet::full(n), beta);
  }
  throw PreconditionError("unknown --variant " + variant);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ddeg: distinct degrees, homogeneous sets and bad-pair control"};
  app.require_subcommand(1);
  app.fallthrough();
  Global gl;
  app.add_option("--seed", gl.seed, "Master seed")->capture_default_str();
  app.add_option("--threads", gl.threads, "Worker threads (0 = hardware)")->capture_default_str();
  app.add_option("--out", gl.out, "Output file (default stdout)");
  app.add_option("--format", gl.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();

  // gen
  auto* gen = app.add_subcommand("gen", "Generate G(n, p) in the text graph format");
  std::size_t gen_n = 0;
  double gen_p = 0.5;
  gen->add_option("--n", gen_n, "Order")->required();
  gen->add_option("--p", gen_p, "Edge probability")->capture_default_str();

  // hom
  auto* hom = app.add_subcommand("hom", "Exact hom(G) = max(omega, alpha)");
  GraphSource hom_src;
  hom_src.attach(hom);

  // f-exact
  auto* fex = app.add_subcommand("f-exact", "Exact f(G) by exhaustive search (n <= 20)");
  GraphSource fex_src;
  fex_src.attach(fex);

  // f-greedy
  auto* fgr = app.add_subcommand("f-greedy", "Greedy lower bound on f(G)");
  GraphSource fgr_src;
  fgr_src.attach(fgr);
  std::size_t fgr_effort = 4;
  fgr->add_option("--effort", fgr_effort, "Restarts")->capture_default_str();

  // regularize
  auto* reg = app.add_subcommand("regularize", "Near-regular induced subgraph");
  GraphSource reg_src;
  reg_src.attach(reg);

  // bad
  auto* bad = app.add_subcommand("bad", "Monte Carlo bad(u, v)");
  GraphSource bad_src;
  bad_src.attach(bad);
  Vertex bad_u = 0, bad_v = 1;
  std::size_t bad_samples = 10000;
  std::string bad_spec, bad_variant = "trivial";
  std::vector<Vertex> bad_order;
  double bad_beta = 0.1;
  bad->add_option("--u", bad_u)->required();
  bad->add_option("--v", bad_v)->required();
  bad->add_option("--samples", bad_samples)->capture_default_str();
  bad->add_option("--spec", bad_spec, "Distribution spec JSON file");
  bad->add_option("--variant", bad_variant, "trivial | uniform_constant | blended")
      ->capture_default_str();
  bad->add_option("--order", bad_order, "Blended order u_1..u_k");
  bad->add_option("--beta", bad_beta)->capture_default_str();

  // cluster
  auto* clu = app.add_subcommand("cluster", "Theta-moment and cluster of a vertex");
  GraphSource clu_src;
  clu_src.attach(clu);
  Vertex clu_v = 0;
  double clu_m = 16, clu_lambda = 2;
  clu->add_option("--vertex", clu_v)->required();
  clu->add_option("--m", clu_m)->capture_default_str();
  clu->add_option("--lambda", clu_lambda)->capture_default_str();

  // partition
  auto* par = app.add_subcommand("partition", "Randomized cluster partition");
  GraphSource par_src;
  par_src.attach(par);
  PartitionConfig pcfg;
  bool par_relaxed = false;
  par->add_option("--k", pcfg.k)->capture_default_str();
  par->add_option("--m", pcfg.m)->capture_default_str();
  par->add_option("--lambda", pcfg.lambda)->capture_default_str();
  par->add_option("--alpha", pcfg.alpha)->capture_default_str();
  par->add_option("--attempts", pcfg.max_attempts)->capture_default_str();
  par->add_flag("--relaxed", par_relaxed, "Record hypothesis violations instead of failing");
  par->add_option("--relax-floor", pcfg.relax_floor)->capture_default_str();
  par->add_option("--relax-a2", pcfg.relax_a2)->capture_default_str();
  par->add_option("--relax-a3", pcfg.relax_a3)->capture_default_str();
  par->add_option("--relax-ii", pcfg.relax_ii)->capture_default_str();
  par->add_option("--relax-v", pcfg.relax_v)->capture_default_str();

  // pressure
  auto* pre = app.add_subcommand("pressure", "Pressure pipeline on the random-graph instance");
  GraphSource pre_src;
  pre_src.attach(pre);
  double pre_c = 1;
  std::size_t pre_samples = 400, pre_trials = 10;
  bool pre_greedy = false;
  pre->add_option("--c", pre_c, "|U| = c (n^2 p)^(1/3)")->capture_default_str();
  pre->add_option("--samples", pre_samples)->capture_default_str();
  pre->add_option("--trials", pre_trials, "Witness realization trials")->capture_default_str();
  pre->add_flag("--greedy", pre_greedy, "Greedy diverse set instead of the first vertices");

  // synthesize
  auto* syn = app.add_subcommand("synthesize", "Recursive construction of a controlled set");
  GraphSource syn_src;
  syn_src.attach(syn);
  double syn_k = 0;
  std::size_t syn_depth = 3, syn_samples = 200, syn_trials = 10;
  syn->add_option("--k", syn_k, "Target k (default ceil(sqrt(n)))");
  syn->add_option("--depth", syn_depth)->capture_default_str();
  syn->add_option("--samples", syn_samples)->capture_default_str();
  syn->add_option("--trials", syn_trials)->capture_default_str();

  // experiment
  auto* exp = app.add_subcommand("experiment", "Scaling experiments and tail bounds");
  std::string exp_kind = "hom_scaling";
  ExperimentPlan plan;
  std::size_t exp_seeds = 5;
  std::string tail_kind = "chernoff_lower";
  TailParams tail;
  exp->add_option("--kind", exp_kind)
      ->check(CLI::IsMember({"hom_scaling", "f_scaling_n", "f_scaling_p", "regime_map", "tail"}))
      ->capture_default_str();
  exp->add_option("--ns", plan.ns, "Orders");
  exp->add_option("--ps", plan.ps, "Edge probabilities");
  exp->add_option("--seeds", exp_seeds, "Seeds per point, counted from --seed")
      ->capture_default_str();
  exp->add_option("--samples", plan.n_samples)->capture_default_str();
  exp->add_option("--trials", plan.trials)->capture_default_str();
  exp->add_option("--c", plan.c)->capture_default_str();
  exp->add_option("--slope-lo", plan.slope_lo)->capture_default_str();
  exp->add_option("--slope-hi", plan.slope_hi)->capture_default_str();
  exp->add_option("--tail-kind", tail_kind)->capture_default_str();
  exp->add_option("--mu", tail.mu);
  exp->add_option("--delta", tail.delta);
  exp->add_option("--t", tail.t);
  exp->add_option("--ranges", tail.ranges);
  exp->add_option("--trials-n", tail.n, "Binomial n");
  exp->add_option("--prob", tail.p, "Binomial p");
  exp->add_option("--L", tail.l, "Binomial threshold");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    set_default_threads(gl.threads);
    if (*gen) {
      const Graph g = generate_gnp(gen_n, gen_p, gl.seed);
      std::ostringstream os;
      write_graph(os, g);
      emit_text(gl, os.str());
    } else if (*hom) {
      const Graph g = hom_src.load(gl.seed);
      const auto r = hom_exact(g);
      emit(gl, {{"n", g.order()},
                {"hom", r.value},
                {"kind", r.kind == HomKind::kClique ? "clique" : "independent"},
                {"witness", set_json(r.witness)}});
    } else if (*fex) {
      const Graph g = fex_src.load(gl.seed);
      const auto w = f_exact(g);
      emit(gl, {{"n", g.order()}, {"f", w.value}, {"witness", witness_json(w)}});
    } else if (*fgr) {
      const Graph g = fgr_src.load(gl.seed);
      const auto w = f_lower_greedy(g, fgr_effort, gl.seed);
      emit(gl, {{"n", g.order()}, {"f_lower", w.value}, {"witness", witness_json(w)}});
    } else if (*reg) {
      const Graph g = reg_src.load(gl.seed);
      const auto r = regularize(g);
      const auto sub = induced(g, r);
      emit(gl, {{"n", g.order()},
                {"size", r.size()},
                {"min_degree", sub.graph.min_degree()},
                {"max_degree", sub.graph.max_degree()},
                {"set", set_json(r)}});
    } else if (*bad) {
      const Graph g = bad_src.load(gl.seed);
      const auto spec = spec_from_args(bad_spec, bad_variant, g, bad_order, bad_beta);
      const auto e = bad_pair(g, spec, bad_u, bad_v, VertexSet::full(g.order()), bad_samples,
                              gl.seed);
      emit(gl, {{"u", bad_u},
                {"v", bad_v},
                {"variant", variant_name(spec.variant())},
                {"estimate", estimate_json(e)}});
    } else if (*clu) {
      const Graph g = clu_src.load(gl.seed);
      ClusterParams params{clu_m, clu_lambda, VertexSet::full(g.order())};
      const auto view = theta_moment(g, clu_v, params);
      const auto inv = check_cluster_invariants(g, view, params);
      emit(gl, {{"vertex", clu_v},
                {"degree", view.ds},
                {"degenerate", view.degenerate},
                {"t_moment", view.t_moment},
                {"w_star_size", view.w_star.size()},
                {"w_plus_size", view.w_plus.size()},
                {"level_sizes", view.level_sizes},
                {"invariants_ok", inv.ok()},
                {"w_star", set_json(view.w_star)}});
    } else if (*par) {
      const Graph g = par_src.load(gl.seed);
      pcfg.strict = !par_relaxed;
      const VertexSet a = eligible_set(g, pcfg);
      ordered_json doc{{"n", g.order()}, {"eligible", a.size()}};
      try {
        const auto res = run_partition(g, a, pcfg, gl.seed);
        const auto rep = verify_partition(g, res, pcfg);
        ordered_json checks = ordered_json::array();
        for (const auto& c : rep.checks) {
          checks.push_back({{"name", c.name},
                            {"ok", c.ok},
                            {"measured", c.measured},
                            {"bound", c.bound},
                            {"detail", c.detail}});
        }
        ordered_json vs = ordered_json::array();
        for (const auto& v : res.v_sets) vs.push_back(v.size());
        doc["t"] = res.t;
        doc["attempts"] = res.attempts_used;
        doc["gamma"] = res.gamma;
        doc["p"] = res.p;
        doc["u_list"] = res.u_list;
        doc["v_sizes"] = vs;
        doc["s_size"] = res.s.size();
        doc["violations"] = res.violations;
        doc["checks"] = checks;
        doc["exact_ok"] = rep.exact_ok();
        emit(gl, doc);
      } catch (const AttemptsExhausted& e) {
        doc["error"] = e.what();
        doc["attempts"] = e.log().size();
        emit(gl, doc);
        return 3;
      }
    } else if (*pre) {
      const Graph g = pre_src.load(gl.seed);
      PressureInstance inst =
          pre_greedy
              ? greedy_pressure_instance(g, static_cast<std::size_t>(std::ceil(std::cbrt(
                                                static_cast<double>(g.order()) * g.order() *
                                                pre_src.p) * pre_c)),
                                         std::max(1.0, g.order() * pre_src.p / 4), gl.seed)
              : gnp_pressure_instance(g, pre_src.p, pre_c);
      const auto rep = pressure_pipeline(g, inst, pre_samples, derive_seed(gl.seed, 1));
      const auto w = realize_witness(g, rep.set, pre_trials, derive_seed(gl.seed, 2));
      ordered_json doc = controlled_json(rep.set);
      doc["D"] = rep.trimmed.d;
      doc["gamma"] = rep.trimmed.gamma;
      doc["beta"] = rep.trimmed.beta;
      doc["s_size"] = rep.trimmed.s.size();
      doc["target"] = rep.target;
      doc["target_met"] = rep.target_met;
      doc["witness"] = witness_json(w);
      doc["trace"] = ordered_json::array({"pressure: hypotheses verified"});
      emit(gl, doc);
    } else if (*syn) {
      const Graph g = syn_src.load(gl.seed);
      const double k = syn_k > 0 ? syn_k : std::ceil(std::sqrt(static_cast<double>(g.order())));
      auto budget = SynthesisBudget::for_k(k);
      budget.depth_cap = syn_depth;
      budget.n_samples = syn_samples;
      const auto r = synthesize(g, budget, gl.seed);
      const auto w = realize_witness(g, r.set, syn_trials, derive_seed(gl.seed, 2));
      ordered_json doc = controlled_json(r.set);
      doc["k"] = k;
      doc["lambda"] = budget.lambda;
      doc["T"] = budget.t;
      doc["M"] = budget.m;
      doc["witness"] = witness_json(w);
      doc["trace"] = r.trace;
      emit(gl, doc);
    } else if (*exp) {
      if (exp_kind == "tail") {
        const auto kind = tail_kind_from(tail_kind);
        ordered_json doc{{"kind", tail_kind}, {"bound", tail_bound(kind, tail)}};
        if (kind == TailKind::kQuarter) {
          doc["exact_holds"] = quarter_bound_holds(tail.n, tail.p);
        }
        emit(gl, doc);
        return 0;
      }
      plan.seeds = seed_list(gl.seed, exp_seeds);
      ScalingReport rep;
      if (exp_kind == "hom_scaling") {
        if (plan.ns.empty()) plan.ns = {32, 64};
        if (plan.ps.empty()) plan.ps = {0.5};
        rep = hom_scaling(plan);
      } else if (exp_kind == "f_scaling_n") {
        if (plan.ns.empty()) plan.ns = {256, 512, 1024, 2048, 4096};
        if (plan.ps.empty()) plan.ps = {0.5};
        rep = f_scaling(plan, ScalingAxis::kN);
      } else if (exp_kind == "f_scaling_p") {
        if (plan.ns.empty()) plan.ns = {1024};
        if (plan.ps.empty()) plan.ps = {0.5, 0.25, 0.125, 0.0625};
        if (!exp->count("--slope-lo")) plan.slope_lo = 0.2;
        if (!exp->count("--slope-hi")) plan.slope_hi = 0.47;
        rep = f_scaling(plan, ScalingAxis::kP);
      } else {
        if (plan.ns.empty()) plan.ns = {8, 12, 16};
        if (plan.ps.empty()) plan.ps = {0.25, 0.5, 0.75};
        rep = regime_map(plan);
      }
      if (gl.format == "csv") {
        std::ostringstream os;
        write_csv(os, rep.rows);
        emit_text(gl, os.str());
      } else {
        emit_text(gl, report_to_json(rep) + "\n");
      }
    }
  } catch (const PreconditionError& e) {
    std::cerr << "precondition failed: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid argument: " << e.what() << '\n';
    return 2;
  } catch (const ConstructionError& e) {
    std::cerr << "construction failed: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
