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

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ddeg/bad.hpp"
#include "ddeg/clusters.hpp"
#include "ddeg/distributions.hpp"
#include "ddeg/error.hpp"
#include "ddeg/experiments.hpp"
#include "ddeg/extractor.hpp"
#include "ddeg/graph.hpp"
#include "ddeg/oracles.hpp"
#include "ddeg/partition.hpp"
#include "ddeg/rng.hpp"
#include "ddeg/synthesis.hpp"

namespace py = pybind11;
using namespace ddeg;

namespace {

VertexSet to_set(std::size_t n, const std::vector<Vertex>& members) {
  return VertexSet::of(n, members);
}

VertexSet to_set_or_full(std::size_t n, const std::optional<std::vector<Vertex>>& members) {
  return members ? to_set(n, *members) : VertexSet::full(n);
}

py::dict witness_dict(const DistinctDegreeWitness& w) {
  py::dict d;
  d["value"] = w.value;
  d["host"] = w.host.members();
  d["marked"] = w.marked.members();
  return d;
}

py::dict estimate_dict(const BadEstimate& e) {
  py::dict d;
  d["point"] = e.point;
  d["half_width"] = e.half_width;
  d["samples"] = e.samples;
  d["window_center"] = e.window_center;
  return d;
}

py::dict controlled_dict(const ControlledSet& cs) {
  py::dict d;
  d["u_set"] = cs.u_set.members();
  d["alpha"] = cs.alpha;
  d["half_width_sum"] = cs.half_width_sum;
  d["max_pair"] = cs.max_pair;
  d["provenance"] = cs.provenance;
  d["spec"] = spec_to_json(cs.spec);
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Distinct degrees in induced subgraphs: oracles, distributions and constructions.";

  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<ConstructionError>(m, "ConstructionError", PyExc_RuntimeError);

  py::class_<Graph>(m, "Graph")
      .def(py::init([](std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
             return from_edge_list(n, edges);
           }),
           py::arg("n"), py::arg("edges") = std::vector<std::pair<Vertex, Vertex>>{})
      .def_static("gnp", &generate_gnp, py::arg("n"), py::arg("p"), py::arg("seed"))
      .def_static("load", &load_graph, py::arg("path"))
      .def_property_readonly("order", &Graph::order)
      .def_property_readonly("edge_count", &Graph::edge_count)
      .def("degree", &Graph::degree, py::arg("v"))
      .def("adjacent", &Graph::adjacent, py::arg("u"), py::arg("v"))
      .def("max_degree", &Graph::max_degree)
      .def("min_degree", &Graph::min_degree)
      .def("edges", &Graph::edges)
      .def("complement", [](const Graph& g) { return complement(g); })
      .def("diversity",
           [](const Graph& g, Vertex u, Vertex v, std::optional<std::vector<Vertex>> s) {
             return diversity(g, u, v, to_set_or_full(g.order(), s));
           },
           py::arg("u"), py::arg("v"), py::arg("s") = py::none())
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__len__", &Graph::order)
      .def("__repr__", [](const Graph& g) {
        return "Graph(n=" + std::to_string(g.order()) + ", m=" + std::to_string(g.edge_count()) +
               ")";
      });

  m.def("hom_exact", [](const Graph& g) {
    const auto r = hom_exact(g);
    py::dict d;
    d["value"] = r.value;
    d["kind"] = r.kind == HomKind::kClique ? "clique" : "independent";
    d["witness"] = r.witness.members();
    return d;
  });
  m.def("f_exact", [](const Graph& g) { return witness_dict(f_exact(g)); });
  m.def("f_lower_greedy",
        [](const Graph& g, std::size_t effort, std::uint64_t seed) {
          return witness_dict(f_lower_greedy(g, effort, seed));
        },
        py::arg("g"), py::arg("effort") = 4, py::arg("seed") = 0);
  m.def("verify_witness", [](const Graph& g, const std::vector<Vertex>& host,
                             const std::vector<Vertex>& marked) {
    DistinctDegreeWitness w;
    w.host = to_set(g.order(), host);
    w.marked = to_set(g.order(), marked);
    w.value = w.marked.size();
    return verify_witness(g, w);
  });
  m.def("turan_independent_set", [](const Graph& g) { return turan_independent_set(g).members(); });
  m.def("regularize", [](const Graph& g) { return regularize(g).members(); });

  // Distribution specs travel as JSON strings.
  m.def("spec_trivial", [](std::size_t n, const std::vector<Vertex>& t) {
    return spec_to_json(DistributionSpec::trivial(to_set(n, t)));
  });
  m.def("spec_uniform_constant", [](std::size_t n, const std::vector<Vertex>& t) {
    return spec_to_json(DistributionSpec::uniform_constant(to_set(n, t)));
  });
  m.def("spec_blended",
        [](std::size_t n, const std::vector<Vertex>& order, const std::vector<Vertex>& s,
           double beta) {
          return spec_to_json(DistributionSpec::blended(order, to_set(n, s), beta));
        },
        py::arg("n"), py::arg("order"), py::arg("s"), py::arg("beta"));
  m.def("spec_product", [](const std::vector<std::string>& children) {
    std::vector<DistributionSpec> specs;
    for (const auto& c : children) specs.push_back(spec_from_json(c));
    return spec_to_json(DistributionSpec::product(std::move(specs)));
  });

  m.def("sample",
        [](const Graph& g, const std::string& spec, std::uint64_t seed) {
          Rng rng(seed);
          const auto p = sample(g, spec_from_json(spec), rng);
          std::vector<std::pair<Vertex, double>> out;
          p.domain().for_each([&](Vertex v) { out.emplace_back(v, p.at(v)); });
          return out;
        },
        py::arg("g"), py::arg("spec"), py::arg("seed") = 0);
  m.def("bad_pair",
        [](const Graph& g, const std::string& spec, Vertex u, Vertex v,
           std::optional<std::vector<Vertex>> s, std::size_t n_samples, std::uint64_t seed) {
          return estimate_dict(bad_pair(g, spec_from_json(spec), u, v,
                                        to_set_or_full(g.order(), s), n_samples, seed));
        },
        py::arg("g"), py::arg("spec"), py::arg("u"), py::arg("v"), py::arg("s") = py::none(),
        py::arg("n_samples") = 10000, py::arg("seed") = 0);
  m.def("blended_bad_bound", &blended_bad_bound, py::arg("beta"), py::arg("big_d"),
        py::arg("gamma"), py::arg("u_size"), py::arg("max_ds"));

  m.def("theta_moment",
        [](const Graph& g, Vertex v, double m_, double lambda,
           std::optional<std::vector<Vertex>> s) {
          const ClusterParams params{m_, lambda, to_set_or_full(g.order(), s)};
          const auto view = theta_moment(g, v, params);
          py::dict d;
          d["degenerate"] = view.degenerate;
          d["t_moment"] = view.t_moment;
          d["w_star"] = view.w_star.members();
          d["w_plus"] = view.w_plus.members();
          d["level_sizes"] = view.level_sizes;
          d["invariants_ok"] = view.degenerate || check_cluster_invariants(g, view, params).ok();
          return d;
        },
        py::arg("g"), py::arg("v"), py::arg("m") = 16.0, py::arg("lambda_") = 2.0,
        py::arg("s") = py::none());

  m.def("run_partition",
        [](const Graph& g, std::size_t k, double m_, double lambda, double alpha, bool relaxed,
           double relax_a3, std::size_t attempts, std::uint64_t seed) {
          PartitionConfig cfg;
          cfg.k = k;
          cfg.m = m_;
          cfg.lambda = lambda;
          cfg.alpha = alpha;
          cfg.strict = !relaxed;
          cfg.relax_a3 = relax_a3;
          cfg.max_attempts = attempts;
          const auto res = run_partition(g, eligible_set(g, cfg), cfg, seed);
          const auto rep = verify_partition(g, res, cfg);
          py::dict d;
          d["u"] = res.u_list;
          std::vector<std::vector<Vertex>> parts;
          for (const auto& v : res.v_sets) parts.push_back(v.members());
          d["v_sets"] = parts;
          d["s"] = res.s.members();
          d["d"] = res.d_list;
          d["gamma"] = res.gamma;
          d["attempts"] = res.attempts_used;
          d["violations"] = res.violations;
          d["exact_ok"] = rep.exact_ok();
          return d;
        },
        py::arg("g"), py::arg("k") = 16, py::arg("m") = 8.0, py::arg("lambda_") = 2.0,
        py::arg("alpha") = 1.0, py::arg("relaxed") = true, py::arg("relax_a3") = 1.0 / 512,
        py::arg("attempts") = 200, py::arg("seed") = 0);

  m.def("pressure",
        [](const Graph& g, double p, double c, std::size_t n_samples, std::size_t trials,
           std::uint64_t seed) {
          const auto inst = gnp_pressure_instance(g, p, c);
          const auto rep = pressure_pipeline(g, inst, n_samples, derive_seed(seed, 1));
          py::dict d = controlled_dict(rep.set);
          d["target"] = rep.target;
          d["target_met"] = rep.target_met;
          d["witness"] = witness_dict(realize_witness(g, rep.set, trials, derive_seed(seed, 2)));
          return d;
        },
        py::arg("g"), py::arg("p"), py::arg("c") = 1.0, py::arg("n_samples") = 400,
        py::arg("trials") = 10, py::arg("seed") = 0);

  m.def("synthesize",
        [](const Graph& g, std::optional<double> k, std::size_t depth, std::size_t n_samples,
           std::size_t trials, std::uint64_t seed) {
          const double kk = k ? *k : std::ceil(std::sqrt(static_cast<double>(g.order())));
          auto budget = SynthesisBudget::for_k(kk);
          budget.depth_cap = depth;
          budget.n_samples = n_samples;
          const auto r = synthesize(g, budget, seed);
          py::dict d = controlled_dict(r.set);
          d["k"] = kk;
          d["trace"] = r.trace;
          d["witness"] = witness_dict(realize_witness(g, r.set, trials, derive_seed(seed, 2)));
          return d;
        },
        py::arg("g"), py::arg("k") = py::none(), py::arg("depth") = 3,
        py::arg("n_samples") = 200, py::arg("trials") = 10, py::arg("seed") = 0);

  m.def("tail_bound",
        [](const std::string& kind, double mu, double delta, double t,
           std::vector<double> ranges, std::size_t n, double p, double l) {
          TailParams tp{mu, delta, t, std::move(ranges), n, p, l};
          return tail_bound(tail_kind_from(kind), tp);
        },
        py::arg("kind"), py::arg("mu") = 0.0, py::arg("delta") = 0.0, py::arg("t") = 0.0,
        py::arg("ranges") = std::vector<double>{}, py::arg("n") = 0, py::arg("p") = 0.0,
        py::arg("l") = 0.0);
  m.def("least_squares", [](const std::vector<double>& xs, const std::vector<double>& ys) {
    const auto f = least_squares(xs, ys);
    py::dict d;
    d["slope"] = f.slope;
    d["intercept"] = f.intercept;
    d["slope_se"] = f.slope_se;
    d["intercept_se"] = f.intercept_se;
    return d;
  });
}
