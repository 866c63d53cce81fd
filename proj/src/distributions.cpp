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

#include "ddeg/distributions.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "ddeg/error.hpp"
#include "json.hpp"

namespace ddeg {

namespace {

constexpr int kSpecVersion = 1;

void for_each_neighbour_in(const Graph& g, Vertex u, const VertexSet& s,
                           const auto& fn) {
  const auto r = g.row(u);
  const auto m = s.words();
  for (std::size_t w = 0; w < r.size(); ++w) {
    Word bits = r[w] & m[w];
    while (bits) {
      fn(static_cast<Vertex>(w * kWordBits + std::countr_zero(bits)));
      bits &= bits - 1;
    }
  }
}

void sample_rec(const Graph& g, const DistributionSpec& spec, UniformSource& source,
                std::vector<double>& dense) {
  switch (spec.variant()) {
    case Variant::kTrivial:
      spec.domain().for_each([&](Vertex v) { dense[v] = 0.5; });
      return;
    case Variant::kUniformConstant: {
      const double alpha = kProbLow + (kProbHigh - kProbLow) * source.uniform();
      spec.domain().for_each([&](Vertex v) { dense[v] = alpha; });
      return;
    }
    case Variant::kBlended: {
      const VertexSet& s = spec.domain();
      s.for_each([&](Vertex v) { dense[v] = 0.5; });
      for (Vertex u : spec.order()) {
        const double alpha = spec.beta() * (2.0 * source.uniform() - 1.0);
        for_each_neighbour_in(g, u, s, [&](Vertex v) { dense[v] += alpha; });
      }
      s.for_each([&](Vertex v) { dense[v] = std::clamp(dense[v], kProbLow, kProbHigh); });
      return;
    }
    case Variant::kProduct:
      for (const auto& c : spec.children()) sample_rec(g, c, source, dense);
      return;
  }
}

nlohmann::json to_json_rec(const DistributionSpec& spec) {
  nlohmann::json j;
  j["version"] = kSpecVersion;
  j["variant"] = variant_name(spec.variant());
  j["universe"] = spec.universe();
  j["domain"] = spec.domain().members();
  j["params"] = nlohmann::json::object();
  j["children"] = nlohmann::json::array();
  if (spec.variant() == Variant::kBlended) {
    j["params"]["beta"] = spec.beta();
    j["params"]["order"] = spec.order();
  }
  for (const auto& c : spec.children()) j["children"].push_back(to_json_rec(c));
  return j;
}

VertexSet domain_from_json(const nlohmann::json& j, std::size_t n) {
  VertexSet s(n);
  for (const auto& x : j.at("domain")) {
    const auto v = x.get<std::size_t>();
    if (v >= n) throw PreconditionError("spec JSON: domain vertex out of range");
    if (!s.insert(static_cast<Vertex>(v))) {
      throw PreconditionError("spec JSON: duplicate domain vertex");
    }
  }
  return s;
}

DistributionSpec from_json_rec(const nlohmann::json& j) {
  if (j.at("version").get<int>() != kSpecVersion) {
    throw PreconditionError("spec JSON: unsupported version");
  }
  const auto n = j.at("universe").get<std::size_t>();
  const auto variant = j.at("variant").get<std::string>();
  if (variant == "trivial") return DistributionSpec::trivial(domain_from_json(j, n));
  if (variant == "uniform_constant") {
    return DistributionSpec::uniform_constant(domain_from_json(j, n));
  }
  if (variant == "blended") {
    const auto& p = j.at("params");
    return DistributionSpec::blended(p.at("order").get<std::vector<Vertex>>(),
                                     domain_from_json(j, n), p.at("beta").get<double>());
  }
  if (variant == "product") {
    std::vector<DistributionSpec> children;
    for (const auto& c : j.at("children")) children.push_back(from_json_rec(c));
    auto spec = DistributionSpec::product(std::move(children));
    if (spec.universe() != n || !(spec.domain() == domain_from_json(j, n))) {
      throw PreconditionError("spec JSON: product domain disagrees with its children");
    }
    return spec;
  }
  throw PreconditionError("spec JSON: unknown variant '" + variant + "'");
}

}  // namespace

ProbVector::ProbVector(VertexSet domain, std::vector<double> dense)
    : domain_(std::move(domain)), values_(std::move(dense)) {
  if (values_.size() != domain_.universe()) {
    throw PreconditionError("ProbVector: dense size must equal the universe");
  }
  domain_.for_each([&](Vertex v) {
    if (!(values_[v] >= kProbLow && values_[v] <= kProbHigh)) {
      throw PreconditionError("ProbVector: coordinate outside [0.1, 0.9]");
    }
  });
}

double ProbVector::at(Vertex v) const {
  if (!domain_.contains(v)) throw PreconditionError("ProbVector: query outside domain");
  return values_[v];
}

const char* variant_name(Variant v) {
  switch (v) {
    case Variant::kTrivial: return "trivial";
    case Variant::kUniformConstant: return "uniform_constant";
    case Variant::kBlended: return "blended";
    case Variant::kProduct: return "product";
  }
  return "?";
}

DistributionSpec DistributionSpec::trivial(VertexSet t) {
  DistributionSpec d;
  d.variant_ = Variant::kTrivial;
  d.domain_ = std::move(t);
  return d;
}

DistributionSpec DistributionSpec::uniform_constant(VertexSet t) {
  DistributionSpec d;
  d.variant_ = Variant::kUniformConstant;
  d.domain_ = std::move(t);
  return d;
}

DistributionSpec DistributionSpec::blended(std::vector<Vertex> order, VertexSet s,
                                           double beta) {
  if (order.empty()) throw PreconditionError("blended: U must be nonempty");
  if (!(beta > 0.0 && beta <= kMaxBeta)) {
    throw PreconditionError("blended: beta must lie in (0, 0.4]");
  }
  VertexSet seen(s.universe());
  for (Vertex u : order) {
    if (u >= s.universe()) throw PreconditionError("blended: vertex of U out of range");
    if (!seen.insert(u)) throw PreconditionError("blended: U has a repeated vertex");
  }
  DistributionSpec d;
  d.variant_ = Variant::kBlended;
  d.domain_ = std::move(s);
  d.order_ = std::move(order);
  d.beta_ = beta;
  return d;
}

DistributionSpec DistributionSpec::product(std::vector<DistributionSpec> children) {
  if (children.empty()) throw PreconditionError("product: needs at least one factor");
  VertexSet dom(children.front().universe());
  for (const auto& c : children) {
    if (c.universe() != dom.universe()) {
      throw PreconditionError("product: factors live on different universes");
    }
    if (dom.intersects(c.domain())) {
      throw PreconditionError("product: factor domains overlap");
    }
    dom = dom | c.domain();
  }
  DistributionSpec d;
  d.variant_ = Variant::kProduct;
  d.domain_ = std::move(dom);
  d.children_ = std::move(children);
  return d;
}

void sample_into(const Graph& g, const DistributionSpec& spec, UniformSource& source,
                 std::vector<double>& dense) {
  if (spec.universe() != g.order()) {
    throw PreconditionError("sample: spec universe differs from graph order");
  }
  dense.assign(g.order(), 0.0);
  sample_rec(g, spec, source, dense);
}

ProbVector sample(const Graph& g, const DistributionSpec& spec, UniformSource& source) {
  std::vector<double> dense;
  sample_into(g, spec, source, dense);
  return ProbVector(spec.domain(), std::move(dense));
}

double expected_degree_dense(const Graph& g, Vertex u, std::span<const double> p,
                             const VertexSet& s) {
  double sum = 0.0;
  for_each_neighbour_in(g, u, s, [&](Vertex v) { sum += p[v]; });
  return sum;
}

double expected_degree(const Graph& g, Vertex u, const ProbVector& p, const VertexSet& s) {
  if (p.universe() != g.order() || s.universe() != g.order() || u >= g.order()) {
    throw PreconditionError("expected_degree: size mismatch");
  }
  if (!s.is_subset_of(p.domain())) {
    throw PreconditionError("expected_degree: S is not inside the domain of p");
  }
  return expected_degree_dense(g, u, p.dense(), s);
}

VertexSet realize_subgraph(const Graph& g, const ProbVector& p, UniformSource& source) {
  if (p.universe() != g.order() || p.domain().size() != g.order()) {
    throw PreconditionError("realize_subgraph: p must be defined on every vertex");
  }
  VertexSet out(g.order());
  const auto d = p.dense();
  for (Vertex v = 0; v < g.order(); ++v)
    if (source.uniform() < d[v]) out.insert(v);
  return out;
}

std::string spec_to_json(const DistributionSpec& spec) { return to_json_rec(spec).dump(); }

DistributionSpec spec_from_json(const std::string& text) {
  try {
    return from_json_rec(nlohmann::json::parse(text));
  } catch (const nlohmann::json::exception& e) {
    throw PreconditionError(std::string("spec JSON: ") + e.what());
  }
}

}  // namespace ddeg
