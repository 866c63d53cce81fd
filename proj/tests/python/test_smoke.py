# Copyright 2026 The ddeg Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.


import math

import pytest

import ddeg


def test_graph_roundtrip():
    g = ddeg.Graph(5, [(0, 1), (1, 2), (2, 3), (3, 4)])
    assert g.order == 5
    assert g.edge_count == 4
    assert g.degree(2) == 2
    assert g.adjacent(3, 4) and not g.adjacent(0, 4)
    assert g.complement().complement() == g


def test_gnp_is_reproducible():
    assert ddeg.Graph.gnp(64, 0.5, 7) == ddeg.Graph.gnp(64, 0.5, 7)
    assert ddeg.Graph.gnp(64, 0.5, 7) != ddeg.Graph.gnp(64, 0.5, 8)


def test_oracles_on_small_graphs():
    path = ddeg.Graph(4, [(0, 1), (1, 2), (2, 3)])
    assert ddeg.hom_exact(path)["value"] == 2
    w = ddeg.f_exact(path)
    assert w["value"] == 2
    assert ddeg.verify_witness(path, w["host"], w["marked"])
    g = ddeg.Graph.gnp(9, 0.5, 3)
    assert ddeg.f_exact(g)["value"] == ddeg.f_exact(g.complement())["value"]
    assert ddeg.f_exact(g)["value"] <= g.max_degree() + 1


def test_size_limit_raises_value_error():
    with pytest.raises(ValueError):
        ddeg.f_exact(ddeg.Graph.gnp(40, 0.5, 1))


def test_trivial_spec_is_point_mass():
    g = ddeg.Graph.gnp(20, 0.5, 2)
    spec = ddeg.spec_trivial(20, list(range(20)))
    e = ddeg.bad_pair(g, spec, 0, 1, n_samples=100, seed=1)
    assert e["point"] == 1.0
    assert all(p == 0.5 for _, p in ddeg.sample(g, spec, seed=4))


def test_uniform_constant_gadget():
    n = 52
    g = ddeg.Graph(n, [(0, v) for v in range(2, n)])
    s = list(range(2, n))
    spec = ddeg.spec_uniform_constant(n, s)
    e = ddeg.bad_pair(g, spec, 0, 1, s=s, n_samples=20000, seed=9)
    assert abs(e["point"] - 2.5 / 50) <= 3 * e["half_width"]


def test_theta_moment_invariants():
    g = ddeg.Graph.gnp(128, 0.5, 5)
    view = ddeg.theta_moment(g, 3, m=16.0, lambda_=2.0)
    assert view["invariants_ok"]
    assert 3 in view["w_star"]


def test_pressure_and_synthesize_witnesses():
    g = ddeg.Graph.gnp(256, 0.5, 1)
    r = ddeg.pressure(g, 0.5, n_samples=100, trials=3, seed=1)
    assert r["target_met"]
    assert ddeg.verify_witness(g, r["witness"]["host"], r["witness"]["marked"])
    s = ddeg.synthesize(g, seed=1, n_samples=100, trials=3)
    assert s["trace"]
    assert s["witness"]["value"] >= 1
    assert ddeg.synthesize(g, seed=1, n_samples=100, trials=3) == s


def test_numeric_utilities():
    assert ddeg.tail_bound("chernoff_lower", mu=10, delta=0.5) == pytest.approx(
        math.exp(-0.25 * 10 / 2))
    fit = ddeg.least_squares([1, 2, 3, 4], [3, 5, 7, 9])
    assert fit["slope"] == pytest.approx(2.0)
    assert fit["intercept"] == pytest.approx(1.0)
