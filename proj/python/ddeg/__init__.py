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


"""Distinct degrees in induced subgraphs.

Thin wrapper over the C++ core. Vertex sets are lists of ints and
distribution specs are JSON strings.
"""

from ._core import (
    ConstructionError,
    Graph,
    PreconditionError,
    bad_pair,
    blended_bad_bound,
    f_exact,
    f_lower_greedy,
    hom_exact,
    least_squares,
    pressure,
    regularize,
    run_partition,
    sample,
    spec_blended,
    spec_product,
    spec_trivial,
    spec_uniform_constant,
    synthesize,
    tail_bound,
    theta_moment,
    turan_independent_set,
    verify_witness,
)

__all__ = [
    "ConstructionError",
    "Graph",
    "PreconditionError",
    "bad_pair",
    "blended_bad_bound",
    "f_exact",
    "f_lower_greedy",
    "hom_exact",
    "least_squares",
    "pressure",
    "regularize",
    "run_partition",
    "sample",
    "spec_blended",
    "spec_product",
    "spec_trivial",
    "spec_uniform_constant",
    "synthesize",
    "tail_bound",
    "theta_moment",
    "turan_independent_set",
    "verify_witness",
]

__version__ = "0.1.0"
