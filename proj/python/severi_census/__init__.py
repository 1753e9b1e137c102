# Copyright 2026 The severi-census Authors. All Rights Reserved.
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

"""Python bindings for the severi-census library."""

import json

from . import _core
from ._core import (
    SeveriError,
    admissible_pairs,
    chebyshev,
    expected_passport,
    genus1_closed_form,
    nodal_partition,
    passport,
    poly_roots,
)

__all__ = [
    "SeveriError",
    "admissible_pairs",
    "chebyshev",
    "expected_passport",
    "general_lower_bound",
    "genus1_closed_form",
    "kite_count",
    "kite_triangulation",
    "nodal_partition",
    "passport",
    "poly_roots",
    "run",
]


def run(args):
    """Run a CLI subcommand. Returns (exit_code, document)."""
    code, text = _core.run(list(args))
    return code, json.loads(text)


def general_lower_bound(vertices, genus):
    return json.loads(_core.general_lower_bound(vertices, genus))


def kite_count(k, k_prime, genus):
    return json.loads(_core.kite_count(k, k_prime, genus))


def kite_triangulation(k, k_prime, genus, index, kappa):
    return json.loads(_core.kite_triangulation(k, k_prime, genus, index, kappa))
