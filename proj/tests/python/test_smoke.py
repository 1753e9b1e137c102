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

import math

import pytest

import severi_census as sc


def test_kite_count_genus_one():
    census = sc.kite_count(0, 4, 1)
    assert census["total"] == 2
    assert census["total"] == sc.genus1_closed_form(0, 4)


def test_general_lower_bound_triangle():
    assert sc.general_lower_bound([(0, 0), (4, 1), (0, 3)], 1)["total"] == 2
    assert sc.general_lower_bound([(0, 0), (4, 1), (0, 3)], 2)["total"] == 1


def test_admissible_pairs():
    assert sc.admissible_pairs(2, 4, 3) == [(1, 0), (1, 2)]


def test_kite_triangulation_lattices():
    out = sc.kite_triangulation(1, 3, 1, 1, 0)
    assert out["curve"]["genus"] == 1
    assert out["lattices"]["M"]["index"] == 1
    assert len(out["triangulation"]["triangles"]) == 4


def test_roots_and_passport():
    roots = sc.poly_roots([-8, 12, -6, 1])
    assert len(roots) == 1
    assert abs(roots[0][0] - 2) < 1e-9 and roots[0][1] == 3
    assert sc.passport(0, 5, sc.chebyshev(5)) == [[2, 2, 1], [2, 2, 1]]
    assert sc.expected_passport(1, 1, 0, 3) == [[2, 1], [2, 1]]


def test_nodal_partition():
    n = sc.nodal_partition(0, 3, [0, -3, 0, 1], 1, 1)
    assert (n["delta1"], n["delta2"], n["kappa"], n["genus"]) == (1, 1, 0, 0)


def test_errors_are_raised():
    with pytest.raises(sc.SeveriError, match="GenusOutOfRange"):
        sc.kite_count(1, 3, 9)


def test_cli_entry_point():
    code, doc = sc.run(["genus1-check", "--k", "1", "--kprime", "3"])
    assert code == 0
    assert doc["payload"] == {"closed_form": 2, "enumerated": 2, "match": True}
    code, doc = sc.run(["kite-count", "--bogus"])
    assert code == 2 and doc["status"] == "error"
