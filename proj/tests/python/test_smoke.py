# Copyright 2026 The qoverlap Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import json
import math

import numpy as np
import pytest

import qoverlap

ZERO = np.array([1, 0], dtype=complex)
ONE = np.array([0, 1], dtype=complex)
PLUS = np.array([1, 1], dtype=complex) / math.sqrt(2)
MINUS = np.array([1, -1], dtype=complex) / math.sqrt(2)
FLOOR = 2 - math.sqrt(2)


def density(v):
    return np.outer(v, v.conj())


def mixed_triple():
    return [([ZERO], [1], 1), ([PLUS], [1], 1), ([ONE, MINUS], [1, 1], 2)]


def test_mixed_triple_sdp_and_classification():
    rho3 = (density(ONE) + density(MINUS)) / 2
    res = qoverlap.antidist_sdp([density(ZERO), density(PLUS), rho3])
    assert abs(res["a_q"] - 0.9613) <= 1e-3
    assert res["gap"] <= 1e-6
    assert len(res["povm"]["effects"]) == 3

    report = qoverlap.classify(mixed_triple())
    assert report["category"] == "CertifiedNonEpistemic"
    assert report["omega_e_upper"] == 0
    assert abs(report["omega_q"] - 0.1161) <= 2e-3


def test_pure_vectors_and_matrices_are_both_accepted():
    a = qoverlap.quantum_overlap([ZERO, PLUS])
    b = qoverlap.quantum_overlap([density(ZERO), density(PLUS)])
    assert a == pytest.approx(b, abs=1e-9)
    assert a == pytest.approx(qoverlap.pair_overlap_pure(ZERO, PLUS), abs=1e-6)
    assert qoverlap.is_perfectly_antidist([ZERO, PLUS, ONE])


def test_qubit_geometry():
    w = 2 * math.pi / 3
    trine = [np.array([math.cos(k * w / 2), math.sin(k * w / 2)], dtype=complex) for k in range(3)]
    assert qoverlap.qubit_triple_antidist(*trine)
    povm = qoverlap.antidist_povm_qubit(*trine)
    assert povm["gamma"] == pytest.approx([2 / 3] * 3, abs=1e-10)
    assert qoverlap.hemisphere_witness([[0, 0, 1], [1, 0, 0]]) is not None
    assert qoverlap.hemisphere_witness([[0, 0, 1], [0, 0, -1]]) is None
    with pytest.raises(qoverlap.DomainError):
        qoverlap.antidist_povm_qubit(ZERO, ZERO, PLUS)


def test_bounds_and_criteria():
    assert qoverlap.corollary5_bound(2) == pytest.approx(FLOOR, abs=1e-12)
    assert qoverlap.theorem7_avg_ratio_bound(5) == pytest.approx(0.2)
    assert qoverlap.theorem8_bound(1000, 4) == pytest.approx(0.50596, abs=1e-5)
    assert qoverlap.caves_criterion(0.2, 0.2, 0.2)
    assert not qoverlap.caves_criterion(0.5, 0.5, 0.5)
    lhs, rhs, holds = qoverlap.lemma1_check([[0.5, 0.5], [0.5, 0.5]])
    assert (lhs, rhs, holds) == (pytest.approx(1.0), pytest.approx(2.0), True)
    with pytest.raises(qoverlap.DomainError):
        qoverlap.theorem7_avg_ratio_bound(6)


def test_mub_family_bound_is_one():
    bases = qoverlap.mub_bases(5, 3)
    preps = [(b, [1] * 5, 5) for b in bases]
    assert qoverlap.theorem5_bound(preps[0], preps[1:]) == 1.0


def test_ks_overlaps():
    est, se = qoverlap.ks_overlap_pure([ZERO, PLUS], samples=200000, seed=3)
    exact = qoverlap.ks_overlap_pair_closed(ZERO, PLUS)
    assert abs(est - exact) <= 4 * se
    est, se = qoverlap.ks_overlap_mixed(
        [([ZERO, ONE], [1, 1], 2), ([PLUS, MINUS], [1, 1], 2)], samples=200000, seed=3)
    assert abs(est - FLOOR) <= 4 * se
    assert qoverlap.theorem6_overlap(math.sqrt(0.5), math.sqrt(0.5)) == pytest.approx(FLOOR)


def test_errors_map_to_value_error():
    with pytest.raises(ValueError):
        qoverlap.mub_bases(6, 2)
    with pytest.raises(qoverlap.CapabilityError):
        qoverlap.mub_bases(6, 2)


def test_cli_entry_point():
    code, out, _ = qoverlap.run_cli(["bounds", "--which", "corollary5", "--dim", "2"])
    assert code == 0
    assert json.loads(out)["value"] == pytest.approx(FLOOR, abs=1e-12)
    code, out, _ = qoverlap.run_cli(["mub", "--dim", "6", "--count", "2"])
    assert code == 2
    assert json.loads(out)["error"]["kind"] == "capability"
