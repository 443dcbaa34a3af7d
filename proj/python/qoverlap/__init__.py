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

"""Anti-distinguishability, quantum overlaps and epistemic-overlap bounds.

States are numpy arrays: a 1-D complex vector for a pure state or a 2-D
complex matrix for a density matrix. A preparation is a tuple
``(states, alphas, beta)`` with integer weights.
"""

import json

from ._qoverlap import (  # noqa: F401
    CapabilityError,
    ConvergenceError,
    DomainError,
    Error,
    RangeError,
    StructuralError,
    bloch_from_qubit,
    caves_criterion,
    corollary5_bound,
    hemisphere_witness,
    is_perfectly_antidist,
    johnston_criterion,
    ks_overlap_mixed,
    ks_overlap_pair_closed,
    ks_overlap_pure,
    lemma1_check,
    lewis_threshold,
    mub_bases,
    pair_overlap_pure,
    psi_epistemic_ratio_bound,
    quantum_overlap,
    qubit_triple_antidist,
    run_cli,
    s_witness,
    theorem5_bound,
    theorem6_overlap,
    theorem7_avg_ratio_bound,
    theorem8_bound,
    trace_distance,
)
from . import _qoverlap


def antidist_sdp(states, gap_tolerance=1e-6):
    """SDP result as a dict (a_q, primal_value, dual_value, gap, povm, ...)."""
    return json.loads(_qoverlap.antidist_sdp_json(states, gap_tolerance))


def antidist_povm_qubit(a, b, c):
    """Gamma weights, frame angles and effects of the anti-distinguishing POVM."""
    return json.loads(_qoverlap.antidist_povm_qubit_json(a, b, c))


def classify(preparations, confirm_with_sdp=True, threads=0):
    """Classification report as a dict."""
    return json.loads(_qoverlap.classify_json(preparations, confirm_with_sdp, threads))
