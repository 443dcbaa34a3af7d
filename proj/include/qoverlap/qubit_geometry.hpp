// Copyright 2026 The qoverlap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <array>
#include <optional>
#include <span>

#include "qoverlap/quantum_core.hpp"

namespace qoverlap {

/// A unit direction w with w . v_i > kTol.hemisphere_margin for every i, or
/// nullopt if the vectors do not fit strictly inside one open hemisphere.
///
/// The returned w is the direction of the minimum-norm point of the convex
/// hull of `vs`, which maximizes the smallest margin. Throws DomainError on
/// empty input or non-unit vectors.
std::optional<BlochVector> hemisphere_witness(std::span<const BlochVector> vs);

/// |det[v1 v2 v3]| <= kTol.great_circle.
bool great_circle_test(const BlochVector &v1, const BlochVector &v2, const BlochVector &v3);

/// Geometric decision of perfect anti-distinguishability for three qubit
/// states: a common great circle and
///     acos(a) + acos(b) >= pi/2,  acos(a) + acos(c) >= pi/2,  acos(b) + acos(c) >= pi/2
/// with a = |<1|2>|, b = |<1|3>|, c = |<2|3>|.
bool qubit_triple_antidist(const PureState &p1, const PureState &p2, const PureState &p3);

/// Weights and effects of the anti-distinguishing measurement
/// M_k = gamma_k |psi_k-bar><psi_k-bar|.
struct QubitAntidistPovm {
    std::array<double, 3> gamma;
    /// Planar angle from p1 to p2, in (0, pi].
    double nu;
    /// Planar angle from p1 to p3 measured the other way round, in (0, 2 pi).
    double nu_prime;
    Povm povm;
};

/// Builds the three-outcome POVM that never reports the label of the measured
/// state. Throws DomainError if two inputs coincide or the triple is not
/// anti-distinguishable (naming the inequality that failed).
QubitAntidistPovm antidist_povm_qubit(const PureState &p1, const PureState &p2, const PureState &p3);

/// Non-epistemic test for {|psi>, |phi>, mixture of |chi1> and |chi2>}: all four
/// on a common great circle, |<psi|phi>| > 0, and the six pairwise angle
/// inequalities. Equivalent to
///     qubit_triple_antidist(psi, phi, chi1) && qubit_triple_antidist(psi, phi, chi2)
///     && overlap_abs(psi, phi) > kTol.overlap_positive.
bool theorem3_nonepistemic_test(const PureState &psi, const PureState &phi, const PureState &chi1,
                                const PureState &chi2);

}  // namespace qoverlap
