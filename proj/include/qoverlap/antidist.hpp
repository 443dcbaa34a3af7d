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

#include <span>
#include <string>
#include <vector>

#include "qoverlap/config.hpp"
#include "qoverlap/quantum_core.hpp"

namespace qoverlap {

/// Solution of the anti-distinguishability SDP
///
///     primal:  min  sum_x Tr(rho_x M_x)   s.t.  M_x >= 0,  sum_x M_x = I
///     dual:    max  Tr(Y)                 s.t.  Y <= rho_x  for every x
///
/// Both `povm` and `dual_certificate` are feasible (the latter exactly, after
/// a uniform shift), so `primal_value` is an upper bound and `dual_value` a
/// lower bound on the optimum. `gap` is their difference.
struct SdpResult {
    double a_q;
    Povm povm;
    CMatrix dual_certificate;
    double primal_value;
    double dual_value;
    double gap;
    int iterations = 0;
    std::vector<std::string> warnings;
};

/// Anti-distinguishability A_Q = 1 - primal_value / n of `states`, with an
/// optimal POVM and a dual certificate.
///
/// Requires n >= 2 states of equal dimension and gap_tolerance > 0. Throws
/// StructuralError on mismatched dimensions, DomainError on bad arguments and
/// ConvergenceError (carrying the best certified bounds) when the gap cannot
/// be brought below `gap_tolerance`.
SdpResult antidist_sdp(std::span<const DensityMatrix> states, double gap_tolerance = kTol.sdp_gap);

/// n (1 - A_Q), clamped to [0, 1].
double quantum_overlap(std::span<const DensityMatrix> states, double gap_tolerance = kTol.sdp_gap);

/// Closed form of the quantum overlap of two pure states, 1 - sqrt(1 - |<a|b>|^2).
double pair_overlap_pure(const PureState &a, const PureState &b);

/// True iff the minimum error sum is certified to be at most `tol`.
bool is_perfectly_antidist(std::span<const DensityMatrix> states, double tol = kTol.perfect_antidist);

/// max(0, -min_x lambda_min(rho_x - Y)): how far Y is from dual feasibility.
double dual_infeasibility(std::span<const DensityMatrix> states, const CMatrix &y);

std::vector<DensityMatrix> to_densities(std::span<const PureState> states);

}  // namespace qoverlap
