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

#include <cstddef>

namespace qoverlap {

/// Every numerical tolerance used by the library, in one place.
///
/// Operations read the values from `kTol`. Functions that expose a tolerance
/// argument default to the matching field here.
struct Tolerances {
    // States and operators.
    double state_norm = 1e-12;
    double hermitian = 1e-12;
    double trace = 1e-12;
    double density_min_eig = -1e-10;
    double povm = 1e-9;
    double bloch_norm = 1e-12;
    double bloch_roundtrip = 1e-10;
    double mub_overlap = 1e-10;
    double metric = 1e-10;

    // Anti-distinguishability SDP.
    double sdp_gap = 1e-6;
    double perfect_antidist = 1e-7;
    double dual_feasibility = 1e-8;

    // Qubit geometry.
    double great_circle = 1e-9;
    double angle_inequality = 1e-9;
    double hemisphere_margin = 1e-9;
    double overlap_positive = 1e-9;

    // Criteria and classification.
    double category = 1e-6;
    double lemma1 = 1e-12;
    double caves = 1e-12;
    double johnston = 1e-12;
    double lewis = 1e-12;
    double witness_distinguishable = 1e-9;
};

inline constexpr Tolerances kTol{};

/// Default cap on the number of pure-state tuples enumerated by the
/// decomposition bound.
inline constexpr std::size_t kDefaultTupleCap = 100000;

}  // namespace qoverlap
