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

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "qoverlap/config.hpp"
#include "qoverlap/quantum_core.hpp"

namespace qoverlap {

// ---------------------------------------------------------------------------
// Combinatorial inequality between a minimum of sums and a sum of minima.

struct Lemma1Result {
    /// min_k sum_i a_{i|k}
    double lhs;
    /// sum over tuples (i_1..i_n) of min_k a_{i_k|k}
    double rhs;
    bool holds;
};

/// Evaluates both sides for n sets of non-negative numbers. Ragged sets are
/// padded with zeros. Runs in O(N log N) for N total entries, without tuple
/// enumeration. Throws DomainError on negative or non-finite entries or when
/// `sets` is empty.
Lemma1Result lemma1_check(const std::vector<std::vector<double>> &sets);

// ---------------------------------------------------------------------------
// Decomposition bound on the common epistemic overlap.

/// Overlap assigned to one tuple of pure states, one state from each
/// preparation.
using TupleOverlap = std::function<double(std::span<const PureState>)>;

/// One term of the decomposition bound.
struct DecompositionTuple {
    std::vector<std::size_t> indices;
    /// prod_k alpha_{i_k|k}
    double weight;
};

/// The tuples with non-zero weight and the prefactor lcm(beta)^(n-1) / prod beta.
struct Decomposition {
    double prefactor;
    std::vector<DecompositionTuple> tuples;
};

/// Enumerates the tuples in lexicographic order. Throws StructuralError on
/// fewer than two preparations or mixed dimensions, RangeError when the
/// number of tuples exceeds `tuple_cap` or lcm(beta) overflows.
Decomposition decompose(std::span<const MixedPreparation> preps, std::size_t tuple_cap = kDefaultTupleCap);

/// prefactor * sum over tuples of weight * tuple_overlap(tuple states).
double theorem1_bound(std::span<const MixedPreparation> preps, const TupleOverlap &tuple_overlap,
                      std::size_t tuple_cap = kDefaultTupleCap);

/// A preparation with integer weights approximating real convex weights.
struct RationalizedPreparation {
    MixedPreparation prep;
    /// max_i |alpha_i / beta - w_i|
    double max_weight_error;
};

/// Smallest beta <= max_beta whose largest-remainder apportionment matches
/// `weights` within 1e-12, or otherwise the beta with the least error.
/// Weights must be non-negative and sum to 1 within 1e-9.
RationalizedPreparation rationalize_weights(std::vector<PureState> pures, const std::vector<double> &weights,
                                            std::uint64_t max_beta = 1000);

// ---------------------------------------------------------------------------
// Sufficient criteria for perfect anti-distinguishability of pure states.

/// Every pairwise |<i|j>| <= (1/sqrt2) sqrt((N-2)/(N-1)). Requires N >= 3.
bool johnston_criterion(std::span<const PureState> states);
double johnston_threshold(std::size_t n);

/// x1 + x2 + x3 < 1 and (x1 + x2 + x3 - 1)^2 >= 4 x1 x2 x3 for squared
/// overlaps of a pure triple. Throws RangeError outside [0, 1].
bool caves_criterion(double x1, double x2, double x3);

/// Caves criterion on the squared pairwise overlaps of three pure states.
bool caves_criterion(const PureState &a, const PureState &b, const PureState &c);

// ---------------------------------------------------------------------------
// Closed-form bounds.

/// d - sqrt(d (d - 1)), evaluated without cancellation. Requires d >= 2.
double corollary5_bound(int d);

/// 1 + (3 / 2d) sum_j sum_{(p, q)} (1 - A_Q(psi_j, p, q)), where (p, q) runs
/// over ordered pairs of distinct pure states drawn from all of `rhos`.
///
/// Every preparation must be the uniform mixture of d = dim pure states.
/// Triples passing the Caves criterion contribute 0; the rest use the SDP
/// primal value, which keeps the result an upper bound.
double theorem5_bound(const MixedPreparation &rho0, std::span<const MixedPreparation> rhos);

/// 1/d for d >= 4 prime or d = 4.
double theorem7_avg_ratio_bound(int d);

/// 8 d^(1/(d-2)) / n^((d-3)/(d-2)) for d >= 4, n >= 1.
double theorem8_bound(long long n, int d);

/// 2/d for d >= 4 prime or d = 4.
double psi_epistemic_ratio_bound(int d);

/// |<psi|phi>|^2 > (d-1)/d.
bool lewis_threshold(const PureState &psi, const PureState &phi, int d);

// ---------------------------------------------------------------------------
// Parity-oblivious witness.

struct SWitnessResult {
    double s;
    double ratio_bound;
};

/// S = (1/8) sum_{x0 x1} sum_y p(x_y | rho_{x0 x1}, M_y) for states ordered
/// 00, 01, 10, 11 and two binary measurements, together with the bound
/// 2 (1 - S) / (1 - D_Q(rho0, rho1)) where rho0 = (rho00 + rho11)/2 and
/// rho1 = (rho01 + rho10)/2.
///
/// Throws StructuralError on wrong counts or dimensions and WitnessUndefined
/// when D_Q >= 1 - kTol.witness_distinguishable.
SWitnessResult s_witness(std::span<const DensityMatrix> states, std::span<const Povm> measurements);

}  // namespace qoverlap
