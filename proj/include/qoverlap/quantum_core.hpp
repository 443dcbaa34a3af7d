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
#include <vector>

#include "qoverlap/linalg.hpp"

namespace qoverlap {

/// A normalized state vector of dimension d >= 2.
///
/// The global phase is fixed on construction: the first amplitude with
/// modulus above the norm tolerance is made real and non-negative. Two
/// PureStates describing the same ray therefore compare equal amplitude by
/// amplitude.
class PureState {
  public:
    /// Throws StructuralError unless `amplitudes` has unit norm (within
    /// `kTol.state_norm`) and at least two components.
    explicit PureState(CVector amplitudes);

    /// Rescales a nonzero vector to unit norm.
    static PureState normalized(CVector amplitudes);
    /// Computational basis vector |k> in dimension d.
    static PureState basis(int dim, int k);

    int dim() const { return static_cast<int>(amplitudes_.size()); }
    const CVector &amplitudes() const { return amplitudes_; }
    Complex operator[](int i) const { return amplitudes_[i]; }

    /// |psi><psi|
    CMatrix projector() const { return amplitudes_ * amplitudes_.adjoint(); }

    bool approx_equal(const PureState &other, double tol = 1e-10) const;

  private:
    CVector amplitudes_;
};

/// Hermitian, positive semidefinite, unit-trace matrix.
class DensityMatrix {
  public:
    /// Validates the invariants and stores the exact Hermitian part.
    explicit DensityMatrix(const CMatrix &entries);

    static DensityMatrix from_pure(const PureState &psi);
    static DensityMatrix maximally_mixed(int dim);

    int dim() const { return static_cast<int>(entries_.rows()); }
    const CMatrix &matrix() const { return entries_; }

  private:
    CMatrix entries_;
};

/// A specific convex decomposition rho = (1/beta) sum_i alpha_i |psi_i><psi_i|
/// with integer weights.
class MixedPreparation {
  public:
    /// Throws StructuralError on empty input, mixed dimensions, a length
    /// mismatch between `pures` and `alphas`, beta == 0 or sum(alphas) != beta.
    MixedPreparation(std::vector<PureState> pures, std::vector<std::uint64_t> alphas,
                     std::uint64_t beta);

    static MixedPreparation pure(const PureState &psi);
    /// Equal-weight mixture of `pures` (alpha_i = 1, beta = m).
    static MixedPreparation uniform(std::vector<PureState> pures);

    int dim() const { return pures_.front().dim(); }
    std::size_t size() const { return pures_.size(); }
    const std::vector<PureState> &pures() const { return pures_; }
    const std::vector<std::uint64_t> &alphas() const { return alphas_; }
    std::uint64_t beta() const { return beta_; }
    const DensityMatrix &density() const { return density_; }

  private:
    std::vector<PureState> pures_;
    std::vector<std::uint64_t> alphas_;
    std::uint64_t beta_;
    DensityMatrix density_;
};

/// A point of the Bloch ball, |v| <= 1.
class BlochVector {
  public:
    BlochVector(double x, double y, double z);
    explicit BlochVector(const Vec3 &v) : BlochVector(v.x(), v.y(), v.z()) {}

    double x() const { return v_.x(); }
    double y() const { return v_.y(); }
    double z() const { return v_.z(); }
    const Vec3 &vec() const { return v_; }
    double norm() const { return v_.norm(); }
    double dot(const BlochVector &o) const { return v_.dot(o.v_); }

  private:
    Vec3 v_;
};

/// A measurement: PSD effects summing to the identity.
class Povm {
  public:
    /// Throws StructuralError unless every effect is Hermitian and PSD and the
    /// effects sum to the identity, all within `kTol.povm`.
    explicit Povm(std::vector<CMatrix> effects);

    std::size_t size() const { return effects_.size(); }
    int dim() const { return static_cast<int>(effects_.front().rows()); }
    const std::vector<CMatrix> &effects() const { return effects_; }
    const CMatrix &operator[](std::size_t k) const { return effects_[k]; }

    /// Born probability Tr(rho E_k).
    double probability(const DensityMatrix &rho, std::size_t k) const;

  private:
    std::vector<CMatrix> effects_;
};

DensityMatrix density_from_preparation(const MixedPreparation &prep);

/// |<a|b>|
double overlap_abs(const PureState &a, const PureState &b);

/// (1/2) Tr|r - s|
double trace_distance(const DensityMatrix &r, const DensityMatrix &s);

/// Optimal two-outcome guessing probability, (1 + T(r, s)) / 2.
double distinguishability(const DensityMatrix &r, const DensityMatrix &s);

/// Conventions: |0> -> +z, |+> -> +x, |+i> -> +y.
BlochVector bloch_from_qubit(const PureState &psi);
/// Inverse of bloch_from_qubit on the unit sphere. Throws DomainError if
/// |v| differs from 1 by more than `kTol.bloch_norm`.
PureState qubit_from_bloch(const BlochVector &v);

using Basis = std::vector<PureState>;

/// `count` mutually unbiased bases in dimension d. Supported dimensions are
/// primes and 4. Basis 0 is always the computational basis.
///
/// Throws CapabilityError for other d and RangeError if count > d + 1 or
/// count < 1.
std::vector<Basis> mub_bases(int dim, int count);

bool is_prime(int n);

}  // namespace qoverlap
