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

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "qoverlap/quantum_core.hpp"

namespace qoverlap::testing {

inline const double kSqrtHalf = std::sqrt(0.5);

inline CVector random_vector(std::mt19937_64 &rng, int d) {
    std::normal_distribution<double> n;
    CVector v(d);
    for (int i = 0; i < d; ++i) v[i] = Complex(n(rng), n(rng));
    return v;
}

inline PureState random_pure(std::mt19937_64 &rng, int d) { return PureState::normalized(random_vector(rng, d)); }

/// Random density matrix of the given rank (Ginibre construction).
inline DensityMatrix random_density(std::mt19937_64 &rng, int d, int rank) {
    std::normal_distribution<double> n;
    CMatrix a(d, rank);
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < rank; ++j) a(i, j) = Complex(n(rng), n(rng));
    }
    CMatrix r = a * a.adjoint();
    return DensityMatrix(r / r.trace().real());
}

inline Vec3 random_unit(std::mt19937_64 &rng) {
    std::normal_distribution<double> n;
    return Vec3(n(rng), n(rng), n(rng)).normalized();
}

/// Qubit state for a unit Bloch vector, written out independently of the
/// library map: cos(t/2)|0> + e^{i p} sin(t/2)|1>.
inline PureState qubit_at(const Vec3 &v) {
    const double t = std::acos(std::clamp(v.z(), -1.0, 1.0));
    const double p = std::atan2(v.y(), v.x());
    CVector a(2);
    a << std::cos(t / 2.0), std::polar(std::sin(t / 2.0), p);
    return PureState::normalized(a);
}

/// Orthonormal pair (e1, e2) spanning a random plane through the origin.
inline std::pair<Vec3, Vec3> random_plane(std::mt19937_64 &rng) {
    Vec3 a = random_unit(rng);
    Vec3 b = random_unit(rng);
    b = (b - b.dot(a) * a).normalized();
    return {a, b};
}

inline CMatrix pauli_projector(const Vec3 &v) {
    // (I + v . sigma) / 2
    CMatrix m(2, 2);
    m(0, 0) = 0.5 * (1.0 + v.z());
    m(1, 1) = 0.5 * (1.0 - v.z());
    m(0, 1) = 0.5 * Complex(v.x(), -v.y());
    m(1, 0) = 0.5 * Complex(v.x(), v.y());
    return m;
}

}  // namespace qoverlap::testing
