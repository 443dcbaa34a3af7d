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
#include <span>
#include <string_view>
#include <vector>

#include "qoverlap/quantum_core.hpp"

namespace qoverlap {

enum class SampleScheme { UniformRandom, Stratified };

std::string_view to_string(SampleScheme s);

/// Deterministic points on the unit sphere.
///
/// UniformRandom normalizes three Gaussians drawn from a counter-based
/// generator keyed by (seed, point index). Stratified places one point in
/// each of N equal-area bands in z with a random height and azimuth inside
/// the band. The same (seed, N, scheme) always gives the same points.
class SphereSample {
  public:
    SphereSample(std::size_t n, std::uint64_t seed, SampleScheme scheme = SampleScheme::UniformRandom);

    std::size_t size() const { return points_.size(); }
    std::uint64_t seed() const { return seed_; }
    SampleScheme scheme() const { return scheme_; }
    const std::vector<Vec3> &points() const { return points_; }

  private:
    std::vector<Vec3> points_;
    std::uint64_t seed_;
    SampleScheme scheme_;
};

inline constexpr std::size_t kDefaultSphereSamples = 1'000'000;

struct McEstimate {
    double estimate;
    double std_error;
};

/// (1/pi) max(0, v . lambda)
double ks_density(const BlochVector &v, const Vec3 &lambda);

/// Monte Carlo estimate of the integral of min_k mu(lambda | psi_k) over the
/// sphere. Throws DomainError for non-qubit input or empty `states`.
McEstimate ks_overlap_pure(std::span<const PureState> states, const SphereSample &sample);

/// 1 - sqrt(1 - |<a|b>|^2)
double ks_overlap_pair_closed(const PureState &a, const PureState &b);

/// Monte Carlo estimate of the integral of
/// min_k (1/beta_k) sum_i alpha_{i|k} mu(lambda | psi_{i|k}).
McEstimate ks_overlap_mixed(std::span<const MixedPreparation> preps, const SphereSample &sample);

/// 2 - (sqrt(1 - c^2) + c + sqrt(1 - c'^2) + c') / 2 for c, c' in [0, 1].
double theorem6_overlap(double c1_abs, double c1p_abs);

struct Theorem6Minimum {
    double value;
    double c1_abs;
    double c1p_abs;
};

/// Minimum of theorem6_overlap over the grid {0, h, 2h, ..., 1}^2.
Theorem6Minimum theorem6_minimize(double step = 1e-4);

/// True iff the Bloch vectors lie strictly inside one open hemisphere, the
/// condition under which every support hemisphere shares a neighbourhood of
/// the hemisphere axis and the model's common overlap is positive. For two
/// states this is the same as a Bloch angle below pi.
bool hemisphere_positivity(std::span<const PureState> states);

/// Largest pairwise Bloch angle.
double max_bloch_angle(std::span<const PureState> states);

}  // namespace qoverlap
