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

#include "qoverlap/ks_model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "qoverlap/errors.hpp"
#include "qoverlap/qubit_geometry.hpp"

namespace qoverlap {

namespace {

constexpr double kPi = std::numbers::pi;

// SplitMix64 finalizer, used as a stateless counter-based generator.
std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Uniform in (0, 1) from stream position `counter` of `seed`.
double unit_open(std::uint64_t seed, std::uint64_t counter) {
    std::uint64_t bits = mix64(mix64(seed) ^ (counter * 0xd1b54a32d192ed03ULL));
    return (static_cast<double>(bits >> 11) + 0.5) * 0x1.0p-53;
}

// Accumulates in fixed-size blocks so the rounding is independent of N's
// history and the sums stay accurate at N = 1e6.
template <typename F>
McEstimate integrate(const SphereSample &sample, F &&f) {
    constexpr std::size_t kBlock = 4096;
    const auto &pts = sample.points();
    const std::size_t n = pts.size();
    if (n == 0) throw DomainError("integrate: empty sample");
    double sum = 0.0;
    double sum_sq = 0.0;
    for (std::size_t start = 0; start < n; start += kBlock) {
        double s = 0.0;
        double s2 = 0.0;
        const std::size_t end = std::min(n, start + kBlock);
        for (std::size_t j = start; j < end; ++j) {
            double v = f(pts[j]);
            s += v;
            s2 += v * v;
        }
        sum += s;
        sum_sq += s2;
    }
    const double nn = static_cast<double>(n);
    const double mean = sum / nn;
    const double var = n > 1 ? std::max(0.0, (sum_sq - nn * mean * mean) / (nn - 1.0)) : 0.0;
    return {4.0 * kPi * mean, 4.0 * kPi * std::sqrt(var / nn)};
}

std::vector<Vec3> bloch_vectors(std::span<const PureState> states, const char *where) {
    std::vector<Vec3> out;
    out.reserve(states.size());
    for (const auto &s : states) {
        if (s.dim() != 2) throw DomainError(std::string(where) + ": states must be qubits");
        out.push_back(bloch_from_qubit(s).vec());
    }
    return out;
}

}  // namespace

std::string_view to_string(SampleScheme s) {
    return s == SampleScheme::Stratified ? "stratified" : "uniform";
}

SphereSample::SphereSample(std::size_t n, std::uint64_t seed, SampleScheme scheme) : seed_(seed), scheme_(scheme) {
    if (n == 0) throw DomainError("SphereSample: need at least one point");
    points_.resize(n);
    const double nn = static_cast<double>(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::uint64_t base = 4 * static_cast<std::uint64_t>(i);
        Vec3 p;
        if (scheme == SampleScheme::UniformRandom) {
            // Box-Muller on two independent pairs; the fourth normal is unused.
            const double r1 = std::sqrt(-2.0 * std::log(unit_open(seed, base)));
            const double t1 = 2.0 * kPi * unit_open(seed, base + 1);
            const double r2 = std::sqrt(-2.0 * std::log(unit_open(seed, base + 2)));
            const double t2 = 2.0 * kPi * unit_open(seed, base + 3);
            p = Vec3(r1 * std::cos(t1), r1 * std::sin(t1), r2 * std::cos(t2));
            // Probability zero, but keep the invariant unconditional.
            if (p.norm() < 1e-300) p = Vec3(0.0, 0.0, 1.0);
            p.normalize();
        } else {
            const double z = -1.0 + 2.0 * (static_cast<double>(i) + unit_open(seed, base)) / nn;
            const double phi = 2.0 * kPi * unit_open(seed, base + 1);
            const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
            p = Vec3(r * std::cos(phi), r * std::sin(phi), z);
            p.normalize();
        }
        points_[i] = p;
    }
}

double ks_density(const BlochVector &v, const Vec3 &lambda) {
    return std::max(0.0, v.vec().dot(lambda)) / kPi;
}

McEstimate ks_overlap_pure(std::span<const PureState> states, const SphereSample &sample) {
    if (states.empty()) throw DomainError("ks_overlap_pure: no states");
    const std::vector<Vec3> vs = bloch_vectors(states, "ks_overlap_pure");
    return integrate(sample, [&](const Vec3 &lam) {
        double m = std::numeric_limits<double>::infinity();
        for (const auto &v : vs) m = std::min(m, v.dot(lam));
        return std::max(0.0, m) / kPi;
    });
}

double ks_overlap_pair_closed(const PureState &a, const PureState &b) {
    if (a.dim() != 2 || b.dim() != 2) throw DomainError("ks_overlap_pair_closed: states must be qubits");
    const double o = overlap_abs(a, b);
    return 1.0 - std::sqrt(std::max(0.0, 1.0 - o * o));
}

McEstimate ks_overlap_mixed(std::span<const MixedPreparation> preps, const SphereSample &sample) {
    if (preps.empty()) throw DomainError("ks_overlap_mixed: no preparations");
    struct Term {
        Vec3 v;
        double weight;
    };
    std::vector<std::vector<Term>> terms;
    for (const auto &p : preps) {
        const std::vector<Vec3> vs = bloch_vectors(p.pures(), "ks_overlap_mixed");
        std::vector<Term> t;
        for (std::size_t i = 0; i < vs.size(); ++i) {
            if (p.alphas()[i] == 0) continue;
            t.push_back({vs[i], static_cast<double>(p.alphas()[i]) / static_cast<double>(p.beta())});
        }
        terms.push_back(std::move(t));
    }
    return integrate(sample, [&](const Vec3 &lam) {
        double m = std::numeric_limits<double>::infinity();
        for (const auto &t : terms) {
            double mu = 0.0;
            for (const auto &term : t) mu += term.weight * std::max(0.0, term.v.dot(lam));
            m = std::min(m, mu);
        }
        return m / kPi;
    });
}

double theorem6_overlap(double c1_abs, double c1p_abs) {
    constexpr double slack = 1e-12;
    for (double c : {c1_abs, c1p_abs}) {
        if (!(c >= -slack && c <= 1.0 + slack)) throw DomainError("theorem6_overlap: inputs must lie in [0, 1]");
    }
    auto g = [](double c) {
        c = std::clamp(c, 0.0, 1.0);
        return std::sqrt(1.0 - c * c) + c;
    };
    return 2.0 - 0.5 * (g(c1_abs) + g(c1p_abs));
}

Theorem6Minimum theorem6_minimize(double step) {
    if (!(step > 0.0) || step > 1.0) throw DomainError("theorem6_minimize: step must lie in (0, 1]");
    const long long cells = static_cast<long long>(std::llround(1.0 / step));
    Theorem6Minimum best{std::numeric_limits<double>::infinity(), 0.0, 0.0};
    for (long long i = 0; i <= cells; ++i) {
        const double c = std::min(1.0, static_cast<double>(i) * step);
        for (long long j = 0; j <= cells; ++j) {
            const double cp = std::min(1.0, static_cast<double>(j) * step);
            const double v = theorem6_overlap(c, cp);
            if (v < best.value) best = {v, c, cp};
        }
    }
    return best;
}

bool hemisphere_positivity(std::span<const PureState> states) {
    if (states.empty()) throw DomainError("hemisphere_positivity: no states");
    const std::vector<Vec3> vs = bloch_vectors(states, "hemisphere_positivity");
    std::vector<BlochVector> bv;
    bv.reserve(vs.size());
    for (const auto &v : vs) bv.emplace_back(v);
    return hemisphere_witness(bv).has_value();
}

double max_bloch_angle(std::span<const PureState> states) {
    const std::vector<Vec3> vs = bloch_vectors(states, "max_bloch_angle");
    double best = 0.0;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        for (std::size_t j = i + 1; j < vs.size(); ++j) {
            best = std::max(best, std::acos(std::clamp(vs[i].dot(vs[j]), -1.0, 1.0)));
        }
    }
    return best;
}

}  // namespace qoverlap
