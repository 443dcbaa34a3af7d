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

#include "qoverlap/qubit_geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "qoverlap/config.hpp"
#include "qoverlap/errors.hpp"

namespace qoverlap {

namespace {

constexpr double kPi = std::numbers::pi;

double safe_acos(double x) { return std::acos(std::clamp(x, -1.0, 1.0)); }

double triple_det(const Vec3 &a, const Vec3 &b, const Vec3 &c) { return a.dot(b.cross(c)); }

// Minimum-norm point of the affine hull of `pts`, if it lies in their convex
// hull (all barycentric weights >= -eps).
std::optional<Vec3> hull_candidate(std::span<const Vec3> pts) {
    constexpr double eps = 1e-12;
    if (pts.size() == 1) return pts[0];
    const Vec3 &a = pts[0];
    if (pts.size() == 2) {
        Vec3 e = pts[1] - a;
        double ee = e.squaredNorm();
        if (ee < 1e-24) return std::nullopt;
        double t = -a.dot(e) / ee;
        if (t < -eps || t > 1.0 + eps) return std::nullopt;
        return Vec3(a + t * e);
    }
    Vec3 e1 = pts[1] - a;
    Vec3 e2 = pts[2] - a;
    Eigen::Matrix2d g;
    g << e1.dot(e1), e1.dot(e2), e2.dot(e1), e2.dot(e2);
    Eigen::Vector2d rhs(-a.dot(e1), -a.dot(e2));
    if (std::abs(g.determinant()) < 1e-20) return std::nullopt;
    Eigen::Vector2d t = g.inverse() * rhs;
    if (t[0] < -eps || t[1] < -eps || t[0] + t[1] > 1.0 + eps) return std::nullopt;
    return Vec3(a + t[0] * e1 + t[1] * e2);
}

void require_qubit(const PureState &p, const char *where) {
    if (p.dim() != 2) throw DomainError(std::string(where) + ": states must be qubits");
}

// The three inequalities on a triple; returns the index of the first failure
// (0, 1, 2) or -1 when all hold.
int first_failed_inequality(double a, double b, double c) {
    const double ta = safe_acos(a);
    const double tb = safe_acos(b);
    const double tc = safe_acos(c);
    const double floor = kPi / 2.0 - kTol.angle_inequality;
    if (ta + tb < floor) return 0;
    if (ta + tc < floor) return 1;
    if (tb + tc < floor) return 2;
    return -1;
}

}  // namespace

std::optional<BlochVector> hemisphere_witness(std::span<const BlochVector> vs) {
    if (vs.empty()) throw DomainError("hemisphere_witness: empty input");
    std::vector<Vec3> pts;
    pts.reserve(vs.size());
    for (const auto &v : vs) {
        if (std::abs(v.norm() - 1.0) > kTol.bloch_norm) throw DomainError("hemisphere_witness: vectors must be unit");
        pts.push_back(v.vec());
    }

    // The minimum-norm point p of conv(vs) is supported by at most three of
    // the points and satisfies p . v >= |p|^2 for every v.
    const std::size_t n = pts.size();
    std::optional<Vec3> best;
    auto consider = [&](std::span<const Vec3> subset) {
        auto p = hull_candidate(subset);
        if (!p) return;
        const double pp = p->squaredNorm();
        for (const auto &v : pts) {
            if (p->dot(v) < pp - 1e-12) return;
        }
        if (!best || pp < best->squaredNorm()) best = p;
    };
    std::array<Vec3, 3> buf;
    for (std::size_t i = 0; i < n; ++i) {
        buf[0] = pts[i];
        consider(std::span<const Vec3>(buf.data(), 1));
        for (std::size_t j = i + 1; j < n; ++j) {
            buf[1] = pts[j];
            consider(std::span<const Vec3>(buf.data(), 2));
            for (std::size_t k = j + 1; k < n; ++k) {
                buf[2] = pts[k];
                consider(std::span<const Vec3>(buf.data(), 3));
            }
        }
    }
    // No supported candidate means the origin lies inside the hull.
    if (!best || best->norm() <= kTol.hemisphere_margin) return std::nullopt;
    Vec3 w = best->normalized();
    for (const auto &v : pts) {
        if (w.dot(v) <= kTol.hemisphere_margin) return std::nullopt;
    }
    return BlochVector(w);
}

bool great_circle_test(const BlochVector &v1, const BlochVector &v2, const BlochVector &v3) {
    return std::abs(triple_det(v1.vec(), v2.vec(), v3.vec())) <= kTol.great_circle;
}

bool qubit_triple_antidist(const PureState &p1, const PureState &p2, const PureState &p3) {
    require_qubit(p1, "qubit_triple_antidist");
    require_qubit(p2, "qubit_triple_antidist");
    require_qubit(p3, "qubit_triple_antidist");
    if (!great_circle_test(bloch_from_qubit(p1), bloch_from_qubit(p2), bloch_from_qubit(p3))) return false;
    return first_failed_inequality(overlap_abs(p1, p2), overlap_abs(p1, p3), overlap_abs(p2, p3)) < 0;
}

QubitAntidistPovm antidist_povm_qubit(const PureState &p1, const PureState &p2, const PureState &p3) {
    require_qubit(p1, "antidist_povm_qubit");
    require_qubit(p2, "antidist_povm_qubit");
    require_qubit(p3, "antidist_povm_qubit");
    const Vec3 v1 = bloch_from_qubit(p1).vec();
    const Vec3 v2 = bloch_from_qubit(p2).vec();
    const Vec3 v3 = bloch_from_qubit(p3).vec();
    constexpr double same = 1e-9;
    if ((v1 - v2).norm() < same || (v1 - v3).norm() < same || (v2 - v3).norm() < same) {
        throw DomainError("antidist_povm_qubit: states must be pairwise distinct");
    }
    if (std::abs(triple_det(v1, v2, v3)) > kTol.great_circle) {
        throw DomainError("antidist_povm_qubit: states do not lie on a common great circle");
    }
    static const char *kNames[] = {"acos(a) + acos(b) >= pi/2", "acos(a) + acos(c) >= pi/2",
                                   "acos(b) + acos(c) >= pi/2"};
    int failed = first_failed_inequality(overlap_abs(p1, p2), overlap_abs(p1, p3), overlap_abs(p2, p3));
    if (failed >= 0) {
        throw DomainError(std::string("antidist_povm_qubit: triple is not anti-distinguishable, ") +
                          kNames[failed] + " fails");
    }

    // Canonical frame: p1 on +z, p2 at angle nu in (0, pi] on the +x side.
    const Vec3 ez = v1;
    Vec3 ex;
    Vec3 perp2 = v2 - v2.dot(ez) * ez;
    if (perp2.norm() > same) {
        ex = perp2.normalized();
    } else {
        // p2 antipodal to p1: orient the frame so that p3 sits on the -x side.
        ex = -(v3 - v3.dot(ez) * ez).normalized();
    }
    auto planar_angle = [&](const Vec3 &v) { return std::atan2(v.dot(ex), v.dot(ez)); };
    const double nu = std::abs(planar_angle(v2));
    double nu_prime = -planar_angle(v3);
    if (nu_prime <= 0.0) nu_prime += 2.0 * kPi;

    const double denom = std::sin(nu) + std::sin(nu_prime) - std::sin(nu + nu_prime);
    std::array<double, 3> gamma = {-2.0 * std::sin(nu + nu_prime) / denom, 2.0 * std::sin(nu_prime) / denom,
                                   2.0 * std::sin(nu) / denom};

    // Effects are built from the in-plane images of the vectors so that
    // completeness is exact even for nearly coplanar input.
    auto in_plane = [&](double angle) { return Vec3(std::cos(angle) * ez + std::sin(angle) * ex); };
    const std::array<Vec3, 3> planar = {in_plane(0.0), in_plane(nu), in_plane(-nu_prime)};
    std::vector<CMatrix> effects;
    effects.reserve(3);
    for (int k = 0; k < 3; ++k) {
        // gamma_k |psi_k-bar><psi_k-bar| = gamma_k (I - v_k . sigma) / 2
        const Vec3 &v = planar[k];
        CMatrix e(2, 2);
        e(0, 0) = 1.0 - v.z();
        e(1, 1) = 1.0 + v.z();
        e(0, 1) = Complex(-v.x(), v.y());
        e(1, 0) = Complex(-v.x(), -v.y());
        effects.push_back(0.5 * gamma[k] * e);
    }
    return QubitAntidistPovm{gamma, nu, nu_prime, Povm(std::move(effects))};
}

bool theorem3_nonepistemic_test(const PureState &psi, const PureState &phi, const PureState &chi1,
                                const PureState &chi2) {
    require_qubit(psi, "theorem3_nonepistemic_test");
    require_qubit(phi, "theorem3_nonepistemic_test");
    require_qubit(chi1, "theorem3_nonepistemic_test");
    require_qubit(chi2, "theorem3_nonepistemic_test");
    const Vec3 vp = bloch_from_qubit(psi).vec();
    const Vec3 vf = bloch_from_qubit(phi).vec();
    const Vec3 v1 = bloch_from_qubit(chi1).vec();
    const Vec3 v2 = bloch_from_qubit(chi2).vec();
    if (std::abs(triple_det(vp, vf, v1)) > kTol.great_circle) return false;
    if (std::abs(triple_det(vp, vf, v2)) > kTol.great_circle) return false;

    const double a = overlap_abs(psi, phi);
    if (!(a > kTol.overlap_positive)) return false;
    const double b = overlap_abs(psi, chi1);
    const double c = overlap_abs(phi, chi1);
    const double d = overlap_abs(psi, chi2);
    const double e = overlap_abs(phi, chi2);
    const double ta = safe_acos(a), tb = safe_acos(b), tc = safe_acos(c), td = safe_acos(d), te = safe_acos(e);
    const double floor = kPi / 2.0 - kTol.angle_inequality;
    return ta + tb >= floor && ta + tc >= floor && tb + tc >= floor && ta + td >= floor && ta + te >= floor &&
           td + te >= floor;
}

}  // namespace qoverlap
