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

#include <doctest.h>

#include <Eigen/Eigenvalues>
#include <numbers>

#include "helpers.hpp"
#include "qoverlap/antidist.hpp"
#include "qoverlap/errors.hpp"
#include "qoverlap/examples.hpp"
#include "qoverlap/qubit_geometry.hpp"

using namespace qoverlap;
using namespace qoverlap::testing;

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<BlochVector> blochs(std::initializer_list<Vec3> vs) {
    std::vector<BlochVector> out;
    for (const auto &v : vs) out.emplace_back(v.normalized());
    return out;
}

// max over a dense set of directions w of min_k w . v_k.
double scan_hemisphere_margin(const std::vector<BlochVector> &vs) {
    constexpr int n = 40000;
    const double golden = kPi * (3.0 - std::sqrt(5.0));
    double best = -2.0;
    for (int i = 0; i < n; ++i) {
        double z = 1.0 - 2.0 * (i + 0.5) / n;
        double r = std::sqrt(1.0 - z * z);
        Vec3 w(r * std::cos(golden * i), r * std::sin(golden * i), z);
        double worst = 2.0;
        for (const auto &v : vs) worst = std::min(worst, w.dot(v.vec()));
        best = std::max(best, worst);
    }
    return best;
}

// Smallest slack in the pairwise angle inequalities; nonnegative means they hold.
double angle_slack(const PureState &a, const PureState &b, const PureState &c) {
    auto ang = [](const PureState &x, const PureState &y) {
        return std::acos(std::min(1.0, std::abs(x.amplitudes().dot(y.amplitudes()))));
    };
    double ab = ang(a, b), ac = ang(a, c), bc = ang(b, c);
    return std::min({ab + ac, ab + bc, ac + bc}) - kPi / 2.0;
}

PureState on_circle(const std::pair<Vec3, Vec3> &plane, double angle) {
    return qubit_at(std::cos(angle) * plane.first + std::sin(angle) * plane.second);
}

double sdp_primal(const PureState &a, const PureState &b, const PureState &c) {
    return antidist_sdp(to_densities(std::vector<PureState>{a, b, c})).primal_value;
}

double min_eig(const CMatrix &m) {
    Eigen::SelfAdjointEigenSolver<CMatrix> es(m);
    return es.eigenvalues().minCoeff();
}

}  // namespace

TEST_CASE("hemisphere witness examples") {
    SUBCASE("two orthogonal directions") {
        auto vs = blochs({Vec3::UnitZ(), Vec3::UnitX()});
        auto w = hemisphere_witness(vs);
        REQUIRE(w);
        CHECK(w->dot(vs[0]) == doctest::Approx(kSqrtHalf).epsilon(1e-12));
        CHECK(w->dot(vs[1]) == doctest::Approx(kSqrtHalf).epsilon(1e-12));
    }
    SUBCASE("octant") {
        auto vs = blochs({Vec3::UnitX(), Vec3::UnitY(), Vec3::UnitZ()});
        auto w = hemisphere_witness(vs);
        REQUIRE(w);
        CHECK((w->vec() - Vec3(1, 1, 1).normalized()).norm() <= 1e-12);
    }
    SUBCASE("single vector") {
        auto vs = blochs({Vec3(0.3, -0.4, 0.5)});
        auto w = hemisphere_witness(vs);
        REQUIRE(w);
        CHECK((w->vec() - vs[0].vec()).norm() <= 1e-12);
    }
    SUBCASE("antipodal pair") { CHECK_FALSE(hemisphere_witness(blochs({Vec3::UnitZ(), -Vec3::UnitZ()}))); }
    SUBCASE("orthogonal pair on the boundary of a half-space") {
        // z and x together with -z: only closed hemispheres contain them.
        CHECK_FALSE(hemisphere_witness(blochs({Vec3::UnitZ(), Vec3::UnitX(), -Vec3::UnitZ()})));
    }
    SUBCASE("trine") {
        std::vector<BlochVector> vs;
        for (const auto &s : examples::trine()) vs.push_back(bloch_from_qubit(s));
        CHECK_FALSE(hemisphere_witness(vs));
        CHECK(scan_hemisphere_margin(vs) <= 1e-3);
    }
    SUBCASE("tetrahedron") {
        CHECK_FALSE(hemisphere_witness(blochs({Vec3(1, 1, 1), Vec3(1, -1, -1), Vec3(-1, 1, -1), Vec3(-1, -1, 1)})));
    }
    SUBCASE("invalid input") {
        std::vector<BlochVector> none;
        CHECK_THROWS_AS(hemisphere_witness(none), DomainError);
        std::vector<BlochVector> short_vec = {BlochVector(0.5, 0.0, 0.0)};
        CHECK_THROWS_AS(hemisphere_witness(short_vec), DomainError);
    }
}

TEST_CASE("hemisphere witness agrees with a dense direction scan") {
    std::mt19937_64 rng(41);
    int positive = 0, negative = 0;
    for (int trial = 0; trial < 300; ++trial) {
        int n = 2 + static_cast<int>(rng() % 5);
        // Bias half the sets towards a cap so both outcomes occur.
        Vec3 pole = random_unit(rng);
        std::vector<BlochVector> vs;
        for (int k = 0; k < n; ++k) {
            Vec3 v = random_unit(rng);
            if (trial % 2 == 0) v = (v + 1.5 * pole).normalized();
            vs.emplace_back(v);
        }
        double margin = scan_hemisphere_margin(vs);
        auto w = hemisphere_witness(vs);
        if (w) {
            for (const auto &v : vs) CHECK(w->dot(v) > 0.0);
        }
        if (margin > 0.02) {
            CHECK(w.has_value());
            ++positive;
        } else if (margin < -0.02) {
            CHECK_FALSE(w.has_value());
            ++negative;
        }
    }
    CHECK(positive > 50);
    CHECK(negative > 10);
}

TEST_CASE("great circle test") {
    CHECK(great_circle_test(BlochVector(0, 0, 1), BlochVector(1, 0, 0), BlochVector(0, 0, -1)));
    CHECK(great_circle_test(BlochVector(0, 0, 1), BlochVector(0, 0, 1), BlochVector(0, 1, 0)));
    CHECK_FALSE(great_circle_test(BlochVector(0, 0, 1), BlochVector(1, 0, 0), BlochVector(0, 1, 0)));
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 100; ++trial) {
        auto plane = random_plane(rng);
        std::uniform_real_distribution<double> ang(0.0, 2.0 * kPi);
        auto p = [&](double t) { return BlochVector(std::cos(t) * plane.first + std::sin(t) * plane.second); };
        CHECK(great_circle_test(p(ang(rng)), p(ang(rng)), p(ang(rng))));
    }
}

TEST_CASE("triple verdict examples") {
    auto z = PureState::basis(2, 0);
    auto o = PureState::basis(2, 1);
    auto p = examples::plus();
    CHECK(qubit_triple_antidist(z, p, o));
    // The trine is anti-distinguishable.
    auto t = examples::trine();
    CHECK(qubit_triple_antidist(t[0], t[1], t[2]));
    // Three states bunched together on a great circle are not.
    CHECK_FALSE(qubit_triple_antidist(z, examples::zx_state(0.2), examples::zx_state(0.4)));
    // Off the great circle.
    CVector yi(2);
    yi << kSqrtHalf, Complex(0.0, kSqrtHalf);
    CHECK_FALSE(qubit_triple_antidist(z, p, PureState(yi)));
    CHECK_THROWS_AS(qubit_triple_antidist(z, p, PureState::basis(3, 0)), DomainError);
}

TEST_CASE("triple verdict matches the SDP away from the decision boundary") {
    std::mt19937_64 rng(47);
    std::uniform_real_distribution<double> ang(0.0, 2.0 * kPi);
    int yes = 0, no = 0;
    for (int trial = 0; trial < 150; ++trial) {
        auto plane = random_plane(rng);
        auto a = on_circle(plane, ang(rng));
        auto b = on_circle(plane, ang(rng));
        auto c = on_circle(plane, ang(rng));
        double slack = angle_slack(a, b, c);
        if (std::abs(slack) < 1e-2) continue;
        bool verdict = qubit_triple_antidist(a, b, c);
        CHECK(verdict == (slack > 0));
        CHECK(verdict == (sdp_primal(a, b, c) <= 1e-7));
        (verdict ? yes : no)++;
    }
    for (int trial = 0; trial < 100; ++trial) {
        Vec3 u = random_unit(rng), v = random_unit(rng), w = random_unit(rng);
        if (std::abs(u.dot(v.cross(w))) < 0.05) continue;
        auto a = qubit_at(u), b = qubit_at(v), c = qubit_at(w);
        CHECK_FALSE(qubit_triple_antidist(a, b, c));
        CHECK(sdp_primal(a, b, c) > 1e-7);
    }
    CHECK(yes > 20);
    CHECK(no > 20);
}

TEST_CASE("gamma POVM for the trine") {
    auto t = examples::trine();
    auto r = antidist_povm_qubit(t[0], t[1], t[2]);
    for (double g : r.gamma) CHECK(std::abs(g - 2.0 / 3.0) <= 1e-10);
    CHECK(r.nu == doctest::Approx(2.0 * kPi / 3.0));
    CHECK(r.nu_prime == doctest::Approx(2.0 * kPi / 3.0));
    for (int k = 0; k < 3; ++k) {
        CHECK(std::abs((DensityMatrix::from_pure(t[k]).matrix() * r.povm[k]).trace()) <= 1e-12);
    }
}

TEST_CASE("gamma POVM on the boundary where one weight vanishes") {
    auto r = antidist_povm_qubit(PureState::basis(2, 0), examples::plus(), examples::minus());
    CHECK(std::abs(r.gamma[0]) <= 1e-12);
    CHECK(r.gamma[1] == doctest::Approx(1.0));
    CHECK(r.gamma[2] == doctest::Approx(1.0));
}

TEST_CASE("gamma POVM is a valid zero-error anti-distinguishing measurement") {
    std::mt19937_64 rng(53);
    std::uniform_real_distribution<double> ang(0.0, 2.0 * kPi);
    int tested = 0;
    while (tested < 200) {
        auto plane = random_plane(rng);
        std::array<PureState, 3> s = {on_circle(plane, ang(rng)), on_circle(plane, ang(rng)),
                                      on_circle(plane, ang(rng))};
        if (!qubit_triple_antidist(s[0], s[1], s[2])) continue;
        ++tested;
        auto r = antidist_povm_qubit(s[0], s[1], s[2]);
        CMatrix sum = CMatrix::Zero(2, 2);
        double err = 0.0;
        for (int k = 0; k < 3; ++k) {
            CHECK(r.gamma[k] >= -1e-9);
            CHECK(min_eig(r.povm[k]) >= -1e-9);
            sum += r.povm[k];
            err += (DensityMatrix::from_pure(s[k]).matrix() * r.povm[k]).trace().real();
        }
        CHECK((sum - CMatrix::Identity(2, 2)).cwiseAbs().maxCoeff() <= 1e-9);
        CHECK(std::abs(err) <= 1e-9);
        CHECK(r.nu > 0.0);
        CHECK(r.nu <= kPi + 1e-12);
        CHECK(r.nu_prime > 0.0);
        CHECK(r.nu_prime < 2.0 * kPi);
    }
}

TEST_CASE("gamma POVM rejects invalid triples") {
    auto z = PureState::basis(2, 0);
    auto p = examples::plus();
    CHECK_THROWS_AS(antidist_povm_qubit(z, z, p), DomainError);
    CHECK_THROWS_AS(antidist_povm_qubit(z, examples::zx_state(0.1), examples::zx_state(0.2)), DomainError);
    CVector yi(2);
    yi << kSqrtHalf, Complex(0.0, kSqrtHalf);
    CHECK_THROWS_AS(antidist_povm_qubit(z, p, PureState(yi)), DomainError);
    CHECK_THROWS_AS(antidist_povm_qubit(z, p, PureState::basis(3, 1)), DomainError);
}

TEST_CASE("four-state non-epistemic test") {
    auto z = PureState::basis(2, 0);
    auto o = PureState::basis(2, 1);
    auto p = examples::plus();
    auto m = examples::minus();
    CHECK(theorem3_nonepistemic_test(z, p, o, m));
    // Orthogonal psi and phi are excluded.
    CHECK_FALSE(theorem3_nonepistemic_test(z, o, p, m));
    // A repeated state breaks the angle inequalities.
    CHECK_FALSE(theorem3_nonepistemic_test(z, p, o, p));
}

TEST_CASE("four-state test decomposes into two triple verdicts") {
    std::mt19937_64 rng(59);
    std::uniform_real_distribution<double> ang(0.0, 2.0 * kPi);
    int positives = 0;
    for (int trial = 0; trial < 400; ++trial) {
        auto plane = random_plane(rng);
        auto psi = on_circle(plane, ang(rng));
        auto phi = on_circle(plane, ang(rng));
        auto c1 = on_circle(plane, ang(rng));
        auto c2 = on_circle(plane, ang(rng));
        if (std::abs(angle_slack(psi, phi, c1)) < 1e-6 || std::abs(angle_slack(psi, phi, c2)) < 1e-6) continue;
        bool expected = std::abs(psi.amplitudes().dot(phi.amplitudes())) > 1e-9 &&
                        qubit_triple_antidist(psi, phi, c1) && qubit_triple_antidist(psi, phi, c2);
        bool got = theorem3_nonepistemic_test(psi, phi, c1, c2);
        CHECK(got == expected);
        positives += got;
    }
    CHECK(positives > 10);
}

TEST_CASE("states in an open hemisphere are never anti-distinguishable") {
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 60; ++trial) {
        Vec3 pole = random_unit(rng);
        std::vector<PureState> states;
        std::vector<BlochVector> vs;
        for (int k = 0; k < 3; ++k) {
            Vec3 v = (random_unit(rng) + 1.2 * pole).normalized();
            states.push_back(qubit_at(v));
            vs.emplace_back(v);
        }
        auto w = hemisphere_witness(vs);
        if (!w) continue;
        double margin = 2.0;
        for (const auto &v : vs) margin = std::min(margin, w->dot(v));
        if (margin < 0.1) continue;
        CHECK_FALSE(qubit_triple_antidist(states[0], states[1], states[2]));
        CHECK(sdp_primal(states[0], states[1], states[2]) > 1e-7);
    }
}
