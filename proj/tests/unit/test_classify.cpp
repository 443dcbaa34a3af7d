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

#include "helpers.hpp"
#include "qoverlap/classify.hpp"
#include "qoverlap/errors.hpp"
#include "qoverlap/examples.hpp"
#include "qoverlap/io.hpp"

using namespace qoverlap;
using namespace qoverlap::testing;

namespace {

// Re-derivation of the category rule from the two overlaps.
Category expected_category(const ClassificationReport &r) {
    const double tol = 1e-6;
    if (r.omega_q <= tol) return Category::OrthogonalTrivial;
    if (r.omega_e_upper <= tol) {
        return r.omega_q >= 1.0 - tol ? Category::CertifiedFullyNonEpistemic : Category::CertifiedNonEpistemic;
    }
    if (r.omega_e_upper < r.omega_q - tol) return Category::NonMaximallyEpistemicWitness;
    return Category::Inconclusive;
}

void check_invariants(const ClassificationReport &r) {
    CHECK(r.omega_q >= 0.0);
    CHECK(r.omega_q <= 1.0);
    CHECK(r.omega_e_upper >= 0.0);
    if (r.diagnostics.empty()) CHECK(r.category == expected_category(r));
    for (const auto &c : r.tuple_certificates) {
        CHECK(c.overlap >= -1e-9);
        CHECK(c.a_q <= 1.0 + 1e-9);
        if (c.antidist) CHECK(c.overlap <= 1e-7);
    }
}

std::string as_json(const ClassificationReport &r) { return io::dump(io::to_json(r)); }

}  // namespace

TEST_CASE("mixed qubit triple is certified non-epistemic") {
    auto preps = examples::qubit_triple_with_mixture();
    auto r = classify(preps);
    CHECK(r.category == Category::CertifiedNonEpistemic);
    CHECK(std::abs(r.omega_q - 0.1161) <= 2e-3);
    CHECK(r.omega_e_upper == 0.0);
    REQUIRE(r.tuple_certificates.size() == 2);
    for (const auto &c : r.tuple_certificates) {
        CHECK(c.antidist);
        CHECK(c.method == TupleMethod::QubitGeometry);
        CHECK(c.sdp_confirmed);
    }
    CHECK(r.diagnostics.empty());
    check_invariants(r);
}

TEST_CASE("four qutrit bases are certified fully non-epistemic") {
    auto preps = examples::mub_mixtures(3, 4);
    auto r = classify(preps);
    CHECK(r.category == Category::CertifiedFullyNonEpistemic);
    CHECK(std::abs(r.omega_q - 1.0) <= 1e-6);
    CHECK(r.tuple_certificates.size() == 81);
    for (const auto &c : r.tuple_certificates) {
        CHECK(c.method == TupleMethod::Johnston);
        CHECK(c.sdp_confirmed);
    }
    check_invariants(r);
}

TEST_CASE("three bases in d = 5 are certified fully non-epistemic") {
    auto preps = examples::mub_mixtures(5, 3);
    auto r = classify(preps);
    CHECK(r.category == Category::CertifiedFullyNonEpistemic);
    CHECK(r.tuple_certificates.size() == 125);
    for (const auto &c : r.tuple_certificates) CHECK(c.method == TupleMethod::Caves);
    check_invariants(r);
}

TEST_CASE("orthogonal preparations are trivial") {
    std::vector<MixedPreparation> preps = {MixedPreparation::pure(PureState::basis(3, 0)),
                                           MixedPreparation::pure(PureState::basis(3, 1)),
                                           MixedPreparation::pure(PureState::basis(3, 2))};
    auto r = classify(preps);
    CHECK(r.category == Category::OrthogonalTrivial);
    check_invariants(r);
}

TEST_CASE("z and x basis mixtures witness non-maximal epistemicity") {
    std::vector<MixedPreparation> preps = {
        MixedPreparation::uniform({PureState::basis(2, 0), PureState::basis(2, 1)}),
        MixedPreparation::uniform({examples::plus(), examples::minus()})};
    auto r = classify(preps);
    CHECK(r.category == Category::NonMaximallyEpistemicWitness);
    CHECK(std::abs(r.omega_q - 1.0) <= 1e-6);
    CHECK(std::abs(r.omega_e_upper - (2.0 - std::sqrt(2.0))) <= 1e-9);
    for (const auto &c : r.tuple_certificates) CHECK(c.method == TupleMethod::PairClosedForm);
    check_invariants(r);
}

TEST_CASE("two non-orthogonal pure states are inconclusive") {
    std::vector<MixedPreparation> preps = {MixedPreparation::pure(PureState::basis(2, 0)),
                                           MixedPreparation::pure(examples::zx_state(1.0))};
    auto r = classify(preps);
    CHECK(r.category == Category::Inconclusive);
    CHECK(std::abs(r.omega_q - r.omega_e_upper) <= 1e-6);
    check_invariants(r);
}

TEST_CASE("tuple cap breach is reported as inconclusive") {
    auto preps = examples::mub_mixtures(3, 4);
    ClassifyOptions opts;
    opts.tuple_cap = 80;
    auto r = classify(preps, opts);
    CHECK(r.category == Category::Inconclusive);
    CHECK(r.omega_e_upper == 1.0);
    CHECK(r.tuple_certificates.empty());
    CHECK_FALSE(r.diagnostics.empty());
}

TEST_CASE("skipping confirmation leaves certificates unconfirmed") {
    auto preps = examples::mub_mixtures(5, 3);
    ClassifyOptions opts;
    opts.confirm_with_sdp = false;
    auto r = classify(preps, opts);
    CHECK(r.category == Category::CertifiedFullyNonEpistemic);
    for (const auto &c : r.tuple_certificates) CHECK_FALSE(c.sdp_confirmed);
}

TEST_CASE("reports do not depend on the thread count") {
    std::mt19937_64 rng(107);
    std::vector<std::vector<MixedPreparation>> cases = {examples::mub_mixtures(5, 3)};
    for (int trial = 0; trial < 4; ++trial) {
        std::vector<MixedPreparation> preps;
        for (int k = 0; k < 3; ++k) {
            preps.push_back(MixedPreparation({random_pure(rng, 2), random_pure(rng, 2)}, {1, 2}, 3));
        }
        cases.push_back(preps);
    }
    for (const auto &preps : cases) {
        ClassifyOptions one, many;
        one.threads = 1;
        many.threads = 3;
        auto a = classify(preps, one);
        auto b = classify(preps, many);
        CHECK(as_json(a) == as_json(b));
        check_invariants(a);
    }
}

TEST_CASE("random qubit preparations satisfy the report invariants") {
    std::mt19937_64 rng(109);
    for (int trial = 0; trial < 15; ++trial) {
        std::vector<MixedPreparation> preps;
        int n = 2 + static_cast<int>(rng() % 2);
        for (int k = 0; k < n; ++k) {
            int m = 1 + static_cast<int>(rng() % 2);
            std::vector<PureState> ps;
            for (int i = 0; i < m; ++i) ps.push_back(random_pure(rng, 2));
            preps.push_back(MixedPreparation::uniform(ps));
        }
        auto r = classify(preps);
        check_invariants(r);
    }
}

TEST_CASE("classify input validation") {
    std::vector<MixedPreparation> one = {MixedPreparation::pure(PureState::basis(2, 0))};
    CHECK_THROWS_AS(classify(one), StructuralError);
    std::vector<MixedPreparation> dims = {MixedPreparation::pure(PureState::basis(2, 0)),
                                          MixedPreparation::pure(PureState::basis(3, 0))};
    CHECK_THROWS_AS(classify(dims), StructuralError);
}

TEST_CASE("enum names round trip") {
    for (auto c : {Category::CertifiedFullyNonEpistemic, Category::CertifiedNonEpistemic,
                   Category::NonMaximallyEpistemicWitness, Category::Inconclusive, Category::OrthogonalTrivial}) {
        CHECK(category_from_string(to_string(c)) == c);
    }
    for (auto m : {TupleMethod::PairClosedForm, TupleMethod::QubitGeometry, TupleMethod::Caves, TupleMethod::Johnston,
                   TupleMethod::Sdp}) {
        CHECK(tuple_method_from_string(to_string(m)) == m);
    }
    CHECK_FALSE(category_from_string("Maybe"));
    CHECK_FALSE(tuple_method_from_string("guess"));
}
