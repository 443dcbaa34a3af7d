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

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "qoverlap/cli.hpp"
#include "qoverlap/io.hpp"

namespace py = pybind11;
using namespace qoverlap;

namespace {

// States arrive as complex vectors (pure) or complex matrices (mixed).
std::vector<DensityMatrix> densities(const std::vector<CMatrix> &states) {
    std::vector<DensityMatrix> out;
    out.reserve(states.size());
    for (const auto &s : states) {
        if (s.cols() == 1) {
            out.push_back(DensityMatrix::from_pure(PureState::normalized(s.col(0))));
        } else {
            out.emplace_back(s);
        }
    }
    return out;
}

std::vector<PureState> pures(const std::vector<CVector> &vs) {
    std::vector<PureState> out;
    out.reserve(vs.size());
    for (const auto &v : vs) out.push_back(PureState::normalized(v));
    return out;
}

// (states, alphas, beta) triples.
using PrepSpec = std::tuple<std::vector<CVector>, std::vector<std::uint64_t>, std::uint64_t>;

std::vector<MixedPreparation> preparations(const std::vector<PrepSpec> &specs) {
    std::vector<MixedPreparation> out;
    for (const auto &[states, alphas, beta] : specs) out.emplace_back(pures(states), alphas, beta);
    return out;
}

std::string json_text(const io::Json &j) { return j.dump(); }

SampleScheme scheme_from(const std::string &s) {
    if (s == "uniform") return SampleScheme::UniformRandom;
    if (s == "stratified") return SampleScheme::Stratified;
    throw DomainError("unknown sampling scheme '" + s + "'");
}

}  // namespace

PYBIND11_MODULE(_qoverlap, m) {
    m.doc() = "Anti-distinguishability and epistemic-overlap toolkit (native core)";

    auto base = py::register_exception<Error>(m, "Error", PyExc_ValueError);
    py::register_exception<StructuralError>(m, "StructuralError", base.ptr());
    py::register_exception<DomainError>(m, "DomainError", base.ptr());
    py::register_exception<RangeError>(m, "RangeError", base.ptr());
    py::register_exception<CapabilityError>(m, "CapabilityError", base.ptr());
    py::register_exception<ConvergenceError>(m, "ConvergenceError", base.ptr());

    m.def(
        "antidist_sdp_json",
        [](const std::vector<CMatrix> &states, double gap_tolerance) {
            return json_text(io::to_json(antidist_sdp(densities(states), gap_tolerance)));
        },
        py::arg("states"), py::arg("gap_tolerance") = kTol.sdp_gap);
    m.def(
        "quantum_overlap",
        [](const std::vector<CMatrix> &states, double gap_tolerance) {
            return quantum_overlap(densities(states), gap_tolerance);
        },
        py::arg("states"), py::arg("gap_tolerance") = kTol.sdp_gap);
    m.def(
        "is_perfectly_antidist",
        [](const std::vector<CMatrix> &states, double tol) { return is_perfectly_antidist(densities(states), tol); },
        py::arg("states"), py::arg("tol") = kTol.perfect_antidist);
    m.def("pair_overlap_pure", [](const CVector &a, const CVector &b) {
        return pair_overlap_pure(PureState::normalized(a), PureState::normalized(b));
    });
    m.def("trace_distance", [](const CMatrix &a, const CMatrix &b) {
        return trace_distance(DensityMatrix(a), DensityMatrix(b));
    });
    m.def("bloch_from_qubit", [](const CVector &v) { return bloch_from_qubit(PureState::normalized(v)).vec(); });
    m.def("mub_bases", [](int d, int count) {
        std::vector<std::vector<CVector>> out;
        for (const auto &b : mub_bases(d, count)) {
            std::vector<CVector> basis;
            for (const auto &s : b) basis.push_back(s.amplitudes());
            out.push_back(std::move(basis));
        }
        return out;
    });

    m.def("qubit_triple_antidist", [](const CVector &a, const CVector &b, const CVector &c) {
        return qubit_triple_antidist(PureState::normalized(a), PureState::normalized(b), PureState::normalized(c));
    });
    m.def("antidist_povm_qubit_json", [](const CVector &a, const CVector &b, const CVector &c) {
        return json_text(io::to_json(
            antidist_povm_qubit(PureState::normalized(a), PureState::normalized(b), PureState::normalized(c))));
    });
    m.def("hemisphere_witness", [](const std::vector<Vec3> &vs) -> std::optional<Vec3> {
        std::vector<BlochVector> bv(vs.begin(), vs.end());
        auto w = hemisphere_witness(bv);
        if (!w) return std::nullopt;
        return w->vec();
    });

    m.def("lemma1_check", [](const std::vector<std::vector<double>> &sets) {
        auto r = lemma1_check(sets);
        return py::make_tuple(r.lhs, r.rhs, r.holds);
    });
    m.def("johnston_criterion", [](const std::vector<CVector> &states) { return johnston_criterion(pures(states)); });
    m.def("caves_criterion", py::overload_cast<double, double, double>(&caves_criterion));
    m.def("corollary5_bound", &corollary5_bound);
    m.def("theorem7_avg_ratio_bound", &theorem7_avg_ratio_bound);
    m.def("theorem8_bound", &theorem8_bound, py::arg("n"), py::arg("d"));
    m.def("psi_epistemic_ratio_bound", &psi_epistemic_ratio_bound);
    m.def("lewis_threshold", [](const CVector &a, const CVector &b, int d) {
        return lewis_threshold(PureState::normalized(a), PureState::normalized(b), d);
    });
    m.def("s_witness", [](const std::vector<CMatrix> &states, const std::vector<std::vector<CMatrix>> &measurements) {
        std::vector<Povm> ms;
        for (const auto &effects : measurements) ms.emplace_back(effects);
        auto r = s_witness(densities(states), ms);
        return py::make_tuple(r.s, r.ratio_bound);
    });
    m.def("theorem5_bound", [](const PrepSpec &rho0, const std::vector<PrepSpec> &rhos) {
        auto p0 = preparations({rho0});
        return theorem5_bound(p0.front(), preparations(rhos));
    });
    m.def(
        "classify_json",
        [](const std::vector<PrepSpec> &preps, bool confirm_with_sdp, unsigned threads) {
            ClassifyOptions opts;
            opts.confirm_with_sdp = confirm_with_sdp;
            opts.threads = threads;
            py::gil_scoped_release release;
            return json_text(io::to_json(classify(preparations(preps), opts)));
        },
        py::arg("preparations"), py::arg("confirm_with_sdp") = true, py::arg("threads") = 0);

    m.def("ks_overlap_pair_closed", [](const CVector &a, const CVector &b) {
        return ks_overlap_pair_closed(PureState::normalized(a), PureState::normalized(b));
    });
    m.def(
        "ks_overlap_pure",
        [](const std::vector<CVector> &states, std::size_t samples, std::uint64_t seed, const std::string &scheme) {
            auto e = ks_overlap_pure(pures(states), SphereSample(samples, seed, scheme_from(scheme)));
            return py::make_tuple(e.estimate, e.std_error);
        },
        py::arg("states"), py::arg("samples") = kDefaultSphereSamples, py::arg("seed") = 0,
        py::arg("scheme") = "uniform");
    m.def(
        "ks_overlap_mixed",
        [](const std::vector<PrepSpec> &preps, std::size_t samples, std::uint64_t seed, const std::string &scheme) {
            auto e = ks_overlap_mixed(preparations(preps), SphereSample(samples, seed, scheme_from(scheme)));
            return py::make_tuple(e.estimate, e.std_error);
        },
        py::arg("preparations"), py::arg("samples") = kDefaultSphereSamples, py::arg("seed") = 0,
        py::arg("scheme") = "uniform");
    m.def("theorem6_overlap", &theorem6_overlap);

    m.def("run_cli", [](const std::vector<std::string> &args) {
        std::ostringstream out, err;
        int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
    });
}
