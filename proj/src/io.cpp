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

#include "qoverlap/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>

namespace qoverlap::io {

namespace {

const Json &field(const Json &j, const char *name) {
    if (!j.is_object()) throw FormatError(std::string("expected an object with field '") + name + "'");
    auto it = j.find(name);
    if (it == j.end()) throw FormatError(std::string("missing field '") + name + "'");
    return *it;
}

double number(const Json &j, const char *what) {
    if (!j.is_number()) throw FormatError(std::string(what) + " must be a number");
    return j.get<double>();
}

std::uint64_t unsigned_integer(const Json &j, const char *what) {
    if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0)) {
        throw FormatError(std::string(what) + " must be a non-negative integer");
    }
    return j.get<std::uint64_t>();
}

int dimension(const Json &j) {
    std::uint64_t d = unsigned_integer(field(j, "dim"), "dim");
    if (d < 2 || d > 4096) throw FormatError("dim must lie in [2, 4096]");
    return static_cast<int>(d);
}

Json number_array(std::initializer_list<double> xs) {
    Json a = Json::array();
    for (double x : xs) a.push_back(round12(x));
    return a;
}

}  // namespace

double round12(double x) {
    if (!std::isfinite(x)) return x;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    double r = std::strtod(buf, nullptr);
    return r == 0.0 ? 0.0 : r;
}

std::string dump(const Json &j) { return j.dump(2) + "\n"; }

// ---------------------------------------------------------------------------
// Output

Json to_json(Complex c) { return number_array({c.real(), c.imag()}); }

Json to_json(const CMatrix &m) {
    Json rows = Json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Json to_json(const PureState &s) {
    Json amps = Json::array();
    for (int i = 0; i < s.dim(); ++i) amps.push_back(to_json(s[i]));
    return Json{{"dim", s.dim()}, {"amplitudes", std::move(amps)}};
}

Json to_json(const DensityMatrix &r) { return Json{{"dim", r.dim()}, {"rows", to_json(r.matrix())}}; }

Json to_json(const MixedPreparation &p) {
    Json terms = Json::array();
    for (std::size_t i = 0; i < p.size(); ++i) {
        terms.push_back(Json{{"alpha", p.alphas()[i]}, {"state", to_json(p.pures()[i])}});
    }
    return Json{{"beta", p.beta()}, {"terms", std::move(terms)}};
}

Json to_json(const Povm &p) {
    Json effects = Json::array();
    for (const auto &e : p.effects()) effects.push_back(to_json(e));
    return Json{{"effects", std::move(effects)}};
}

Json to_json(const BlochVector &v) { return number_array({v.x(), v.y(), v.z()}); }

Json to_json(const SdpResult &r) {
    return Json{{"a_q", round12(r.a_q)},
                {"primal_value", round12(r.primal_value)},
                {"dual_value", round12(r.dual_value)},
                {"gap", round12(r.gap)},
                {"iterations", r.iterations},
                {"povm", to_json(r.povm)},
                {"dual_certificate", to_json(r.dual_certificate)},
                {"warnings", r.warnings}};
}

Json to_json(const TupleCertificate &c) {
    return Json{{"indices", c.indices},
                {"antidist", c.antidist},
                {"a_q", round12(c.a_q)},
                {"overlap", round12(c.overlap)},
                {"method", std::string(to_string(c.method))},
                {"sdp_confirmed", c.sdp_confirmed}};
}

Json to_json(const ClassificationReport &r) {
    Json certs = Json::array();
    for (const auto &c : r.tuple_certificates) certs.push_back(to_json(c));
    return Json{{"category", std::string(to_string(r.category))},
                {"omega_q", round12(r.omega_q)},
                {"omega_e_upper", round12(r.omega_e_upper)},
                {"weight_approximation_error", round12(r.weight_approximation_error)},
                {"tuple_certificates", std::move(certs)},
                {"diagnostics", r.diagnostics}};
}

Json to_json(const McEstimate &e) {
    return Json{{"estimate", round12(e.estimate)}, {"std_error", round12(e.std_error)}};
}

Json to_json(const SWitnessResult &r) { return Json{{"s", round12(r.s)}, {"ratio_bound", round12(r.ratio_bound)}}; }

Json to_json(const QubitAntidistPovm &p) {
    return Json{{"gamma", number_array({p.gamma[0], p.gamma[1], p.gamma[2]})},
                {"nu", round12(p.nu)},
                {"nu_prime", round12(p.nu_prime)},
                {"povm", to_json(p.povm)}};
}

Json to_json(const std::vector<Basis> &bases) {
    Json out = Json::array();
    for (const auto &b : bases) {
        Json basis = Json::array();
        for (const auto &s : b) basis.push_back(to_json(s));
        out.push_back(std::move(basis));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Input

Complex complex_from_json(const Json &j) {
    if (!j.is_array() || j.size() != 2) throw FormatError("a complex number must be [re, im]");
    return {number(j[0], "real part"), number(j[1], "imaginary part")};
}

CMatrix matrix_from_json(const Json &rows) {
    if (!rows.is_array() || rows.empty()) throw FormatError("a matrix must be a non-empty array of rows");
    const auto n = static_cast<Eigen::Index>(rows.size());
    CMatrix m(n, n);
    for (Eigen::Index r = 0; r < n; ++r) {
        const Json &row = rows[static_cast<std::size_t>(r)];
        if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n) throw FormatError("a matrix must be square");
        for (Eigen::Index c = 0; c < n; ++c) m(r, c) = complex_from_json(row[static_cast<std::size_t>(c)]);
    }
    return m;
}

PureState pure_from_json(const Json &j) {
    const int d = dimension(j);
    const Json &amps = field(j, "amplitudes");
    if (!amps.is_array() || static_cast<int>(amps.size()) != d) throw FormatError("amplitudes must have dim entries");
    CVector v(d);
    for (int i = 0; i < d; ++i) v[i] = complex_from_json(amps[static_cast<std::size_t>(i)]);
    const double norm = v.norm();
    if (!std::isfinite(norm) || std::abs(norm - 1.0) > kInputNormSlack) {
        throw FormatError("state norm " + std::to_string(norm) + " is not 1");
    }
    return PureState(v / norm);
}

DensityMatrix density_from_json(const Json &j) {
    const int d = dimension(j);
    CMatrix m = matrix_from_json(field(j, "rows"));
    if (m.rows() != d) throw FormatError("rows must be a dim x dim matrix");
    if (hermiticity_error(m) > kInputNormSlack) throw FormatError("density matrix is not Hermitian");
    m = hermitian_part(m);
    const double tr = m.trace().real();
    if (std::abs(tr - 1.0) > kInputNormSlack) throw FormatError("density matrix trace " + std::to_string(tr) + " is not 1");
    return DensityMatrix(m / tr);
}

DensityMatrix state_from_json(const Json &j) {
    if (j.is_object() && j.contains("amplitudes")) return DensityMatrix::from_pure(pure_from_json(j));
    if (j.is_object() && j.contains("rows")) return density_from_json(j);
    throw FormatError("a state needs 'amplitudes' or 'rows'");
}

MixedPreparation preparation_from_json(const Json &j) {
    if (j.is_object() && j.contains("amplitudes")) return MixedPreparation::pure(pure_from_json(j));
    const std::uint64_t beta = unsigned_integer(field(j, "beta"), "beta");
    const Json &terms = field(j, "terms");
    if (!terms.is_array() || terms.empty()) throw FormatError("terms must be a non-empty array");
    std::vector<PureState> pures;
    std::vector<std::uint64_t> alphas;
    for (const auto &t : terms) {
        alphas.push_back(unsigned_integer(field(t, "alpha"), "alpha"));
        pures.push_back(pure_from_json(field(t, "state")));
    }
    return MixedPreparation(std::move(pures), std::move(alphas), beta);
}

Povm povm_from_json(const Json &j) {
    const Json &effects = field(j, "effects");
    if (!effects.is_array() || effects.empty()) throw FormatError("effects must be a non-empty array");
    std::vector<CMatrix> out;
    for (const auto &e : effects) out.push_back(matrix_from_json(e));
    return Povm(std::move(out));
}

SdpResult sdp_result_from_json(const Json &j) {
    SdpResult r{number(field(j, "a_q"), "a_q"),
                povm_from_json(field(j, "povm")),
                matrix_from_json(field(j, "dual_certificate")),
                number(field(j, "primal_value"), "primal_value"),
                number(field(j, "dual_value"), "dual_value"),
                number(field(j, "gap"), "gap"),
                field(j, "iterations").get<int>(),
                field(j, "warnings").get<std::vector<std::string>>()};
    return r;
}

ClassificationReport report_from_json(const Json &j) {
    ClassificationReport r;
    auto cat = category_from_string(field(j, "category").get<std::string>());
    if (!cat) throw FormatError("unknown category");
    r.category = *cat;
    r.omega_q = number(field(j, "omega_q"), "omega_q");
    r.omega_e_upper = number(field(j, "omega_e_upper"), "omega_e_upper");
    r.weight_approximation_error = number(field(j, "weight_approximation_error"), "weight_approximation_error");
    for (const auto &c : field(j, "tuple_certificates")) {
        TupleCertificate t;
        t.indices = field(c, "indices").get<std::vector<std::size_t>>();
        t.antidist = field(c, "antidist").get<bool>();
        t.a_q = number(field(c, "a_q"), "a_q");
        t.overlap = number(field(c, "overlap"), "overlap");
        auto m = tuple_method_from_string(field(c, "method").get<std::string>());
        if (!m) throw FormatError("unknown tuple method");
        t.method = *m;
        t.sdp_confirmed = field(c, "sdp_confirmed").get<bool>();
        r.tuple_certificates.push_back(std::move(t));
    }
    r.diagnostics = field(j, "diagnostics").get<std::vector<std::string>>();
    return r;
}

McEstimate mc_estimate_from_json(const Json &j) {
    return {number(field(j, "estimate"), "estimate"), number(field(j, "std_error"), "std_error")};
}

SWitnessResult s_witness_from_json(const Json &j) {
    return {number(field(j, "s"), "s"), number(field(j, "ratio_bound"), "ratio_bound")};
}

}  // namespace qoverlap::io
