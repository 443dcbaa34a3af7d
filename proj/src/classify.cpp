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

#include "qoverlap/classify.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <thread>

#include "qoverlap/antidist.hpp"
#include "qoverlap/criteria.hpp"
#include "qoverlap/errors.hpp"
#include "qoverlap/qubit_geometry.hpp"

namespace qoverlap {

namespace {

constexpr std::array<std::pair<Category, std::string_view>, 5> kCategoryNames = {{
    {Category::CertifiedFullyNonEpistemic, "CertifiedFullyNonEpistemic"},
    {Category::CertifiedNonEpistemic, "CertifiedNonEpistemic"},
    {Category::NonMaximallyEpistemicWitness, "NonMaximallyEpistemicWitness"},
    {Category::Inconclusive, "Inconclusive"},
    {Category::OrthogonalTrivial, "OrthogonalTrivial"},
}};

constexpr std::array<std::pair<TupleMethod, std::string_view>, 5> kMethodNames = {{
    {TupleMethod::PairClosedForm, "pair_closed_form"},
    {TupleMethod::QubitGeometry, "qubit_geometry"},
    {TupleMethod::Caves, "caves"},
    {TupleMethod::Johnston, "johnston"},
    {TupleMethod::Sdp, "sdp"},
}};

struct TupleOutcome {
    TupleCertificate cert;
    std::string diagnostic;
    bool failed = false;
};

std::string describe(const std::vector<std::size_t> &indices) {
    std::ostringstream os;
    os << "tuple (";
    for (std::size_t k = 0; k < indices.size(); ++k) os << (k ? "," : "") << indices[k];
    os << ")";
    return os.str();
}

void apply_sdp(TupleCertificate &cert, const SdpResult &res) {
    cert.overlap = res.primal_value;
    cert.a_q = res.a_q;
    cert.antidist = res.primal_value <= kTol.perfect_antidist;
}

TupleOutcome score_tuple(std::span<const PureState> tuple, std::vector<std::size_t> indices,
                         const ClassifyOptions &options) {
    TupleOutcome out;
    out.cert.indices = std::move(indices);
    TupleCertificate &cert = out.cert;
    const std::size_t n = tuple.size();
    try {
        if (n == 2) {
            cert.method = TupleMethod::PairClosedForm;
            cert.overlap = pair_overlap_pure(tuple[0], tuple[1]);
            cert.a_q = 1.0 - cert.overlap / 2.0;
            cert.antidist = cert.overlap <= kTol.perfect_antidist;
            return out;
        }

        std::optional<TupleMethod> fast;
        if (tuple[0].dim() == 2 && n == 3) {
            if (qubit_triple_antidist(tuple[0], tuple[1], tuple[2])) fast = TupleMethod::QubitGeometry;
        } else if (n == 3 && caves_criterion(tuple[0], tuple[1], tuple[2])) {
            fast = TupleMethod::Caves;
        } else if (johnston_criterion(tuple)) {
            fast = TupleMethod::Johnston;
        }

        const std::vector<DensityMatrix> densities = to_densities(tuple);
        if (fast) {
            cert.method = *fast;
            cert.overlap = 0.0;
            cert.a_q = 1.0;
            cert.antidist = true;
            if (options.confirm_with_sdp) {
                SdpResult res = antidist_sdp(densities);
                if (res.primal_value > kTol.perfect_antidist) {
                    apply_sdp(cert, res);
                    out.diagnostic = describe(cert.indices) + ": SDP did not confirm the " +
                                     std::string(to_string(*fast)) + " certificate; using the SDP bound";
                } else {
                    cert.sdp_confirmed = true;
                }
            }
            return out;
        }

        cert.method = TupleMethod::Sdp;
        apply_sdp(cert, antidist_sdp(densities));
    } catch (const Error &e) {
        out.failed = true;
        out.diagnostic = describe(cert.indices) + ": " + e.what();
    }
    return out;
}

Category categorize(double omega_q, double omega_e_upper) {
    const double tol = kTol.category;
    if (omega_q <= tol) return Category::OrthogonalTrivial;
    if (omega_e_upper <= tol && omega_q >= 1.0 - tol) return Category::CertifiedFullyNonEpistemic;
    if (omega_e_upper <= tol) return Category::CertifiedNonEpistemic;
    if (omega_e_upper < omega_q - tol) return Category::NonMaximallyEpistemicWitness;
    return Category::Inconclusive;
}

}  // namespace

std::string_view to_string(Category c) {
    for (const auto &[value, name] : kCategoryNames) {
        if (value == c) return name;
    }
    return "Inconclusive";
}

std::optional<Category> category_from_string(std::string_view name) {
    for (const auto &[value, n] : kCategoryNames) {
        if (n == name) return value;
    }
    return std::nullopt;
}

std::string_view to_string(TupleMethod m) {
    for (const auto &[value, name] : kMethodNames) {
        if (value == m) return name;
    }
    return "sdp";
}

std::optional<TupleMethod> tuple_method_from_string(std::string_view name) {
    for (const auto &[value, n] : kMethodNames) {
        if (n == name) return value;
    }
    return std::nullopt;
}

ClassificationReport classify(std::span<const MixedPreparation> preps, const ClassifyOptions &options) {
    if (preps.size() < 2) throw StructuralError("classify: need at least two preparations");
    const int d = preps.front().dim();
    for (const auto &p : preps) {
        if (p.dim() != d) throw StructuralError("classify: preparations have different dimensions");
    }

    ClassificationReport report;
    bool usable = true;

    std::vector<DensityMatrix> densities;
    densities.reserve(preps.size());
    for (const auto &p : preps) densities.push_back(p.density());
    try {
        report.omega_q = quantum_overlap(densities);
    } catch (const ConvergenceError &e) {
        usable = false;
        report.omega_q = std::clamp(e.best_primal(), 0.0, 1.0);
        report.diagnostics.push_back(std::string("quantum overlap: ") + e.what());
    }

    Decomposition dec;
    try {
        dec = decompose(preps, options.tuple_cap);
    } catch (const RangeError &e) {
        report.omega_e_upper = 1.0;
        report.category = Category::Inconclusive;
        report.diagnostics.push_back(std::string("decomposition bound: ") + e.what());
        return report;
    }

    const std::size_t count = dec.tuples.size();
    std::vector<TupleOutcome> outcomes(count);
    auto work = [&](std::size_t begin, std::size_t end) {
        std::vector<PureState> tuple;
        for (std::size_t t = begin; t < end; ++t) {
            tuple.clear();
            const auto &idx = dec.tuples[t].indices;
            for (std::size_t k = 0; k < idx.size(); ++k) tuple.push_back(preps[k].pures()[idx[k]]);
            outcomes[t] = score_tuple(tuple, idx, options);
        }
    };
    unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(count, 1)));
    if (threads <= 1) {
        work(0, count);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back(work, count * t / threads, count * (t + 1) / threads);
        }
        for (auto &th : pool) th.join();
    }

    // Ordered reduction, independent of the thread count.
    double sum = 0.0;
    report.tuple_certificates.reserve(count);
    for (std::size_t t = 0; t < count; ++t) {
        auto &o = outcomes[t];
        if (!o.diagnostic.empty()) report.diagnostics.push_back(o.diagnostic);
        if (o.failed) {
            usable = false;
            continue;
        }
        sum += dec.tuples[t].weight * o.cert.overlap;
        report.tuple_certificates.push_back(std::move(o.cert));
    }
    report.omega_e_upper = usable ? dec.prefactor * sum : 1.0;
    report.category = usable ? categorize(report.omega_q, report.omega_e_upper) : Category::Inconclusive;
    return report;
}

}  // namespace qoverlap
