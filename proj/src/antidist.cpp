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

#include "qoverlap/antidist.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

#include "qoverlap/errors.hpp"

namespace qoverlap {

namespace {

constexpr int kMaxIterations = 120;
constexpr double kStepFraction = 0.98;
const double kSqrt2 = std::sqrt(2.0);
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

// Coordinates of a Hermitian matrix in the orthonormal basis
//   e_j e_j^T,  (e_j e_k^T + e_k e_j^T)/sqrt2,  i(e_j e_k^T - e_k e_j^T)/sqrt2   (j < k),
// so that <A, B> = Tr(A B) = svec(A) . svec(B). Only the Hermitian part of the
// argument contributes.
RVector svec(const CMatrix &h) {
    const Eigen::Index d = h.rows();
    RVector v(d * d);
    Eigen::Index p = 0;
    for (Eigen::Index j = 0; j < d; ++j) v[p++] = h(j, j).real();
    for (Eigen::Index j = 0; j < d; ++j) {
        for (Eigen::Index k = j + 1; k < d; ++k) {
            Complex upper = 0.5 * (h(j, k) + std::conj(h(k, j)));
            v[p++] = kSqrt2 * upper.real();
            v[p++] = kSqrt2 * upper.imag();
        }
    }
    return v;
}

CMatrix smat(const RVector &v, Eigen::Index d) {
    CMatrix h = CMatrix::Zero(d, d);
    Eigen::Index p = 0;
    for (Eigen::Index j = 0; j < d; ++j) h(j, j) = v[p++];
    for (Eigen::Index j = 0; j < d; ++j) {
        for (Eigen::Index k = j + 1; k < d; ++k) {
            Complex c(v[p] * kInvSqrt2, v[p + 1] * kInvSqrt2);
            p += 2;
            h(j, k) = c;
            h(k, j) = std::conj(c);
        }
    }
    return h;
}

// Largest alpha with x + alpha dx still positive semidefinite (infinity when
// dx does not decrease any direction). Returns nullopt if x is not positive
// definite to working precision.
std::optional<double> max_step(const CMatrix &x, const CMatrix &dx) {
    Eigen::LLT<CMatrix> llt(x);
    if (llt.info() != Eigen::Success) return std::nullopt;
    CMatrix linv_dx = llt.matrixL().solve(dx);
    CMatrix m = llt.matrixL().solve(linv_dx.adjoint()).adjoint();
    double lmin = min_eigenvalue(m);
    if (lmin >= 0.0) return std::numeric_limits<double>::infinity();
    return -1.0 / lmin;
}

struct Certified {
    std::vector<CMatrix> povm;
    CMatrix y;
    double primal = 0.0;
    double dual = 0.0;
    double gap() const { return primal - dual; }
};

// Turns an interior iterate into a strictly feasible primal/dual pair:
// effects are congruence-normalized so they sum to the identity exactly, and Y
// is shifted down until Y <= rho_x for every x.
Certified certify(std::span<const DensityMatrix> states, const std::vector<CMatrix> &x, const CMatrix &y) {
    const Eigen::Index d = y.rows();
    Certified c;
    CMatrix total = CMatrix::Zero(d, d);
    for (const auto &xi : x) total += hermitian_part(xi);
    CMatrix g = hermitian_function(total, [](double ev) { return ev > 0.0 ? 1.0 / std::sqrt(ev) : 0.0; });
    c.povm.reserve(x.size());
    for (const auto &xi : x) {
        CMatrix m = hermitian_part(g * hermitian_part(xi) * g);
        // Clip rounding-level negative eigenvalues.
        if (min_eigenvalue(m) < 0.0) m = hermitian_function(m, [](double ev) { return std::max(ev, 0.0); });
        c.povm.push_back(std::move(m));
    }
    double shift = dual_infeasibility(states, y);
    c.y = hermitian_part(y) - shift * CMatrix::Identity(d, d);
    for (std::size_t i = 0; i < states.size(); ++i) c.primal += trace_product(states[i].matrix(), c.povm[i]);
    c.dual = c.y.trace().real();
    return c;
}

void validate_states(std::span<const DensityMatrix> states, double gap_tolerance) {
    if (states.size() < 2) throw DomainError("antidist_sdp: need at least two states");
    if (!(gap_tolerance > 0.0)) throw DomainError("antidist_sdp: gap_tolerance must be positive");
    const int d = states.front().dim();
    for (const auto &s : states) {
        if (s.dim() != d) throw StructuralError("antidist_sdp: states have different dimensions");
    }
}

}  // namespace

double dual_infeasibility(std::span<const DensityMatrix> states, const CMatrix &y) {
    double worst = 0.0;
    for (const auto &s : states) worst = std::max(worst, -min_eigenvalue(s.matrix() - y));
    return worst;
}

std::vector<DensityMatrix> to_densities(std::span<const PureState> states) {
    std::vector<DensityMatrix> out;
    out.reserve(states.size());
    for (const auto &s : states) out.push_back(DensityMatrix::from_pure(s));
    return out;
}

SdpResult antidist_sdp(std::span<const DensityMatrix> states, double gap_tolerance) {
    validate_states(states, gap_tolerance);
    const std::size_t n = states.size();
    const Eigen::Index d = states.front().dim();
    const Eigen::Index m = d * d;
    const CMatrix identity = CMatrix::Identity(d, d);
    const RVector b = svec(identity);
    const double nd = static_cast<double>(n) * static_cast<double>(d);

    std::vector<std::string> warnings;
    if (d > 32) warnings.push_back("dimension above 32: dense interior-point solve may be slow");

    // Strictly feasible start: X_x = I/n and Y = (min eigenvalue - 1) I.
    double lmin = std::numeric_limits<double>::infinity();
    for (const auto &s : states) lmin = std::min(lmin, min_eigenvalue(s.matrix()));
    std::vector<CMatrix> x(n, identity / static_cast<double>(n));
    RVector y = svec((lmin - 1.0) * identity);
    std::vector<CMatrix> z(n);
    for (std::size_t i = 0; i < n; ++i) z[i] = states[i].matrix() - smat(y, d);

    std::optional<Certified> best;
    const double target = 0.05 * gap_tolerance;
    int iterations = 0;
    int stalled = 0;

    std::vector<CMatrix> zinv(n), rd(n), r(n), dx(n), dz(n), corr(n);
    Eigen::MatrixXd schur(m, m);

    for (; iterations < kMaxIterations; ++iterations) {
        const CMatrix ymat = smat(y, d);
        Certified cert = certify(states, x, ymat);
        if (!best || cert.gap() < best->gap()) {
            best = std::move(cert);
            stalled = 0;
        } else if (++stalled >= 8) {
            break;
        }
        if (best->gap() <= target) break;

        RVector rp = b;
        double complementarity = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            rp -= svec(x[i]);
            rd[i] = hermitian_part(states[i].matrix() - ymat - z[i]);
            complementarity += trace_product(x[i], z[i]);
        }
        const double mu = complementarity / nd;
        if (!(mu > 0.0) || !std::isfinite(mu)) break;

        bool factor_ok = true;
        for (std::size_t i = 0; i < n && factor_ok; ++i) {
            Eigen::LLT<CMatrix> llt(z[i]);
            if (llt.info() != Eigen::Success) {
                factor_ok = false;
                break;
            }
            zinv[i] = llt.solve(identity);
        }
        if (!factor_ok) break;

        // Schur complement H_ij = sum_x <E_i, herm(X_x E_j Z_x^-1)>. Column j is
        // built from outer products of columns of X and rows of Z^-1.
        schur.setZero();
        for (std::size_t i = 0; i < n; ++i) {
            Eigen::Index col = 0;
            for (Eigen::Index j = 0; j < d; ++j) {
                CMatrix g = x[i].col(j) * zinv[i].row(j);
                schur.col(col++) += svec(g);
            }
            for (Eigen::Index j = 0; j < d; ++j) {
                for (Eigen::Index k = j + 1; k < d; ++k) {
                    CMatrix jk = x[i].col(j) * zinv[i].row(k);
                    CMatrix kj = x[i].col(k) * zinv[i].row(j);
                    schur.col(col++) += svec(kInvSqrt2 * (jk + kj));
                    schur.col(col++) += svec(Complex(0.0, kInvSqrt2) * (jk - kj));
                }
            }
        }
        schur = 0.5 * (schur + schur.transpose()).eval();
        Eigen::LDLT<Eigen::MatrixXd> ldlt(schur);
        if (ldlt.info() != Eigen::Success) break;

        auto direction = [&](double sigma_mu, bool with_corrector) {
            RVector rhs = rp;
            for (std::size_t i = 0; i < n; ++i) {
                r[i] = sigma_mu * zinv[i] - x[i] - hermitian_part(x[i] * rd[i] * zinv[i]);
                if (with_corrector) r[i] -= corr[i];
                rhs -= svec(r[i]);
            }
            RVector dy = ldlt.solve(rhs);
            CMatrix dymat = smat(dy, d);
            for (std::size_t i = 0; i < n; ++i) {
                dz[i] = rd[i] - dymat;
                dx[i] = hermitian_part(r[i] + hermitian_part(x[i] * dymat * zinv[i]));
            }
            return dy;
        };

        auto step_lengths = [&](double fraction) -> std::optional<std::pair<double, double>> {
            double ap = std::numeric_limits<double>::infinity();
            double ad = std::numeric_limits<double>::infinity();
            for (std::size_t i = 0; i < n; ++i) {
                auto sp = max_step(x[i], dx[i]);
                auto sd = max_step(z[i], dz[i]);
                if (!sp || !sd) return std::nullopt;
                ap = std::min(ap, *sp);
                ad = std::min(ad, *sd);
            }
            return std::make_pair(std::min(1.0, fraction * ap), std::min(1.0, fraction * ad));
        };

        // Predictor.
        direction(0.0, false);
        auto affine = step_lengths(1.0);
        if (!affine) break;
        double mu_aff = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            mu_aff += trace_product(x[i] + affine->first * dx[i], z[i] + affine->second * dz[i]);
        }
        mu_aff /= nd;
        double sigma = std::clamp(std::pow(std::max(mu_aff, 0.0) / mu, 3.0), 0.0, 1.0);
        for (std::size_t i = 0; i < n; ++i) corr[i] = hermitian_part(dx[i] * dz[i] * zinv[i]);

        // Corrector.
        RVector dy = direction(sigma * mu, true);
        auto steps = step_lengths(kStepFraction);
        if (!steps) break;
        const auto [ap, ad] = *steps;
        for (std::size_t i = 0; i < n; ++i) {
            x[i] = hermitian_part(x[i] + ap * dx[i]);
            z[i] = hermitian_part(z[i] + ad * dz[i]);
        }
        y += ad * dy;
    }

    if (!best) throw ConvergenceError("antidist_sdp: no iterate produced", 1.0, 0.0);
    const double gap = best->gap();
    if (!(gap <= gap_tolerance)) {
        throw ConvergenceError("antidist_sdp: duality gap " + std::to_string(gap) +
                                   " above tolerance " + std::to_string(gap_tolerance),
                               best->primal, best->dual);
    }
    const double primal = std::max(best->primal, 0.0);
    return SdpResult{
        .a_q = 1.0 - primal / static_cast<double>(n),
        .povm = Povm(std::move(best->povm)),
        .dual_certificate = std::move(best->y),
        .primal_value = primal,
        .dual_value = best->dual,
        .gap = primal - best->dual,
        .iterations = iterations,
        .warnings = std::move(warnings),
    };
}

double quantum_overlap(std::span<const DensityMatrix> states, double gap_tolerance) {
    SdpResult res = antidist_sdp(states, gap_tolerance);
    double omega = static_cast<double>(states.size()) * (1.0 - res.a_q);
    if (omega < -gap_tolerance || omega > 1.0 + gap_tolerance) {
        throw ConvergenceError("quantum_overlap: value " + std::to_string(omega) + " outside [0, 1]",
                               res.primal_value, res.dual_value);
    }
    return std::clamp(omega, 0.0, 1.0);
}

double pair_overlap_pure(const PureState &a, const PureState &b) {
    double o = overlap_abs(a, b);
    return 1.0 - std::sqrt(std::max(0.0, 1.0 - o * o));
}

bool is_perfectly_antidist(std::span<const DensityMatrix> states, double tol) {
    if (!(tol > 0.0)) throw DomainError("is_perfectly_antidist: tol must be positive");
    try {
        SdpResult res = antidist_sdp(states, 0.1 * tol);
        return res.primal_value <= tol && res.dual_value <= tol;
    } catch (const ConvergenceError &e) {
        // The bounds may still decide the question.
        if (e.best_primal() <= tol) return true;
        if (e.best_dual() > tol) return false;
        throw;
    }
}

}  // namespace qoverlap
