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

#include "qoverlap/quantum_core.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "qoverlap/config.hpp"
#include "qoverlap/errors.hpp"

namespace qoverlap {

namespace {

void fix_global_phase(CVector &amps) {
    for (Eigen::Index i = 0; i < amps.size(); ++i) {
        double mag = std::abs(amps[i]);
        if (mag > kTol.state_norm) {
            amps *= std::conj(amps[i]) / mag;
            amps[i] = Complex(amps[i].real(), 0.0);
            return;
        }
    }
}

void require_same_dim(int a, int b, const char *what) {
    if (a != b) {
        throw StructuralError(std::string(what) + ": dimension mismatch (" + std::to_string(a) +
                              " vs " + std::to_string(b) + ")");
    }
}

}  // namespace

// ---------------------------------------------------------------------------
// PureState

PureState::PureState(CVector amplitudes) : amplitudes_(std::move(amplitudes)) {
    if (amplitudes_.size() < 2) throw StructuralError("PureState: dimension must be at least 2");
    double norm = amplitudes_.norm();
    if (!std::isfinite(norm) || std::abs(norm - 1.0) > kTol.state_norm) {
        throw StructuralError("PureState: amplitudes are not normalized (norm = " +
                              std::to_string(norm) + ")");
    }
    amplitudes_ /= norm;
    fix_global_phase(amplitudes_);
}

PureState PureState::normalized(CVector amplitudes) {
    double norm = amplitudes.norm();
    if (!(norm > 0.0) || !std::isfinite(norm)) throw StructuralError("PureState: zero vector");
    return PureState(amplitudes / norm);
}

PureState PureState::basis(int dim, int k) {
    if (dim < 2 || k < 0 || k >= dim) throw StructuralError("PureState::basis: index out of range");
    CVector v = CVector::Zero(dim);
    v[k] = 1.0;
    return PureState(std::move(v));
}

bool PureState::approx_equal(const PureState &other, double tol) const {
    return dim() == other.dim() && (amplitudes_ - other.amplitudes_).cwiseAbs().maxCoeff() <= tol;
}

// ---------------------------------------------------------------------------
// DensityMatrix

DensityMatrix::DensityMatrix(const CMatrix &entries) {
    if (entries.rows() != entries.cols() || entries.rows() < 2) {
        throw StructuralError("DensityMatrix: must be square with dimension at least 2");
    }
    if (!entries.allFinite()) throw StructuralError("DensityMatrix: non-finite entries");
    if (hermiticity_error(entries) > kTol.hermitian) {
        throw StructuralError("DensityMatrix: not Hermitian");
    }
    entries_ = hermitian_part(entries);
    double tr = entries_.trace().real();
    if (std::abs(tr - 1.0) > kTol.trace) {
        throw StructuralError("DensityMatrix: trace is " + std::to_string(tr) + ", expected 1");
    }
    if (min_eigenvalue(entries_) < kTol.density_min_eig) {
        throw StructuralError("DensityMatrix: not positive semidefinite");
    }
}

DensityMatrix DensityMatrix::from_pure(const PureState &psi) { return DensityMatrix(psi.projector()); }

DensityMatrix DensityMatrix::maximally_mixed(int dim) {
    if (dim < 2) throw StructuralError("DensityMatrix: dimension must be at least 2");
    return DensityMatrix(CMatrix::Identity(dim, dim) / static_cast<double>(dim));
}

// ---------------------------------------------------------------------------
// MixedPreparation

namespace {

CMatrix mixture_matrix(const std::vector<PureState> &pures, const std::vector<std::uint64_t> &alphas,
                       std::uint64_t beta) {
    if (pures.empty()) throw StructuralError("MixedPreparation: no pure states");
    if (pures.size() != alphas.size()) {
        throw StructuralError("MixedPreparation: " + std::to_string(pures.size()) + " states but " +
                              std::to_string(alphas.size()) + " weights");
    }
    if (beta == 0) throw StructuralError("MixedPreparation: beta must be positive");
    std::uint64_t total = 0;
    for (auto a : alphas) total += a;
    if (total != beta) {
        throw StructuralError("MixedPreparation: weights sum to " + std::to_string(total) +
                              ", expected beta = " + std::to_string(beta));
    }
    const int d = pures.front().dim();
    CMatrix rho = CMatrix::Zero(d, d);
    for (std::size_t i = 0; i < pures.size(); ++i) {
        require_same_dim(d, pures[i].dim(), "MixedPreparation");
        if (alphas[i] == 0) continue;
        rho += static_cast<double>(alphas[i]) * pures[i].projector();
    }
    return rho / static_cast<double>(beta);
}

}  // namespace

MixedPreparation::MixedPreparation(std::vector<PureState> pures, std::vector<std::uint64_t> alphas,
                                   std::uint64_t beta)
    : pures_(std::move(pures)),
      alphas_(std::move(alphas)),
      beta_(beta),
      density_(mixture_matrix(pures_, alphas_, beta_)) {}

MixedPreparation MixedPreparation::pure(const PureState &psi) { return MixedPreparation({psi}, {1}, 1); }

MixedPreparation MixedPreparation::uniform(std::vector<PureState> pures) {
    std::vector<std::uint64_t> alphas(pures.size(), 1);
    auto beta = static_cast<std::uint64_t>(pures.size());
    return MixedPreparation(std::move(pures), std::move(alphas), beta);
}

DensityMatrix density_from_preparation(const MixedPreparation &prep) { return prep.density(); }

// ---------------------------------------------------------------------------
// BlochVector, Povm

BlochVector::BlochVector(double x, double y, double z) : v_(x, y, z) {
    if (!v_.allFinite() || v_.norm() > 1.0 + kTol.bloch_norm) {
        throw StructuralError("BlochVector: norm exceeds 1");
    }
}

Povm::Povm(std::vector<CMatrix> effects) : effects_(std::move(effects)) {
    if (effects_.empty()) throw StructuralError("Povm: no effects");
    const auto d = effects_.front().rows();
    CMatrix total = CMatrix::Zero(d, d);
    for (const auto &e : effects_) {
        if (e.rows() != d || e.cols() != d) throw StructuralError("Povm: effect dimension mismatch");
        if (hermiticity_error(e) > kTol.povm) throw StructuralError("Povm: effect not Hermitian");
        if (min_eigenvalue(e) < -kTol.povm) throw StructuralError("Povm: effect not PSD");
        total += e;
    }
    if ((total - CMatrix::Identity(d, d)).cwiseAbs().maxCoeff() > kTol.povm) {
        throw StructuralError("Povm: effects do not sum to the identity");
    }
}

double Povm::probability(const DensityMatrix &rho, std::size_t k) const {
    require_same_dim(dim(), rho.dim(), "Povm::probability");
    return trace_product(rho.matrix(), effects_.at(k));
}

// ---------------------------------------------------------------------------
// Distances

double overlap_abs(const PureState &a, const PureState &b) {
    require_same_dim(a.dim(), b.dim(), "overlap_abs");
    return std::min(1.0, std::abs(a.amplitudes().dot(b.amplitudes())));
}

double trace_distance(const DensityMatrix &r, const DensityMatrix &s) {
    require_same_dim(r.dim(), s.dim(), "trace_distance");
    RVector ev = hermitian_eigenvalues(r.matrix() - s.matrix());
    return std::clamp(0.5 * ev.cwiseAbs().sum(), 0.0, 1.0);
}

double distinguishability(const DensityMatrix &r, const DensityMatrix &s) {
    return 0.5 * (1.0 + trace_distance(r, s));
}

// ---------------------------------------------------------------------------
// Bloch sphere

BlochVector bloch_from_qubit(const PureState &psi) {
    if (psi.dim() != 2) throw DomainError("bloch_from_qubit: state is not a qubit");
    Complex a = psi[0], b = psi[1];
    Complex c = std::conj(a) * b;
    double x = 2.0 * c.real();
    double y = 2.0 * c.imag();
    double z = std::norm(a) - std::norm(b);
    Vec3 v(x, y, z);
    // Guard against a norm of 1 + eps from rounding.
    double n = v.norm();
    if (n > 1.0) v /= n;
    return BlochVector(v);
}

PureState qubit_from_bloch(const BlochVector &v) {
    if (std::abs(v.norm() - 1.0) > kTol.bloch_norm) {
        throw DomainError("qubit_from_bloch: Bloch vector is not a unit vector");
    }
    Vec3 u = v.vec() / v.norm();
    // cos(theta/2) and sin(theta/2) from z without losing accuracy near the poles.
    double c = std::sqrt(std::max(0.0, 0.5 * (1.0 + u.z())));
    double s = std::sqrt(std::max(0.0, 0.5 * (1.0 - u.z())));
    double rho = std::hypot(u.x(), u.y());
    Complex phase = rho > 0.0 ? Complex(u.x() / rho, u.y() / rho) : Complex(1.0, 0.0);
    CVector amps(2);
    amps << c, phase * s;
    return PureState::normalized(std::move(amps));
}

// ---------------------------------------------------------------------------
// Mutually unbiased bases

bool is_prime(int n) {
    if (n < 2) return false;
    for (int k = 2; k * k <= n; ++k) {
        if (n % k == 0) return false;
    }
    return true;
}

namespace {

Basis computational_basis(int d) {
    Basis b;
    for (int k = 0; k < d; ++k) b.push_back(PureState::basis(d, k));
    return b;
}

Basis basis_from_rows(const CMatrix &rows) {
    Basis b;
    for (Eigen::Index r = 0; r < rows.rows(); ++r) b.push_back(PureState::normalized(rows.row(r).transpose()));
    return b;
}

std::vector<Basis> qubit_mubs() {
    const double h = 1.0 / std::sqrt(2.0);
    const Complex i(0.0, 1.0);
    CMatrix x(2, 2), y(2, 2);
    x << h, h, h, -h;
    y << h, i * h, h, -i * h;
    return {computational_basis(2), basis_from_rows(x), basis_from_rows(y)};
}

// Two-qubit table; rows are the basis vectors.
std::vector<Basis> ququart_mubs() {
    const Complex i(0.0, 1.0);
    CMatrix b1(4, 4), b2(4, 4), b3(4, 4), b4(4, 4);
    b1 << 1, 1, 1, 1,
          1, 1, -1, -1,
          1, -1, -1, 1,
          1, -1, 1, -1;
    b2 << 1, -1, -i, -i,
          1, -1, i, i,
          1, 1, i, -i,
          1, 1, -i, i;
    b3 << 1, -i, -i, -1,
          1, -i, i, 1,
          1, i, i, -1,
          1, i, -i, 1;
    b4 << 1, -i, -1, -i,
          1, -i, 1, i,
          1, i, -1, i,
          1, i, 1, -i;
    return {computational_basis(4), basis_from_rows(0.5 * b1), basis_from_rows(0.5 * b2),
            basis_from_rows(0.5 * b3), basis_from_rows(0.5 * b4)};
}

// Odd prime d: basis a has vectors with components w^(a m^2 + b m) / sqrt(d).
std::vector<Basis> odd_prime_mubs(int d) {
    std::vector<Basis> out{computational_basis(d)};
    const double scale = 1.0 / std::sqrt(static_cast<double>(d));
    for (int a = 0; a < d; ++a) {
        Basis basis;
        for (int b = 0; b < d; ++b) {
            CVector v(d);
            for (int m = 0; m < d; ++m) {
                long long e = (static_cast<long long>(a) * m * m + static_cast<long long>(b) * m) % d;
                double angle = 2.0 * std::numbers::pi * static_cast<double>(e) / d;
                v[m] = scale * Complex(std::cos(angle), std::sin(angle));
            }
            basis.push_back(PureState::normalized(std::move(v)));
        }
        out.push_back(std::move(basis));
    }
    return out;
}

}  // namespace

std::vector<Basis> mub_bases(int dim, int count) {
    if (!(dim == 4 || is_prime(dim))) {
        throw CapabilityError("mub_bases: dimension " + std::to_string(dim) +
                              " is not supported (primes and 4 only)");
    }
    if (count < 1 || count > dim + 1) {
        throw RangeError("mub_bases: count must lie in [1, " + std::to_string(dim + 1) + "]");
    }
    std::vector<Basis> all;
    if (dim == 2) {
        all = qubit_mubs();
    } else if (dim == 4) {
        all = ququart_mubs();
    } else {
        all = odd_prime_mubs(dim);
    }
    all.erase(all.begin() + count, all.end());
    return all;
}

}  // namespace qoverlap
