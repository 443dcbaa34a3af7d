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

#include <complex>

#include <Eigen/Dense>

namespace qoverlap {

using Complex = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;
using RVector = Eigen::VectorXd;
using Vec3 = Eigen::Vector3d;

inline CMatrix hermitian_part(const CMatrix &m) { return 0.5 * (m + m.adjoint()); }

/// Largest entry-wise deviation of `m` from its conjugate transpose.
inline double hermiticity_error(const CMatrix &m) {
    if (m.size() == 0) return 0.0;
    return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

/// Ascending eigenvalues of the Hermitian part of `m`.
inline RVector hermitian_eigenvalues(const CMatrix &m) {
    Eigen::SelfAdjointEigenSolver<CMatrix> es(hermitian_part(m), Eigen::EigenvaluesOnly);
    return es.eigenvalues();
}

inline double min_eigenvalue(const CMatrix &m) { return hermitian_eigenvalues(m).minCoeff(); }

/// f(H) for Hermitian H, applying `f` to each eigenvalue.
template <typename F>
CMatrix hermitian_function(const CMatrix &m, F &&f) {
    Eigen::SelfAdjointEigenSolver<CMatrix> es(hermitian_part(m));
    RVector mapped = es.eigenvalues().unaryExpr(f);
    return es.eigenvectors() * mapped.asDiagonal() * es.eigenvectors().adjoint();
}

/// Re Tr(A B), the Hilbert-Schmidt inner product for Hermitian arguments.
inline double trace_product(const CMatrix &a, const CMatrix &b) {
    return (a.cwiseProduct(b.transpose())).sum().real();
}

}  // namespace qoverlap
