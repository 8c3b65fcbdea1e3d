// Copyright (c) 2026 the qfg developers.
// SPDX-License-Identifier: Apache-2.0

#include "qfg/density.hpp"

#include <Eigen/Eigenvalues>

namespace qfg {

namespace {

Eigen::VectorXd hermitian_eigenvalues(const ComplexMatrix& m) {
    const ComplexMatrix sym = 0.5 * (m + m.adjoint());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym, Eigen::EigenvaluesOnly);
    return solver.eigenvalues();
}

} // namespace

double DensityMatrix::min_eigenvalue() const {
    return hermitian_eigenvalues(rho).minCoeff();
}

double DensityMatrix::max_eigenvalue() const {
    return hermitian_eigenvalues(rho).maxCoeff();
}

} // namespace qfg
