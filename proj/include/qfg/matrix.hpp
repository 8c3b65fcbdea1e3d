// Copyright (c) 2026 the qfg developers.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>

#include "qfg/complex.hpp"

namespace qfg {

using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

// Max-norm deviation of U from unitarity, ||U^H U - I||_max.
inline double unitarity_deviation(const ComplexMatrix& u) {
    if (u.rows() != u.cols()) {
        return 1.0;
    }
    const ComplexMatrix gram = u.adjoint() * u;
    return (gram - ComplexMatrix::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff();
}

inline double hermiticity_deviation(const ComplexMatrix& m) {
    return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

} // namespace qfg
