// Copyright (c) 2026 the qfg developers.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "qfg/matrix.hpp"

namespace qfg {

// State of an M-dimensional system: Hermitian, positive semidefinite,
// trace 1. The diagnostics report how far a computed matrix strays.
struct DensityMatrix {
    ComplexMatrix rho;

    double hermiticity_dev() const { return hermiticity_deviation(rho); }
    double trace_dev() const { return std::abs(rho.trace() - Complex{1.0, 0.0}); }
    // Smallest eigenvalue of the Hermitian part; >= -1e-9 counts as PSD.
    double min_eigenvalue() const;
    double max_eigenvalue() const;

    bool well_formed(double hermitian_tol = 1e-10, double psd_floor = -1e-9,
                     double trace_tol = 1e-9) const {
        return hermiticity_dev() <= hermitian_tol && min_eigenvalue() >= psd_floor &&
               trace_dev() <= trace_tol;
    }
};

} // namespace qfg
