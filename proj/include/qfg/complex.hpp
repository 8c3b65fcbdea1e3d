// Copyright (c) 2026 the qfg developers.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>

namespace qfg {

using Complex = std::complex<double>;

// Default comparison tolerances for contraction results.
inline constexpr double kDefaultAbsTolerance = 1e-12;
inline constexpr double kDefaultRelTolerance = 1e-9;

inline bool approx_equal(double a, double b, double abs_tol = kDefaultAbsTolerance,
                         double rel_tol = kDefaultRelTolerance) {
    const double diff = a > b ? a - b : b - a;
    const double mag = std::abs(a) > std::abs(b) ? std::abs(a) : std::abs(b);
    return diff <= abs_tol || diff <= rel_tol * mag;
}

inline bool approx_equal(Complex a, Complex b, double abs_tol = kDefaultAbsTolerance,
                         double rel_tol = kDefaultRelTolerance) {
    const double diff = std::abs(a - b);
    const double mag = std::abs(a) > std::abs(b) ? std::abs(a) : std::abs(b);
    return diff <= abs_tol || diff <= rel_tol * mag;
}

} // namespace qfg
