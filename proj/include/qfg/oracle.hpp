// Copyright (c) 2026 the qfg developers.
// SPDX-License-Identifier: Apache-2.0
//
// Direct matrix-arithmetic implementation of the measurement-sequence
// probability rules: unitary evolution rho -> U rho U^H, projection steps
// with probability B(y)^H rho B(y), general steps with probability
// tr(A(y) rho A(y)^H), and exhaustive joint enumeration. This module is the
// ground truth the factor-graph engine is checked against and must stay
// independent of it: nothing here may include or link the tensor engine.

#pragma once

#include <cstddef>
#include <span>

#include "qfg/distribution.hpp"
#include "qfg/matrix.hpp"
#include "qfg/model.hpp"

namespace qfg::oracle {

// Density matrix of the initial state: diag(p) for a pmf, e_x e_x^H for a
// known basis state, psi psi^H for a pure vector.
ComplexMatrix initial_density(const InitialState& initial, int dimension);

// rho -> U rho U^H. Throws NotUnitary when U fails the tolerance.
ComplexMatrix evolve(const ComplexMatrix& rho, const ComplexMatrix& u,
                     double unitarity_tolerance = 1e-9);

struct StepResult {
    double probability = 0.0;
    ComplexMatrix post;
};

// Projection measurement in basis B: probability B(y)^H rho B(y), post-state
// B(y) B(y)^H independent of rho (no renormalization quotient, so this is
// well defined even at probability zero).
StepResult step_project(const ComplexMatrix& rho, const ComplexMatrix& basis, int outcome);

// General measurement: probability tr(A(y) rho A(y)^H), post-state
// A(y) rho A(y)^H / probability. Throws ZeroProbabilityOutcome when the
// probability is <= 1e-12, and IncompleteKraus when the family fails
// completeness.
StepResult step_general(const ComplexMatrix& rho, const GeneralMeasurement& measurement,
                        int outcome, double completeness_tolerance = 1e-9);

// Exhaustive joint distribution: for every outcome tuple, chains evolve and
// the per-kind step rule, multiplying conditional probabilities. Exponential
// in the number of measurements by design.
OutcomeDistribution joint(const QuantumModel& m, std::size_t enumeration_cap = 1'000'000);

// Forward recursion p(y_1..y_n) for the hidden Markov baseline.
double hmm_forward(const HmmModel& h, std::span<const int> outcomes);

} // namespace qfg::oracle
