// Copyright (c) 2026 the qfg developers.
// SPDX-License-Identifier: Apache-2.0
//
// Declarative models of quantum measurement sequences: an M-dimensional
// system with an initial state, alternating unitary evolutions and
// measurements, and one observed outcome per measurement. Also the classical
// hidden-Markov counterpart used as a baseline.

#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "qfg/errors.hpp"
#include "qfg/matrix.hpp"

namespace qfg {

struct Tolerances {
    double unitarity = 1e-9;
    double completeness = 1e-9;
    double initial_norm = 1e-9;
};

// Initial state: a known basis state, a classical mixture over basis states,
// or a pure state vector. The pure-vector form is an extension beyond the
// basis/pmf inputs and is flagged in validation reports.
struct KnownBasisState {
    int index = 0;
};
struct BasisPmf {
    std::vector<double> p;
};
struct PureVector {
    ComplexVector psi;
};
using InitialState = std::variant<KnownBasisState, BasisPmf, PureVector>;

// Measurement in an orthonormal basis B; outcome y selects column y of B.
struct ProjectionMeasurement {
    ComplexMatrix basis;
};

// General measurement {A(y)} with sum_y A(y)^H A(y) = I. Outcome labels are
// kept in declaration order; the dense outcome index is the position.
struct GeneralMeasurement {
    std::vector<std::string> labels;
    std::vector<ComplexMatrix> kraus;

    int outcome_count() const { return static_cast<int>(kraus.size()); }
};

using MeasurementSpec = std::variant<ProjectionMeasurement, GeneralMeasurement>;

// Number of outcomes of a measurement on an M-dimensional system.
int outcome_count(const MeasurementSpec& spec, int dimension);

struct Stage {
    ComplexMatrix unitary;
    MeasurementSpec measurement;
};

struct QuantumModel {
    int dimension = 0;
    InitialState initial = KnownBasisState{0};
    std::vector<Stage> stages;
    Tolerances tolerances;

    int step_count() const { return static_cast<int>(stages.size()); }
    int outcome_count(int stage_index) const;
    std::vector<int> outcome_alphabet_sizes() const;
};

// Per-step kernel p(y_k, x_k | x_{k-1}), stored row-major as [y][x][x_prev].
struct HmmKernel {
    int y_size = 0;
    int x_size = 0;
    int x_prev_size = 0;
    std::vector<double> values;

    double at(int y, int x, int x_prev) const {
        return values[static_cast<std::size_t>((y * x_size + x) * x_prev_size + x_prev)];
    }
};

struct HmmModel {
    std::vector<double> initial;
    std::vector<HmmKernel> kernels;

    int step_count() const { return static_cast<int>(kernels.size()); }
    std::vector<int> outcome_alphabet_sizes() const;
};

struct CheckResult {
    std::string name;
    double deviation = 0.0;
    double tolerance = 0.0;
    bool passed = false;
};

struct ValidationReport {
    std::vector<CheckResult> checks;
    std::vector<std::string> notes;

    bool passed() const;
    double max_deviation() const;
};

// Runs every structural and numeric check (shapes, unitarity per stage,
// completeness per measurement, initial-state normalization) and reports the
// worst deviation per check against the model's tolerances.
ValidationReport validate_model(const QuantumModel& m);
ValidationReport validate_model(const HmmModel& h);

// Throws InvalidModel naming the first failed check.
void require_valid(const QuantumModel& m);
void require_valid(const HmmModel& h);

// Converts a projection measurement in basis B into its Kraus form
// A(y) = B(:,y) B(:,y)^H with outcomes 0..M-1. Throws NotUnitary when B is
// not unitary within the tolerance.
GeneralMeasurement projection_to_kraus(const ComplexMatrix& basis,
                                       double unitarity_tolerance = 1e-9);

// The measurement in Kraus form regardless of its declared kind.
GeneralMeasurement as_kraus(const MeasurementSpec& spec, double unitarity_tolerance = 1e-9);

} // namespace qfg
