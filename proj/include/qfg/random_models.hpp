// Copyright (c) 2026 the qfg developers.
// SPDX-License-Identifier: Apache-2.0
//
// Seeded generators for valid-by-construction models: unitaries come from
// QR factorizations of complex Gaussian matrices, Kraus families from row
// partitions of random isometries, so every generated model passes
// validation at double-precision accuracy.

#pragma once

#include <cstdint>
#include <random>

#include "qfg/model.hpp"

namespace qfg {

ComplexMatrix random_unitary(std::mt19937_64& rng, int dimension);

// Gaussian matrix with independent complex-normal entries.
ComplexMatrix random_gaussian_matrix(std::mt19937_64& rng, int rows, int cols);

// Kraus family {A(y)} with outcomes 0..outcome_count-1 satisfying
// sum_y A(y)^H A(y) = I, obtained by slicing a random isometry.
GeneralMeasurement random_kraus(std::mt19937_64& rng, int dimension, int outcome_count);

std::vector<double> random_pmf(std::mt19937_64& rng, int length);

struct RandomModelOptions {
    int dimension = 2;
    int steps = 1;
    bool allow_projection = true;
    bool allow_general = true;
    bool allow_known_initial = true;
    bool allow_pmf_initial = true;
    bool allow_pure_initial = true;
    // Kraus outcome counts are drawn from [2, max_outcomes]; 0 means
    // dimension + 1.
    int max_outcomes = 0;
};

QuantumModel random_model(std::uint64_t seed, const RandomModelOptions& options);

struct RandomHmmOptions {
    int steps = 2;
    int max_alphabet = 3;
};

HmmModel random_hmm(std::uint64_t seed, const RandomHmmOptions& options);

} // namespace qfg
