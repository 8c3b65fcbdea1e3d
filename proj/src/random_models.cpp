// Copyright (c) 2026 the qfg developers.
// SPDX-License-Identifier: Apache-2.0

#include "qfg/random_models.hpp"

#include <Eigen/QR>
#include <cmath>

#include "qfg/rng.hpp"

namespace qfg {

ComplexMatrix random_gaussian_matrix(std::mt19937_64& rng, int rows, int cols) {
    ComplexMatrix m(rows, cols);
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            m(r, c) = Complex{standard_normal(rng), standard_normal(rng)};
        }
    }
    return m;
}

ComplexMatrix random_unitary(std::mt19937_64& rng, int dimension) {
    const ComplexMatrix g = random_gaussian_matrix(rng, dimension, dimension);
    Eigen::HouseholderQR<ComplexMatrix> qr(g);
    ComplexMatrix q = qr.householderQ();
    // Fix the phases of R's diagonal so the distribution is Haar.
    const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int i = 0; i < dimension; ++i) {
        const Complex d = r(i, i);
        const double mag = std::abs(d);
        if (mag > 0.0) {
            q.col(i) *= d / mag;
        }
    }
    return q;
}

GeneralMeasurement random_kraus(std::mt19937_64& rng, int dimension, int outcome_count) {
    // Thin QR of a tall Gaussian matrix gives an isometry W with W^H W = I;
    // its row blocks are a complete Kraus family.
    const int tall = dimension * outcome_count;
    const ComplexMatrix g = random_gaussian_matrix(rng, tall, dimension);
    Eigen::HouseholderQR<ComplexMatrix> qr(g);
    const ComplexMatrix thin_q =
        ComplexMatrix(qr.householderQ()).leftCols(dimension);

    GeneralMeasurement out;
    out.labels.reserve(static_cast<std::size_t>(outcome_count));
    out.kraus.reserve(static_cast<std::size_t>(outcome_count));
    for (int y = 0; y < outcome_count; ++y) {
        out.labels.push_back(std::to_string(y));
        out.kraus.push_back(thin_q.middleRows(y * dimension, dimension));
    }
    return out;
}

std::vector<double> random_pmf(std::mt19937_64& rng, int length) {
    std::vector<double> p(static_cast<std::size_t>(length));
    double sum = 0.0;
    for (double& v : p) {
        double u = uniform01(rng);
        while (u <= 0.0) {
            u = uniform01(rng);
        }
        v = -std::log(u);
        sum += v;
    }
    for (double& v : p) {
        v /= sum;
    }
    return p;
}

QuantumModel random_model(std::uint64_t seed, const RandomModelOptions& options) {
    std::mt19937_64 rng(splitmix64(seed));
    const int dim = options.dimension;

    QuantumModel m;
    m.dimension = dim;

    std::vector<int> initial_kinds;
    if (options.allow_known_initial) {
        initial_kinds.push_back(0);
    }
    if (options.allow_pmf_initial) {
        initial_kinds.push_back(1);
    }
    if (options.allow_pure_initial) {
        initial_kinds.push_back(2);
    }
    const int initial_kind =
        initial_kinds[uniform_below(rng, initial_kinds.size())];
    switch (initial_kind) {
    case 0:
        m.initial = KnownBasisState{static_cast<int>(
            uniform_below(rng, static_cast<std::uint64_t>(dim)))};
        break;
    case 1:
        m.initial = BasisPmf{random_pmf(rng, dim)};
        break;
    default: {
        ComplexVector psi(dim);
        for (int i = 0; i < dim; ++i) {
            psi(i) = Complex{standard_normal(rng), standard_normal(rng)};
        }
        psi.normalize();
        m.initial = PureVector{psi};
        break;
    }
    }

    const int max_outcomes =
        options.max_outcomes > 0 ? options.max_outcomes : dim + 1;
    for (int k = 0; k < options.steps; ++k) {
        Stage stage;
        stage.unitary = random_unitary(rng, dim);
        const bool projection =
            options.allow_projection &&
            (!options.allow_general || uniform_below(rng, 2) == 0);
        if (projection) {
            stage.measurement = ProjectionMeasurement{random_unitary(rng, dim)};
        } else {
            const int outcomes =
                2 + static_cast<int>(uniform_below(
                        rng, static_cast<std::uint64_t>(std::max(1, max_outcomes - 1))));
            stage.measurement = random_kraus(rng, dim, outcomes);
        }
        m.stages.push_back(std::move(stage));
    }
    return m;
}

HmmModel random_hmm(std::uint64_t seed, const RandomHmmOptions& options) {
    std::mt19937_64 rng(splitmix64(seed ^ 0x48'4D'4DULL));
    auto draw_size = [&]() {
        return 2 + static_cast<int>(uniform_below(
                       rng, static_cast<std::uint64_t>(std::max(1, options.max_alphabet - 1))));
    };

    HmmModel h;
    int x_prev = draw_size();
    h.initial = random_pmf(rng, x_prev);
    for (int k = 0; k < options.steps; ++k) {
        HmmKernel ker;
        ker.y_size = draw_size();
        ker.x_size = draw_size();
        ker.x_prev_size = x_prev;
        ker.values.resize(static_cast<std::size_t>(ker.y_size) *
                          static_cast<std::size_t>(ker.x_size) *
                          static_cast<std::size_t>(ker.x_prev_size));
        // One pmf over (y, x) per previous state.
        for (int xp = 0; xp < ker.x_prev_size; ++xp) {
            const std::vector<double> col = random_pmf(rng, ker.y_size * ker.x_size);
            std::size_t i = 0;
            for (int y = 0; y < ker.y_size; ++y) {
                for (int x = 0; x < ker.x_size; ++x) {
                    ker.values[static_cast<std::size_t>((y * ker.x_size + x) *
                                                        ker.x_prev_size + xp)] = col[i++];
                }
            }
        }
        x_prev = ker.x_size;
        h.kernels.push_back(std::move(ker));
    }
    return h;
}

} // namespace qfg
