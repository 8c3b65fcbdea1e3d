// Copyright (c) 2026 the qfg developers.
// SPDX-License-Identifier: Apache-2.0

#include "qfg/oracle.hpp"

#include <cmath>
#include <string>

namespace qfg::oracle {

namespace {

constexpr double kZeroProbability = 1e-12;

double completeness_deviation(const GeneralMeasurement& measurement, int dim) {
    ComplexMatrix sum = ComplexMatrix::Zero(dim, dim);
    for (const ComplexMatrix& a : measurement.kraus) {
        sum += a.adjoint() * a;
    }
    return (sum - ComplexMatrix::Identity(dim, dim)).cwiseAbs().maxCoeff();
}

} // namespace

ComplexMatrix initial_density(const InitialState& initial, int dimension) {
    if (const auto* known = std::get_if<KnownBasisState>(&initial)) {
        if (known->index < 0 || known->index >= dimension) {
            throw InvalidModel("initial basis index out of range");
        }
        ComplexMatrix rho = ComplexMatrix::Zero(dimension, dimension);
        rho(known->index, known->index) = Complex{1.0, 0.0};
        return rho;
    }
    if (const auto* pmf = std::get_if<BasisPmf>(&initial)) {
        if (static_cast<int>(pmf->p.size()) != dimension) {
            throw InvalidModel("initial pmf length does not match dimension");
        }
        ComplexMatrix rho = ComplexMatrix::Zero(dimension, dimension);
        for (int i = 0; i < dimension; ++i) {
            rho(i, i) = Complex{pmf->p[static_cast<std::size_t>(i)], 0.0};
        }
        return rho;
    }
    const auto& pure = std::get<PureVector>(initial);
    if (static_cast<int>(pure.psi.size()) != dimension) {
        throw InvalidModel("initial state vector length does not match dimension");
    }
    return pure.psi * pure.psi.adjoint();
}

ComplexMatrix evolve(const ComplexMatrix& rho, const ComplexMatrix& u,
                     double unitarity_tolerance) {
    const double dev = unitarity_deviation(u);
    if (!(dev <= unitarity_tolerance)) {
        throw NotUnitary("evolution matrix deviates from unitarity by " +
                         std::to_string(dev));
    }
    return u * rho * u.adjoint();
}

StepResult step_project(const ComplexMatrix& rho, const ComplexMatrix& basis, int outcome) {
    if (outcome < 0 || outcome >= basis.cols()) {
        throw OutcomeOutOfRange("projection outcome " + std::to_string(outcome) +
                                " out of range 0.." + std::to_string(basis.cols() - 1));
    }
    const ComplexVector column = basis.col(outcome);
    const Complex quadratic = (column.adjoint() * rho * column)(0, 0);
    StepResult result;
    result.probability = quadratic.real();
    result.post = column * column.adjoint();
    return result;
}

StepResult step_general(const ComplexMatrix& rho, const GeneralMeasurement& measurement,
                        int outcome, double completeness_tolerance) {
    const int dim = static_cast<int>(rho.rows());
    const double completeness = completeness_deviation(measurement, dim);
    if (!(completeness <= completeness_tolerance)) {
        throw IncompleteKraus("measurement family deviates from completeness by " +
                              std::to_string(completeness));
    }
    if (outcome < 0 || outcome >= measurement.outcome_count()) {
        throw OutcomeOutOfRange("outcome " + std::to_string(outcome) +
                                " out of range for " +
                                std::to_string(measurement.outcome_count()) + " outcomes");
    }
    const ComplexMatrix& a = measurement.kraus[static_cast<std::size_t>(outcome)];
    const ComplexMatrix unnormalized = a * rho * a.adjoint();
    const double probability = unnormalized.trace().real();
    if (probability <= kZeroProbability) {
        throw ZeroProbabilityOutcome("outcome " + std::to_string(outcome) +
                                     " has probability " + std::to_string(probability));
    }
    StepResult result;
    result.probability = probability;
    result.post = unnormalized / probability;
    return result;
}

OutcomeDistribution joint(const QuantumModel& m, std::size_t enumeration_cap) {
    require_valid(m);
    const std::vector<int> sizes = m.outcome_alphabet_sizes();
    checked_tuple_count(sizes, enumeration_cap);

    OutcomeDistribution out(sizes);
    const ComplexMatrix rho0 = initial_density(m.initial, m.dimension);
    const int n = m.step_count();

    std::vector<int> tuple(static_cast<std::size_t>(n), 0);
    for (std::size_t flat = 0; flat < out.tuple_count(); ++flat) {
        tuple = out.tuple_of(flat);
        ComplexMatrix rho = rho0;
        double probability = 1.0;
        for (int k = 0; k < n; ++k) {
            const Stage& stage = m.stages[static_cast<std::size_t>(k)];
            rho = evolve(rho, stage.unitary, m.tolerances.unitarity);
            const int y = tuple[static_cast<std::size_t>(k)];
            if (const auto* proj = std::get_if<ProjectionMeasurement>(&stage.measurement)) {
                const StepResult step = step_project(rho, proj->basis, y);
                probability *= step.probability;
                rho = step.post;
                if (probability <= 0.0) {
                    probability = 0.0;
                    break;
                }
            } else {
                const auto& gen = std::get<GeneralMeasurement>(stage.measurement);
                StepResult step;
                try {
                    step = step_general(rho, gen, y, m.tolerances.completeness);
                } catch (const ZeroProbabilityOutcome&) {
                    probability = 0.0;
                    break;
                }
                probability *= step.probability;
                rho = step.post;
            }
        }
        out[flat] = probability < 0.0 ? 0.0 : probability;
    }
    return out;
}

double hmm_forward(const HmmModel& h, std::span<const int> outcomes) {
    require_valid(h);
    if (outcomes.size() != h.kernels.size()) {
        throw ShapeMismatch("outcome sequence length " + std::to_string(outcomes.size()) +
                            " does not match step count " + std::to_string(h.kernels.size()));
    }
    std::vector<double> alpha = h.initial;
    for (std::size_t k = 0; k < h.kernels.size(); ++k) {
        const HmmKernel& ker = h.kernels[k];
        const int y = outcomes[k];
        if (y < 0 || y >= ker.y_size) {
            throw OutcomeOutOfRange("outcome " + std::to_string(y) +
                                    " out of range for step " + std::to_string(k + 1));
        }
        std::vector<double> next(static_cast<std::size_t>(ker.x_size), 0.0);
        for (int x = 0; x < ker.x_size; ++x) {
            double sum = 0.0;
            for (int xp = 0; xp < ker.x_prev_size; ++xp) {
                sum += alpha[static_cast<std::size_t>(xp)] * ker.at(y, x, xp);
            }
            next[static_cast<std::size_t>(x)] = sum;
        }
        alpha = std::move(next);
    }
    double total = 0.0;
    for (const double v : alpha) {
        total += v;
    }
    return total;
}

} // namespace qfg::oracle
