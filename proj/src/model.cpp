// Copyright (c) 2026 the qfg developers.
// SPDX-License-Identifier: Apache-2.0

#include "qfg/model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace qfg {

namespace {

bool finite(const ComplexMatrix& m) {
    return m.allFinite();
}

double pmf_deviation(std::span<const double> p) {
    double sum = 0.0;
    double worst_negative = 0.0;
    for (const double v : p) {
        if (!std::isfinite(v)) {
            return 1.0;
        }
        sum += v;
        if (v < worst_negative) {
            worst_negative = v;
        }
    }
    return std::max(std::abs(sum - 1.0), -worst_negative);
}

} // namespace

int outcome_count(const MeasurementSpec& spec, int dimension) {
    if (std::holds_alternative<ProjectionMeasurement>(spec)) {
        return dimension;
    }
    return std::get<GeneralMeasurement>(spec).outcome_count();
}

int QuantumModel::outcome_count(int stage_index) const {
    return qfg::outcome_count(stages[static_cast<std::size_t>(stage_index)].measurement,
                              dimension);
}

std::vector<int> QuantumModel::outcome_alphabet_sizes() const {
    std::vector<int> sizes;
    sizes.reserve(stages.size());
    for (int k = 0; k < step_count(); ++k) {
        sizes.push_back(outcome_count(k));
    }
    return sizes;
}

std::vector<int> HmmModel::outcome_alphabet_sizes() const {
    std::vector<int> sizes;
    sizes.reserve(kernels.size());
    for (const HmmKernel& k : kernels) {
        sizes.push_back(k.y_size);
    }
    return sizes;
}

bool ValidationReport::passed() const {
    for (const CheckResult& c : checks) {
        if (!c.passed) {
            return false;
        }
    }
    return true;
}

double ValidationReport::max_deviation() const {
    double worst = 0.0;
    for (const CheckResult& c : checks) {
        if (c.deviation > worst) {
            worst = c.deviation;
        }
    }
    return worst;
}

ValidationReport validate_model(const QuantumModel& m) {
    ValidationReport report;
    const Tolerances& tol = m.tolerances;
    const int dim = m.dimension;

    auto add = [&report](std::string name, double deviation, double tolerance) {
        const bool ok = std::isfinite(deviation) && deviation <= tolerance;
        report.checks.push_back(CheckResult{std::move(name), deviation, tolerance, ok});
    };

    if (dim < 1) {
        add("dimension (>= 1)", 1.0, 0.0);
        return report;
    }
    if (m.stages.empty()) {
        add("stages (>= 1)", 1.0, 0.0);
        return report;
    }

    // Initial state.
    if (const auto* known = std::get_if<KnownBasisState>(&m.initial)) {
        const bool ok = known->index >= 0 && known->index < dim;
        add("initial/basis-index-range", ok ? 0.0 : 1.0, 0.0);
    } else if (const auto* pmf = std::get_if<BasisPmf>(&m.initial)) {
        if (static_cast<int>(pmf->p.size()) != dim) {
            add("initial/pmf-length", 1.0, 0.0);
        } else {
            add("initial/pmf-normalization", pmf_deviation(pmf->p), tol.initial_norm);
        }
    } else {
        const auto& pure = std::get<PureVector>(m.initial);
        report.notes.push_back("initial state is a pure vector (extension beyond "
                               "basis/pmf inputs)");
        if (static_cast<int>(pure.psi.size()) != dim) {
            add("initial/pure-length", 1.0, 0.0);
        } else if (!pure.psi.allFinite()) {
            add("initial/pure-finite", 1.0, 0.0);
        } else {
            add("initial/pure-normalization", std::abs(pure.psi.norm() - 1.0),
                tol.initial_norm);
        }
    }

    for (std::size_t k = 0; k < m.stages.size(); ++k) {
        const Stage& stage = m.stages[k];
        const std::string prefix = "stage[" + std::to_string(k) + "]/";

        if (stage.unitary.rows() != dim || stage.unitary.cols() != dim ||
            !finite(stage.unitary)) {
            add(prefix + "unitary-shape", 1.0, 0.0);
        } else {
            add(prefix + "unitarity", unitarity_deviation(stage.unitary), tol.unitarity);
        }

        if (const auto* proj = std::get_if<ProjectionMeasurement>(&stage.measurement)) {
            if (proj->basis.rows() != dim || proj->basis.cols() != dim ||
                !finite(proj->basis)) {
                add(prefix + "measurement-basis-shape", 1.0, 0.0);
            } else {
                add(prefix + "measurement-basis-unitarity",
                    unitarity_deviation(proj->basis), tol.unitarity);
            }
        } else {
            const auto& gen = std::get<GeneralMeasurement>(stage.measurement);
            if (gen.kraus.empty() || gen.labels.size() != gen.kraus.size()) {
                add(prefix + "measurement-outcomes", 1.0, 0.0);
                continue;
            }
            bool shapes_ok = true;
            for (const ComplexMatrix& a : gen.kraus) {
                if (a.rows() != dim || a.cols() != dim || !finite(a)) {
                    shapes_ok = false;
                    break;
                }
            }
            if (!shapes_ok) {
                add(prefix + "measurement-operator-shape", 1.0, 0.0);
                continue;
            }
            // Completeness: sum_y A(y)^H A(y) = I.
            ComplexMatrix sum = ComplexMatrix::Zero(dim, dim);
            for (const ComplexMatrix& a : gen.kraus) {
                sum += a.adjoint() * a;
            }
            const double dev =
                (sum - ComplexMatrix::Identity(dim, dim)).cwiseAbs().maxCoeff();
            add(prefix + "measurement-completeness (sum A^H A = I)", dev,
                tol.completeness);
        }
    }
    return report;
}

ValidationReport validate_model(const HmmModel& h) {
    ValidationReport report;
    auto add = [&report](std::string name, double deviation, double tolerance) {
        const bool ok = std::isfinite(deviation) && deviation <= tolerance;
        report.checks.push_back(CheckResult{std::move(name), deviation, tolerance, ok});
    };

    if (h.initial.empty()) {
        add("initial/pmf-length", 1.0, 0.0);
        return report;
    }
    if (h.kernels.empty()) {
        add("kernels (>= 1)", 1.0, 0.0);
        return report;
    }
    add("initial/pmf-normalization", pmf_deviation(h.initial), 1e-9);

    int prev_x = static_cast<int>(h.initial.size());
    for (std::size_t k = 0; k < h.kernels.size(); ++k) {
        const HmmKernel& ker = h.kernels[k];
        const std::string prefix = "kernel[" + std::to_string(k) + "]/";
        const auto expected = static_cast<std::size_t>(ker.y_size) *
                              static_cast<std::size_t>(ker.x_size) *
                              static_cast<std::size_t>(ker.x_prev_size);
        if (ker.y_size < 1 || ker.x_size < 1 || ker.x_prev_size < 1 ||
            ker.values.size() != expected) {
            add(prefix + "shape", 1.0, 0.0);
            return report;
        }
        add(prefix + "chain-compatibility", ker.x_prev_size == prev_x ? 0.0 : 1.0, 0.0);
        prev_x = ker.x_size;

        // Each column p(., . | x_prev) must be a pmf.
        double worst = 0.0;
        for (int xp = 0; xp < ker.x_prev_size; ++xp) {
            double sum = 0.0;
            double neg = 0.0;
            for (int y = 0; y < ker.y_size; ++y) {
                for (int x = 0; x < ker.x_size; ++x) {
                    const double v = ker.at(y, x, xp);
                    if (!std::isfinite(v)) {
                        sum = std::numeric_limits<double>::quiet_NaN();
                        break;
                    }
                    sum += v;
                    if (v < neg) {
                        neg = v;
                    }
                }
            }
            const double dev = std::max(std::abs(sum - 1.0), -neg);
            if (!std::isfinite(dev) || dev > worst) {
                worst = std::isfinite(dev) ? dev : 1.0;
            }
        }
        add(prefix + "kernel-normalization", worst, 1e-9);
    }
    return report;
}

namespace {

template <typename Model>
void require_valid_impl(const Model& m) {
    const ValidationReport report = validate_model(m);
    for (const CheckResult& c : report.checks) {
        if (!c.passed) {
            throw InvalidModel("model check '" + c.name + "' failed: deviation " +
                               std::to_string(c.deviation) + " exceeds tolerance " +
                               std::to_string(c.tolerance));
        }
    }
}

} // namespace

void require_valid(const QuantumModel& m) {
    require_valid_impl(m);
}

void require_valid(const HmmModel& h) {
    require_valid_impl(h);
}

GeneralMeasurement projection_to_kraus(const ComplexMatrix& basis,
                                       double unitarity_tolerance) {
    if (basis.rows() != basis.cols() || basis.rows() == 0) {
        throw NotUnitary("projection basis must be a square matrix");
    }
    const double dev = unitarity_deviation(basis);
    if (!(dev <= unitarity_tolerance)) {
        throw NotUnitary("projection basis deviates from unitarity by " +
                         std::to_string(dev));
    }
    GeneralMeasurement out;
    const int m = static_cast<int>(basis.rows());
    out.labels.reserve(static_cast<std::size_t>(m));
    out.kraus.reserve(static_cast<std::size_t>(m));
    for (int y = 0; y < m; ++y) {
        out.labels.push_back(std::to_string(y));
        const ComplexVector column = basis.col(y);
        out.kraus.push_back(column * column.adjoint());
    }
    return out;
}

GeneralMeasurement as_kraus(const MeasurementSpec& spec, double unitarity_tolerance) {
    if (const auto* proj = std::get_if<ProjectionMeasurement>(&spec)) {
        return projection_to_kraus(proj->basis, unitarity_tolerance);
    }
    return std::get<GeneralMeasurement>(spec);
}

} // namespace qfg
