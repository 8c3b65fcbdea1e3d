// Copyright (c) 2026 the qfg developers.
// SPDX-License-Identifier: Apache-2.0

#include "qfg/graph_linalg.hpp"

#include <string>

namespace qfg {

Tensor tensor_from_matrix(const ComplexMatrix& m) {
    const auto rows = static_cast<std::size_t>(m.rows());
    const auto cols = static_cast<std::size_t>(m.cols());
    std::vector<Complex> values;
    values.reserve(rows * cols);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            values.push_back(m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)));
        }
    }
    return Tensor({rows, cols}, std::move(values));
}

Tensor tensor_from_vector(const ComplexVector& v) {
    std::vector<Complex> values(v.data(), v.data() + v.size());
    return Tensor({static_cast<std::size_t>(v.size())}, std::move(values));
}

ComplexMatrix matrix_from_tensor(const Tensor& t) {
    if (t.rank() != 2) {
        throw ShapeMismatch("matrix_from_tensor requires rank 2, got rank " +
                            std::to_string(t.rank()));
    }
    const auto rows = static_cast<Eigen::Index>(t.shape()[0]);
    const auto cols = static_cast<Eigen::Index>(t.shape()[1]);
    ComplexMatrix m(rows, cols);
    std::size_t flat = 0;
    for (Eigen::Index r = 0; r < rows; ++r) {
        for (Eigen::Index c = 0; c < cols; ++c) {
            m(r, c) = t[flat++];
        }
    }
    return m;
}

ComplexVector vector_from_tensor(const Tensor& t) {
    if (t.rank() != 1) {
        throw ShapeMismatch("vector_from_tensor requires rank 1, got rank " +
                            std::to_string(t.rank()));
    }
    ComplexVector v(static_cast<Eigen::Index>(t.shape()[0]));
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        v(i) = t[static_cast<std::size_t>(i)];
    }
    return v;
}

ComplexMatrix graph_matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows()) {
        throw DimensionMismatch("cannot multiply " + std::to_string(a.rows()) + "x" +
                                std::to_string(a.cols()) + " by " + std::to_string(b.rows()) +
                                "x" + std::to_string(b.cols()));
    }
    FactorGraph g;
    const VariableId x = g.add_variable(static_cast<std::size_t>(a.rows()));
    const VariableId y = g.add_variable(static_cast<std::size_t>(a.cols()));
    const VariableId z = g.add_variable(static_cast<std::size_t>(b.cols()));
    g.add_factor({x, y}, tensor_from_matrix(a));
    g.add_factor({y, z}, tensor_from_matrix(b));
    return matrix_from_tensor(g.external_function().tensor);
}

Complex graph_trace(std::span<const ComplexMatrix> ms) {
    if (ms.empty()) {
        throw DimensionMismatch("graph_trace requires at least one matrix");
    }
    for (std::size_t i = 0; i < ms.size(); ++i) {
        const Eigen::Index next_rows = ms[(i + 1) % ms.size()].rows();
        if (ms[i].cols() != next_rows) {
            throw DimensionMismatch("matrix " + std::to_string(i) + " has " +
                                    std::to_string(ms[i].cols()) +
                                    " columns but its successor has " +
                                    std::to_string(next_rows) + " rows");
        }
    }

    FactorGraph g;
    if (ms.size() == 1) {
        // Self-loops are not expressible directly (a factor scope cannot
        // repeat a variable), so the loop closes through an equality factor,
        // which is exactly the identity matrix.
        const std::size_t n = static_cast<std::size_t>(ms[0].rows());
        const VariableId x = g.add_variable(n);
        const VariableId y = g.add_variable(static_cast<std::size_t>(ms[0].cols()));
        g.add_factor({x, y}, tensor_from_matrix(ms[0]));
        g.add_factor({y, x}, equality_tensor(2, n));
        return g.external_function().tensor.scalar_value();
    }

    std::vector<VariableId> vars;
    vars.reserve(ms.size());
    for (const ComplexMatrix& m : ms) {
        vars.push_back(g.add_variable(static_cast<std::size_t>(m.rows())));
    }
    for (std::size_t i = 0; i < ms.size(); ++i) {
        g.add_factor({vars[i], vars[(i + 1) % ms.size()]}, tensor_from_matrix(ms[i]));
    }
    return g.external_function().tensor.scalar_value();
}

} // namespace qfg
