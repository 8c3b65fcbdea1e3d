// Copyright (c) 2026 the qfg developers.
// SPDX-License-Identifier: Apache-2.0
//
// Matrix operations expressed as factor-graph contractions. A matrix is a
// two-variable factor (row variable first); multiplication is a chain with a
// shared inner variable, and the trace closes the chain into a cycle.

#pragma once

#include <span>
#include <vector>

#include "qfg/matrix.hpp"
#include "qfg/tensor.hpp"

namespace qfg {

Tensor tensor_from_matrix(const ComplexMatrix& m);
Tensor tensor_from_vector(const ComplexVector& v);

// Rank-2 factor to a dense matrix, first axis = rows.
ComplexMatrix matrix_from_tensor(const Tensor& t);
ComplexVector vector_from_tensor(const Tensor& t);

// Builds the two-node chain graph for A*B and closes it.
ComplexMatrix graph_matmul(const ComplexMatrix& a, const ComplexMatrix& b);

// Builds the cyclic chain graph for tr(m[0] * m[1] * ... ) and closes it.
// A single matrix closes through an explicit equality factor.
Complex graph_trace(std::span<const ComplexMatrix> ms);

} // namespace qfg
