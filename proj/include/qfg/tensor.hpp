// Copyright (c) 2026 the qfg developers.
// SPDX-License-Identifier: Apache-2.0
//
// Dense complex tensors and Forney-style normal factor graphs over finite
// alphabets. Nodes are factors, edges are variables, and every variable is
// incident to at most two factor slots; a variable with a single slot is a
// half edge. Closing a box multiplies the factors inside a region and sums
// over the region's internal variables.

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "qfg/complex.hpp"
#include "qfg/errors.hpp"

namespace qfg {

struct VariableId {
    std::uint32_t value = 0;
    friend bool operator==(VariableId, VariableId) = default;
    friend auto operator<=>(VariableId, VariableId) = default;
};

struct FactorId {
    std::uint32_t value = 0;
    friend bool operator==(FactorId, FactorId) = default;
    friend auto operator<=>(FactorId, FactorId) = default;
};

// Dense row-major complex array. A rank-0 tensor holds a single scalar.
class Tensor {
public:
    Tensor() : data_(1, Complex{0.0, 0.0}) {}
    explicit Tensor(Complex scalar) : data_(1, scalar) {}
    Tensor(std::vector<std::size_t> shape, std::vector<Complex> values);

    static Tensor zeros(std::vector<std::size_t> shape);

    std::size_t rank() const noexcept { return shape_.size(); }
    const std::vector<std::size_t>& shape() const noexcept { return shape_; }
    std::size_t size() const noexcept { return data_.size(); }

    std::span<const Complex> values() const noexcept { return data_; }
    std::span<Complex> values() noexcept { return data_; }

    Complex operator[](std::size_t flat) const { return data_[flat]; }
    Complex& operator[](std::size_t flat) { return data_[flat]; }

    Complex at(std::span<const std::size_t> index) const;
    Complex& at(std::span<const std::size_t> index);

    // Value of a rank-0 tensor; throws ShapeMismatch otherwise.
    Complex scalar_value() const;

    bool all_finite() const noexcept;

    // Reorders axes so that axis i of the result is axis `perm[i]` of *this.
    Tensor permuted(std::span<const std::size_t> perm) const;

    friend bool operator==(const Tensor&, const Tensor&) = default;

private:
    std::size_t flat_index(std::span<const std::size_t> index) const;

    std::vector<std::size_t> shape_;
    std::vector<Complex> data_;
};

// Tensor of the given arity that is 1 where all indices agree and 0
// elsewhere. Arity 2 yields the identity matrix; arity 1 the all-ones
// vector (a vacuous constraint).
Tensor equality_tensor(std::size_t arity, std::size_t alphabet_size);

// All-ones tensor of rank 1; attaching it to a variable sums the variable out.
Tensor ones_tensor(std::size_t alphabet_size);

// A tensor bound to graph variables, one axis per scope entry.
struct Factor {
    std::vector<VariableId> scope;
    Tensor tensor;
};

struct ContractionOptions {
    // Refuse any contraction step whose result would exceed this many
    // complex elements.
    std::size_t max_intermediate_elements = 10'000'000;
};

class FactorGraph {
public:
    FactorGraph() = default;
    // Declares one variable per entry; entry i is the alphabet size of
    // variable i. Alphabet sizes must be >= 1.
    explicit FactorGraph(const std::vector<std::size_t>& alphabet_sizes);

    VariableId add_variable(std::size_t alphabet_size);

    std::size_t variable_count() const noexcept { return alphabet_.size(); }
    std::size_t factor_count() const noexcept { return factors_.size(); }
    std::size_t alphabet_size(VariableId v) const;

    // Number of factor slots the variable currently occupies (0, 1, or 2).
    std::size_t degree(VariableId v) const;

    // Registers a factor over `scope`. The tensor shape must match the scope
    // alphabets, the scope must not repeat a variable (use equality factors
    // for branching), and no variable may end up in more than two slots.
    FactorId add_factor(std::vector<VariableId> scope, Tensor tensor);

    const std::vector<VariableId>& scope(FactorId f) const;
    const Tensor& tensor(FactorId f) const;
    std::vector<FactorId> factor_ids() const;

    // Variables incident to exactly one factor slot, ascending by id.
    std::vector<VariableId> half_edges() const;

    // Multiplies the factors in `box` and sums over the variables internal
    // to the box (both slots inside). Boundary variables -- those with a
    // slot outside the box, plus half edges inside -- remain in the result
    // scope, ascending by id.
    Factor close_box(std::span<const FactorId> box,
                     const ContractionOptions& options = {}) const;

    // Closed-box function of the box containing every factor: a factor over
    // the half edges. With no half edges the result is rank 0 (the partition
    // function). Requires every declared variable to occupy at least one
    // slot; a graph with no factors evaluates to the empty product, 1.
    Factor external_function(const ContractionOptions& options = {}) const;

private:
    std::vector<std::size_t> alphabet_;   // size per variable
    std::vector<Factor> factors_;
    std::vector<std::size_t> degree_;     // slots used per variable
};

} // namespace qfg
