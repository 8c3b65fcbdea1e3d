// Copyright (c) 2026 the qfg developers.
// SPDX-License-Identifier: Apache-2.0

#include "qfg/tensor.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>
#include <utility>

namespace qfg {

namespace {

std::size_t checked_element_count(std::span<const std::size_t> shape) {
    std::size_t n = 1;
    for (std::size_t d : shape) {
        if (d == 0) {
            throw ShapeMismatch("tensor axis of size zero");
        }
        if (n > std::numeric_limits<std::size_t>::max() / d) {
            throw ResourceLimit("tensor element count overflows size_t");
        }
        n *= d;
    }
    return n;
}

std::vector<std::size_t> row_major_strides(std::span<const std::size_t> shape) {
    std::vector<std::size_t> strides(shape.size(), 1);
    for (std::size_t i = shape.size(); i-- > 1;) {
        strides[i - 1] = strides[i] * shape[i];
    }
    return strides;
}

} // namespace

Tensor::Tensor(std::vector<std::size_t> shape, std::vector<Complex> values)
    : shape_(std::move(shape)), data_(std::move(values)) {
    const std::size_t expected = checked_element_count(shape_);
    if (data_.size() != expected) {
        throw ShapeMismatch("tensor value count " + std::to_string(data_.size()) +
                            " does not match shape product " + std::to_string(expected));
    }
}

Tensor Tensor::zeros(std::vector<std::size_t> shape) {
    const std::size_t n = checked_element_count(shape);
    return Tensor(std::move(shape), std::vector<Complex>(n, Complex{0.0, 0.0}));
}

std::size_t Tensor::flat_index(std::span<const std::size_t> index) const {
    if (index.size() != shape_.size()) {
        throw ShapeMismatch("index rank " + std::to_string(index.size()) +
                            " does not match tensor rank " + std::to_string(shape_.size()));
    }
    std::size_t flat = 0;
    for (std::size_t i = 0; i < shape_.size(); ++i) {
        if (index[i] >= shape_[i]) {
            throw ShapeMismatch("index out of range on axis " + std::to_string(i));
        }
        flat = flat * shape_[i] + index[i];
    }
    return flat;
}

Complex Tensor::at(std::span<const std::size_t> index) const {
    return data_[flat_index(index)];
}

Complex& Tensor::at(std::span<const std::size_t> index) {
    return data_[flat_index(index)];
}

Complex Tensor::scalar_value() const {
    if (!shape_.empty()) {
        throw ShapeMismatch("tensor of rank " + std::to_string(shape_.size()) +
                            " is not a scalar");
    }
    return data_[0];
}

bool Tensor::all_finite() const noexcept {
    for (const Complex& v : data_) {
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
            return false;
        }
    }
    return true;
}

Tensor Tensor::permuted(std::span<const std::size_t> perm) const {
    if (perm.size() != shape_.size()) {
        throw ShapeMismatch("permutation rank does not match tensor rank");
    }
    std::vector<std::size_t> new_shape(perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i) {
        new_shape[i] = shape_[perm[i]];
    }
    Tensor out = Tensor::zeros(new_shape);

    const auto src_strides = row_major_strides(shape_);
    // Stride of the source index as we walk the destination in row-major order.
    std::vector<std::size_t> walk_strides(perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i) {
        walk_strides[i] = src_strides[perm[i]];
    }

    std::vector<std::size_t> counter(perm.size(), 0);
    std::size_t src = 0;
    for (std::size_t dst = 0; dst < out.data_.size(); ++dst) {
        out.data_[dst] = data_[src];
        for (std::size_t ax = perm.size(); ax-- > 0;) {
            ++counter[ax];
            src += walk_strides[ax];
            if (counter[ax] < new_shape[ax]) {
                break;
            }
            counter[ax] = 0;
            src -= walk_strides[ax] * new_shape[ax];
        }
    }
    return out;
}

Tensor equality_tensor(std::size_t arity, std::size_t alphabet_size) {
    if (arity == 0) {
        throw ShapeMismatch("equality tensor requires arity >= 1");
    }
    if (alphabet_size == 0) {
        throw InvalidAlphabet("equality tensor requires alphabet size >= 1");
    }
    Tensor t = Tensor::zeros(std::vector<std::size_t>(arity, alphabet_size));
    // Flat index of (v, v, ..., v) is v * (size^(arity-1) + ... + 1).
    std::size_t diag_step = 0;
    std::size_t power = 1;
    for (std::size_t i = 0; i < arity; ++i) {
        diag_step += power;
        power *= alphabet_size;
    }
    for (std::size_t v = 0; v < alphabet_size; ++v) {
        t[v * diag_step] = Complex{1.0, 0.0};
    }
    return t;
}

Tensor ones_tensor(std::size_t alphabet_size) {
    if (alphabet_size == 0) {
        throw InvalidAlphabet("ones tensor requires alphabet size >= 1");
    }
    return Tensor({alphabet_size}, std::vector<Complex>(alphabet_size, Complex{1.0, 0.0}));
}

FactorGraph::FactorGraph(const std::vector<std::size_t>& alphabet_sizes) {
    alphabet_.reserve(alphabet_sizes.size());
    degree_.reserve(alphabet_sizes.size());
    for (std::size_t s : alphabet_sizes) {
        add_variable(s);
    }
}

VariableId FactorGraph::add_variable(std::size_t alphabet_size) {
    if (alphabet_size == 0) {
        throw InvalidAlphabet("variable alphabet size must be >= 1");
    }
    alphabet_.push_back(alphabet_size);
    degree_.push_back(0);
    return VariableId{static_cast<std::uint32_t>(alphabet_.size() - 1)};
}

std::size_t FactorGraph::alphabet_size(VariableId v) const {
    if (v.value >= alphabet_.size()) {
        throw InvalidGraph("unknown variable id " + std::to_string(v.value));
    }
    return alphabet_[v.value];
}

std::size_t FactorGraph::degree(VariableId v) const {
    if (v.value >= degree_.size()) {
        throw InvalidGraph("unknown variable id " + std::to_string(v.value));
    }
    return degree_[v.value];
}

FactorId FactorGraph::add_factor(std::vector<VariableId> scope, Tensor tensor) {
    if (scope.size() != tensor.rank()) {
        throw ShapeMismatch("factor scope has " + std::to_string(scope.size()) +
                            " variables but tensor rank is " + std::to_string(tensor.rank()));
    }
    for (std::size_t i = 0; i < scope.size(); ++i) {
        const VariableId v = scope[i];
        if (v.value >= alphabet_.size()) {
            throw InvalidGraph("factor scope refers to undeclared variable " +
                               std::to_string(v.value));
        }
        if (tensor.shape()[i] != alphabet_[v.value]) {
            throw ShapeMismatch("axis " + std::to_string(i) + " has size " +
                                std::to_string(tensor.shape()[i]) + " but variable " +
                                std::to_string(v.value) + " has alphabet size " +
                                std::to_string(alphabet_[v.value]));
        }
        for (std::size_t j = i + 1; j < scope.size(); ++j) {
            if (scope[j] == v) {
                throw InvalidGraph("variable " + std::to_string(v.value) +
                                   " repeated in factor scope; use an equality factor");
            }
        }
    }
    for (const VariableId v : scope) {
        if (degree_[v.value] >= 2) {
            throw DegreeViolation("variable " + std::to_string(v.value) +
                                  " already occupies two factor slots");
        }
    }
    if (!tensor.all_finite()) {
        throw InvalidGraph("factor tensor contains non-finite entries");
    }
    for (const VariableId v : scope) {
        ++degree_[v.value];
    }
    factors_.push_back(Factor{std::move(scope), std::move(tensor)});
    return FactorId{static_cast<std::uint32_t>(factors_.size() - 1)};
}

const std::vector<VariableId>& FactorGraph::scope(FactorId f) const {
    if (f.value >= factors_.size()) {
        throw InvalidGraph("unknown factor id " + std::to_string(f.value));
    }
    return factors_[f.value].scope;
}

const Tensor& FactorGraph::tensor(FactorId f) const {
    if (f.value >= factors_.size()) {
        throw InvalidGraph("unknown factor id " + std::to_string(f.value));
    }
    return factors_[f.value].tensor;
}

std::vector<FactorId> FactorGraph::factor_ids() const {
    std::vector<FactorId> ids;
    ids.reserve(factors_.size());
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        ids.push_back(FactorId{static_cast<std::uint32_t>(i)});
    }
    return ids;
}

std::vector<VariableId> FactorGraph::half_edges() const {
    std::vector<VariableId> out;
    for (std::size_t v = 0; v < degree_.size(); ++v) {
        if (degree_[v] == 1) {
            out.push_back(VariableId{static_cast<std::uint32_t>(v)});
        }
    }
    return out;
}

namespace {

struct WorkItem {
    std::vector<VariableId> scope;
    Tensor tensor;
};

// Element count of the factor obtained by merging a and b, with shared
// variables summed. Saturates instead of overflowing.
std::size_t merge_size(const WorkItem& a, const WorkItem& b,
                       const std::vector<std::size_t>& alphabet) {
    std::size_t n = 1;
    auto mul = [&n](std::size_t d) {
        if (n > std::numeric_limits<std::size_t>::max() / d) {
            n = std::numeric_limits<std::size_t>::max();
        } else {
            n *= d;
        }
    };
    for (const VariableId v : a.scope) {
        if (std::find(b.scope.begin(), b.scope.end(), v) == b.scope.end()) {
            mul(alphabet[v.value]);
        }
    }
    for (const VariableId v : b.scope) {
        if (std::find(a.scope.begin(), a.scope.end(), v) == a.scope.end()) {
            mul(alphabet[v.value]);
        }
    }
    return n;
}

// Pairwise contraction: multiplies a and b and sums over their shared
// variables. In a normal graph any variable shared by two working factors
// is internal to the box being closed, so summing all shared variables is
// exactly the closing-box semantics.
WorkItem contract_pair(const WorkItem& a, const WorkItem& b,
                       const std::vector<std::size_t>& alphabet,
                       [[maybe_unused]] const std::vector<char>& internal) {
    std::vector<VariableId> shared;
    for (const VariableId v : a.scope) {
        if (std::find(b.scope.begin(), b.scope.end(), v) != b.scope.end()) {
            assert(internal[v.value] && "variable shared inside a box must be internal");
            shared.push_back(v);
        }
    }

    WorkItem out;
    for (const VariableId v : a.scope) {
        if (std::find(shared.begin(), shared.end(), v) == shared.end()) {
            out.scope.push_back(v);
        }
    }
    for (const VariableId v : b.scope) {
        if (std::find(shared.begin(), shared.end(), v) == shared.end()) {
            out.scope.push_back(v);
        }
    }

    std::vector<std::size_t> out_shape;
    out_shape.reserve(out.scope.size());
    for (const VariableId v : out.scope) {
        out_shape.push_back(alphabet[v.value]);
    }
    out.tensor = Tensor::zeros(out_shape);

    // Iteration axes: result variables first, shared (summed) variables last.
    std::vector<VariableId> axes = out.scope;
    axes.insert(axes.end(), shared.begin(), shared.end());

    const auto strides_of = [&](const WorkItem& item) {
        const auto native = row_major_strides(item.tensor.shape());
        std::vector<std::size_t> s(axes.size(), 0);
        for (std::size_t i = 0; i < axes.size(); ++i) {
            const auto it = std::find(item.scope.begin(), item.scope.end(), axes[i]);
            if (it != item.scope.end()) {
                s[i] = native[static_cast<std::size_t>(it - item.scope.begin())];
            }
        }
        return s;
    };
    const std::vector<std::size_t> sa = strides_of(a);
    const std::vector<std::size_t> sb = strides_of(b);
    std::vector<std::size_t> sr(axes.size(), 0);
    {
        const auto native = row_major_strides(out.tensor.shape());
        for (std::size_t i = 0; i < out.scope.size(); ++i) {
            sr[i] = native[i];
        }
    }

    std::vector<std::size_t> dims(axes.size());
    std::size_t total = 1;
    for (std::size_t i = 0; i < axes.size(); ++i) {
        dims[i] = alphabet[axes[i].value];
        total *= dims[i];
    }

    const std::span<const Complex> av = a.tensor.values();
    const std::span<const Complex> bv = b.tensor.values();
    const std::span<Complex> rv = out.tensor.values();

    std::vector<std::size_t> counter(axes.size(), 0);
    std::size_t fa = 0;
    std::size_t fb = 0;
    std::size_t fr = 0;
    for (std::size_t step = 0; step < total; ++step) {
        rv[fr] += av[fa] * bv[fb];
        for (std::size_t ax = axes.size(); ax-- > 0;) {
            ++counter[ax];
            fa += sa[ax];
            fb += sb[ax];
            fr += sr[ax];
            if (counter[ax] < dims[ax]) {
                break;
            }
            counter[ax] = 0;
            fa -= sa[ax] * dims[ax];
            fb -= sb[ax] * dims[ax];
            fr -= sr[ax] * dims[ax];
        }
    }
    return out;
}

} // namespace

Factor FactorGraph::close_box(std::span<const FactorId> box,
                              const ContractionOptions& options) const {
    if (box.empty()) {
        throw EmptyBox("close_box requires a nonempty box");
    }
    std::vector<char> in_box(factors_.size(), 0);
    for (const FactorId f : box) {
        if (f.value >= factors_.size()) {
            throw InvalidGraph("unknown factor id " + std::to_string(f.value));
        }
        if (in_box[f.value]) {
            throw InvalidGraph("factor " + std::to_string(f.value) + " listed twice in box");
        }
        in_box[f.value] = 1;
    }

    // A variable with both slots inside the box is internal and gets summed;
    // anything else that touches the box stays on the boundary.
    std::vector<std::size_t> inside_slots(alphabet_.size(), 0);
    for (const FactorId f : box) {
        for (const VariableId v : factors_[f.value].scope) {
            ++inside_slots[v.value];
        }
    }
    std::vector<char> internal(alphabet_.size(), 0);
    for (std::size_t v = 0; v < alphabet_.size(); ++v) {
        if (inside_slots[v] == 2) {
            internal[v] = 1;
        }
    }

    std::vector<WorkItem> items;
    items.reserve(box.size());
    for (const FactorId f : box) {
        items.push_back(WorkItem{factors_[f.value].scope, factors_[f.value].tensor});
    }

    // Greedy pairwise contraction, always merging the pair with the smallest
    // resulting tensor. Correctness does not depend on the order; only cost
    // does, and chain-shaped graphs contract well under this rule.
    while (items.size() > 1) {
        std::size_t best_i = 0;
        std::size_t best_j = 1;
        std::size_t best_size = std::numeric_limits<std::size_t>::max();
        for (std::size_t i = 0; i < items.size(); ++i) {
            for (std::size_t j = i + 1; j < items.size(); ++j) {
                const std::size_t s = merge_size(items[i], items[j], alphabet_);
                if (s < best_size) {
                    best_size = s;
                    best_i = i;
                    best_j = j;
                }
            }
        }
        if (best_size > options.max_intermediate_elements) {
            throw ResourceLimit("contraction intermediate of " + std::to_string(best_size) +
                                " elements exceeds cap of " +
                                std::to_string(options.max_intermediate_elements));
        }
        WorkItem merged = contract_pair(items[best_i], items[best_j], alphabet_, internal);
        items[best_i] = std::move(merged);
        items.erase(items.begin() + static_cast<std::ptrdiff_t>(best_j));
    }

    WorkItem& result = items.front();
    for ([[maybe_unused]] const VariableId v : result.scope) {
        assert(!internal[v.value] && "internal variable survived contraction");
    }

    // Canonical axis order: boundary variables ascending by id.
    std::vector<std::size_t> order(result.scope.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t l, std::size_t r) {
        return result.scope[l] < result.scope[r];
    });
    std::vector<VariableId> sorted_scope(result.scope.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        sorted_scope[i] = result.scope[order[i]];
    }
    Tensor sorted_tensor = result.tensor.permuted(order);
    return Factor{std::move(sorted_scope), std::move(sorted_tensor)};
}

Factor FactorGraph::external_function(const ContractionOptions& options) const {
    for (std::size_t v = 0; v < degree_.size(); ++v) {
        if (degree_[v] == 0) {
            throw InvalidGraph("variable " + std::to_string(v) +
                               " is not attached to any factor");
        }
    }
    if (factors_.empty()) {
        return Factor{{}, Tensor(Complex{1.0, 0.0})};
    }
    const std::vector<FactorId> all = factor_ids();
    return close_box(all, options);
}

} // namespace qfg
