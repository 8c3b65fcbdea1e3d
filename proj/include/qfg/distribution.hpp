// Copyright (c) 2026 the qfg developers.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "qfg/errors.hpp"

namespace qfg {

// Joint probability mass function over outcome tuples (y_1, ..., y_n),
// stored row-major; enumeration order is lexicographic in the tuple.
class OutcomeDistribution {
public:
    OutcomeDistribution() = default;
    explicit OutcomeDistribution(std::vector<int> alphabet_sizes);

    const std::vector<int>& alphabet_sizes() const noexcept { return sizes_; }
    std::size_t tuple_count() const noexcept { return p_.size(); }

    double operator[](std::size_t flat) const { return p_[flat]; }
    double& operator[](std::size_t flat) { return p_[flat]; }

    double at(std::span<const int> tuple) const { return p_[flat_index(tuple)]; }
    double& at(std::span<const int> tuple) { return p_[flat_index(tuple)]; }

    std::size_t flat_index(std::span<const int> tuple) const;
    std::vector<int> tuple_of(std::size_t flat) const;

    double total() const;
    double max_abs_difference(const OutcomeDistribution& other) const;

    std::span<const double> probabilities() const noexcept { return p_; }

    // Marginal over the last outcome variable.
    OutcomeDistribution marginal_dropping_last() const;

private:
    std::vector<int> sizes_;
    std::vector<double> p_;
};

// Product of the alphabet sizes, guarded against overflow; throws
// ResourceLimit when the count exceeds `cap`.
std::size_t checked_tuple_count(std::span<const int> alphabet_sizes, std::size_t cap);

} // namespace qfg
