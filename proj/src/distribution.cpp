// Copyright (c) 2026 the qfg developers.
// SPDX-License-Identifier: Apache-2.0

#include "qfg/distribution.hpp"

#include <cmath>
#include <limits>

namespace qfg {

std::size_t checked_tuple_count(std::span<const int> alphabet_sizes, std::size_t cap) {
    std::size_t n = 1;
    for (const int s : alphabet_sizes) {
        if (s < 1) {
            throw ShapeMismatch("outcome alphabet size must be >= 1");
        }
        const auto d = static_cast<std::size_t>(s);
        if (n > std::numeric_limits<std::size_t>::max() / d) {
            throw ResourceLimit("outcome tuple count overflows");
        }
        n *= d;
        if (n > cap) {
            throw ResourceLimit("outcome tuple count " + std::to_string(n) +
                                " exceeds enumeration cap " + std::to_string(cap));
        }
    }
    return n;
}

OutcomeDistribution::OutcomeDistribution(std::vector<int> alphabet_sizes)
    : sizes_(std::move(alphabet_sizes)) {
    std::size_t n = 1;
    for (const int s : sizes_) {
        if (s < 1) {
            throw ShapeMismatch("outcome alphabet size must be >= 1");
        }
        n *= static_cast<std::size_t>(s);
    }
    p_.assign(n, 0.0);
}

std::size_t OutcomeDistribution::flat_index(std::span<const int> tuple) const {
    if (tuple.size() != sizes_.size()) {
        throw ShapeMismatch("outcome tuple length mismatch");
    }
    std::size_t flat = 0;
    for (std::size_t i = 0; i < sizes_.size(); ++i) {
        if (tuple[i] < 0 || tuple[i] >= sizes_[i]) {
            throw OutcomeOutOfRange("outcome " + std::to_string(tuple[i]) +
                                    " out of range for measurement " + std::to_string(i + 1));
        }
        flat = flat * static_cast<std::size_t>(sizes_[i]) + static_cast<std::size_t>(tuple[i]);
    }
    return flat;
}

std::vector<int> OutcomeDistribution::tuple_of(std::size_t flat) const {
    std::vector<int> tuple(sizes_.size(), 0);
    for (std::size_t i = sizes_.size(); i-- > 0;) {
        const auto d = static_cast<std::size_t>(sizes_[i]);
        tuple[i] = static_cast<int>(flat % d);
        flat /= d;
    }
    return tuple;
}

double OutcomeDistribution::total() const {
    double sum = 0.0;
    for (const double v : p_) {
        sum += v;
    }
    return sum;
}

double OutcomeDistribution::max_abs_difference(const OutcomeDistribution& other) const {
    if (sizes_ != other.sizes_) {
        throw ShapeMismatch("distributions have different outcome alphabets");
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < p_.size(); ++i) {
        const double d = std::abs(p_[i] - other.p_[i]);
        if (d > worst) {
            worst = d;
        }
    }
    return worst;
}

OutcomeDistribution OutcomeDistribution::marginal_dropping_last() const {
    if (sizes_.empty()) {
        throw ShapeMismatch("cannot marginalize an empty distribution");
    }
    std::vector<int> head(sizes_.begin(), sizes_.end() - 1);
    OutcomeDistribution out(std::move(head));
    const auto last = static_cast<std::size_t>(sizes_.back());
    for (std::size_t i = 0; i < out.p_.size(); ++i) {
        double sum = 0.0;
        for (std::size_t y = 0; y < last; ++y) {
            sum += p_[i * last + y];
        }
        out.p_[i] = sum;
    }
    return out;
}

} // namespace qfg
