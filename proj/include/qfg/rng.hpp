// Copyright (c) 2026 the qfg developers.
// SPDX-License-Identifier: Apache-2.0
//
// Reproducible random numbers. The engine is std::mt19937_64, which the
// C++ standard pins bit-for-bit; the mappings below avoid the standard
// distribution adapters, whose output is implementation-defined. Fixed
// seeds therefore reproduce exactly across platforms and compilers.

#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace qfg {

// SplitMix64 finalizer; used to decorrelate derived seeds.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// Seed for the i-th independent stream of a run seeded with `seed`.
inline std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index) {
    return splitmix64(splitmix64(seed) ^ splitmix64(index + 1));
}

// Uniform double in [0, 1) with 53 random bits.
inline double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Uniform integer in [0, n); n must be >= 1. Uses rejection to stay unbiased.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % n;
    std::uint64_t x = rng();
    while (x >= limit) {
        x = rng();
    }
    return x % n;
}

// Standard normal via Box-Muller on the pinned uniform source.
inline double standard_normal(std::mt19937_64& rng) {
    double u = uniform01(rng);
    while (u <= 0.0) {
        u = uniform01(rng);
    }
    const double v = uniform01(rng);
    return std::sqrt(-2.0 * std::log(u)) * std::cos(2.0 * std::numbers::pi * v);
}

} // namespace qfg
