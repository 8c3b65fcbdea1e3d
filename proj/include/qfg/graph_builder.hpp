// Copyright (c) 2026 the qfg developers.
// SPDX-License-Identifier: Apache-2.0
//
// Compiles measurement-sequence models into two-rail factor graphs: an upper
// rail carrying the initial state, the unitaries and the measurement
// operators, and a lower rail carrying their entrywise complex conjugates.
// Each measurement contributes a gadget whose outcome variable ties the two
// rails through an equality factor; the chain ends in an equality factor
// joining the rails, which makes the external function over the outcome
// variables |g|^2 -- a real, nonnegative joint probability mass function.

#pragma once

#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "qfg/model.hpp"
#include "qfg/tensor.hpp"

namespace qfg {

enum class OutcomeTreatment {
    kFree,      // outcome variable remains a half edge
    kClamped,   // outcome pinned to a value by an indicator factor
    kSummedOut, // outcome summed away (all-ones factor)
};

struct OutcomeHandling {
    OutcomeTreatment treatment = OutcomeTreatment::kFree;
    int value = 0;

    static OutcomeHandling free() { return {OutcomeTreatment::kFree, 0}; }
    static OutcomeHandling clamped(int v) { return {OutcomeTreatment::kClamped, v}; }
    static OutcomeHandling summed_out() { return {OutcomeTreatment::kSummedOut, 0}; }
};

struct MirrorGraph {
    FactorGraph graph;
    // External outcome variables of the measurements left free, in stage order.
    std::vector<VariableId> free_outcome_vars;
    // (upper factor, lower factor) pairs; the lower tensor is the entrywise
    // complex conjugate of the upper one.
    std::vector<std::pair<FactorId, FactorId>> mirror_pairs;
    // Open rail ends (upper, lower) when built as a prefix graph.
    std::optional<std::pair<VariableId, VariableId>> boundary;
};

// Full-chain graph; `outcomes` must have one entry per measurement.
MirrorGraph build_mirror_graph(const QuantumModel& m,
                               std::span<const OutcomeHandling> outcomes);

// Convenience: clamp the listed measurements (key = 0-based stage index),
// leave the rest free.
MirrorGraph build_mirror_graph(const QuantumModel& m,
                               const std::map<int, int>& observed = {});

enum class PrefixBoundary {
    kBeforeMeasurement, // left box of stage |prefix|+1: rails open at X_k, X_k'
    kAfterMeasurement,  // left box including gadget |prefix|: rails open at
                        // the post-measurement variables
};

// Open-ended chain for density-matrix queries: the initial gadget, the
// observed stages clamped to `prefix`, and (for kBeforeMeasurement) the next
// unitary. The closed-box function over the boundary pair is proportional to
// the density matrix.
MirrorGraph build_prefix_graph(const QuantumModel& m, std::span<const int> prefix,
                               PrefixBoundary boundary);

struct HmmGraph {
    FactorGraph graph;
    std::vector<VariableId> outcome_vars;
};

// Chain graph of the hidden Markov model; the external function over the
// outcome variables is p(y_1..y_n). The final hidden variable is summed out
// through an all-ones factor.
HmmGraph build_hmm_graph(const HmmModel& h);

} // namespace qfg
