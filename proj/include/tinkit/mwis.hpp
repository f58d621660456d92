#pragma once

#include <optional>
#include <string>

#include "tinkit/errors.hpp"
#include "tinkit/oracle.hpp"
#include "tinkit/patterns.hpp"
#include "tinkit/tdecomp.hpp"
#include "tinkit/weights.hpp"

namespace tinkit {

struct WeightedInstance {
    Graph graph;
    WeightVector weights;  // nonnegative, one per vertex
};

/// Exact MWIS by dynamic programming over `td`, rooted at node 0.
///
/// A state of node t is an independent subset I of its bag; its value is
/// the best weight of an independent set of the subtree's vertices meeting
/// the bag in exactly I. A child c contributes the best state J with
/// J ∩ bag(t) = I ∩ bag(c), so states are grouped per child by that
/// projection. The budget counts states. The result is checked for
/// independence and weight before returning.
WeightedSet solve(const WeightedInstance& inst, const TreeDecomposition& td, SearchBudget& budget, int jobs = 1);
WeightedSet solve(const WeightedInstance& inst, const TreeDecomposition& td, int jobs = 1);

struct ClassHint {
    enum class Kind { StarPath, Backbone } kind = Kind::StarPath;
    int d = 3;
    int s = 5;  // star-path
    int p = 1;  // backbone
    int k = 1;  // backbone
};

struct AutoResult {
    WeightedSet best;
    std::string strategy;  // "cograph", "star-path", "backbone", "heuristic"
    int td_alpha = 0;
    /// Set when the hint was refuted; the heuristic route was used instead.
    std::optional<Certificate> refutation;
};

/// Cograph route if P4-free, else the hinted decomposer, else heuristic_td.
AutoResult solve_auto(const WeightedInstance& inst, const std::optional<ClassHint>& hint, SearchBudget& budget,
                      int jobs = 1);
AutoResult solve_auto(const WeightedInstance& inst, const std::optional<ClassHint>& hint = std::nullopt, int jobs = 1);

}  // namespace tinkit
