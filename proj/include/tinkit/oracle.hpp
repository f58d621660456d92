#pragma once

// Ground-truth exact computations on small graphs.
//
// tin and tw are evaluated over elimination orderings. Every tree
// decomposition yields a chordal completion whose maximal cliques sit
// inside its bags, and the elimination cliques of any ordering form a tree
// decomposition. Since α is monotone under taking induced subgraphs,
//
//     tin(G) = min over orderings σ of max over v of α(G[{v} ∪ Q_σ(v)]),
//
// where Q_σ(v) is the set of later vertices reachable from v through
// earlier ones (the later neighbours of v in the fill-in graph). The same
// formula with |·| - 1 in place of α gives treewidth.
//
// Two independent kernels compute it:
//   * ordering_dp: dynamic programming over eliminated subsets, OpenMP
//     parallel inside each cardinality layer (the production kernel);
//   * ordering_reference: serial enumeration of permutations with explicit
//     fill-in and branch-and-bound pruning, kept for cross-checking.

#include <cstdint>
#include <optional>
#include <vector>

#include "tinkit/errors.hpp"
#include "tinkit/graph.hpp"
#include "tinkit/weights.hpp"

namespace tinkit {

/// Maximum independent set of G[within] by branch and bound with a greedy
/// clique-cover bound.
std::vector<int> max_independent_set(const Graph& g, const VertexSet& within, SearchBudget& budget);
std::vector<int> max_independent_set(const Graph& g, const VertexSet& within);
int alpha_exact(const Graph& g);
int alpha_exact(const Graph& g, const VertexSet& within);

enum class OrderingMeasure { Width, Independence };

struct OrderingResult {
    int value = 0;
    /// An elimination ordering attaining `value`.
    std::vector<int> ordering;
};

/// Largest order accepted by the subset DP.
inline constexpr int kOrderingDpMaxOrder = 24;
/// Largest order accepted by the permutation reference.
inline constexpr int kOrderingReferenceMaxOrder = 11;

/// `jobs` <= 0 means "OpenMP default".
OrderingResult ordering_dp(const Graph& g, OrderingMeasure measure, int jobs = 1);
OrderingResult ordering_reference(const Graph& g, OrderingMeasure measure);

/// Cost of one ordering: max bag α (or width) of its elimination cliques.
int ordering_cost(const Graph& g, const std::vector<int>& ordering, OrderingMeasure measure);

int tin_exact(const Graph& g, int jobs = 1);
/// Treewidth; -1 for the null graph.
int tw_exact(const Graph& g, int jobs = 1);

struct Biclique {
    std::vector<int> left, right;
    int size() const noexcept { return static_cast<int>(left.size()); }
};

/// Largest balanced induced biclique K_{k,k}; k = 0 when G has no edge.
Biclique ibn_witness(const Graph& g, SearchBudget& budget);
int ibn_exact(const Graph& g);

struct WeightedSet {
    Weight weight;
    std::vector<int> vertices;
};

WeightedSet mwis_exact(const Graph& g, const WeightVector& w, SearchBudget& budget);
WeightedSet mwis_exact(const Graph& g, const WeightVector& w);

}  // namespace tinkit
