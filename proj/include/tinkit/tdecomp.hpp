#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tinkit/graph.hpp"

namespace tinkit {

/// Tree of bags over vertices [0, graph_order). Bags are kept sorted; node
/// ids are dense. Empty bags are allowed.
struct TreeDecomposition {
    int graph_order = 0;
    std::vector<std::vector<int>> bags;
    std::vector<std::pair<int, int>> tree_edges;

    int node_count() const noexcept { return static_cast<int>(bags.size()); }
    int add_node(std::vector<int> bag);
    void add_edge(int a, int b) { tree_edges.emplace_back(a, b); }
    VertexSet bag_set(int node) const;
    /// Vertices occurring in at least one bag.
    VertexSet covered() const;
    bool operator==(const TreeDecomposition&) const = default;
};

enum class Axiom { None, Structure, VertexCoverage, EdgeCoverage, Connectivity };
const char* axiom_name(Axiom a);

struct TdValidation {
    bool ok = true;
    Axiom axiom = Axiom::None;
    std::string witness;
};

/// Checks the tree shape and the three axioms; reports the first failure.
TdValidation validate(const Graph& g, const TreeDecomposition& td);
bool is_path_decomposition(const TreeDecomposition& td);

/// max |bag| - 1; -1 when every bag is empty.
int width(const TreeDecomposition& td);
/// max over bags of α(G[bag]). Throws InputError on an invalid decomposition.
/// `jobs` <= 0 means the OpenMP default.
int independence_number(const Graph& g, const TreeDecomposition& td, int jobs = 1);

TreeDecomposition single_bag(const Graph& g);

/// Adds S to every bag.
TreeDecomposition add_to_all_bags(TreeDecomposition td, const VertexSet& s);

/// New node 0 with bag `hub`, joined to node 0 of every part. With
/// `add_hub`, the hub is first added to every bag of every part. Parts must
/// cover pairwise disjoint vertex sets.
TreeDecomposition merge_at_hub(const std::vector<TreeDecomposition>& parts, const VertexSet& hub, bool add_hub);

/// Hangs `child` (each bag unioned with `absorb`) below `node`. Every
/// neighbour of the child's vertices outside them must lie in `absorb`,
/// and absorbed vertices already in `td` must lie in bag(node).
TreeDecomposition attach_subtree(const Graph& g, TreeDecomposition td, int node, const TreeDecomposition& child,
                                 const VertexSet& absorb);

/// Rewrites bag entries through `original_of` into a graph of order `order`.
TreeDecomposition map_vertices(const TreeDecomposition& td, const std::vector<int>& original_of, int order);

/// Elimination cliques of the ordering, each hung below the clique of its
/// earliest-eliminated later neighbour.
TreeDecomposition td_from_ordering(const Graph& g, const std::vector<int>& ordering);
/// Greedy min-fill; ties by degree in the fill graph, then lowest index.
std::vector<int> min_fill_ordering(const Graph& g);
TreeDecomposition heuristic_td(const Graph& g);

}  // namespace tinkit
