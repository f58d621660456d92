#pragma once

#include <optional>
#include <vector>

#include "tinkit/generators.hpp"
#include "tinkit/graph.hpp"
#include "tinkit/tdecomp.hpp"

namespace tinkit {

/// Connected subgraphs H_j of a host H, given by vertex sets.
struct SubgraphFamily {
    Graph host;
    std::vector<std::vector<int>> members;
};

/// Checks that every member is nonempty, in range and connected in the host.
void check_family(const SubgraphFamily& fam);

/// Members i, j adjacent iff they share a host vertex.
Graph intersection_graph(const SubgraphFamily& fam);

/// Same tree as `host_td`; the bag of t holds the members meeting bag t.
/// Each host vertex of a bag covers a clique of members, so every lifted
/// bag has α ≤ width(host_td) + 1; both this and validity are asserted.
TreeDecomposition lift_decomposition(const SubgraphFamily& fam, const TreeDecomposition& host_td, int jobs = 1);

/// Members are the edges of g, in line_graph order.
SubgraphFamily edge_family(const Graph& g, const LineGraph& lg);

struct LineDecomposition {
    LineGraph line;
    TreeDecomposition td;
    int host_width = -1;
};

/// Decomposition of L(g) lifted from `host_td`, or from heuristic_td(g).
LineDecomposition line_decomposition(const Graph& g, const std::optional<TreeDecomposition>& host_td = std::nullopt,
                                     int jobs = 1);

/// Decomposition of G_n read off its chordal completion (branch vertices
/// made a clique): one bag per subdivision vertex with its two branch
/// vertices, all hung from the clique bag. Width max(2, n-1).
TreeDecomposition gn_chordal_decomposition(const SubdividedClique& gn);

/// Optimal-width decomposition from the subset DP (order ≤ kOrderingDpMaxOrder).
TreeDecomposition exact_width_td(const Graph& g, int jobs = 1);

}  // namespace tinkit
