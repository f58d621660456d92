#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "tinkit/graph.hpp"

namespace tinkit {

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph complete_bipartite(int a, int b);
Graph empty_graph(int n);
/// K_{1,d}: center 0, leaves 1..d.
Graph star_graph(int d);

/// S_{p,q,r}: the claw with legs subdivided into paths of p, q and r edges.
/// Branch-major ordering: center 0, then leg 1 outward, leg 2, leg 3.
Graph gen_spqr(int p, int q, int r);
/// T_{p,q,r} = L(S_{p,q,r}); line vertices follow gen_spqr's edge order
/// (leg 1 from the center outward, then legs 2 and 3).
Graph gen_tpqr(int p, int q, int r);

/// Elementary k-wall from the (k x 2k)-grid, k >= 3. Surviving grid cells
/// are numbered row-major and labelled "(row,col)" (1-based).
Graph gen_wall(int k);

enum class EdgeColor { Red, Blue };

struct SubdividedClique {
    Graph graph;
    /// Parallel to graph.edges().
    std::vector<EdgeColor> colors;
    /// The original clique vertices, 0..n-1.
    std::vector<int> branch_vertices;
};

/// K_n with each edge replaced by two paths of length two, n >= 3; the
/// red/blue colouring alternates around every resulting 4-cycle.
SubdividedClique gen_Gn(int n);

/// Branch sets R_0..R_{n-1}, B_0..B_{n-1} of L(G_n) witnessing K_{n,n}
/// as an induced minor (pattern: complete_bipartite(n, n)).
MinorModel gn_biclique_model(const SubdividedClique& gn, const LineGraph& lg);

using Rng = std::mt19937_64;

Graph random_gnp(int n, double p, Rng& rng);
/// Uniform-ish random tree by Prüfer-free attachment.
Graph random_tree(int n, Rng& rng);
/// Random triangle-free graph: random edge insertion skipping triangles.
Graph random_triangle_free(int n, double p, Rng& rng);

}  // namespace tinkit
