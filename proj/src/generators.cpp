#include "tinkit/generators.hpp"

#include <algorithm>
#include <string>

#include "tinkit/errors.hpp"

namespace tinkit {

Graph path_graph(int n) {
    GraphBuilder b(n);
    for (int i = 0; i + 1 < n; ++i) b.add_edge(i, i + 1);
    return std::move(b).build();
}

Graph cycle_graph(int n) {
    if (n < 3) throw InputError("cycle needs at least 3 vertices");
    GraphBuilder b(n);
    for (int i = 0; i < n; ++i) b.add_edge(i, (i + 1) % n);
    return std::move(b).build();
}

Graph complete_graph(int n) {
    GraphBuilder b(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) b.add_edge(u, v);
    return std::move(b).build();
}

Graph complete_bipartite(int a, int b) { return join(empty_graph(a), empty_graph(b)); }

Graph empty_graph(int n) { return Graph(n); }

Graph star_graph(int d) {
    if (d < 1) throw InputError("star needs d >= 1");
    return complete_bipartite(1, d);
}

Graph gen_spqr(int p, int q, int r) {
    if (p < 1 || q < 1 || r < 1) throw InputError("S_{p,q,r} needs p, q, r >= 1");
    GraphBuilder b(1 + p + q + r);
    int next = 1;
    for (int len : {p, q, r}) {
        int prev = 0;
        for (int i = 0; i < len; ++i) {
            b.add_edge(prev, next);
            prev = next++;
        }
    }
    return std::move(b).build();
}

Graph gen_tpqr(int p, int q, int r) {
    // Build S_{p,q,r}'s edges in leg order so line vertices follow it.
    if (p < 1 || q < 1 || r < 1) throw InputError("T_{p,q,r} needs p, q, r >= 1");
    std::vector<Edge> legs;
    int next = 1;
    for (int len : {p, q, r}) {
        int prev = 0;
        for (int i = 0; i < len; ++i) {
            legs.emplace_back(prev, next);
            prev = next++;
        }
    }
    const int m = static_cast<int>(legs.size());
    GraphBuilder b(m);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            auto [a1, a2] = legs[i];
            auto [b1, b2] = legs[j];
            if (a1 == b1 || a1 == b2 || a2 == b1 || a2 == b2) b.add_edge(i, j);
        }
    return std::move(b).build();
}

Graph gen_wall(int k) {
    if (k < 3) throw InputError("elementary wall needs k >= 3");
    const int rows = k, cols = 2 * k;
    auto id = [&](int i, int j) { return (i - 1) * cols + (j - 1); };
    GraphBuilder grid(rows * cols);
    for (int i = 1; i <= rows; ++i)
        for (int j = 1; j < cols; ++j) grid.add_edge(id(i, j), id(i, j + 1));
    // The i-th vertical edge of column j joins rows i and i+1. Odd columns
    // lose their odd edges, even columns their even edges.
    for (int j = 1; j <= cols; ++j)
        for (int i = 1; i < rows; ++i) {
            bool drop = (j % 2 == 1) ? (i % 2 == 1) : (i % 2 == 0);
            if (!drop) grid.add_edge(id(i, j), id(i + 1, j));
        }
    Graph full = std::move(grid).build();
    VertexSet keep = full.empty_set();
    for (int v = 0; v < full.order(); ++v)
        if (full.degree(v) != 1) keep.set(v);
    auto sub = induced_subgraph(full, keep);
    std::vector<std::string> labels;
    for (int v : sub.original_of)
        labels.push_back("(" + std::to_string(v / cols + 1) + "," + std::to_string(v % cols + 1) + ")");
    sub.graph.set_labels(std::move(labels));
    return std::move(sub.graph);
}

SubdividedClique gen_Gn(int n) {
    if (n < 3) throw InputError("G_n needs n >= 3");
    const int total = n + n * (n - 1);
    GraphBuilder b(total);
    // colour per unordered edge, keyed after build
    std::vector<std::pair<Edge, EdgeColor>> coloured;
    auto add = [&](int u, int v, EdgeColor c) {
        b.add_edge(u, v);
        coloured.push_back({{std::min(u, v), std::max(u, v)}, c});
    };
    int next = n;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            int x = next++, y = next++;
            // 4-cycle i-x-j-y-i coloured red, blue, red, blue
            add(i, x, EdgeColor::Red);
            add(x, j, EdgeColor::Blue);
            add(j, y, EdgeColor::Red);
            add(y, i, EdgeColor::Blue);
        }
    SubdividedClique out;
    out.graph = std::move(b).build();
    std::sort(coloured.begin(), coloured.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    for (const auto& [e, c] : coloured) out.colors.push_back(c);
    for (int i = 0; i < n; ++i) out.branch_vertices.push_back(i);
    return out;
}

MinorModel gn_biclique_model(const SubdividedClique& gn, const LineGraph& lg) {
    const int n = static_cast<int>(gn.branch_vertices.size());
    auto edges = gn.graph.edges();
    MinorModel model;
    model.branch_sets.assign(static_cast<std::size_t>(2 * n), {});
    for (int li = 0; li < lg.graph.order(); ++li) {
        Edge e = lg.edge_of[li];
        auto it = std::lower_bound(edges.begin(), edges.end(), e);
        EdgeColor c = gn.colors[static_cast<std::size_t>(it - edges.begin())];
        // every edge of G_n has exactly one endpoint among the branch vertices
        int owner = e.first < n ? e.first : e.second;
        model.branch_sets[static_cast<std::size_t>(c == EdgeColor::Red ? owner : n + owner)].push_back(li);
    }
    return model;
}

Graph random_gnp(int n, double p, Rng& rng) {
    std::bernoulli_distribution coin(p);
    GraphBuilder b(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) b.add_edge(u, v);
    return std::move(b).build();
}

Graph random_tree(int n, Rng& rng) {
    GraphBuilder b(n);
    for (int v = 1; v < n; ++v) {
        std::uniform_int_distribution<int> pick(0, v - 1);
        b.add_edge(pick(rng), v);
    }
    return std::move(b).build();
}

Graph random_triangle_free(int n, double p, Rng& rng) {
    std::vector<Edge> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    std::shuffle(pairs.begin(), pairs.end(), rng);
    std::bernoulli_distribution coin(p);
    GraphBuilder b(n);
    std::vector<VertexSet> adj(static_cast<std::size_t>(n), VertexSet(static_cast<std::size_t>(n)));
    for (auto [u, v] : pairs) {
        if (!coin(rng) || adj[u].intersects(adj[v])) continue;
        b.add_edge(u, v);
        adj[u].set(v);
        adj[v].set(u);
    }
    return std::move(b).build();
}

}  // namespace tinkit
