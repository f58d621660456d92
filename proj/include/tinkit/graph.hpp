#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tinkit/bitset.hpp"

namespace tinkit {

using Edge = std::pair<int, int>;
using VertexSet = Bitset;

/// Undirected simple graph on dense vertex indices [0, n) with bitset rows.
/// Values are immutable once built; share freely across threads.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    /// Edges are deduplicated; throws InputError on a self-loop or an
    /// out-of-range endpoint, naming the offending pair.
    Graph(int n, std::span<const Edge> edges);

    int order() const noexcept { return static_cast<int>(adj_.size()); }
    std::size_t size() const noexcept { return edge_count_; }

    bool adjacent(int u, int v) const noexcept { return adj_[u].test(static_cast<std::size_t>(v)); }
    const VertexSet& neighbors(int v) const noexcept { return adj_[v]; }
    VertexSet closed_neighbors(int v) const {
        VertexSet s = adj_[v];
        s.set(static_cast<std::size_t>(v));
        return s;
    }
    int degree(int v) const noexcept { return static_cast<int>(adj_[v].count()); }
    int max_degree() const noexcept;

    /// Sorted (u < v) edge list.
    std::vector<Edge> edges() const;

    VertexSet empty_set() const { return VertexSet(static_cast<std::size_t>(order())); }
    VertexSet all_vertices() const { return VertexSet::full(static_cast<std::size_t>(order())); }

    const std::vector<std::string>& labels() const noexcept { return labels_; }
    void set_labels(std::vector<std::string> labels);

    friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

private:
    friend class GraphBuilder;
    std::vector<VertexSet> adj_;
    std::size_t edge_count_ = 0;
    std::vector<std::string> labels_;
};

/// Incremental construction; build() freezes the result.
class GraphBuilder {
public:
    explicit GraphBuilder(int n) : g_(n) {}
    /// Returns false if the edge was already present.
    bool add_edge(int u, int v);
    int order() const noexcept { return g_.order(); }
    bool adjacent(int u, int v) const noexcept { return g_.adjacent(u, v); }
    Graph build() && { return std::move(g_); }

private:
    Graph g_;
};

struct Path {
    std::vector<int> vertices;
    bool induced = true;

    std::size_t length() const noexcept { return vertices.empty() ? 0 : vertices.size() - 1; }
    std::size_t count() const noexcept { return vertices.size(); }
};

/// Branch set per pattern vertex.
struct MinorModel {
    std::vector<std::vector<int>> branch_sets;
};

// Elementary operations.
Graph make_graph(int n, std::span<const Edge> edges);
Graph disjoint_union(const Graph& a, const Graph& b);
Graph join(const Graph& a, const Graph& b);
Graph complement(const Graph& g);

struct LineGraph {
    Graph graph;
    /// edge_of[i] is the host edge represented by line-graph vertex i.
    std::vector<Edge> edge_of;
};
LineGraph line_graph(const Graph& g);

std::vector<VertexSet> components(const Graph& g);
std::vector<VertexSet> components(const Graph& g, const VertexSet& within);
bool is_connected(const Graph& g, const VertexSet& within);
VertexSet closed_neighborhood(const Graph& g, const VertexSet& s);
/// N(S) \ S
VertexSet open_neighborhood(const Graph& g, const VertexSet& s);

struct InducedSubgraph {
    Graph graph;
    /// original_of[i] is the host vertex behind subgraph vertex i.
    std::vector<int> original_of;
};
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);

/// BFS-shortest (X, Y)-path with no internal vertex in X ∪ Y, restricted
/// to `within` when given. Empty optional when X and Y are not connected.
std::optional<Path> shortest_xy_path(const Graph& g, const VertexSet& x, const VertexSet& y);
std::optional<Path> shortest_xy_path(const Graph& g, const VertexSet& x, const VertexSet& y,
                                     const VertexSet& within);

bool is_independent(const Graph& g, std::span<const int> vertices);
bool is_induced_path(const Graph& g, std::span<const int> vertices);
bool is_induced_cycle(const Graph& g, std::span<const int> vertices);
bool is_bipartite(const Graph& g);
bool is_chordal(const Graph& g);

struct MinorModelCheck {
    bool ok = true;
    std::string violation;  // "size", "empty", "range", "disjointness", "connectivity", "adjacency"
    std::string detail;
};
MinorModelCheck verify_induced_minor_model(const Graph& g, const Graph& h, const MinorModel& m);

}  // namespace tinkit
