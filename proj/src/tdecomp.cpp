#include "tinkit/tdecomp.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <string>

#include "tinkit/errors.hpp"
#include "tinkit/oracle.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace tinkit {

int TreeDecomposition::add_node(std::vector<int> bag) {
    std::sort(bag.begin(), bag.end());
    bag.erase(std::unique(bag.begin(), bag.end()), bag.end());
    bags.push_back(std::move(bag));
    return node_count() - 1;
}

VertexSet TreeDecomposition::bag_set(int node) const {
    return VertexSet::of(static_cast<std::size_t>(graph_order), bags[node]);
}

VertexSet TreeDecomposition::covered() const {
    VertexSet s(static_cast<std::size_t>(graph_order));
    for (const auto& bag : bags)
        for (int v : bag) s.set(static_cast<std::size_t>(v));
    return s;
}

const char* axiom_name(Axiom a) {
    switch (a) {
        case Axiom::None: return "none";
        case Axiom::Structure: return "structure";
        case Axiom::VertexCoverage: return "vertex-coverage";
        case Axiom::EdgeCoverage: return "edge-coverage";
        case Axiom::Connectivity: return "connectivity";
    }
    return "?";
}

namespace {

TdValidation fail(Axiom a, std::string witness) { return {false, a, std::move(witness)}; }

}  // namespace

TdValidation validate(const Graph& g, const TreeDecomposition& td) {
    const int n = g.order();
    const int nodes = td.node_count();
    if (td.graph_order != n)
        return fail(Axiom::Structure, "decomposition is over " + std::to_string(td.graph_order) +
                                          " vertices, graph has " + std::to_string(n));
    if (nodes == 0) return fail(Axiom::Structure, "tree has no nodes");
    for (int t = 0; t < nodes; ++t) {
        const auto& bag = td.bags[t];
        for (std::size_t i = 0; i < bag.size(); ++i) {
            if (bag[i] < 0 || bag[i] >= n)
                return fail(Axiom::Structure, "bag " + std::to_string(t) + " holds unknown vertex " +
                                                  std::to_string(bag[i]));
            if (i > 0 && bag[i - 1] >= bag[i])
                return fail(Axiom::Structure, "bag " + std::to_string(t) + " is not sorted and duplicate-free");
        }
    }
    if (static_cast<int>(td.tree_edges.size()) != nodes - 1)
        return fail(Axiom::Structure, std::to_string(td.tree_edges.size()) + " tree edges for " +
                                          std::to_string(nodes) + " nodes");
    std::vector<int> parent(static_cast<std::size_t>(nodes));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (auto [a, b] : td.tree_edges) {
        if (a < 0 || b < 0 || a >= nodes || b >= nodes || a == b)
            return fail(Axiom::Structure, "bad tree edge " + std::to_string(a) + "-" + std::to_string(b));
        int ra = find(a), rb = find(b);
        if (ra == rb) return fail(Axiom::Structure, "tree edge " + std::to_string(a) + "-" + std::to_string(b) +
                                                        " closes a cycle");
        parent[ra] = rb;
    }

    std::vector<VertexSet> nodes_of(static_cast<std::size_t>(n), VertexSet(static_cast<std::size_t>(nodes)));
    for (int t = 0; t < nodes; ++t)
        for (int v : td.bags[t]) nodes_of[v].set(static_cast<std::size_t>(t));
    for (int v = 0; v < n; ++v)
        if (nodes_of[v].none()) return fail(Axiom::VertexCoverage, "vertex " + std::to_string(v) + " in no bag");
    for (auto [u, v] : g.edges())
        if (!nodes_of[u].intersects(nodes_of[v]))
            return fail(Axiom::EdgeCoverage, "edge " + std::to_string(u) + "-" + std::to_string(v) + " in no bag");
    // Inside a tree, a node set spans c - e pieces where e counts the tree
    // edges with both ends in it.
    std::vector<int> inner(static_cast<std::size_t>(n), 0);
    for (auto [a, b] : td.tree_edges) {
        const auto& x = td.bags[a];
        const auto& y = td.bags[b];
        std::size_t i = 0, j = 0;
        while (i < x.size() && j < y.size()) {
            if (x[i] < y[j]) ++i;
            else if (y[j] < x[i]) ++j;
            else {
                ++inner[x[i]];
                ++i;
                ++j;
            }
        }
    }
    for (int v = 0; v < n; ++v) {
        int pieces = static_cast<int>(nodes_of[v].count()) - inner[v];
        if (pieces != 1)
            return fail(Axiom::Connectivity, "vertex " + std::to_string(v) + " occupies " + std::to_string(pieces) +
                                                 " disconnected subtrees");
    }
    return {};
}

bool is_path_decomposition(const TreeDecomposition& td) {
    std::vector<int> deg(static_cast<std::size_t>(td.node_count()), 0);
    for (auto [a, b] : td.tree_edges)
        if (++deg[a] > 2 || ++deg[b] > 2) return false;
    return true;
}

int width(const TreeDecomposition& td) {
    int w = -1;
    for (const auto& bag : td.bags) w = std::max(w, static_cast<int>(bag.size()) - 1);
    return w;
}

int independence_number(const Graph& g, const TreeDecomposition& td, int jobs) {
    auto check = validate(g, td);
    if (!check.ok)
        throw InputError(std::string("invalid tree decomposition (") + axiom_name(check.axiom) + "): " + check.witness);
    const int nodes = td.node_count();
    int best = 0;
    std::atomic<bool> exhausted{false};
    std::size_t limit = 0;
#ifdef _OPENMP
    const int threads = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) reduction(max : best) num_threads(threads)
#else
    (void)jobs;
#endif
    for (int t = 0; t < nodes; ++t) {
        if (exhausted.load()) continue;
        try {
            SearchBudget budget;
            int a = static_cast<int>(max_independent_set(g, td.bag_set(t), budget).size());
            best = std::max(best, a);
        } catch (const BudgetExceeded& e) {
            limit = e.limit();
            exhausted.store(true);
        }
    }
    if (exhausted.load()) throw BudgetExceeded(limit);
    return best;
}

TreeDecomposition single_bag(const Graph& g) {
    TreeDecomposition td;
    td.graph_order = g.order();
    td.add_node(g.all_vertices().to_vector());
    return td;
}

TreeDecomposition add_to_all_bags(TreeDecomposition td, const VertexSet& s) {
    if (s.none()) return td;
    for (auto& bag : td.bags) {
        VertexSet merged = VertexSet::of(static_cast<std::size_t>(td.graph_order), bag) | s;
        bag = merged.to_vector();
    }
    return td;
}

namespace {

void append(TreeDecomposition& into, const TreeDecomposition& part, int link_to) {
    const int offset = into.node_count();
    for (const auto& bag : part.bags) into.bags.push_back(bag);
    for (auto [a, b] : part.tree_edges) into.add_edge(a + offset, b + offset);
    if (part.node_count() > 0 && link_to >= 0) into.add_edge(link_to, offset);
}

}  // namespace

TreeDecomposition merge_at_hub(const std::vector<TreeDecomposition>& parts, const VertexSet& hub, bool add_hub) {
    TreeDecomposition out;
    out.graph_order = static_cast<int>(hub.size());
    out.add_node(hub.to_vector());
    VertexSet seen(hub.size());
    for (std::size_t i = 0; i < parts.size(); ++i) {
        const auto& part = parts[i];
        if (part.graph_order != out.graph_order) throw InputError("merge_at_hub: parts over different graphs");
        VertexSet mine = part.covered();
        if (add_hub) mine.subtract(hub);
        if (mine.intersects(seen))
            throw InputError("merge_at_hub: part " + std::to_string(i) + " overlaps an earlier part at vertex " +
                             std::to_string((mine & seen).first()));
        seen |= mine;
        append(out, add_hub ? add_to_all_bags(part, hub) : part, 0);
    }
    return out;
}

TreeDecomposition attach_subtree(const Graph& g, TreeDecomposition td, int node, const TreeDecomposition& child,
                                 const VertexSet& absorb) {
    if (node < 0 || node >= td.node_count()) throw InputError("attach_subtree: no node " + std::to_string(node));
    const VertexSet bag = td.bag_set(node);
    const VertexSet present = td.covered();
    const VertexSet inner = child.covered() - absorb;
    inner.for_each([&](int v) {
        VertexSet outside = g.neighbors(v) - inner - absorb;
        if (outside.any())
            throw InputError("attach_subtree: edge " + std::to_string(v) + "-" + std::to_string(outside.first()) +
                             " leaves the attachment");
    });
    VertexSet stray = (absorb & present) - bag;
    if (stray.any())
        throw InputError("attach_subtree: absorbed vertex " + std::to_string(stray.first()) + " is not in bag " +
                         std::to_string(node));
    if ((inner & present).any())
        throw InputError("attach_subtree: vertex " + std::to_string((inner & present).first()) +
                         " already decomposed");
    append(td, add_to_all_bags(child, absorb), node);
    return td;
}

TreeDecomposition map_vertices(const TreeDecomposition& td, const std::vector<int>& original_of, int order) {
    TreeDecomposition out;
    out.graph_order = order;
    for (const auto& bag : td.bags) {
        std::vector<int> mapped;
        mapped.reserve(bag.size());
        for (int v : bag) mapped.push_back(original_of[v]);
        out.add_node(std::move(mapped));
    }
    out.tree_edges = td.tree_edges;
    return out;
}

TreeDecomposition td_from_ordering(const Graph& g, const std::vector<int>& ordering) {
    const int n = g.order();
    TreeDecomposition td;
    td.graph_order = n;
    if (n == 0) {
        td.add_node({});
        return td;
    }
    if (static_cast<int>(ordering.size()) != n) throw InputError("ordering is not a permutation");
    std::vector<int> position(static_cast<std::size_t>(n), -1);
    for (int i = 0; i < n; ++i) {
        int v = ordering[i];
        if (v < 0 || v >= n || position[v] >= 0) throw InputError("ordering is not a permutation");
        position[v] = i;
    }
    std::vector<VertexSet> fill;
    fill.reserve(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) fill.push_back(g.neighbors(v));
    VertexSet remaining = g.all_vertices();
    std::vector<int> parent_vertex(static_cast<std::size_t>(n), -1);
    for (int i = 0; i < n; ++i) {
        int v = ordering[i];
        remaining.reset(static_cast<std::size_t>(v));
        VertexSet later = fill[v] & remaining;
        int earliest = -1;
        later.for_each([&](int u) {
            fill[u] |= later;
            fill[u].reset(static_cast<std::size_t>(u));
            if (earliest < 0 || position[u] < position[earliest]) earliest = u;
        });
        parent_vertex[v] = earliest;
        VertexSet bag = later;
        bag.set(static_cast<std::size_t>(v));
        td.add_node(bag.to_vector());  // node i belongs to ordering[i]
    }
    int previous_root = -1;
    for (int i = 0; i < n; ++i) {
        int p = parent_vertex[ordering[i]];
        if (p >= 0) {
            td.add_edge(i, position[p]);
        } else {
            // roots of different components are chained; they share no vertex
            if (previous_root >= 0) td.add_edge(previous_root, i);
            previous_root = i;
        }
    }
    return td;
}

std::vector<int> min_fill_ordering(const Graph& g) {
    const int n = g.order();
    std::vector<VertexSet> fill;
    for (int v = 0; v < n; ++v) fill.push_back(g.neighbors(v));
    VertexSet remaining = g.all_vertices();
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(n));
    while (remaining.any()) {
        int best = -1;
        long best_fill = 0;
        int best_degree = 0;
        remaining.for_each([&](int v) {
            VertexSet nb = fill[v] & remaining;
            long missing = 0;
            nb.for_each([&](int u) { missing += static_cast<long>((nb - fill[u]).count()) - 1; });
            missing /= 2;
            int degree = static_cast<int>(nb.count());
            if (best < 0 || missing < best_fill || (missing == best_fill && degree < best_degree)) {
                best = v;
                best_fill = missing;
                best_degree = degree;
            }
        });
        VertexSet nb = fill[best] & remaining;
        nb.for_each([&](int u) {
            fill[u] |= nb;
            fill[u].reset(static_cast<std::size_t>(u));
        });
        remaining.reset(static_cast<std::size_t>(best));
        order.push_back(best);
    }
    return order;
}

TreeDecomposition heuristic_td(const Graph& g) { return td_from_ordering(g, min_fill_ordering(g)); }

}  // namespace tinkit
