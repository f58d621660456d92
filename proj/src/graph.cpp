#include "tinkit/graph.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <string>

#include "tinkit/errors.hpp"

namespace tinkit {

std::uint64_t SearchBudget::default_limit() {
    if (const char* env = std::getenv("TINKIT_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return v;
    }
    return kDefaultLimit;
}

Graph::Graph(int n) {
    if (n < 0) throw InputError("negative vertex count");
    adj_.assign(static_cast<std::size_t>(n), VertexSet(static_cast<std::size_t>(n)));
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
    for (auto [u, v] : edges) {
        std::string pair = "(" + std::to_string(u) + "," + std::to_string(v) + ")";
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw InputError("edge " + pair + " out of range for n=" + std::to_string(n));
        if (u == v) throw InputError("self-loop " + pair);
        if (!adj_[u].test(v)) {
            adj_[u].set(v);
            adj_[v].set(u);
            ++edge_count_;
        }
    }
}

int Graph::max_degree() const noexcept {
    int best = 0;
    for (int v = 0; v < order(); ++v) best = std::max(best, degree(v));
    return best;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (int u = 0; u < order(); ++u)
        adj_[u].for_each([&](int v) {
            if (u < v) out.emplace_back(u, v);
        });
    return out;
}

void Graph::set_labels(std::vector<std::string> labels) {
    if (!labels.empty() && labels.size() != adj_.size())
        throw InputError("label count does not match vertex count");
    labels_ = std::move(labels);
}

bool GraphBuilder::add_edge(int u, int v) {
    if (u == v) throw InputError("self-loop (" + std::to_string(u) + "," + std::to_string(v) + ")");
    if (g_.adj_[u].test(v)) return false;
    g_.adj_[u].set(v);
    g_.adj_[v].set(u);
    ++g_.edge_count_;
    return true;
}

Graph make_graph(int n, std::span<const Edge> edges) { return Graph(n, edges); }

Graph disjoint_union(const Graph& a, const Graph& b) {
    const int na = a.order();
    GraphBuilder out(na + b.order());
    for (auto [u, v] : a.edges()) out.add_edge(u, v);
    for (auto [u, v] : b.edges()) out.add_edge(u + na, v + na);
    return std::move(out).build();
}

Graph join(const Graph& a, const Graph& b) {
    const int na = a.order();
    GraphBuilder out(na + b.order());
    for (auto [u, v] : a.edges()) out.add_edge(u, v);
    for (auto [u, v] : b.edges()) out.add_edge(u + na, v + na);
    for (int u = 0; u < na; ++u)
        for (int v = 0; v < b.order(); ++v) out.add_edge(u, v + na);
    return std::move(out).build();
}

Graph complement(const Graph& g) {
    GraphBuilder out(g.order());
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (!g.adjacent(u, v)) out.add_edge(u, v);
    return std::move(out).build();
}

LineGraph line_graph(const Graph& g) {
    LineGraph lg;
    lg.edge_of = g.edges();
    const int m = static_cast<int>(lg.edge_of.size());
    // incident[v] = line vertices whose edge touches v
    std::vector<std::vector<int>> incident(static_cast<std::size_t>(g.order()));
    for (int i = 0; i < m; ++i) {
        incident[lg.edge_of[i].first].push_back(i);
        incident[lg.edge_of[i].second].push_back(i);
    }
    GraphBuilder out(m);
    for (const auto& inc : incident)
        for (std::size_t a = 0; a < inc.size(); ++a)
            for (std::size_t b = a + 1; b < inc.size(); ++b) out.add_edge(inc[a], inc[b]);
    lg.graph = std::move(out).build();
    return lg;
}

std::vector<VertexSet> components(const Graph& g) { return components(g, g.all_vertices()); }

std::vector<VertexSet> components(const Graph& g, const VertexSet& within) {
    std::vector<VertexSet> out;
    VertexSet unvisited = within;
    std::vector<int> stack;
    for (int s = unvisited.first(); s >= 0; s = unvisited.first()) {
        VertexSet comp = g.empty_set();
        comp.set(s);
        unvisited.reset(s);
        stack.assign(1, s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            VertexSet fresh = g.neighbors(v) & unvisited;
            fresh.for_each([&](int w) {
                stack.push_back(w);
                comp.set(w);
            });
            unvisited.subtract(fresh);
        }
        out.push_back(std::move(comp));
    }
    return out;
}

bool is_connected(const Graph& g, const VertexSet& within) {
    return within.none() || components(g, within).size() == 1;
}

VertexSet closed_neighborhood(const Graph& g, const VertexSet& s) {
    VertexSet out = s;
    s.for_each([&](int v) { out |= g.neighbors(v); });
    return out;
}

VertexSet open_neighborhood(const Graph& g, const VertexSet& s) {
    return closed_neighborhood(g, s).subtract(s);
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
    InducedSubgraph out;
    out.original_of = s.to_vector();
    std::vector<int> index(static_cast<std::size_t>(g.order()), -1);
    for (std::size_t i = 0; i < out.original_of.size(); ++i) index[out.original_of[i]] = static_cast<int>(i);
    GraphBuilder b(static_cast<int>(out.original_of.size()));
    for (std::size_t i = 0; i < out.original_of.size(); ++i) {
        int u = out.original_of[i];
        (g.neighbors(u) & s).for_each([&](int v) {
            if (index[v] > static_cast<int>(i)) b.add_edge(static_cast<int>(i), index[v]);
        });
    }
    out.graph = std::move(b).build();
    if (!g.labels().empty()) {
        std::vector<std::string> labels;
        for (int v : out.original_of) labels.push_back(g.labels()[v]);
        out.graph.set_labels(std::move(labels));
    }
    return out;
}

std::optional<Path> shortest_xy_path(const Graph& g, const VertexSet& x, const VertexSet& y) {
    return shortest_xy_path(g, x, y, g.all_vertices());
}

std::optional<Path> shortest_xy_path(const Graph& g, const VertexSet& x, const VertexSet& y,
                                     const VertexSet& within) {
    VertexSet xs = x & within;
    VertexSet ys = y & within;
    // A vertex in X ∩ Y is a one-vertex path.
    VertexSet both = xs & ys;
    if (both.any()) return Path{{both.first()}, true};

    std::vector<int> parent(static_cast<std::size_t>(g.order()), -1);
    VertexSet seen = xs;
    // Internal vertices must avoid X ∪ Y; only X vertices start, Y vertices end.
    VertexSet passable = within - (xs | ys);
    std::deque<int> queue;
    xs.for_each([&](int v) { queue.push_back(v); });
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        // Reaching Y ends the search; lowest-index Y neighbour for determinism.
        VertexSet hit = g.neighbors(v) & ys;
        if (hit.any()) {
            Path p;
            p.vertices.push_back(hit.first());
            for (int w = v; w >= 0; w = parent[w]) p.vertices.push_back(w);
            std::reverse(p.vertices.begin(), p.vertices.end());
            return p;
        }
        VertexSet fresh = (g.neighbors(v) & passable) - seen;
        fresh.for_each([&](int w) {
            parent[w] = v;
            queue.push_back(w);
        });
        seen |= fresh;
    }
    return std::nullopt;
}

bool is_independent(const Graph& g, std::span<const int> vs) {
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (vs[i] == vs[j] || g.adjacent(vs[i], vs[j])) return false;
    return true;
}

bool is_induced_path(const Graph& g, std::span<const int> vs) {
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j) {
            if (vs[i] == vs[j]) return false;
            if (g.adjacent(vs[i], vs[j]) != (j == i + 1)) return false;
        }
    return true;
}

bool is_induced_cycle(const Graph& g, std::span<const int> vs) {
    const std::size_t n = vs.size();
    if (n < 3) return false;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            if (vs[i] == vs[j]) return false;
            bool consecutive = (j == i + 1) || (i == 0 && j == n - 1);
            if (g.adjacent(vs[i], vs[j]) != consecutive) return false;
        }
    return true;
}

bool is_bipartite(const Graph& g) {
    std::vector<int> side(static_cast<std::size_t>(g.order()), -1);
    std::deque<int> queue;
    for (int s = 0; s < g.order(); ++s) {
        if (side[s] >= 0) continue;
        side[s] = 0;
        queue.push_back(s);
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            bool ok = true;
            g.neighbors(v).for_each([&](int w) {
                if (side[w] < 0) {
                    side[w] = 1 - side[v];
                    queue.push_back(w);
                } else if (side[w] == side[v]) {
                    ok = false;
                }
            });
            if (!ok) return false;
        }
    }
    return true;
}

bool is_chordal(const Graph& g) {
    // Maximum cardinality search, then check the reverse order is a PEO.
    const int n = g.order();
    std::vector<int> weight(static_cast<std::size_t>(n), 0), order;
    VertexSet left = g.all_vertices();
    while (left.any()) {
        int best = -1;
        left.for_each([&](int v) {
            if (best < 0 || weight[v] > weight[best]) best = v;
        });
        order.push_back(best);
        left.reset(best);
        (g.neighbors(best) & left).for_each([&](int w) { ++weight[w]; });
    }
    // order is an MCS visit order; elimination order is its reverse.
    std::vector<int> pos(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) pos[order[i]] = i;
    for (int v = 0; v < n; ++v) {
        // Earlier-visited neighbours of v must form a clique.
        int parent = -1;
        std::vector<int> earlier;
        g.neighbors(v).for_each([&](int w) {
            if (pos[w] < pos[v]) {
                earlier.push_back(w);
                if (parent < 0 || pos[w] > pos[parent]) parent = w;
            }
        });
        for (int w : earlier)
            if (w != parent && !g.adjacent(w, parent)) return false;
    }
    return true;
}

MinorModelCheck verify_induced_minor_model(const Graph& g, const Graph& h, const MinorModel& m) {
    auto fail = [](std::string kind, std::string detail) {
        return MinorModelCheck{false, std::move(kind), std::move(detail)};
    };
    if (static_cast<int>(m.branch_sets.size()) != h.order())
        return fail("size", "model has " + std::to_string(m.branch_sets.size()) + " branch sets, pattern has " +
                                std::to_string(h.order()) + " vertices");
    std::vector<VertexSet> sets;
    VertexSet used = g.empty_set();
    for (int i = 0; i < h.order(); ++i) {
        const auto& bs = m.branch_sets[i];
        if (bs.empty()) return fail("empty", "branch set " + std::to_string(i) + " is empty");
        VertexSet s = g.empty_set();
        for (int v : bs) {
            if (v < 0 || v >= g.order())
                return fail("range", "vertex " + std::to_string(v) + " in branch set " + std::to_string(i));
            if (used.test(v) || s.test(v))
                return fail("disjointness", "vertex " + std::to_string(v) + " appears in more than one branch set");
            s.set(v);
        }
        used |= s;
        if (!is_connected(g, s))
            return fail("connectivity", "branch set " + std::to_string(i) + " is not connected");
        sets.push_back(std::move(s));
    }
    for (int a = 0; a < h.order(); ++a) {
        VertexSet reach = open_neighborhood(g, sets[a]);
        for (int b = a + 1; b < h.order(); ++b) {
            bool touching = reach.intersects(sets[b]);
            if (touching != h.adjacent(a, b))
                return fail("adjacency", "branch sets " + std::to_string(a) + " and " + std::to_string(b) +
                                             (touching ? " touch but pattern vertices are non-adjacent"
                                                       : " do not touch but pattern vertices are adjacent"));
        }
    }
    return {};
}

}  // namespace tinkit
