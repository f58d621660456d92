#include "verify/canonical.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "tinkit/errors.hpp"

namespace tinkit::verify {

namespace {

std::uint64_t code_under(const Graph& g, const std::vector<int>& perm) {
    const int n = g.order();
    std::uint64_t code = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) code = (code << 1) | (g.adjacent(perm[i], perm[j]) ? 1u : 0u);
    return code;
}

/// Best permutation among those sorting vertices by degree, descending.
std::vector<int> best_order(const Graph& g) {
    const int n = g.order();
    if (n > kCanonicalMaxOrder) throw InputError("canonical form is limited to 8 vertices");
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    auto by_degree = [&](int a, int b) { return g.degree(a) > g.degree(b) || (g.degree(a) == g.degree(b) && a < b); };
    std::sort(perm.begin(), perm.end(), by_degree);
    // Permute inside each run of equal degree, odometer style.
    std::vector<std::pair<int, int>> runs;
    for (int i = 0; i < n;) {
        int j = i;
        while (j < n && g.degree(perm[j]) == g.degree(perm[i])) ++j;
        runs.emplace_back(i, j);
        i = j;
    }
    std::vector<int> best = perm;
    std::uint64_t best_code = code_under(g, perm);
    while (true) {
        std::size_t r = 0;
        for (; r < runs.size(); ++r) {
            auto [lo, hi] = runs[r];
            if (std::next_permutation(perm.begin() + lo, perm.begin() + hi)) break;
        }
        if (r == runs.size()) break;
        std::uint64_t c = code_under(g, perm);
        if (c > best_code) {
            best_code = c;
            best = perm;
        }
    }
    return best;
}

}  // namespace

std::uint64_t canonical_code(const Graph& g) {
    return (static_cast<std::uint64_t>(g.order()) << 56) | code_under(g, best_order(g));
}

Graph canonical_form(const Graph& g) {
    auto order = best_order(g);
    std::vector<int> pos(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<int>(i);
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges()) edges.emplace_back(std::min(pos[u], pos[v]), std::max(pos[u], pos[v]));
    return make_graph(g.order(), edges);
}

bool isomorphic_small(const Graph& a, const Graph& b) {
    return a.order() == b.order() && a.size() == b.size() && canonical_code(a) == canonical_code(b);
}

std::vector<Graph> all_graphs(int n) {
    if (n < 0 || n > 7) throw InputError("catalog covers 0..7 vertices");
    if (n == 0) return {Graph(0)};
    // Extend each graph on n-1 vertices by a new vertex with every
    // neighbourhood, keeping one graph per canonical code.
    std::set<std::uint64_t> seen;
    std::vector<std::pair<std::uint64_t, Graph>> found;
    for (const Graph& base : all_graphs(n - 1)) {
        auto edges = base.edges();
        for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
            auto e = edges;
            for (int v = 0; v < n - 1; ++v)
                if (mask >> v & 1u) e.emplace_back(v, n - 1);
            Graph g = make_graph(n, e);
            auto code = canonical_code(g);
            if (seen.insert(code).second) found.emplace_back(code, canonical_form(g));
        }
    }
    std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<Graph> out;
    for (auto& [code, g] : found) out.push_back(std::move(g));
    return out;
}

}  // namespace tinkit::verify
