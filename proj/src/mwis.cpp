#include "tinkit/mwis.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "tinkit/backbone.hpp"
#include "tinkit/cograph.hpp"
#include "tinkit/starpath.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace tinkit {

namespace {

using Key = std::vector<int>;

/// Independent subsets of `bag` in lexicographic order of their inclusion
/// pattern (empty set first).
std::vector<std::vector<int>> independent_subsets(const Graph& g, const std::vector<int>& bag, SearchBudget& budget) {
    std::vector<std::vector<int>> out;
    std::vector<int> current;
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == bag.size()) {
            budget.tick();
            out.push_back(current);
            return;
        }
        self(self, i + 1);
        int v = bag[i];
        for (int u : current)
            if (g.adjacent(u, v)) return;
        current.push_back(v);
        self(self, i + 1);
        current.pop_back();
    };
    rec(rec, 0);
    return out;
}

Key restrict_to(const std::vector<int>& set, const VertexSet& within) {
    Key k;
    for (int v : set)
        if (within.test(static_cast<std::size_t>(v))) k.push_back(v);
    return k;
}

struct NodeTable {
    std::vector<std::vector<int>> states;
    std::vector<Weight> value;
};

struct ChildBest {
    Weight value;  // f_c(J) - w(J ∩ bag(parent))
    int state = -1;
};

}  // namespace

WeightedSet solve(const WeightedInstance& inst, const TreeDecomposition& td, SearchBudget& budget, int jobs) {
    const Graph& g = inst.graph;
    if (static_cast<int>(inst.weights.size()) != g.order())
        throw InputError("weight vector has " + std::to_string(inst.weights.size()) + " entries for " +
                         std::to_string(g.order()) + " vertices");
    for (const auto& w : inst.weights)
        if (w < 0) throw InputError("negative vertex weight");
    auto check = validate(g, td);
    if (!check.ok)
        throw InputError(std::string("decomposition invalid (") + axiom_name(check.axiom) + "): " + check.witness);

    const int nodes = td.node_count();
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(nodes));
    for (auto [a, b] : td.tree_edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::vector<int> parent(static_cast<std::size_t>(nodes), -1), order{0};
    std::vector<char> seen(static_cast<std::size_t>(nodes), 0);
    seen[0] = 1;
    for (std::size_t i = 0; i < order.size(); ++i)
        for (int c : adj[order[i]])
            if (!seen[c]) {
                seen[c] = 1;
                parent[c] = order[i];
                order.push_back(c);
            }
    std::vector<std::vector<int>> children(static_cast<std::size_t>(nodes));
    for (int t : order)
        if (parent[t] >= 0) children[parent[t]].push_back(t);

    std::vector<VertexSet> bag_sets;
    for (int t = 0; t < nodes; ++t) bag_sets.push_back(td.bag_set(t));
    auto weight_of = [&](const std::vector<int>& s) {
        Weight w = 0;
        for (int v : s) w += inst.weights[v];
        return w;
    };

    std::vector<NodeTable> table(static_cast<std::size_t>(nodes));
    // best_of[c] maps the projection J ∩ bag(parent) to the best child state.
    std::vector<std::map<Key, ChildBest>> best_of(static_cast<std::size_t>(nodes));
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const int t = *it;
        NodeTable& tab = table[t];
        tab.states = independent_subsets(g, td.bags[t], budget);
        tab.value.assign(tab.states.size(), Weight(0));
        const int count = static_cast<int>(tab.states.size());
        bool missing = false;
#ifdef _OPENMP
        const int threads = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 64) num_threads(threads) if (count > 256)
#endif
        for (int i = 0; i < count; ++i) {
            const auto& s = tab.states[i];
            Weight v = weight_of(s);
            for (int c : children[t]) {
                auto found = best_of[c].find(restrict_to(s, bag_sets[c]));
                if (found == best_of[c].end()) {
#pragma omp atomic write
                    missing = true;
                    continue;
                }
                v += found->second.value;
            }
            tab.value[i] = v;
        }
        if (missing) throw InternalError("child table lacks a projection of an independent parent state");
        if (parent[t] >= 0) {
            auto& best = best_of[t];
            const VertexSet& up = bag_sets[parent[t]];
            for (int i = 0; i < count; ++i) {
                Key key = restrict_to(tab.states[i], up);
                Weight v = tab.value[i] - weight_of(key);
                auto [pos, fresh] = best.try_emplace(std::move(key), ChildBest{v, i});
                if (!fresh && v > pos->second.value) pos->second = ChildBest{v, i};
            }
        }
    }

    WeightedSet result;
    if (nodes == 0) return result;
    int root_state = 0;
    for (int i = 1; i < static_cast<int>(table[0].states.size()); ++i)
        if (table[0].value[i] > table[0].value[root_state]) root_state = i;
    result.weight = table[0].value[root_state];
    std::vector<std::pair<int, int>> stack{{0, root_state}};
    VertexSet chosen = g.empty_set();
    while (!stack.empty()) {
        auto [t, i] = stack.back();
        stack.pop_back();
        const auto& s = table[t].states[i];
        for (int v : s) chosen.set(static_cast<std::size_t>(v));
        for (int c : children[t]) stack.emplace_back(c, best_of[c].at(restrict_to(s, bag_sets[c])).state);
    }
    result.vertices = chosen.to_vector();
    if (!is_independent(g, result.vertices) || weight_of(result.vertices) != result.weight)
        throw InternalError("decomposition DP returned an inconsistent solution");
    return result;
}

WeightedSet solve(const WeightedInstance& inst, const TreeDecomposition& td, int jobs) {
    SearchBudget budget;
    return solve(inst, td, budget, jobs);
}

AutoResult solve_auto(const WeightedInstance& inst, const std::optional<ClassHint>& hint, SearchBudget& budget,
                      int jobs) {
    const Graph& g = inst.graph;
    AutoResult out;
    std::optional<TreeDecomposition> td;
    auto cot = build_cotree(g);
    if (std::holds_alternative<Cotree>(cot)) {
        td = decompose_cotree(std::get<Cotree>(cot));
        out.strategy = "cograph";
    } else if (hint) {
        DecompositionOrCertificate res =
            hint->kind == ClassHint::Kind::StarPath
                ? starpath_decompose(g, hint->d, hint->s, {}, budget)
                : decompose_k(g, hint->d, hint->p, hint->k, {}, budget);
        if (auto* t = std::get_if<TreeDecomposition>(&res)) {
            td = *t;
            out.strategy = hint->kind == ClassHint::Kind::StarPath ? "star-path" : "backbone";
        } else {
            out.refutation = std::get<Certificate>(res);
        }
    }
    if (!td) {
        td = heuristic_td(g);
        out.strategy = "heuristic";
    }
    out.td_alpha = independence_number(g, *td, jobs);
    out.best = solve(inst, *td, budget, jobs);
    return out;
}

AutoResult solve_auto(const WeightedInstance& inst, const std::optional<ClassHint>& hint, int jobs) {
    SearchBudget budget;
    return solve_auto(inst, hint, budget, jobs);
}

}  // namespace tinkit
