#include "tinkit/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace tinkit {

namespace {

class MisSearch {
public:
    MisSearch(const Graph& g, SearchBudget& budget) : g_(g), budget_(budget) {}

    std::vector<int> run(const VertexSet& within) {
        if (within.any()) expand(within);
        std::sort(best_.begin(), best_.end());
        return best_;
    }

private:
    void expand(VertexSet candidates) {
        budget_.tick();
        // Greedy cover of the candidates by cliques of G: an independent set
        // picks at most one vertex per clique.
        std::vector<int> order;
        std::vector<int> bound;
        VertexSet uncovered = candidates;
        int classes = 0;
        while (uncovered.any()) {
            ++classes;
            VertexSet open = uncovered;
            while (open.any()) {
                int v = open.first();
                open.reset(v);
                open &= g_.neighbors(v);
                uncovered.reset(v);
                order.push_back(v);
                bound.push_back(classes);
            }
        }
        for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
            if (current_.size() + static_cast<std::size_t>(bound[i]) <= best_.size()) return;
            int v = order[i];
            current_.push_back(v);
            VertexSet rest = candidates;
            rest.subtract(g_.neighbors(v));
            rest.reset(v);
            if (rest.none()) {
                if (current_.size() > best_.size()) best_ = current_;
            } else {
                expand(std::move(rest));
            }
            current_.pop_back();
            candidates.reset(v);
        }
    }

    const Graph& g_;
    SearchBudget& budget_;
    std::vector<int> current_, best_;
};

using Mask = std::uint32_t;

std::vector<Mask> adjacency_masks(const Graph& g) {
    std::vector<Mask> adj(static_cast<std::size_t>(g.order()), 0);
    for (int v = 0; v < g.order(); ++v) g.neighbors(v).for_each([&](int w) { adj[v] |= Mask{1} << w; });
    return adj;
}

/// {v} ∪ (vertices outside `eliminated` reachable from v through `eliminated`).
Mask elimination_clique(const std::vector<Mask>& adj, Mask eliminated, int v) {
    Mask visited = Mask{1} << v;
    Mask frontier = visited;
    Mask bag = visited;
    while (frontier) {
        int x = std::countr_zero(frontier);
        frontier &= frontier - 1;
        Mask fresh = adj[x] & ~visited;
        visited |= fresh;
        bag |= fresh & ~eliminated;
        frontier |= fresh & eliminated;
    }
    return bag;
}

/// α over all subsets, bottom-up: α(M) = max(α(M - v), 1 + α(M - N[v])).
std::vector<std::uint8_t> alpha_table(const std::vector<Mask>& adj) {
    const int n = static_cast<int>(adj.size());
    std::vector<std::uint8_t> table(std::size_t{1} << n, 0);
    for (std::size_t m = 1; m < table.size(); ++m) {
        Mask mask = static_cast<Mask>(m);
        int v = std::countr_zero(mask);
        Mask without = mask & ~(Mask{1} << v);
        Mask outside = without & ~adj[v];
        table[m] = std::max<std::uint8_t>(table[without], static_cast<std::uint8_t>(1 + table[outside]));
    }
    return table;
}

/// Plain recursive α on a small mask; independent of alpha_table.
int alpha_small(const std::vector<Mask>& adj, Mask mask) {
    if (!mask) return 0;
    int v = std::countr_zero(mask);
    if (!(adj[v] & mask)) return 1 + alpha_small(adj, mask & ~(Mask{1} << v));
    int with = 1 + alpha_small(adj, mask & ~(adj[v] | (Mask{1} << v)));
    int without = alpha_small(adj, mask & ~(Mask{1} << v));
    return std::max(with, without);
}

}  // namespace

std::vector<int> max_independent_set(const Graph& g, const VertexSet& within, SearchBudget& budget) {
    return MisSearch(g, budget).run(within);
}

std::vector<int> max_independent_set(const Graph& g, const VertexSet& within) {
    SearchBudget budget;
    return max_independent_set(g, within, budget);
}

int alpha_exact(const Graph& g) { return alpha_exact(g, g.all_vertices()); }

int alpha_exact(const Graph& g, const VertexSet& within) {
    return static_cast<int>(max_independent_set(g, within).size());
}

OrderingResult ordering_dp(const Graph& g, OrderingMeasure measure, int jobs) {
    const int n = g.order();
    if (n > kOrderingDpMaxOrder)
        throw InputError("exact ordering search refuses n=" + std::to_string(n) + " (limit " +
                         std::to_string(kOrderingDpMaxOrder) + ")");
    if (n == 0) return {measure == OrderingMeasure::Width ? -1 : 0, {}};

    const auto adj = adjacency_masks(g);
    std::vector<std::uint8_t> alpha;
    if (measure == OrderingMeasure::Independence) alpha = alpha_table(adj);
    auto cost = [&](Mask eliminated, int v) -> int {
        Mask bag = elimination_clique(adj, eliminated, v);
        return measure == OrderingMeasure::Width ? std::popcount(bag) - 1 : alpha[bag];
    };

    const std::size_t states = std::size_t{1} << n;
    // best[S] = optimal cost of eliminating exactly S first
    std::vector<std::uint8_t> best(states, 0);
#ifdef _OPENMP
    const int threads = jobs > 0 ? jobs : omp_get_max_threads();
#else
    (void)jobs;
#endif
    for (int layer = 1; layer <= n; ++layer) {
        const std::int64_t count = static_cast<std::int64_t>(states);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 4096) num_threads(threads)
#endif
        for (std::int64_t m = 1; m < count; ++m) {
            Mask s = static_cast<Mask>(m);
            if (std::popcount(s) != layer) continue;
            int value = std::numeric_limits<int>::max();
            for (Mask rest = s; rest; rest &= rest - 1) {
                int v = std::countr_zero(rest);
                Mask before = s & ~(Mask{1} << v);
                int c = std::max<int>(best[before], cost(before, v));
                value = std::min(value, c);
            }
            best[m] = static_cast<std::uint8_t>(value);
        }
    }

    OrderingResult out;
    const Mask full = static_cast<Mask>(states - 1);
    out.value = best[full];
    std::vector<int> reversed;
    for (Mask s = full; s;) {
        for (Mask rest = s; rest; rest &= rest - 1) {
            int v = std::countr_zero(rest);
            Mask before = s & ~(Mask{1} << v);
            if (std::max<int>(best[before], cost(before, v)) == best[s]) {
                reversed.push_back(v);
                s = before;
                break;
            }
        }
    }
    out.ordering.assign(reversed.rbegin(), reversed.rend());
    return out;
}

namespace {

class PermutationSearch {
public:
    PermutationSearch(const Graph& g, OrderingMeasure measure)
        : adj_(adjacency_masks(g)), measure_(measure), n_(g.order()) {}

    OrderingResult run() {
        std::vector<int> identity(static_cast<std::size_t>(n_));
        for (int i = 0; i < n_; ++i) identity[i] = i;
        best_.ordering = identity;
        best_.value = evaluate(identity);
        std::vector<int> prefix;
        descend(adj_, (Mask{1} << n_) - 1, 0, prefix);
        return best_;
    }

    int evaluate(const std::vector<int>& ordering) const {
        std::vector<Mask> fill = adj_;
        Mask remaining = (Mask{1} << n_) - 1;
        int worst = measure_ == OrderingMeasure::Width ? -1 : 0;
        for (int v : ordering) {
            worst = std::max(worst, eliminate(fill, remaining, v));
        }
        return worst;
    }

private:
    /// Eliminates v from the fill graph; returns the bag cost.
    int eliminate(std::vector<Mask>& fill, Mask& remaining, int v) const {
        remaining &= ~(Mask{1} << v);
        Mask later = fill[v] & remaining;
        for (Mask r = later; r; r &= r - 1) {
            int u = std::countr_zero(r);
            fill[u] |= later & ~(Mask{1} << u);
        }
        Mask bag = later | (Mask{1} << v);
        return measure_ == OrderingMeasure::Width ? std::popcount(bag) - 1 : alpha_small(adj_, bag);
    }

    void descend(const std::vector<Mask>& fill, Mask remaining, int running, std::vector<int>& prefix) {
        if (!remaining) {
            if (running < best_.value) {
                best_.value = running;
                best_.ordering = prefix;
            }
            return;
        }
        for (Mask r = remaining; r; r &= r - 1) {
            int v = std::countr_zero(r);
            std::vector<Mask> next = fill;
            Mask left = remaining;
            int c = std::max(running, eliminate(next, left, v));
            if (c >= best_.value) continue;
            prefix.push_back(v);
            descend(next, left, c, prefix);
            prefix.pop_back();
        }
    }

    std::vector<Mask> adj_;
    OrderingMeasure measure_;
    int n_;
    OrderingResult best_;
};

}  // namespace

OrderingResult ordering_reference(const Graph& g, OrderingMeasure measure) {
    if (g.order() > kOrderingReferenceMaxOrder)
        throw InputError("permutation reference refuses n=" + std::to_string(g.order()) + " (limit " +
                         std::to_string(kOrderingReferenceMaxOrder) + ")");
    if (g.order() == 0) return {measure == OrderingMeasure::Width ? -1 : 0, {}};
    return PermutationSearch(g, measure).run();
}

int ordering_cost(const Graph& g, const std::vector<int>& ordering, OrderingMeasure measure) {
    if (static_cast<int>(ordering.size()) != g.order()) throw InputError("ordering is not a permutation");
    if (g.order() > kOrderingDpMaxOrder) throw InputError("ordering_cost limited to small graphs");
    const auto adj = adjacency_masks(g);
    Mask eliminated = 0;
    int worst = measure == OrderingMeasure::Width ? -1 : 0;
    for (int v : ordering) {
        if (v < 0 || v >= g.order() || (eliminated >> v) & 1) throw InputError("ordering is not a permutation");
        Mask bag = elimination_clique(adj, eliminated, v);
        int c = measure == OrderingMeasure::Width ? std::popcount(bag) - 1 : alpha_small(adj, bag);
        worst = std::max(worst, c);
        eliminated |= Mask{1} << v;
    }
    return worst;
}

int tin_exact(const Graph& g, int jobs) { return ordering_dp(g, OrderingMeasure::Independence, jobs).value; }

int tw_exact(const Graph& g, int jobs) { return ordering_dp(g, OrderingMeasure::Width, jobs).value; }

namespace {

class BicliqueSearch {
public:
    BicliqueSearch(const Graph& g, SearchBudget& budget) : g_(g), budget_(budget) {}

    Biclique run() {
        for (int u = 0; u < g_.order() && best_.left.empty(); ++u) {
            int v = g_.neighbors(u).first();
            if (v >= 0) best_ = {{u}, {v}};
        }
        std::vector<int> left;
        extend(left, g_.all_vertices(), g_.all_vertices());
        return best_;
    }

private:
    void extend(std::vector<int>& left, const VertexSet& common, VertexSet candidates) {
        budget_.tick();
        const int k = static_cast<int>(left.size());
        if (k > 0) {
            auto right = max_independent_set(g_, common, budget_);
            const int a = static_cast<int>(right.size());
            if (a >= k && k > best_.size()) {
                right.resize(static_cast<std::size_t>(k));
                best_ = {left, right};
            }
            // Adding to the left side only shrinks the common neighbourhood.
            if (a <= best_.size()) return;
        }
        while (candidates.any()) {
            if (k + static_cast<int>(candidates.count()) <= best_.size()) return;
            int v = candidates.first();
            candidates.reset(v);
            VertexSet next_common = k == 0 ? g_.neighbors(v) : (common & g_.neighbors(v));
            if (static_cast<int>(next_common.count()) <= best_.size()) continue;
            VertexSet next_candidates = candidates - g_.neighbors(v);
            left.push_back(v);
            extend(left, next_common, next_candidates);
            left.pop_back();
        }
    }

    const Graph& g_;
    SearchBudget& budget_;
    Biclique best_;
};

}  // namespace

Biclique ibn_witness(const Graph& g, SearchBudget& budget) { return BicliqueSearch(g, budget).run(); }

int ibn_exact(const Graph& g) {
    SearchBudget budget;
    return ibn_witness(g, budget).size();
}

namespace {

class MwisSearch {
public:
    MwisSearch(const Graph& g, const WeightVector& w, SearchBudget& budget) : g_(g), w_(w), budget_(budget) {}

    WeightedSet run() {
        Weight total = 0;
        for (const auto& x : w_) total += x;
        best_.weight = 0;
        go(g_.all_vertices(), 0, total);
        std::sort(best_.vertices.begin(), best_.vertices.end());
        return best_;
    }

private:
    void go(VertexSet open, const Weight& current, const Weight& remaining) {
        budget_.tick();
        if (have_best_ && current + remaining <= best_.weight) return;
        if (open.none()) {
            if (!have_best_ || current > best_.weight) {
                best_.weight = current;
                best_.vertices = chosen_;
                have_best_ = true;
            }
            return;
        }
        int v = -1;
        open.for_each([&](int u) {
            if (v < 0 || w_[u] > w_[v]) v = u;
        });
        VertexSet include = open - g_.closed_neighbors(v);
        Weight include_rest = 0;
        include.for_each([&](int u) { include_rest += w_[u]; });
        chosen_.push_back(v);
        go(include, current + w_[v], include_rest);
        chosen_.pop_back();
        if (!(g_.neighbors(v).intersects(open))) return;  // v is free: always taken
        VertexSet exclude = open;
        exclude.reset(v);
        go(exclude, current, remaining - w_[v]);
    }

    const Graph& g_;
    const WeightVector& w_;
    SearchBudget& budget_;
    WeightedSet best_;
    bool have_best_ = false;
    std::vector<int> chosen_;
};

}  // namespace

WeightedSet mwis_exact(const Graph& g, const WeightVector& w, SearchBudget& budget) {
    if (static_cast<int>(w.size()) != g.order())
        throw InputError("weight vector has " + std::to_string(w.size()) + " entries for " +
                         std::to_string(g.order()) + " vertices");
    for (const auto& x : w)
        if (x < 0) throw InputError("weights must be nonnegative");
    return MwisSearch(g, w, budget).run();
}

WeightedSet mwis_exact(const Graph& g, const WeightVector& w) {
    SearchBudget budget;
    return mwis_exact(g, w, budget);
}

}  // namespace tinkit
