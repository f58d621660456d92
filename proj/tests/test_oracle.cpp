#include <doctest.h>

#include <algorithm>

#include "tinkit/errors.hpp"
#include "tinkit/generators.hpp"
#include "tinkit/oracle.hpp"
#include "tinkit/tdecomp.hpp"
#include "verify/canonical.hpp"

using namespace tinkit;

namespace {

Graph octahedron() {
    Graph k2 = complete_graph(2);
    return complement(disjoint_union(disjoint_union(k2, k2), k2));
}

Graph wheel(int rim) { return join(complete_graph(1), cycle_graph(rim)); }

Graph cube() {
    std::vector<Edge> e;
    for (int v = 0; v < 8; ++v)
        for (int b = 0; b < 3; ++b)
            if (v < (v ^ (1 << b))) e.emplace_back(v, v ^ (1 << b));
    return make_graph(8, e);
}

Graph prism() {
    return make_graph(6, std::vector<Edge>{{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}});
}

struct Known {
    const char* name;
    Graph g;
    int tw, tin, alpha, ibn;
};

}  // namespace

TEST_CASE("known values") {
    // from an independent brute force over all orderings
    std::vector<Known> cases = {
        {"K33", complete_bipartite(3, 3), 3, 3, 3, 3},
        {"W6", wheel(6), 3, 2, 3, 1},
        {"octahedron", octahedron(), 4, 2, 2, 2},
        {"Q3", cube(), 3, 3, 4, 2},
        {"prism", prism(), 3, 2, 2, 2},
        {"K24", complete_bipartite(2, 4), 2, 2, 4, 2},
        {"C7", cycle_graph(7), 2, 2, 3, 1},
        {"K44", complete_bipartite(4, 4), 4, 4, 4, 4},
    };
    for (const auto& k : cases) {
        CAPTURE(k.name);
        CHECK(tw_exact(k.g) == k.tw);
        CHECK(tin_exact(k.g) == k.tin);
        CHECK(alpha_exact(k.g) == k.alpha);
        CHECK(ibn_exact(k.g) == k.ibn);
        CHECK(ordering_reference(k.g, OrderingMeasure::Width).value == k.tw);
        CHECK(ordering_reference(k.g, OrderingMeasure::Independence).value == k.tin);
    }
    CHECK(tw_exact(Graph(0)) == -1);
    CHECK(tin_exact(Graph(0)) == 0);
    CHECK(tin_exact(empty_graph(4)) == 1);
    CHECK(tw_exact(complete_graph(9)) == 8);
    CHECK(tin_exact(complete_graph(9)) == 1);
    CHECK(tw_exact(gen_wall(3)) == 3);
}

TEST_CASE("subset DP agrees with the permutation reference") {
    Rng rng(101);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 3 + trial % 7;
        Graph g = random_gnp(n, 0.2 + 0.1 * (trial % 6), rng);
        for (auto m : {OrderingMeasure::Width, OrderingMeasure::Independence}) {
            auto dp = ordering_dp(g, m);
            auto ref = ordering_reference(g, m);
            CHECK(dp.value == ref.value);
            CHECK(ordering_cost(g, dp.ordering, m) == dp.value);
            CHECK(ordering_cost(g, ref.ordering, m) == ref.value);
            CHECK(ordering_dp(g, m, 0).value == dp.value);
        }
    }
    CHECK_THROWS_AS(ordering_dp(empty_graph(kOrderingDpMaxOrder + 1), OrderingMeasure::Width), InputError);
    CHECK_THROWS_AS(ordering_reference(empty_graph(kOrderingReferenceMaxOrder + 1), OrderingMeasure::Width),
                    InputError);
}

TEST_CASE("orderings give valid decompositions") {
    Rng rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        Graph g = random_gnp(9, 0.4, rng);
        auto r = ordering_dp(g, OrderingMeasure::Independence);
        auto td = td_from_ordering(g, r.ordering);
        CHECK(validate(g, td).ok);
        CHECK(independence_number(g, td) == r.value);
    }
}

TEST_CASE("universal inequalities on the catalog") {
    for (int n = 1; n <= 6; ++n)
        for (const Graph& g : verify::all_graphs(n)) {
            int tin = tin_exact(g), tw = tw_exact(g), a = alpha_exact(g), b = ibn_exact(g);
            CHECK(tin <= tw + 1);
            CHECK(tin <= a);
            CHECK(b <= tin);
            // an isomorphic copy has the same value
            CHECK(tin_exact(verify::canonical_form(g)) == tin);
        }
}

TEST_CASE("ibn witness is an induced biclique") {
    Rng rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        Graph g = random_gnp(10, 0.5, rng);
        SearchBudget budget;
        auto w = ibn_witness(g, budget);
        CHECK(w.left.size() == w.right.size());
        CHECK(is_independent(g, w.left));
        CHECK(is_independent(g, w.right));
        for (int l : w.left)
            for (int r : w.right) CHECK(g.adjacent(l, r));
    }
    CHECK(ibn_exact(empty_graph(5)) == 0);
}

TEST_CASE("maximum weight independent set") {
    WeightVector unit(4, make_weight(1));
    CHECK(mwis_exact(star_graph(3), unit).weight == 3);

    WeightVector ws = {make_weight(1, 2), make_weight(7, 3), make_weight(2), make_weight(1)};
    auto k4 = mwis_exact(complete_graph(4), ws);
    CHECK(k4.weight == make_weight(7, 3));
    CHECK(k4.vertices == std::vector<int>{1});

    CHECK(mwis_exact(cycle_graph(5), WeightVector(5, make_weight(1))).weight == 2);

    // heavy centre beats the leaves
    WeightVector heavy = {make_weight(4), make_weight(1), make_weight(1), make_weight(1)};
    CHECK(mwis_exact(star_graph(3), heavy).vertices == std::vector<int>{0});

    Rng rng(9);
    for (int trial = 0; trial < 20; ++trial) {
        Graph g = random_gnp(9, 0.3, rng);
        WeightVector one(9, make_weight(1));
        auto r = mwis_exact(g, one);
        CHECK(is_independent(g, r.vertices));
        CHECK(r.weight == alpha_exact(g));
    }
    CHECK_THROWS_AS(mwis_exact(path_graph(3), unit), InputError);
}

TEST_CASE("maximum independent set respects the subset") {
    Graph c6 = cycle_graph(6);
    VertexSet within = VertexSet::of(6, std::vector<int>{0, 1, 2});
    auto s = max_independent_set(c6, within);
    CHECK(s.size() == 2);
    for (int v : s) CHECK(within.test(static_cast<std::size_t>(v)));
    CHECK(alpha_exact(c6, within) == 2);
}
