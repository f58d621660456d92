#include <doctest.h>

#include "tinkit/cograph.hpp"
#include "tinkit/errors.hpp"
#include "tinkit/generators.hpp"
#include "tinkit/lift.hpp"
#include "tinkit/mwis.hpp"
#include "tinkit/oracle.hpp"

using namespace tinkit;

namespace {

WeightVector random_weights(int n, Rng& rng) {
    WeightVector w;
    for (int i = 0; i < n; ++i) w.push_back(make_weight(static_cast<long long>(rng() % 20), 1 + static_cast<long long>(rng() % 4)));
    return w;
}

}  // namespace

TEST_CASE("small instances") {
    WeightedInstance claw{star_graph(3), WeightVector(4, make_weight(1))};
    auto r = solve(claw, heuristic_td(claw.graph));
    CHECK(r.weight == 3);
    CHECK(r.vertices == std::vector<int>{1, 2, 3});

    WeightedInstance k4{complete_graph(4), {make_weight(1), make_weight(5, 2), make_weight(2), make_weight(0)}};
    CHECK(solve(k4, single_bag(k4.graph)).weight == make_weight(5, 2));

    WeightedInstance c5{cycle_graph(5), WeightVector(5, make_weight(1))};
    CHECK(solve(c5, heuristic_td(c5.graph)).weight == 2);

    WeightedInstance null{Graph(0), {}};
    CHECK(solve(null, single_bag(null.graph)).weight == 0);
}

TEST_CASE("agrees with branch and bound") {
    Rng rng(53);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 4 + trial % 12;
        WeightedInstance inst{random_gnp(n, 0.3, rng), random_weights(n, rng)};
        auto want = mwis_exact(inst.graph, inst.weights);
        for (const auto& td : {heuristic_td(inst.graph), single_bag(inst.graph), exact_width_td(inst.graph)}) {
            auto got = solve(inst, td);
            CHECK(got.weight == want.weight);
            CHECK(is_independent(inst.graph, got.vertices));
        }
        CHECK(solve(inst, heuristic_td(inst.graph), 0).weight == want.weight);
    }
}

TEST_CASE("adding an isolated vertex adds its weight") {
    Rng rng(59);
    for (int trial = 0; trial < 20; ++trial) {
        WeightedInstance inst{random_gnp(10, 0.4, rng), random_weights(10, rng)};
        Weight base = solve(inst, heuristic_td(inst.graph)).weight;
        WeightedInstance more{disjoint_union(inst.graph, complete_graph(1)), inst.weights};
        more.weights.push_back(make_weight(7, 3));
        CHECK(solve(more, heuristic_td(more.graph)).weight == base + make_weight(7, 3));
    }
}

TEST_CASE("bad input") {
    WeightedInstance inst{path_graph(3), WeightVector(2, make_weight(1))};
    CHECK_THROWS_AS(solve(inst, single_bag(inst.graph)), InputError);
    WeightedInstance neg{path_graph(2), {make_weight(1), make_weight(-1)}};
    CHECK_THROWS_AS(solve(neg, single_bag(neg.graph)), InputError);
    WeightedInstance ok{path_graph(3), WeightVector(3, make_weight(1))};
    TreeDecomposition broken;
    broken.graph_order = 3;
    broken.add_node({0, 1});
    CHECK_THROWS_AS(solve(ok, broken), InputError);
    SearchBudget tiny(2);
    CHECK_THROWS_AS(solve(ok, single_bag(ok.graph), tiny), BudgetExceeded);
}

TEST_CASE("solve_auto routes") {
    Rng rng(67);
    WeightedInstance co{random_cograph(12, rng), random_weights(12, rng)};
    auto a = solve_auto(co);
    CHECK(a.strategy == "cograph");
    CHECK(a.best.weight == mwis_exact(co.graph, co.weights).weight);

    // complements of triangle-free graphs fit the star-path hint
    Graph tf = complement(random_triangle_free(14, 0.4, rng));
    WeightedInstance sp{tf, random_weights(14, rng)};
    ClassHint hint;
    auto b = solve_auto(sp, hint);
    if (b.strategy != "cograph") {
        CHECK(b.strategy == "star-path");
        CHECK(b.td_alpha <= 6);
    }
    CHECK(b.best.weight == mwis_exact(sp.graph, sp.weights).weight);

    ClassHint bb{ClassHint::Kind::Backbone, 3, 5, 1, 1};
    // peeling bags grow along the cycle, so states grow like Lucas numbers
    WeightedInstance cyc{cycle_graph(16), WeightVector(16, make_weight(1))};
    auto c = solve_auto(cyc, bb);
    CHECK(c.strategy == "backbone");
    CHECK(c.best.weight == 8);

    // a long path refutes P_4-freeness
    ClassHint tight{ClassHint::Kind::StarPath, 3, 4, 1, 1};
    WeightedInstance p{path_graph(12), WeightVector(12, make_weight(1))};
    auto d = solve_auto(p, tight);
    REQUIRE(d.refutation);
    CHECK(d.strategy == "heuristic");
    CHECK(revalidate(p.graph, *d.refutation));
    CHECK(d.best.weight == 6);

    CHECK(solve_auto(p).strategy == "heuristic");
}
