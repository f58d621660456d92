#include <doctest.h>

#include "tinkit/errors.hpp"
#include "tinkit/generators.hpp"
#include "tinkit/oracle.hpp"
#include "tinkit/tdecomp.hpp"

using namespace tinkit;

namespace {

/// Path decomposition {0,1},{1,2},...,{n-2,n-1} of P_n.
TreeDecomposition path_td(int n) {
    TreeDecomposition td;
    td.graph_order = n;
    for (int i = 0; i + 1 < n; ++i) {
        td.add_node({i, i + 1});
        if (i > 0) td.add_edge(i - 1, i);
    }
    return td;
}

}  // namespace

TEST_CASE("validate accepts a correct decomposition") {
    Graph p5 = path_graph(5);
    auto td = path_td(5);
    CHECK(validate(p5, td).ok);
    CHECK(is_path_decomposition(td));
    CHECK(width(td) == 1);
    CHECK(independence_number(p5, td) == 1);
}

TEST_CASE("validate names the failing axiom") {
    Graph p5 = path_graph(5);

    auto missing = path_td(5);
    missing.bags[3] = {3};
    auto r = validate(p5, missing);
    CHECK(r.axiom == Axiom::VertexCoverage);
    CHECK(std::string(axiom_name(r.axiom)) == "vertex-coverage");

    auto no_edge = path_td(5);
    no_edge.bags[2] = {3};
    CHECK(validate(p5, no_edge).axiom == Axiom::EdgeCoverage);

    auto split = path_td(5);
    split.bags[2].push_back(4);
    split.bags[0].push_back(4);
    CHECK(validate(p5, split).axiom == Axiom::Connectivity);
    CHECK(validate(p5, split).witness.find("4") != std::string::npos);

    auto cyclic = path_td(5);
    cyclic.add_edge(0, 3);
    CHECK(validate(p5, cyclic).axiom == Axiom::Structure);

    auto forest = path_td(5);
    forest.tree_edges.pop_back();
    forest.add_edge(1, 0);
    CHECK(validate(p5, forest).axiom == Axiom::Structure);

    auto unsorted = path_td(5);
    unsorted.bags[0] = {1, 0};
    CHECK(validate(p5, unsorted).axiom == Axiom::Structure);

    auto wrong_order = path_td(5);
    wrong_order.graph_order = 6;
    CHECK(validate(p5, wrong_order).axiom == Axiom::Structure);

    CHECK_THROWS_AS(independence_number(p5, missing), InputError);
}

TEST_CASE("empty and null graphs") {
    Graph null(0);
    auto td = single_bag(null);
    CHECK(validate(null, td).ok);
    CHECK(width(td) == -1);
    CHECK(independence_number(null, td) == 0);

    // empty bags are allowed
    Graph k2 = complete_graph(2);
    TreeDecomposition t;
    t.graph_order = 2;
    t.add_node({});
    t.add_node({0, 1});
    t.add_edge(0, 1);
    CHECK(validate(k2, t).ok);
}

TEST_CASE("add_to_all_bags and merge_at_hub") {
    // two paths joined through a universal vertex 10
    Graph a = path_graph(5), b = path_graph(5);
    Graph parts = disjoint_union(a, b);
    std::vector<Edge> e = parts.edges();
    for (int v = 0; v < 10; ++v) e.emplace_back(v, 10);
    Graph g = make_graph(11, e);

    auto ta = path_td(5);
    ta.graph_order = 11;
    TreeDecomposition tb;
    tb.graph_order = 11;
    for (int i = 0; i < 4; ++i) {
        tb.add_node({5 + i, 6 + i});
        if (i > 0) tb.add_edge(i - 1, i);
    }
    VertexSet hub = VertexSet::of(11, std::vector<int>{10});
    auto merged = merge_at_hub({ta, tb}, hub, true);
    CHECK(validate(g, merged).ok);
    CHECK(merged.node_count() == 9);
    CHECK(width(merged) == 2);
    CHECK(independence_number(g, merged) == 1);

    auto without = merge_at_hub({ta, tb}, hub, false);
    CHECK_FALSE(validate(g, without).ok);

    auto plus = add_to_all_bags(path_td(5), VertexSet::of(5, std::vector<int>{0}));
    for (const auto& bag : plus.bags) CHECK(bag.front() == 0);
}

TEST_CASE("attach_subtree") {
    // P_7: decompose 0..3, then hang 4..6 below the bag holding 3
    Graph p7 = path_graph(7);
    TreeDecomposition td;
    td.graph_order = 7;
    for (int i = 0; i < 3; ++i) {
        td.add_node({i, i + 1});
        if (i > 0) td.add_edge(i - 1, i);
    }
    TreeDecomposition child;
    child.graph_order = 7;
    child.add_node({4, 5});
    child.add_node({5, 6});
    child.add_edge(0, 1);
    auto joined = attach_subtree(p7, td, 2, child, VertexSet::of(7, std::vector<int>{3}));
    CHECK(validate(p7, joined).ok);
    CHECK(width(joined) == 2);

    // without absorbing 3 the edge 3-4 would have no bag
    CHECK_THROWS(attach_subtree(p7, td, 2, child, VertexSet(7)));
    // node 0 does not hold 3
    CHECK_THROWS(attach_subtree(p7, td, 0, child, VertexSet::of(7, std::vector<int>{3})));
}

TEST_CASE("map_vertices") {
    auto td = path_td(3);
    auto mapped = map_vertices(td, {4, 2, 7}, 8);
    CHECK(mapped.graph_order == 8);
    CHECK(mapped.bags[0] == std::vector<int>{2, 4});
    CHECK(mapped.bags[1] == std::vector<int>{2, 7});
}

TEST_CASE("heuristic decompositions") {
    Rng rng(23);
    for (int i = 0; i < 10; ++i) {
        Graph t = random_tree(15, rng);
        auto td = heuristic_td(t);
        CHECK(validate(t, td).ok);
        CHECK(width(td) == 1);
    }
    for (int n : {1, 4, 7}) CHECK(width(heuristic_td(complete_graph(n))) == n - 1);
    CHECK(width(heuristic_td(cycle_graph(6))) == 2);
    CHECK(width(heuristic_td(empty_graph(5))) == 0);

    // any decomposition bounds tin from above
    for (int i = 0; i < 30; ++i) {
        Graph g = random_gnp(10, 0.35, rng);
        auto td = heuristic_td(g);
        REQUIRE(validate(g, td).ok);
        CHECK(independence_number(g, td) >= tin_exact(g));
        CHECK(width(td) >= tw_exact(g));
        auto order = min_fill_ordering(g);
        CHECK(ordering_cost(g, order, OrderingMeasure::Width) == width(td_from_ordering(g, order)));
    }
}
