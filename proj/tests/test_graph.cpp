#include <doctest.h>

#include "tinkit/errors.hpp"
#include "tinkit/generators.hpp"
#include "tinkit/graph.hpp"
#include "verify/canonical.hpp"

using namespace tinkit;

namespace {

Graph g_of(int n, std::vector<Edge> e) { return make_graph(n, e); }

}  // namespace

TEST_CASE("make_graph basics") {
    Graph p3 = g_of(3, {{0, 1}, {1, 2}});
    CHECK(p3.order() == 3);
    CHECK(p3.size() == 2);
    CHECK(p3.adjacent(1, 0));
    CHECK_FALSE(p3.adjacent(0, 2));

    Graph c4 = g_of(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    CHECK(verify::isomorphic_small(c4, complete_bipartite(2, 2)));

    CHECK(g_of(1, {}).order() == 1);
    CHECK(g_of(3, {{0, 1}, {1, 0}, {0, 1}}).size() == 1);
    CHECK_THROWS_AS(g_of(3, {{1, 1}}), InputError);
    CHECK_THROWS_AS(g_of(3, {{0, 3}}), InputError);
    CHECK_THROWS_WITH(g_of(3, {{2, 2}}), doctest::Contains("2"));
}

TEST_CASE("join and disjoint union") {
    Graph k1 = complete_graph(1), two = empty_graph(2);
    CHECK(verify::isomorphic_small(join(k1, two), path_graph(3)));
    Graph u = disjoint_union(k1, k1);
    CHECK(u.order() == 2);
    CHECK(u.size() == 0);
    CHECK(verify::isomorphic_small(join(two, two), cycle_graph(4)));

    // associativity up to isomorphism
    Graph a = path_graph(2), b = empty_graph(2), c = complete_graph(3);
    CHECK(verify::isomorphic_small(join(join(a, b), c), join(a, join(b, c))));
    CHECK(verify::isomorphic_small(disjoint_union(disjoint_union(a, b), c), disjoint_union(a, disjoint_union(b, c))));
}

TEST_CASE("line graph counts") {
    Rng rng(3);
    for (const Graph& g : {complete_graph(5), gen_wall(3), gen_Gn(3).graph, random_tree(12, rng)}) {
        auto lg = line_graph(g);
        CHECK(lg.graph.order() == static_cast<int>(g.size()));
        std::size_t expected = 0;
        for (int v = 0; v < g.order(); ++v) expected += static_cast<std::size_t>(g.degree(v) * (g.degree(v) - 1) / 2);
        CHECK(lg.graph.size() == expected);
        for (int i = 0; i < lg.graph.order(); ++i) {
            auto [u, v] = lg.edge_of[i];
            CHECK(g.adjacent(u, v));
        }
    }
    CHECK(line_graph(empty_graph(4)).graph.order() == 0);
    CHECK(verify::isomorphic_small(line_graph(path_graph(4)).graph, path_graph(3)));
}

TEST_CASE("named families") {
    Graph s = gen_spqr(1, 1, 1);
    CHECK(verify::isomorphic_small(s, star_graph(3)));
    Graph s222 = gen_spqr(2, 2, 2);
    CHECK(s222.order() == 7);
    CHECK(s222.size() == 6);
    CHECK(gen_spqr(1, 2, 3).order() == 7);
    // branch-major: centre 0, leg 1 is 1..p
    CHECK(s222.adjacent(0, 1));
    CHECK(s222.adjacent(1, 2));
    CHECK(s222.adjacent(0, 3));

    CHECK(verify::isomorphic_small(gen_tpqr(1, 1, 1), complete_graph(3)));
    Graph t222 = gen_tpqr(2, 2, 2);
    CHECK(t222.order() == 6);
    CHECK(t222.size() == 6);
    CHECK(verify::isomorphic_small(t222, line_graph(s222).graph));

    // values from an independent networkx construction
    CHECK(gen_wall(3).order() == 16);
    CHECK(gen_wall(3).size() == 19);
    CHECK(gen_wall(4).order() == 30);
    CHECK(gen_wall(4).size() == 38);
    CHECK(gen_wall(5).order() == 48);
    CHECK(gen_wall(5).size() == 63);
    CHECK(gen_wall(4).max_degree() == 3);
    // the corner (1,1) has degree one and is pruned
    CHECK(gen_wall(3).labels().front() == "(1,2)");
    CHECK_THROWS_AS(gen_wall(2), InputError);
}

TEST_CASE("G_n") {
    for (int n : {3, 4, 5}) {
        auto gn = gen_Gn(n);
        CHECK(gn.graph.order() == n * n);
        CHECK(gn.graph.size() == static_cast<std::size_t>(2 * n * (n - 1)));
        CHECK(gn.colors.size() == gn.graph.size());
        CHECK(is_bipartite(gn.graph));
        // making the branch vertices a clique gives a chordal graph of clique number n
        std::vector<Edge> e = gn.graph.edges();
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
        Graph completed = make_graph(gn.graph.order(), e);
        CHECK(is_chordal(completed));
        CHECK_FALSE(is_chordal(gn.graph));
    }
    CHECK_THROWS_AS(gen_Gn(2), InputError);
}

TEST_CASE("components, neighbourhoods, induced subgraphs, xy paths") {
    Graph g = disjoint_union(path_graph(3), cycle_graph(4));
    auto comps = components(g);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0].to_vector() == std::vector<int>{0, 1, 2});
    CHECK(comps[1].count() == 4);

    VertexSet s = VertexSet::of(7, std::vector<int>{0});
    CHECK(closed_neighborhood(g, s).to_vector() == std::vector<int>{0, 1});
    CHECK(open_neighborhood(g, s).to_vector() == std::vector<int>{1});

    auto sub = induced_subgraph(g, VertexSet::of(7, std::vector<int>{1, 3, 4}));
    CHECK(sub.graph.order() == 3);
    CHECK(sub.graph.size() == 1);
    CHECK(sub.original_of == std::vector<int>{1, 3, 4});

    Graph p6 = path_graph(6);
    auto q = shortest_xy_path(p6, VertexSet::of(6, std::vector<int>{0, 1}), VertexSet::of(6, std::vector<int>{4, 5}));
    REQUIRE(q);
    CHECK(q->vertices == std::vector<int>{1, 2, 3, 4});
    CHECK_FALSE(shortest_xy_path(g, VertexSet::of(7, std::vector<int>{0}), VertexSet::of(7, std::vector<int>{3})));
}

TEST_CASE("induced minor models") {
    Graph c5 = cycle_graph(5);
    MinorModel identity;
    for (int v = 0; v < 5; ++v) identity.branch_sets.push_back({v});
    CHECK(verify_induced_minor_model(c5, c5, identity).ok);

    MinorModel shared{{{0, 1}, {1, 2}, {3}, {4}, {}}};
    auto bad = verify_induced_minor_model(c5, c5, shared);
    CHECK_FALSE(bad.ok);

    MinorModel overlap{{{0, 1}, {1, 2}, {3}}};
    auto r = verify_induced_minor_model(c5, complete_graph(3), overlap);
    CHECK_FALSE(r.ok);
    CHECK(r.violation == "disjointness");

    // C_5 contracts to C_4 and C_3, an extra edge in the model is rejected
    CHECK(verify_induced_minor_model(c5, cycle_graph(4), MinorModel{{{0, 1}, {2}, {3}, {4}}}).ok);
    auto adj = verify_induced_minor_model(c5, cycle_graph(4), MinorModel{{{0}, {1}, {2}, {3}}});
    CHECK_FALSE(adj.ok);
    CHECK(adj.violation == "adjacency");

    auto disc = verify_induced_minor_model(c5, path_graph(2), MinorModel{{{0, 2}, {3}}});
    CHECK(disc.violation == "connectivity");

    auto gn = gen_Gn(3);
    auto lg = line_graph(gn.graph);
    CHECK(verify_induced_minor_model(lg.graph, complete_bipartite(3, 3), gn_biclique_model(gn, lg)).ok);
}

TEST_CASE("random generators are seeded and respect their class") {
    Rng a(7), b(7);
    CHECK(random_gnp(15, 0.3, a) == random_gnp(15, 0.3, b));
    Rng rng(11);
    for (int i = 0; i < 20; ++i) {
        Graph t = random_tree(1 + i, rng);
        CHECK(t.size() == static_cast<std::size_t>(i));
        CHECK(components(t).size() == 1);
        Graph tf = random_triangle_free(12, 0.6, rng);
        for (auto [u, v] : tf.edges()) CHECK_FALSE(tf.neighbors(u).intersects(tf.neighbors(v)));
    }
}

TEST_CASE("canonical catalog sizes") {
    // unlabelled graphs on n vertices
    const int counts[] = {1, 1, 2, 4, 11, 34, 156};
    for (int n = 0; n <= 6; ++n) CHECK(verify::all_graphs(n).size() == static_cast<std::size_t>(counts[n]));
}
