#include <doctest.h>

#include <set>

#include "tinkit/errors.hpp"
#include "tinkit/generators.hpp"
#include "tinkit/patterns.hpp"
#include "verify/canonical.hpp"

using namespace tinkit;

namespace {

Graph petersen() {
    std::vector<Edge> e;
    for (int i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);
        e.emplace_back(i, i + 5);
        e.emplace_back(5 + i, 5 + (i + 2) % 5);
    }
    return make_graph(10, e);
}

bool has_p4_brute(const Graph& g) {
    const int n = g.order();
    Graph p4 = path_graph(4);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                for (int d = c + 1; d < n; ++d) {
                    std::vector<Edge> e;
                    int vs[4] = {a, b, c, d};
                    for (int i = 0; i < 4; ++i)
                        for (int j = i + 1; j < 4; ++j)
                            if (g.adjacent(vs[i], vs[j])) e.emplace_back(i, j);
                    if (verify::isomorphic_small(make_graph(4, e), p4)) return true;
                }
    return false;
}

/// Path 0..len-1 plus a vertex `len` adjacent to the given positions.
Graph path_with_apex(int len, const std::vector<int>& nbrs) {
    std::vector<Edge> e;
    for (int i = 0; i + 1 < len; ++i) e.emplace_back(i, i + 1);
    for (int i : nbrs) e.emplace_back(i, len);
    return make_graph(len + 1, e);
}

Path prefix(int len) {
    Path p;
    for (int i = 0; i < len; ++i) p.vertices.push_back(i);
    return p;
}

}  // namespace

TEST_CASE("pattern graphs and names") {
    CHECK(verify::isomorphic_small(pattern_graph(PatternKind::Star, {3}), star_graph(3)));
    CHECK(pattern_graph(PatternKind::Path, {5}).size() == 4);
    CHECK(pattern_graph(PatternKind::Cycle, {6}).size() == 6);
    CHECK(pattern_graph(PatternKind::KSp, {2, 1}).order() == 8);
    CHECK(pattern_graph(PatternKind::KTp, {3, 1}).order() == 9);
    for (auto k : {PatternKind::Star, PatternKind::Path, PatternKind::Cycle, PatternKind::Sp, PatternKind::Tp,
                   PatternKind::KSp, PatternKind::KTp})
        CHECK(kind_from_name(kind_name(k)) == k);
    CHECK_FALSE(kind_from_name("hexagon"));
}

TEST_CASE("P4 detection agrees with a 4-subset scan") {
    Graph p4 = path_graph(4);
    for (int n = 0; n <= 6; ++n)
        for (const Graph& g : verify::all_graphs(n)) {
            SearchBudget budget;
            auto emb = find_induced_embedding(g, p4, budget);
            CHECK(emb.has_value() == has_p4_brute(g));
            if (emb) CHECK(embeds_induced(g, p4, *emb));
        }
}

TEST_CASE("star search") {
    auto c = find_induced_star(star_graph(5), 3);
    REQUIRE(c);
    CHECK(c->kind == PatternKind::Star);
    CHECK(c->embedding.front() == 0);
    CHECK(c->validated);
    CHECK_FALSE(find_induced_star(cycle_graph(9), 3));
    CHECK_FALSE(find_induced_star(complete_graph(6), 2));
    CHECK(find_induced_star(cycle_graph(5), 2));
    CHECK(find_induced_star(petersen(), 3));
    CHECK_FALSE(find_induced_star(petersen(), 4));
}

TEST_CASE("path and cycle search") {
    // brute-force values: Petersen has longest induced path 5 and cycle 6,
    // the 3-wall 13 and 14
    Graph pet = petersen(), w = gen_wall(3);
    auto p5 = find_induced_path_geq(pet, 5);
    REQUIRE(p5);
    CHECK(p5->count() == 5);
    CHECK(is_induced_path(pet, p5->vertices));
    CHECK_FALSE(find_induced_path_geq(pet, 6));
    auto wp = find_induced_path_geq(w, 13);
    REQUIRE(wp);
    CHECK(is_induced_path(w, wp->vertices));
    CHECK_FALSE(find_induced_path_geq(w, 14));

    auto c6 = find_long_induced_cycle(pet, 6);
    REQUIRE(c6);
    CHECK(is_induced_cycle(pet, c6->vertices));
    CHECK_FALSE(find_long_induced_cycle(pet, 7));
    auto wc = find_long_induced_cycle(w, 14);
    REQUIRE(wc);
    CHECK(wc->count() == 14);
    CHECK(is_induced_cycle(w, wc->vertices));
    CHECK_FALSE(find_long_induced_cycle(w, 15));

    CHECK(find_induced_path_geq(cycle_graph(7), 6));
    CHECK_FALSE(find_induced_path_geq(cycle_graph(7), 7));
    CHECK_FALSE(find_long_induced_cycle(complete_graph(5), 4));
    CHECK(find_long_induced_cycle(cycle_graph(9), 9));

    // restricted search ignores the excluded vertices
    VertexSet within = w.all_vertices();
    within.reset(static_cast<std::size_t>(wp->vertices[3]));
    SearchBudget budget;
    auto rp = find_induced_path_geq(w, 5, within, budget);
    REQUIRE(rp);
    for (int v : rp->vertices) CHECK(within.test(static_cast<std::size_t>(v)));
}

TEST_CASE("budget exhaustion is reported") {
    SearchBudget tiny(10);
    CHECK_THROWS_AS(find_long_induced_cycle(gen_wall(4), 40, tiny), BudgetExceeded);
}

TEST_CASE("segments of a path cover its edges") {
    Rng rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        int len = 3 + static_cast<int>(rng() % 15);
        std::vector<int> nbrs;
        for (int i = 0; i < len; ++i)
            if (rng() % 3 == 0) nbrs.push_back(i);
        bool cyclic = trial % 2 == 1;
        std::vector<Edge> e;
        for (int i = 0; i + 1 < len; ++i) e.emplace_back(i, i + 1);
        if (cyclic) e.emplace_back(len - 1, 0);
        for (int i : nbrs) e.emplace_back(i, len);
        Graph g = make_graph(len + 1, e);
        Path p = prefix(len);
        if (nbrs.size() < (cyclic ? 2u : 1u)) {
            CHECK_THROWS_AS(segments_of_path(g, p, len, cyclic), InputError);
            continue;
        }
        auto segs = segments_of_path(g, p, len, cyclic);
        std::set<Edge> covered;
        for (const Path& s : segs) {
            for (std::size_t i = 1; i + 1 < s.vertices.size(); ++i) CHECK_FALSE(g.adjacent(s.vertices[i], len));
            for (std::size_t i = 0; i + 1 < s.vertices.size(); ++i) {
                int a = s.vertices[i], b = s.vertices[i + 1];
                CHECK(g.adjacent(a, b));
                CHECK(covered.insert({std::min(a, b), std::max(a, b)}).second);
            }
        }
        std::size_t expected = static_cast<std::size_t>(cyclic ? len : len - 1);
        CHECK(covered.size() == expected);
    }
}

TEST_CASE("neighbours on an induced path in a claw-free graph") {
    // at most 2(d-1) neighbours on an induced path when K_{1,d}-free
    Rng rng(17);
    int checked = 0;
    for (int trial = 0; trial < 60; ++trial) {
        Graph g = complement(random_triangle_free(12, 0.5, rng));
        auto p = find_induced_path_geq(g, 3);
        if (!p) continue;
        VertexSet on = VertexSet::of(static_cast<std::size_t>(g.order()), p->vertices);
        for (int v = 0; v < g.order(); ++v) {
            if (on.test(static_cast<std::size_t>(v))) continue;
            CHECK(neighbors_on_path(g, *p, v).count() <= 4);
            CHECK(neighbor_positions(g, *p, v).size() == neighbors_on_path(g, *p, v).count());
            ++checked;
        }
    }
    CHECK(checked > 0);
}

TEST_CASE("long segment") {
    // a free block yields a segment
    Graph g = path_with_apex(12, {0, 5});
    auto r = long_segment(g, prefix(12), 12, 3, 3);
    REQUIRE(std::holds_alternative<Path>(r));
    const Path& seg = std::get<Path>(r);
    int non = 0;
    for (std::size_t i = 1; i + 1 < seg.vertices.size(); ++i)
        if (!g.adjacent(seg.vertices[i], 12)) ++non;
    CHECK(non >= 2);

    // one neighbour per block gives a star on the apex
    Graph h = path_with_apex(9, {0, 3, 6});
    auto s = long_segment(h, prefix(9), 9, 3, 3);
    REQUIRE(std::holds_alternative<Certificate>(s));
    Certificate c = std::get<Certificate>(s);
    CHECK(c.kind == PatternKind::Star);
    CHECK(c.embedding.front() == 9);
    CHECK(revalidate(h, c));
}

TEST_CASE("path interval") {
    Graph g = path_with_apex(20, {2, 4});
    auto r = path_interval(g, prefix(20), 20, 5, 3);
    REQUIRE(std::holds_alternative<PathInterval>(r));
    CHECK(std::get<PathInterval>(r).first == 2);
    CHECK(std::get<PathInterval>(r).last == 4);

    // a wide gap closes a long induced cycle through the apex
    Graph wide = path_with_apex(20, {0, 10});
    auto cyc = path_interval(wide, prefix(20), 20, 4, 2);
    REQUIRE(std::holds_alternative<Certificate>(cyc));
    Certificate cc = std::get<Certificate>(cyc);
    CHECK(cc.kind == PatternKind::Cycle);
    CHECK(cc.embedding.size() >= 4);
    CHECK(revalidate(wide, cc));

    // dense short gaps leave a star
    Graph dense = path_with_apex(16, {0, 2, 4, 6, 8, 10, 12, 14});
    auto st = path_interval(dense, prefix(16), 16, 5, 3);
    REQUIRE(std::holds_alternative<Certificate>(st));
    Certificate sc = std::get<Certificate>(st);
    CHECK(sc.kind == PatternKind::Star);
    CHECK(revalidate(dense, sc));

    CHECK_THROWS_AS(path_interval(g, prefix(20), 20, 5, 1), InputError);
}

TEST_CASE("component attachment interval") {
    // path 0..29, v = 30 on position 10, u = 32 on position 20, h = 31
    // joins them
    auto build = [](bool far) {
        std::vector<Edge> e;
        for (int i = 0; i + 1 < 30; ++i) e.emplace_back(i, i + 1);
        e.emplace_back(30, 10);
        e.emplace_back(31, 30);
        e.emplace_back(31, 32);
        e.emplace_back(32, far ? 20 : 12);
        return make_graph(33, e);
    };
    VertexSet h = VertexSet::of(33, std::vector<int>{31});

    Graph near = build(false);
    auto ok = component_attachment_interval(near, prefix(30), h, 30, 4, 3);
    REQUIRE(std::holds_alternative<PathInterval>(ok));
    auto iv = std::get<PathInterval>(ok);
    CHECK(iv.first == 6);
    CHECK(iv.last == 14);

    Graph far = build(true);
    auto bad = component_attachment_interval(far, prefix(30), h, 30, 4, 3);
    REQUIRE(std::holds_alternative<Certificate>(bad));
    Certificate c = std::get<Certificate>(bad);
    CHECK(c.kind == PatternKind::Cycle);
    CHECK(c.embedding.size() >= 4);
    CHECK(revalidate(far, c));
}

TEST_CASE("certificates are re-checked") {
    Graph g = star_graph(3);
    Certificate c = certify(g, PatternKind::Star, {3}, {0, 1, 2, 3});
    CHECK(c.validated);
    c.embedding = {1, 0, 2, 3};
    CHECK_FALSE(revalidate(g, c));
    CHECK_FALSE(c.validated);
    CHECK_THROWS_AS(certify(g, PatternKind::Path, {3}, {1, 2, 3}), InternalError);
    CHECK_FALSE(embeds_induced(g, path_graph(3), {1, 0, 1}));
    CHECK(find_induced_pattern(gen_wall(3), cycle_graph(6)));
}
