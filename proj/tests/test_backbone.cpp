#include <doctest.h>

#include "tinkit/backbone.hpp"
#include "tinkit/errors.hpp"
#include "tinkit/generators.hpp"
#include "tinkit/oracle.hpp"

using namespace tinkit;

namespace {

Path prefix(int len) {
    Path p;
    for (int i = 0; i < len; ++i) p.vertices.push_back(i);
    return p;
}

/// P_n^2: i ~ j iff |i - j| <= 2.
Graph path_square(int n) {
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j <= i + 2 && j < n; ++j) e.emplace_back(i, j);
    return make_graph(n, e);
}

bool is_class_certificate(const Certificate& c) {
    return c.kind == PatternKind::Star || c.kind == PatternKind::Sp || c.kind == PatternKind::Tp;
}

}  // namespace

TEST_CASE("class constants") {
    auto a = ClassParams::make(3, 1);
    CHECK(a.q == 12);
    CHECK(a.r == 40);
    CHECK(a.h == 72);
    CHECK(a.first_path == 3);
    CHECK(a.spine_path == 216);
    CHECK(a.component_path == 120);
    CHECK(a.bound == 640);

    auto b = ClassParams::make(3, 2);
    CHECK(b.q == 18);
    CHECK(b.r == 64);
    CHECK(b.h == 108);
    CHECK(b.spine_path == 324);
    CHECK(b.component_path == 195);
    CHECK(b.bound == 960);

    CHECK(decompose_k_bound(3, 1, 1) == 640);
    CHECK(decompose_k_bound(3, 1, 2) == 664);
    CHECK_THROWS_AS(ClassParams::make(1, 1), InputError);
    CHECK_THROWS_AS(ClassParams::make(3, 0), InputError);
    CHECK_THROWS_AS(ClassParams::make(1 << 20, 1 << 20), InputError);
}

TEST_CASE("build_backbone on a path") {
    // P_30 with a pendant vertex 30 on position 15 and 31 beyond it
    std::vector<Edge> e;
    for (int i = 0; i + 1 < 30; ++i) e.emplace_back(i, i + 1);
    e.emplace_back(15, 30);
    e.emplace_back(30, 31);
    Graph g = make_graph(32, e);
    auto r = build_backbone(g, prefix(30), 3);
    REQUIRE(std::holds_alternative<BackboneStructure>(r));
    const auto& bb = std::get<BackboneStructure>(r);
    CHECK(bb.td.node_count() == 28);
    CHECK(is_path_decomposition(bb.td));

    auto idx = attach_index(g, bb, VertexSet::of(32, std::vector<int>{31}), ClassParams::make(2, 1));
    REQUIRE(std::holds_alternative<int>(idx));
    int node = std::get<int>(idx);
    CHECK(node == 13);
    CHECK(bb.td.bag_set(node).test(30));
    CHECK_FALSE(bb.td.bag_set(node - 1).test(30));

    CHECK_THROWS_AS(build_backbone(g, prefix(30), 31), InputError);
    CHECK_THROWS_AS(build_backbone(cycle_graph(6), Path{{0, 1, 2, 3, 4, 5}}, 2), InputError);
}

TEST_CASE("build_backbone closes a long cycle") {
    // spine 0..18 on C_20 leaves 19 with neighbours 17 positions apart
    Graph c20 = cycle_graph(20);
    auto r = build_backbone(c20, prefix(19), 3);
    REQUIRE(std::holds_alternative<Certificate>(r));
    Certificate c = std::get<Certificate>(r);
    CHECK(c.kind == PatternKind::Cycle);
    CHECK(c.embedding.size() == 20);
    CHECK(revalidate(c20, c));

    // two outer neighbours far apart on the spine
    std::vector<Edge> e;
    for (int i = 0; i + 1 < 20; ++i) e.emplace_back(i, i + 1);
    e.emplace_back(20, 2);
    e.emplace_back(21, 14);
    e.emplace_back(20, 21);
    Graph g = make_graph(22, e);
    auto r2 = build_backbone(g, prefix(20), 4);
    REQUIRE(std::holds_alternative<Certificate>(r2));
    Certificate c2 = std::get<Certificate>(r2);
    CHECK(c2.kind == PatternKind::Cycle);
    CHECK(c2.embedding.size() > 6);
    CHECK(revalidate(g, c2));
}

TEST_CASE("certify_from_long_cycle") {
    for (auto [d, p] : {std::pair{2, 1}, std::pair{2, 2}, std::pair{3, 2}, std::pair{4, 1}}) {
        CAPTURE(d);
        CAPTURE(p);
        int plen = d * p, clen = d * (2 * p + 2);
        for (int link = 1; link <= 3; ++link) {
            // path 0..plen-1, a connector of `link` vertices, then the cycle
            std::vector<Edge> e;
            for (int i = 0; i + 1 < plen; ++i) e.emplace_back(i, i + 1);
            int prev = plen - 1;
            for (int i = 0; i < link; ++i) {
                e.emplace_back(prev, plen + i);
                prev = plen + i;
            }
            int c0 = plen + link;
            std::vector<int> cyc;
            for (int i = 0; i < clen; ++i) {
                cyc.push_back(c0 + i);
                e.emplace_back(c0 + i, c0 + (i + 1) % clen);
            }
            e.emplace_back(prev, c0);
            Graph g = make_graph(c0 + clen, e);
            Certificate c = certify_from_long_cycle(g, prefix(plen), cyc, d, p);
            CHECK(is_class_certificate(c));
            CHECK(revalidate(g, c));
        }
    }
}

TEST_CASE("long cycles are in class") {
    // C_n contains no triangle and no claw; T_1 = K_3, S_1 = K_{1,3}
    for (int n : {30, 150, 300}) {
        Graph c = cycle_graph(n);
        auto r = backbone_decompose(c, 3, 1);
        REQUIRE(std::holds_alternative<TreeDecomposition>(r));
        const auto& td = std::get<TreeDecomposition>(r);
        CHECK(validate(c, td).ok);
        CHECK(independence_number(c, td) <= 640);
    }
}

TEST_CASE("squares of long paths") {
    // claw-free with no S_2 or T_2 once long enough to route the backbone
    for (int n : {50, 400, 750}) {
        Graph g = path_square(n);
        auto r = backbone_decompose(g, 3, 2);
        REQUIRE(std::holds_alternative<TreeDecomposition>(r));
        const auto& td = std::get<TreeDecomposition>(r);
        CHECK(validate(g, td).ok);
        CHECK(independence_number(g, td) <= 960);
    }
}

TEST_CASE("certificates on out-of-class graphs") {
    // a claw with d = 3
    auto claw = backbone_decompose(star_graph(3), 3, 2, BackboneOptions{true});
    REQUIRE(std::holds_alternative<Certificate>(claw));
    CHECK(std::get<Certificate>(claw).kind == PatternKind::Star);

    // S_2 itself with d = 4
    Graph s2 = gen_spqr(2, 2, 2);
    auto sp = backbone_decompose(s2, 4, 2, BackboneOptions{true});
    REQUIRE(std::holds_alternative<Certificate>(sp));
    CHECK(std::get<Certificate>(sp).kind == PatternKind::Sp);

    Rng rng(61);
    for (int trial = 0; trial < 30; ++trial) {
        Graph g = random_gnp(16, 0.25, rng);
        auto r = backbone_decompose(g, 3, 1, BackboneOptions{true});
        if (auto* td = std::get_if<TreeDecomposition>(&r)) {
            CHECK(validate(g, *td).ok);
            CHECK_FALSE(find_induced_star(g, 3));
        } else {
            Certificate c = std::get<Certificate>(r);
            CHECK(is_class_certificate(c));
            CHECK(revalidate(g, c));
        }
    }
}

TEST_CASE("decompose_k") {
    // two disjoint S_2 plus a path, K_{1,4}-free and triangle-free
    Graph s2 = gen_spqr(2, 2, 2);
    Graph g = disjoint_union(disjoint_union(s2, s2), path_graph(6));
    auto two = decompose_k(g, 4, 2, 2, BackboneOptions{true});
    REQUIRE(std::holds_alternative<Certificate>(two));
    Certificate c = std::get<Certificate>(two);
    CHECK(c.kind == PatternKind::KSp);
    CHECK(revalidate(g, c));

    auto three = decompose_k(g, 4, 2, 3, BackboneOptions{true});
    REQUIRE(std::holds_alternative<TreeDecomposition>(three));
    const auto& td = std::get<TreeDecomposition>(three);
    CHECK(validate(g, td).ok);
    CHECK(independence_number(g, td) <= decompose_k_bound(4, 2, 3));

    // k = 1 agrees with the single-pattern decomposer on the outcome kind
    Graph c40 = cycle_graph(40);
    CHECK(std::holds_alternative<TreeDecomposition>(decompose_k(c40, 3, 1, 1)));
}

TEST_CASE("map_certificate") {
    Graph host = disjoint_union(path_graph(2), star_graph(3));
    Graph star = star_graph(3);
    Certificate local = certify(star, PatternKind::Star, {3}, {0, 1, 2, 3});
    Certificate mapped = map_certificate(local, host, {2, 3, 4, 5});
    CHECK(mapped.embedding == std::vector<int>{2, 3, 4, 5});
    CHECK(mapped.validated);
    CHECK_THROWS_AS(map_certificate(local, host, {0, 1, 2, 3}), InternalError);
}
