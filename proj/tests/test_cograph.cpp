#include <doctest.h>

#include "tinkit/cograph.hpp"
#include "tinkit/errors.hpp"
#include "tinkit/generators.hpp"
#include "tinkit/oracle.hpp"
#include "verify/canonical.hpp"

using namespace tinkit;

namespace {

int tin_of(const Graph& g) { return std::get<int>(tin_cograph(g)); }

bool p4_free(const Graph& g) {
    SearchBudget budget;
    return !find_induced_embedding(g, path_graph(4), budget);
}

}  // namespace

TEST_CASE("small cographs") {
    CHECK(tin_of(Graph(0)) == 0);
    CHECK(tin_of(complete_graph(1)) == 1);
    CHECK(tin_of(empty_graph(5)) == 1);
    CHECK(tin_of(complete_graph(5)) == 1);
    CHECK(tin_of(cycle_graph(4)) == 2);
    CHECK(tin_of(complete_bipartite(3, 2)) == 2);
    CHECK(tin_of(join(complete_bipartite(3, 3), complete_graph(1))) == 3);

    auto ct = std::get<Cotree>(build_cotree(complete_bipartite(3, 2)));
    CHECK(ct.nodes[ct.root].kind == CoKind::Join);
    CHECK(ct.nodes[ct.root].children.size() == 2);
    CHECK(alpha_cotree(ct) == 3);
    CHECK(ibn_cotree(ct) == 2);
    CHECK(ct.vertices(ct.root).size() == 5);
}

TEST_CASE("P4 yields a certificate") {
    for (const Graph& g : {path_graph(4), cycle_graph(5), path_graph(7)}) {
        auto r = build_cotree(g);
        REQUIRE(std::holds_alternative<Certificate>(r));
        Certificate c = std::get<Certificate>(r);
        CHECK(c.kind == PatternKind::Path);
        CHECK(c.embedding.size() == 4);
        CHECK(revalidate(g, c));
        CHECK(std::holds_alternative<Certificate>(tin_cograph(g)));
    }
    CHECK_THROWS_AS(decompose_cograph(path_graph(4)), InputError);
}

TEST_CASE("catalog agrees with the oracle") {
    for (int n = 1; n <= 7; ++n)
        for (const Graph& g : verify::all_graphs(n)) {
            auto r = build_cotree(g);
            CHECK(std::holds_alternative<Cotree>(r) == p4_free(g));
            if (auto* ct = std::get_if<Cotree>(&r)) {
                CHECK(cotree_graph(*ct) == g);
                CHECK(alpha_cotree(*ct) == alpha_exact(g));
                CHECK(ibn_cotree(*ct) == ibn_exact(g));
                int tin = tin_exact(g);
                CHECK(tin_of(g) == tin);
                auto td = decompose_cotree(*ct);
                CHECK(validate(g, td).ok);
                CHECK(independence_number(g, td) == tin);
            }
        }
}

TEST_CASE("random cographs") {
    Rng rng(29);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 2 + trial % 14;
        Cotree ct = random_cotree(n, rng);
        Graph g = cotree_graph(ct);
        CHECK(g.order() == n);
        CHECK(p4_free(g));
        int tin = tin_exact(g);
        CHECK(tin_of(g) == tin);
        auto td = decompose_cograph(g);
        CHECK(independence_number(g, td) == tin);
        // a rebuilt cotree denotes the same graph
        CHECK(cotree_graph(std::get<Cotree>(build_cotree(g))) == g);
    }
}

TEST_CASE("large cograph") {
    Rng rng(31);
    Graph g = random_cograph(2000, rng);
    auto td = decompose_cograph(g);
    CHECK(validate(g, td).ok);
    auto j = cotree_to_json(std::get<Cotree>(build_cotree(g)));
    CHECK(j.contains("op"));
    CHECK(j["alpha"] == alpha_exact(g));
}
