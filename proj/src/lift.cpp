#include "tinkit/lift.hpp"

#include <string>

#include "tinkit/errors.hpp"
#include "tinkit/oracle.hpp"

namespace tinkit {

void check_family(const SubgraphFamily& fam) {
    const int n = fam.host.order();
    for (std::size_t j = 0; j < fam.members.size(); ++j) {
        const auto& m = fam.members[j];
        if (m.empty()) throw InputError("member " + std::to_string(j) + " is empty");
        for (int v : m)
            if (v < 0 || v >= n) throw InputError("member " + std::to_string(j) + " has a vertex out of range");
        if (!is_connected(fam.host, VertexSet::of(static_cast<std::size_t>(n), m)))
            throw InputError("member " + std::to_string(j) + " is not connected in the host");
    }
}

namespace {

/// members_at[v] = indices of members containing host vertex v.
std::vector<std::vector<int>> members_at(const SubgraphFamily& fam) {
    std::vector<std::vector<int>> at(static_cast<std::size_t>(fam.host.order()));
    for (std::size_t j = 0; j < fam.members.size(); ++j)
        for (int v : fam.members[j])
            if (at[v].empty() || at[v].back() != static_cast<int>(j)) at[v].push_back(static_cast<int>(j));
    return at;
}

}  // namespace

Graph intersection_graph(const SubgraphFamily& fam) {
    check_family(fam);
    GraphBuilder b(static_cast<int>(fam.members.size()));
    for (const auto& here : members_at(fam))
        for (std::size_t a = 0; a < here.size(); ++a)
            for (std::size_t c = a + 1; c < here.size(); ++c) b.add_edge(here[a], here[c]);
    return std::move(b).build();
}

TreeDecomposition lift_decomposition(const SubgraphFamily& fam, const TreeDecomposition& host_td, int jobs) {
    auto host_check = validate(fam.host, host_td);
    if (!host_check.ok)
        throw InputError(std::string("host decomposition invalid (") + axiom_name(host_check.axiom) +
                         "): " + host_check.witness);
    Graph ig = intersection_graph(fam);
    auto at = members_at(fam);
    TreeDecomposition td;
    td.graph_order = ig.order();
    for (const auto& bag : host_td.bags) {
        VertexSet lifted = ig.empty_set();
        for (int v : bag)
            for (int j : at[v]) lifted.set(static_cast<std::size_t>(j));
        td.add_node(lifted.to_vector());
    }
    td.tree_edges = host_td.tree_edges;
    auto check = validate(ig, td);
    if (!check.ok)
        throw InternalError(std::string("lifted decomposition invalid (") + axiom_name(check.axiom) +
                            "): " + check.witness);
    int alpha = independence_number(ig, td, jobs);
    if (alpha > width(host_td) + 1)
        throw InternalError("lifted bag has α " + std::to_string(alpha) + " above host width + 1");
    return td;
}

SubgraphFamily edge_family(const Graph& g, const LineGraph& lg) {
    SubgraphFamily fam{g, {}};
    for (auto [u, v] : lg.edge_of) fam.members.push_back({u, v});
    return fam;
}

LineDecomposition line_decomposition(const Graph& g, const std::optional<TreeDecomposition>& host_td, int jobs) {
    LineDecomposition out;
    out.line = line_graph(g);
    TreeDecomposition host = host_td ? *host_td : heuristic_td(g);
    out.host_width = width(host);
    out.td = lift_decomposition(edge_family(g, out.line), host, jobs);
    if (!(intersection_graph(edge_family(g, out.line)) == out.line.graph))
        throw InternalError("edge family does not reproduce the line graph");
    return out;
}

TreeDecomposition gn_chordal_decomposition(const SubdividedClique& gn) {
    const Graph& g = gn.graph;
    TreeDecomposition td;
    td.graph_order = g.order();
    td.add_node(gn.branch_vertices);
    VertexSet branch = VertexSet::of(static_cast<std::size_t>(g.order()), gn.branch_vertices);
    for (int x = 0; x < g.order(); ++x) {
        if (branch.test(static_cast<std::size_t>(x))) continue;
        std::vector<int> bag = (g.neighbors(x) & branch).to_vector();
        bag.push_back(x);
        td.add_edge(0, td.add_node(std::move(bag)));
    }
    return td;
}

TreeDecomposition exact_width_td(const Graph& g, int jobs) {
    auto res = ordering_dp(g, OrderingMeasure::Width, jobs);
    return td_from_ordering(g, res.ordering);
}

}  // namespace tinkit
