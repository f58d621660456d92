#include "tinkit/starpath.hpp"

#include <string>

#include "tinkit/oracle.hpp"

namespace tinkit {

int choose_entry(const Graph& g, const VertexSet& component, const VertexSet& a) {
    for (int x = a.first(); x >= 0; x = a.next(x))
        if (g.neighbors(x).intersects(component)) return x;
    throw InternalError("no entry vertex into a component of the remainder");
}

namespace {

class Peeler {
public:
    Peeler(const Graph& g, int d, int s, SearchBudget& budget) : g_(g), d_(d), s_(s), budget_(budget) {
        td_.graph_order = g.order();
    }

    DecompositionOrCertificate run() {
        if (g_.order() == 0) {
            td_.add_node({});
            return td_;
        }
        int previous_root = -1;
        for (const auto& comp : components(g_)) {
            int root_node = td_.node_count();
            if (auto cert = peel(comp, comp.first(), 1, -1, g_.empty_set())) return *cert;
            if (previous_root >= 0) td_.add_edge(previous_root, root_node);
            previous_root = root_node;
        }
        if (auto cert = check_bound()) return *cert;
        return td_;
    }

private:
    std::optional<Certificate> peel(const VertexSet& w, int v, int depth, int parent, const VertexSet& above) {
        budget_.tick();
        VertexSet slice = g_.closed_neighbors(v) & w;
        VertexSet bag = above | slice;
        int node = td_.add_node(bag.to_vector());
        if (parent >= 0) td_.add_edge(parent, node);
        parent_of_.push_back(parent);
        vertex_of_.push_back(v);
        slice_of_.push_back(slice);
        chain_.push_back(v);

        VertexSet entries = slice;
        entries.reset(static_cast<std::size_t>(v));
        for (const auto& h : components(g_, w - slice)) {
            int a = choose_entry(g_, h, entries);
            if (depth == s_ - 2) {
                std::vector<int> path = chain_;
                path.push_back(a);
                path.push_back((g_.neighbors(a) & h).first());
                return certify(g_, PatternKind::Path, {s_}, std::move(path));
            }
            VertexSet child = h;
            child.set(static_cast<std::size_t>(a));
            if (auto cert = peel(child, a, depth + 1, node, bag)) return cert;
        }
        chain_.pop_back();
        return std::nullopt;
    }

    // Bags are unions of at most s-2 slices N[v_j] ∩ W_j. A bag over the
    // bound therefore has a slice whose open part holds d independent
    // neighbours of v_j.
    std::optional<Certificate> check_bound() {
        const long long bound = static_cast<long long>(d_ - 1) * (s_ - 2);
        for (int t = 0; t < td_.node_count(); ++t) {
            auto mis = max_independent_set(g_, td_.bag_set(t), budget_);
            if (static_cast<long long>(mis.size()) <= bound) continue;
            for (int j = t; j >= 0; j = parent_of_[j]) {
                VertexSet open = slice_of_[j];
                open.reset(static_cast<std::size_t>(vertex_of_[j]));
                auto leaves = max_independent_set(g_, open, budget_);
                if (static_cast<int>(leaves.size()) >= d_) {
                    std::vector<int> emb{vertex_of_[j]};
                    emb.insert(emb.end(), leaves.begin(), leaves.begin() + d_);
                    return certify(g_, PatternKind::Star, {d_}, std::move(emb));
                }
            }
            throw InternalError("bag " + std::to_string(t) + " exceeds the bound without a star in its slices");
        }
        return std::nullopt;
    }

    const Graph& g_;
    int d_, s_;
    SearchBudget& budget_;
    TreeDecomposition td_;
    std::vector<int> parent_of_, vertex_of_, chain_;
    std::vector<VertexSet> slice_of_;
};

}  // namespace

DecompositionOrCertificate starpath_decompose(const Graph& g, int d, int s, const StarPathOptions& options,
                                              SearchBudget& budget) {
    if (d < 2) throw InputError("star-path decomposer needs d >= 2");
    if (s < 3) throw InputError("star-path decomposer needs s >= 3");
    auto result = Peeler(g, d, s, budget).run();
    if (auto* td = std::get_if<TreeDecomposition>(&result)) {
        auto check = validate(g, *td);
        if (!check.ok)
            throw InternalError(std::string("star-path decomposition invalid (") + axiom_name(check.axiom) +
                                "): " + check.witness);
        if (options.strict) {
            if (auto star = find_induced_star(g, d, budget)) return *star;
            if (auto path = find_induced_path_geq(g, s, budget))
                return certify(g, PatternKind::Path, {s}, path->vertices);
        }
    }
    return result;
}

DecompositionOrCertificate starpath_decompose(const Graph& g, int d, int s, const StarPathOptions& options) {
    SearchBudget budget;
    return starpath_decompose(g, d, s, options, budget);
}

}  // namespace tinkit
