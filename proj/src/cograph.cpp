#include "tinkit/cograph.hpp"

#include <algorithm>
#include <numeric>

#include "tinkit/errors.hpp"

namespace tinkit {

std::vector<int> Cotree::vertices(int node) const {
    std::vector<int> out, stack{node};
    while (!stack.empty()) {
        int t = stack.back();
        stack.pop_back();
        if (nodes[t].kind == CoKind::Leaf) out.push_back(nodes[t].vertex);
        for (auto it = nodes[t].children.rbegin(); it != nodes[t].children.rend(); ++it) stack.push_back(*it);
    }
    return out;
}

namespace {

void summarize(Cotree& ct, int t) {
    auto& node = ct.nodes[t];
    if (node.kind == CoKind::Leaf) {
        node.size = 1;
        node.alpha = 1;
        node.ibn = 0;
        return;
    }
    int size = 0, sum = 0, top = 0, second = 0, ibn = 0;
    for (int c : node.children) {
        const auto& ch = ct.nodes[c];
        size += ch.size;
        sum += ch.alpha;
        ibn = std::max(ibn, ch.ibn);
        if (ch.alpha > top) {
            second = top;
            top = ch.alpha;
        } else {
            second = std::max(second, ch.alpha);
        }
    }
    node.size = size;
    if (node.kind == CoKind::Union) {
        node.alpha = sum;
        node.ibn = ibn;
    } else {
        node.alpha = top;
        node.ibn = std::max(ibn, second);
    }
}

class CotreeBuilder {
public:
    explicit CotreeBuilder(const Graph& g) : g_(g) {}

    CotreeOrCertificate run() {
        Cotree ct;
        ct.order = g_.order();
        if (g_.order() == 0) return ct;
        std::vector<int> all(static_cast<std::size_t>(g_.order()));
        std::iota(all.begin(), all.end(), 0);
        ct_ = &ct;
        int root = build(all);
        if (cert_) return *cert_;
        ct.root = root;
        return ct;
    }

private:
    /// Classes of `s` under adjacency (complement = false) or
    /// non-adjacency (complement = true).
    std::vector<std::vector<int>> split(const std::vector<int>& s, bool complement) {
        VertexSet remaining = VertexSet::of(static_cast<std::size_t>(g_.order()), s);
        std::vector<std::vector<int>> out;
        for (int start = remaining.first(); start >= 0; start = remaining.first()) {
            remaining.reset(static_cast<std::size_t>(start));
            std::vector<int> cls{start};
            for (std::size_t i = 0; i < cls.size(); ++i) {
                VertexSet reach = complement ? remaining - g_.neighbors(cls[i]) : remaining & g_.neighbors(cls[i]);
                remaining.subtract(reach);
                reach.for_each([&](int v) { cls.push_back(v); });
            }
            std::sort(cls.begin(), cls.end());
            out.push_back(std::move(cls));
        }
        return out;
    }

    // Connected and co-connected: some edge bc has private neighbours a of b
    // and d of c with a, d non-adjacent.
    Certificate find_p4(const std::vector<int>& s) {
        VertexSet in = VertexSet::of(static_cast<std::size_t>(g_.order()), s);
        for (int b : s) {
            VertexSet nb = g_.neighbors(b) & in;
            for (int c = nb.first(); c >= 0; c = nb.next(c)) {
                VertexSet as = nb - g_.closed_neighbors(c);
                VertexSet ds = (g_.neighbors(c) & in) - g_.closed_neighbors(b);
                for (int a = as.first(); a >= 0; a = as.next(a)) {
                    int d = (ds - g_.neighbors(a)).first();
                    if (d >= 0) return certify(g_, PatternKind::Path, {4}, {a, b, c, d});
                }
            }
        }
        throw InternalError("connected co-connected vertex set without an induced P4");
    }

    int build(const std::vector<int>& s) {
        if (cert_) return -1;
        int t = static_cast<int>(ct_->nodes.size());
        ct_->nodes.emplace_back();
        if (s.size() == 1) {
            ct_->nodes[t].vertex = s[0];
            return t;
        }
        auto parts = split(s, false);
        CoKind kind = CoKind::Union;
        if (parts.size() == 1) {
            parts = split(s, true);
            kind = CoKind::Join;
            if (parts.size() == 1) {
                cert_ = find_p4(s);
                return -1;
            }
        }
        std::vector<int> children;
        for (const auto& part : parts) {
            int c = build(part);
            if (cert_) return -1;
            children.push_back(c);
        }
        ct_->nodes[t].kind = kind;
        ct_->nodes[t].children = std::move(children);
        summarize(*ct_, t);
        return t;
    }

    const Graph& g_;
    Cotree* ct_ = nullptr;
    std::optional<Certificate> cert_;
};

}  // namespace

CotreeOrCertificate build_cotree(const Graph& g) { return CotreeBuilder(g).run(); }

Graph cotree_graph(const Cotree& ct) {
    GraphBuilder b(ct.order);
    for (int t = 0; t < static_cast<int>(ct.nodes.size()); ++t) {
        const auto& node = ct.nodes[t];
        if (node.kind != CoKind::Join) continue;
        std::vector<std::vector<int>> sides;
        for (int c : node.children) sides.push_back(ct.vertices(c));
        for (std::size_t i = 0; i < sides.size(); ++i)
            for (std::size_t j = i + 1; j < sides.size(); ++j)
                for (int u : sides[i])
                    for (int v : sides[j]) b.add_edge(u, v);
    }
    return std::move(b).build();
}

int alpha_cotree(const Cotree& ct) { return ct.root < 0 ? 0 : ct.nodes[ct.root].alpha; }
int ibn_cotree(const Cotree& ct) { return ct.root < 0 ? 0 : ct.nodes[ct.root].ibn; }

std::variant<int, Certificate> tin_cograph(const Graph& g) {
    auto res = build_cotree(g);
    if (auto* cert = std::get_if<Certificate>(&res)) return *cert;
    const auto& ct = std::get<Cotree>(res);
    if (ct.root < 0) return 0;
    return std::max(ibn_cotree(ct), 1);
}

namespace {

TreeDecomposition decompose_node(const Cotree& ct, int t) {
    const auto& node = ct.nodes[t];
    if (node.kind == CoKind::Leaf) {
        TreeDecomposition td;
        td.graph_order = ct.order;
        td.add_node({node.vertex});
        return td;
    }
    if (node.kind == CoKind::Union) {
        std::vector<TreeDecomposition> parts;
        for (int c : node.children) parts.push_back(decompose_node(ct, c));
        return merge_at_hub(parts, VertexSet(static_cast<std::size_t>(ct.order)), false);
    }
    int best = node.children.front();
    for (int c : node.children) {
        const auto& a = ct.nodes[c];
        const auto& b = ct.nodes[best];
        if (a.alpha > b.alpha || (a.alpha == b.alpha && a.size > b.size)) best = c;
    }
    VertexSet others(static_cast<std::size_t>(ct.order));
    for (int c : node.children)
        if (c != best)
            for (int v : ct.vertices(c)) others.set(static_cast<std::size_t>(v));
    return add_to_all_bags(decompose_node(ct, best), others);
}

}  // namespace

TreeDecomposition decompose_cotree(const Cotree& ct) {
    if (ct.root < 0) {
        TreeDecomposition td;
        td.add_node({});
        return td;
    }
    return decompose_node(ct, ct.root);
}

TreeDecomposition decompose_cograph(const Graph& g) {
    auto res = build_cotree(g);
    if (auto* cert = std::get_if<Certificate>(&res))
        throw InputError("not a cograph: induced P4 " + cert->describe());
    TreeDecomposition td = decompose_cotree(std::get<Cotree>(res));
    auto check = validate(g, td);
    if (!check.ok)
        throw InternalError(std::string("cograph decomposition invalid (") + axiom_name(check.axiom) +
                            "): " + check.witness);
    return td;
}

Cotree random_cotree(int n, Rng& rng, int max_children) {
    if (n < 0) throw InputError("negative cograph order");
    if (max_children < 2) throw InputError("cotree nodes need at least two children");
    Cotree ct;
    ct.order = n;
    if (n == 0) return ct;
    std::vector<int> ids(static_cast<std::size_t>(n));
    std::iota(ids.begin(), ids.end(), 0);
    std::shuffle(ids.begin(), ids.end(), rng);
    int next_leaf = 0;
    // Iterative to keep deep trees off the call stack: (node, leaves, label).
    struct Task {
        int node, leaves;
        CoKind label;
    };
    std::vector<Task> stack;
    std::vector<int> post;
    ct.nodes.emplace_back();
    ct.root = 0;
    stack.push_back({0, n, std::bernoulli_distribution(0.5)(rng) ? CoKind::Union : CoKind::Join});
    while (!stack.empty()) {
        Task task = stack.back();
        stack.pop_back();
        post.push_back(task.node);
        if (task.leaves == 1) {
            ct.nodes[task.node].vertex = ids[next_leaf++];
            continue;
        }
        int k = std::uniform_int_distribution<int>(2, std::min(task.leaves, max_children))(rng);
        // random composition of `leaves` into k positive parts
        std::vector<int> cuts;
        std::uniform_int_distribution<int> pick(1, task.leaves - 1);
        while (static_cast<int>(cuts.size()) < k - 1) {
            int c = pick(rng);
            if (std::find(cuts.begin(), cuts.end(), c) == cuts.end()) cuts.push_back(c);
        }
        std::sort(cuts.begin(), cuts.end());
        cuts.push_back(task.leaves);
        ct.nodes[task.node].kind = task.label;
        CoKind child_label = task.label == CoKind::Union ? CoKind::Join : CoKind::Union;
        int prev = 0;
        for (int c : cuts) {
            int id = static_cast<int>(ct.nodes.size());
            ct.nodes.emplace_back();
            ct.nodes[task.node].children.push_back(id);
            stack.push_back({id, c - prev, child_label});
            prev = c;
        }
    }
    for (auto it = post.rbegin(); it != post.rend(); ++it) summarize(ct, *it);
    return ct;
}

Graph random_cograph(int n, Rng& rng) { return cotree_graph(random_cotree(n, rng)); }

nlohmann::json cotree_to_json(const Cotree& ct) {
    using nlohmann::json;
    if (ct.root < 0) return json(nullptr);
    auto rec = [&](auto&& self, int t) -> json {
        const auto& node = ct.nodes[t];
        if (node.kind == CoKind::Leaf) return json{{"leaf", node.vertex}};
        json children = json::array();
        for (int c : node.children) children.push_back(self(self, c));
        return json{{"op", node.kind == CoKind::Union ? "union" : "join"},
                    {"alpha", node.alpha},
                    {"ibn", node.ibn},
                    {"children", children}};
    };
    return rec(rec, ct.root);
}

}  // namespace tinkit
