#include "tinkit/backbone.hpp"

#include <algorithm>
#include <string>

#include "tinkit/oracle.hpp"

namespace tinkit {

namespace {

long long mul(long long a, long long b) {
    long long out = 0;
    if (__builtin_mul_overflow(a, b, &out)) throw InputError("class constants overflow");
    return out;
}

long long add(long long a, long long b) {
    long long out = 0;
    if (__builtin_add_overflow(a, b, &out)) throw InputError("class constants overflow");
    return out;
}

VertexSet set_of(const Graph& g, const std::vector<int>& vs) {
    return VertexSet::of(static_cast<std::size_t>(g.order()), vs);
}

int as_int(long long x, const char* what) {
    if (x > 1'000'000'000LL) throw InputError(std::string(what) + " is too large");
    return static_cast<int>(x);
}

/// Vertices of a segment starting at an end adjacent to `anchor`, stopping
/// before the next neighbour of `anchor`.
std::vector<int> walk_from_neighbor(const Graph& g, const Path& seg, int anchor) {
    std::vector<int> order = seg.vertices;
    if (order.empty()) return order;
    if (!g.adjacent(anchor, order.front())) std::reverse(order.begin(), order.end());
    if (!g.adjacent(anchor, order.front())) return {};
    std::vector<int> out{order.front()};
    for (std::size_t i = 1; i < order.size() && !g.adjacent(anchor, order[i]); ++i) out.push_back(order[i]);
    return out;
}

std::vector<int> take(const std::vector<int>& xs, std::size_t count) {
    if (xs.size() < count) throw InternalError("construction ran out of vertices");
    return {xs.begin(), xs.begin() + static_cast<long>(count)};
}

std::vector<int> concat(std::initializer_list<std::vector<int>> parts) {
    std::vector<int> out;
    for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
}

/// Exact search for K_{1,d}, S_p, T_p inside `within`, smallest pattern first.
std::optional<Certificate> search_class_certificate(const Graph& g, int d, int p, const VertexSet& within,
                                                    SearchBudget& budget) {
    if (auto star = find_induced_star(g, d, within, budget)) return star;
    for (auto kind : {PatternKind::Sp, PatternKind::Tp}) {
        Graph pattern = pattern_graph(kind, {p});
        if (auto emb = find_induced_embedding(g, pattern, within, budget)) return certify(g, kind, {p}, *emb);
    }
    return std::nullopt;
}

Certificate certify_or_search(const Graph& g, PatternKind kind, int p, std::vector<int> emb, int d,
                              const VertexSet& region, SearchBudget& budget) {
    try {
        return certify(g, kind, {p}, std::move(emb));
    } catch (const InternalError&) {
    }
    if (auto c = search_class_certificate(g, d, p, region, budget)) return *c;
    if (auto c = search_class_certificate(g, d, p, g.all_vertices(), budget)) return *c;
    throw InternalError("no S_p, T_p or K_{1,d} where the construction promises one");
}

}  // namespace

ClassParams ClassParams::make(int d, int p) {
    if (d < 2) throw InputError("backbone decomposer needs d >= 2");
    if (p < 1) throw InputError("backbone decomposer needs p >= 1");
    ClassParams cp;
    cp.d = d;
    cp.p = p;
    cp.q = mul(mul(2, d), add(p, 1));
    cp.r = mul(mul(2, d - 1), cp.q - 2);
    cp.h = mul(mul(2, d), cp.q);
    cp.first_path = mul(d, p);
    cp.spine_path = mul(mul(6, d), cp.q);
    cp.component_path = mul(d, add(cp.r, p - 1));
    long long dm = d - 1;
    cp.bound = mul(mul(20, mul(mul(dm, dm), mul(dm, dm))), add(p, 1));
    return cp;
}

long long decompose_k_bound(int d, int p, int k) {
    if (k < 1) throw InputError("k must be >= 1");
    auto cp = ClassParams::make(d, p);
    return add(mul(mul(mul(6, d - 1), k - 1), add(p, 1)), cp.bound);
}

Certificate map_certificate(Certificate c, const Graph& host, const std::vector<int>& original_of) {
    for (int& x : c.embedding) x = original_of[x];
    if (!revalidate(host, c)) throw InternalError("certificate does not survive the move to the host graph");
    return c;
}

Certificate certify_from_long_cycle(const Graph& g, const Path& p, const std::vector<int>& cycle, int d, int pp) {
    SearchBudget budget;
    const int ell = static_cast<int>(cycle.size());
    if (!is_induced_path(g, p.vertices)) throw InputError("P is not an induced path");
    if (!is_induced_cycle(g, cycle)) throw InputError("C is not an induced cycle");
    if (static_cast<long long>(p.vertices.size()) < mul(d, pp)) throw InputError("P has fewer than dp vertices");
    if (static_cast<long long>(ell) < mul(d, 2LL * pp + 2)) throw InputError("C is shorter than d(2p+2)");
    const VertexSet pset = set_of(g, p.vertices);
    const VertexSet cset = set_of(g, cycle);
    if (closed_neighborhood(g, pset).intersects(cset)) throw InputError("C meets N[V(P)]");
    auto q = shortest_xy_path(g, pset, cset);
    if (!q) throw InputError("P and C lie in different components");
    const auto& z = q->vertices;
    const int r = static_cast<int>(z.size()) - 1;

    auto segment = long_segment(g, p, z[1], pp, d);
    if (auto* star = std::get_if<Certificate>(&segment)) return *star;
    const Path& seg = std::get<Path>(segment);
    const std::vector<int> into_p = walk_from_neighbor(g, seg, z[1]);

    VertexSet region = cset | set_of(g, seg.vertices) | set_of(g, z);
    auto at = [&](int i) { return cycle[static_cast<std::size_t>(((i % ell) + ell) % ell)]; };
    std::vector<int> cpos;
    for (int i = 0; i < ell; ++i)
        if (g.adjacent(z[r - 1], cycle[i])) cpos.push_back(i);

    // z_{r-1}, ..., z_from followed by the walk into P'.
    auto tail = [&](int from) {
        std::vector<int> out;
        for (int i = from; i >= 1; --i) out.push_back(z[i]);
        out.insert(out.end(), into_p.begin(), into_p.end());
        return out;
    };

    if (cpos.size() == 1) {
        int j = static_cast<int>(std::find(cycle.begin(), cycle.end(), z[r]) - cycle.begin());
        std::vector<int> left, right;
        for (int t = 1; t <= pp; ++t) {
            left.push_back(at(j - t));
            right.push_back(at(j + t));
        }
        std::vector<int> emb;
        try {
            emb = concat({{z[r]}, left, right, take(tail(r - 1), static_cast<std::size_t>(pp))});
        } catch (const InternalError&) {
        }
        return certify_or_search(g, PatternKind::Sp, pp, emb, d, region, budget);
    }

    const int block = 2 * pp + 2;
    std::vector<char> hit(static_cast<std::size_t>(ell), 0);
    for (int x : cpos) hit[x] = 1;
    std::vector<int> leaves;
    int free_block = -1;
    for (int i = 1; i <= d && free_block < 0; ++i) {
        int found = -1;
        for (int x = (i - 1) * block + 1; x <= i * block - 1 && found < 0; ++x)
            if (hit[((x % ell) + ell) % ell]) found = ((x % ell) + ell) % ell;
        if (found < 0) free_block = i;
        else leaves.push_back(cycle[found]);
    }
    if (free_block < 0) return certify(g, PatternKind::Star, {d}, concat({{z[r - 1]}, leaves}));

    // The segment of C around the free block: from the last neighbour
    // before it to the first neighbour after it.
    int lo = (free_block - 1) * block + 1, hi = free_block * block - 1;
    int a = lo - 1;
    while (!hit[((a % ell) + ell) % ell]) --a;
    int b = hi + 1;
    while (!hit[((b % ell) + ell) % ell]) ++b;
    const int s = b - a;
    std::vector<int> seg_c;
    for (int t = 0; t <= s; ++t) seg_c.push_back(at(a + t));
    std::vector<int> start, end;
    for (int t = 0; t < pp && t <= s; ++t) {
        start.push_back(seg_c[t]);
        end.push_back(seg_c[s - t]);
    }
    std::vector<int> emb;
    if (s == ell - 1) {
        try {
            emb = concat({start, end, take(tail(r - 1), static_cast<std::size_t>(pp))});
        } catch (const InternalError&) {
        }
        return certify_or_search(g, PatternKind::Tp, pp, emb, d, region, budget);
    }
    try {
        emb = concat({{z[r - 1]}, start, end, take(tail(r - 2), static_cast<std::size_t>(pp))});
    } catch (const InternalError&) {
    }
    return certify_or_search(g, PatternKind::Sp, pp, emb, d, region, budget);
}

OrCertificate<BackboneStructure> build_backbone(const Graph& g, const Path& spine, int h) {
    const auto& sv = spine.vertices;
    const int ell = static_cast<int>(sv.size());
    if (h < 1 || ell < h) throw InputError("backbone needs a spine on at least h >= 1 vertices");
    if (!is_induced_path(g, sv)) throw InputError("backbone spine is not an induced path");
    const VertexSet sset = set_of(g, sv);
    const VertexSet np = closed_neighborhood(g, sset);
    const VertexSet outer = np - sset;

    std::vector<std::vector<int>> positions(static_cast<std::size_t>(g.order()));
    for (int i = 0; i < ell; ++i) g.neighbors(sv[i]).for_each([&](int u) { positions[u].push_back(i); });

    auto cycle_cert = [&](std::vector<int> cyc) {
        int len = static_cast<int>(cyc.size());
        return certify(g, PatternKind::Cycle, {len}, std::move(cyc));
    };

    // A window of h spine vertices strictly between consecutive neighbours
    // of u would break u's trace.
    for (int u = outer.first(); u >= 0; u = outer.next(u)) {
        const auto& pu = positions[u];
        for (std::size_t i = 0; i + 1 < pu.size(); ++i) {
            if (pu[i + 1] - pu[i] - 1 >= h) {
                std::vector<int> cyc{u};
                for (int x = pu[i]; x <= pu[i + 1]; ++x) cyc.push_back(sv[x]);
                return cycle_cert(std::move(cyc));
            }
        }
    }
    // Adjacent u, w outside the spine share a bag iff some neighbour
    // positions are less than h apart.
    for (int u = outer.first(); u >= 0; u = outer.next(u)) {
        VertexSet later = g.neighbors(u) & outer;
        for (int w = later.next(u); w >= 0; w = later.next(w)) {
            const auto& pu = positions[u];
            const auto& pw = positions[w];
            std::size_t i = 0, j = 0;
            int best_gap = -1, best_a = -1, best_b = -1;
            bool a_is_u = true;
            bool shared = false;
            while (i < pu.size() && j < pw.size()) {
                if (pu[i] == pw[j]) {
                    shared = true;
                    break;
                }
                int gap = std::abs(pu[i] - pw[j]);
                if (best_gap < 0 || gap < best_gap) {
                    best_gap = gap;
                    best_a = std::min(pu[i], pw[j]);
                    best_b = std::max(pu[i], pw[j]);
                    a_is_u = pu[i] < pw[j];
                }
                if (pu[i] < pw[j]) ++i;
                else ++j;
            }
            if (shared || best_gap < h) continue;
            // closest cross pair: nothing of either neighbourhood lies between
            std::vector<int> cyc{a_is_u ? u : w};
            for (int x = best_a; x <= best_b; ++x) cyc.push_back(sv[x]);
            cyc.push_back(a_is_u ? w : u);
            return cycle_cert(std::move(cyc));
        }
    }

    BackboneStructure bb;
    bb.spine = spine;
    bb.h = h;
    bb.td.graph_order = g.order();
    const int n = ell - h + 1;
    for (int i = 0; i < n; ++i) {
        std::vector<int> window(sv.begin() + i, sv.begin() + i + h);
        bb.td.add_node(closed_neighborhood(g, set_of(g, window)).to_vector());
        if (i > 0) bb.td.add_edge(i - 1, i);
    }
    auto sub = induced_subgraph(g, np);
    std::vector<int> local_of(static_cast<std::size_t>(g.order()), -1);
    for (int i = 0; i < static_cast<int>(sub.original_of.size()); ++i) local_of[sub.original_of[i]] = i;
    TreeDecomposition local = map_vertices(bb.td, local_of, sub.graph.order());
    auto check = validate(sub.graph, local);
    if (!check.ok)
        throw InternalError(std::string("backbone structure invalid (") + axiom_name(check.axiom) + "): " + check.witness);
    return bb;
}

OrCertificate<int> attach_index(const Graph& g, const BackboneStructure& bb, const VertexSet& h, const ClassParams& cp) {
    VertexSet nh = open_neighborhood(g, h);
    for (int i = 0; i < bb.td.node_count(); ++i)
        if (nh.is_subset_of(bb.td.bag_set(i))) return i;
    auto res = component_attachment_interval(g, bb.spine, h, nh.first(), as_int(cp.q, "q"), cp.d);
    if (auto* cert = std::get_if<Certificate>(&res)) return *cert;
    throw InternalError("component attaches to no backbone bag although its interval is short");
}

OrCertificate<Path> improve_or_certify(const Graph& g, const Path& spine, const Path& f, const ClassParams& cp) {
    SearchBudget budget;
    const auto& sv = spine.vertices;
    const int m = static_cast<int>(sv.size());
    const int p = cp.p, d = cp.d;
    const int rp = as_int(cp.r + p, "r+p");
    const VertexSet sset = set_of(g, sv);
    auto q = shortest_xy_path(g, sset, set_of(g, f.vertices));
    if (!q) throw InputError("F is not connected to the spine");
    const auto& w = q->vertices;
    const int ell = static_cast<int>(w.size()) - 1;
    if (ell < 2) throw InputError("F meets N[V(spine)]");

    // J: w_1 ... w_{ell-1}, then into a long segment of F.
    std::vector<int> seq(w.begin() + 1, w.end() - 1);
    if (static_cast<int>(seq.size()) < rp) {
        auto seg = long_segment(g, f, w[ell - 1], rp - 1, d);
        if (auto* star = std::get_if<Certificate>(&seg)) return *star;
        auto walk = walk_from_neighbor(g, std::get<Path>(seg), w[ell - 1]);
        seq.insert(seq.end(), walk.begin(), walk.end());
    }
    const std::vector<int> j = take(seq, static_cast<std::size_t>(rp));

    auto iv = path_interval(g, spine, w[1], as_int(cp.q, "q"), d);
    if (auto* cert = std::get_if<Certificate>(&iv)) return *cert;
    const int u = std::get<PathInterval>(iv).first;
    const int z = std::get<PathInterval>(iv).last;
    auto npos = neighbor_positions(g, spine, w[1]);
    bool middle = std::any_of(npos.begin(), npos.end(), [&](int x) { return x >= rp && x <= m - rp - 1; });

    if (middle) {
        VertexSet region = set_of(g, j);
        for (int x = std::max(0, u - p); x <= std::min(m - 1, z + p); ++x) region.set(static_cast<std::size_t>(sv[x]));
        std::vector<int> emb;
        PatternKind kind = PatternKind::Sp;
        if (u - p >= 0 && z + p <= m - 1) {
            std::vector<int> left, right;
            if (u == z) {
                for (int t = 1; t <= p; ++t) {
                    left.push_back(sv[u - t]);
                    right.push_back(sv[z + t]);
                }
                emb = concat({{sv[u]}, left, right, take(j, static_cast<std::size_t>(p))});
            } else {
                for (int t = 0; t < p; ++t) {
                    left.push_back(sv[u - t]);
                    right.push_back(sv[z + t]);
                }
                if (z == u + 1) {
                    kind = PatternKind::Tp;
                    emb = concat({left, right, take(j, static_cast<std::size_t>(p))});
                } else {
                    std::vector<int> rest(j.begin() + 1, j.end());
                    emb = concat({{j[0]}, left, right, take(rest, static_cast<std::size_t>(p))});
                }
            }
        }
        return certify_or_search(g, kind, p, emb, d, region, budget);
    }

    std::vector<int> longer;
    if (u <= rp - 1) {
        longer.assign(j.rbegin(), j.rend());
        longer.insert(longer.end(), sv.begin() + z, sv.end());
    } else {
        longer.assign(sv.begin(), sv.begin() + u + 1);
        longer.insert(longer.end(), j.begin(), j.end());
    }
    if (static_cast<int>(longer.size()) <= m || !is_induced_path(g, longer))
        throw InternalError("spine extension is not a longer induced path");
    return Path{longer, true};
}

namespace {

std::vector<int> extend_greedily(const Graph& g, std::vector<int> path) {
    for (int round = 0; round < 2; ++round) {
        VertexSet earlier = g.empty_set();
        for (std::size_t i = 0; i + 1 < path.size(); ++i) earlier |= g.closed_neighbors(path[i]);
        while (true) {
            VertexSet cand = g.neighbors(path.back()) - earlier;
            cand.reset(static_cast<std::size_t>(path.back()));
            for (int x : path) cand.reset(static_cast<std::size_t>(x));
            int x = cand.first();
            if (x < 0) break;
            earlier |= g.closed_neighbors(path.back());
            path.push_back(x);
        }
        std::reverse(path.begin(), path.end());
    }
    return path;
}

class BackboneRun {
public:
    BackboneRun(const ClassParams& cp, SearchBudget& budget) : cp_(cp), budget_(budget) {}

    /// Connected input.
    DecompositionOrCertificate component(const Graph& g0) {
        const int d = cp_.d;
        if (d == 2) {
            auto res = starpath_decompose(g0, 2, 3, {}, budget_);
            if (auto* cert = std::get_if<Certificate>(&res); cert && cert->kind == PatternKind::Path) {
                const auto& e = cert->embedding;
                return certify(g0, PatternKind::Star, {2}, {e[1], e[0], e[2]});
            }
            return res;
        }
        auto first = starpath_decompose(g0, d, as_int(cp_.first_path, "dp"), {}, budget_);
        auto* cert0 = std::get_if<Certificate>(&first);
        if (!cert0 || cert0->kind != PatternKind::Path) return first;
        const Path p0{cert0->embedding, true};
        const VertexSet x0 = closed_neighborhood(g0, set_of(g0, p0.vertices));

        std::vector<TreeDecomposition> parts;
        for (const auto& dset : components(g0, g0.all_vertices() - x0)) {
            auto sub = induced_subgraph(g0, dset);
            auto res = far_component(sub.graph);
            if (auto* cert = std::get_if<Certificate>(&res)) {
                Certificate mapped = map_certificate(*cert, g0, sub.original_of);
                if (mapped.kind == PatternKind::Cycle)
                    return certify_from_long_cycle(g0, p0, mapped.embedding, d, cp_.p);
                return mapped;
            }
            parts.push_back(map_vertices(std::get<TreeDecomposition>(res), sub.original_of, g0.order()));
        }
        return merge_at_hub(parts, x0, true);
    }

private:
    /// A component D of G_0 - N[P0]; certificates may be long cycles.
    DecompositionOrCertificate far_component(const Graph& g1) {
        const int d = cp_.d;
        auto res = starpath_decompose(g1, d, as_int(cp_.spine_path, "6dq"), {}, budget_);
        auto* cert = std::get_if<Certificate>(&res);
        if (!cert || cert->kind != PatternKind::Path) return res;
        Path spine{extend_greedily(g1, cert->embedding), true};

        const int component_path = as_int(cp_.component_path, "d(r+p-1)");
        while (true) {
            bool improved = false;
            VertexSet np = closed_neighborhood(g1, set_of(g1, spine.vertices));
            for (const auto& h : components(g1, g1.all_vertices() - np)) {
                auto f = find_induced_path_geq(g1, component_path, h, budget_);
                if (!f) continue;
                auto step = improve_or_certify(g1, spine, *f, cp_);
                if (auto* c = std::get_if<Certificate>(&step)) return *c;
                spine = std::get<Path>(step);
                improved = true;
                break;
            }
            if (!improved) break;
        }

        auto bb = build_backbone(g1, spine, as_int(cp_.h, "h"));
        if (auto* c = std::get_if<Certificate>(&bb)) return *c;
        const auto& structure = std::get<BackboneStructure>(bb);
        TreeDecomposition td = structure.td;
        VertexSet np = closed_neighborhood(g1, set_of(g1, spine.vertices));
        for (const auto& h : components(g1, g1.all_vertices() - np)) {
            auto idx = attach_index(g1, structure, h, cp_);
            if (auto* c = std::get_if<Certificate>(&idx)) return *c;
            auto sub = induced_subgraph(g1, h);
            auto inner = starpath_decompose(sub.graph, d, component_path, {}, budget_);
            if (auto* c = std::get_if<Certificate>(&inner)) {
                if (c->kind == PatternKind::Path)
                    throw InternalError("peeling found a path the exact search ruled out");
                return map_certificate(*c, g1, sub.original_of);
            }
            auto mapped = map_vertices(std::get<TreeDecomposition>(inner), sub.original_of, g1.order());
            int node = std::get<int>(idx);
            td = attach_subtree(g1, td, node, mapped, td.bag_set(node));
        }
        return td;
    }

    const ClassParams& cp_;
    SearchBudget& budget_;
};

DecompositionOrCertificate finish(const Graph& g, TreeDecomposition td, long long bound, int d, int p, int k,
                                  bool strict, SearchBudget& budget) {
    auto check = validate(g, td);
    if (!check.ok)
        throw InternalError(std::string("backbone decomposition invalid (") + axiom_name(check.axiom) +
                            "): " + check.witness);
    auto search = [&]() -> std::optional<Certificate> {
        if (auto star = find_induced_star(g, d, budget)) return star;
        for (auto kind : {PatternKind::Sp, PatternKind::Tp}) {
            PatternKind multi = kind == PatternKind::Sp ? PatternKind::KSp : PatternKind::KTp;
            Graph pattern = k == 1 ? pattern_graph(kind, {p}) : pattern_graph(multi, {k, p});
            if (auto emb = find_induced_embedding(g, pattern, budget))
                return k == 1 ? certify(g, kind, {p}, *emb) : certify(g, multi, {k, p}, *emb);
        }
        return std::nullopt;
    };
    if (independence_number(g, td) > bound) {
        if (auto c = search()) return *c;
        throw InternalError("decomposition exceeds the bound on a graph inside the class");
    }
    if (strict)
        if (auto c = search()) return *c;
    return td;
}

}  // namespace

DecompositionOrCertificate backbone_decompose(const Graph& g, int d, int p, const BackboneOptions& options,
                                              SearchBudget& budget) {
    const auto cp = ClassParams::make(d, p);
    BackboneRun run(cp, budget);
    std::vector<TreeDecomposition> parts;
    for (const auto& comp : components(g)) {
        auto sub = induced_subgraph(g, comp);
        auto res = run.component(sub.graph);
        if (auto* cert = std::get_if<Certificate>(&res)) return map_certificate(*cert, g, sub.original_of);
        parts.push_back(map_vertices(std::get<TreeDecomposition>(res), sub.original_of, g.order()));
    }
    TreeDecomposition td = parts.size() == 1 ? parts.front() : merge_at_hub(parts, g.empty_set(), false);
    return finish(g, std::move(td), cp.bound, d, p, 1, options.strict, budget);
}

DecompositionOrCertificate backbone_decompose(const Graph& g, int d, int p, const BackboneOptions& options) {
    SearchBudget budget;
    return backbone_decompose(g, d, p, options, budget);
}

DecompositionOrCertificate decompose_k(const Graph& g, int d, int p, int k, const BackboneOptions& options,
                                       SearchBudget& budget) {
    const long long bound = decompose_k_bound(d, p, k);
    if (k == 1) return backbone_decompose(g, d, p, options, budget);
    auto sp = find_induced_embedding(g, pattern_graph(PatternKind::Sp, {p}), budget);
    auto tp = find_induced_embedding(g, pattern_graph(PatternKind::Tp, {p}), budget);
    VertexSet peeled = g.empty_set();
    if (sp) peeled |= closed_neighborhood(g, set_of(g, *sp));
    if (tp) peeled |= closed_neighborhood(g, set_of(g, *tp));
    auto sub = induced_subgraph(g, g.all_vertices() - peeled);
    auto res = decompose_k(sub.graph, d, p, k - 1, {}, budget);
    if (auto* cert = std::get_if<Certificate>(&res)) {
        Certificate c = map_certificate(*cert, g, sub.original_of);
        auto grow = [&](const std::optional<std::vector<int>>& copy, PatternKind one, PatternKind many) {
            int count = c.kind == one ? 1 : c.params[0];
            return certify(g, many, {count + 1, p}, concat({*copy, c.embedding}));
        };
        if ((c.kind == PatternKind::Sp || c.kind == PatternKind::KSp) && sp)
            return grow(sp, PatternKind::Sp, PatternKind::KSp);
        if ((c.kind == PatternKind::Tp || c.kind == PatternKind::KTp) && tp)
            return grow(tp, PatternKind::Tp, PatternKind::KTp);
        return c;
    }
    TreeDecomposition td = add_to_all_bags(map_vertices(std::get<TreeDecomposition>(res), sub.original_of, g.order()),
                                           peeled);
    return finish(g, std::move(td), bound, d, p, k, options.strict, budget);
}

DecompositionOrCertificate decompose_k(const Graph& g, int d, int p, int k, const BackboneOptions& options) {
    SearchBudget budget;
    return decompose_k(g, d, p, k, options, budget);
}

}  // namespace tinkit
