#include "tinkit/patterns.hpp"

#include <algorithm>
#include <numeric>
#include <span>

#include "tinkit/generators.hpp"
#include "tinkit/oracle.hpp"

namespace tinkit {

const char* kind_name(PatternKind k) {
    switch (k) {
        case PatternKind::Star: return "star";
        case PatternKind::Path: return "path";
        case PatternKind::Cycle: return "cycle";
        case PatternKind::Sp: return "S_p";
        case PatternKind::Tp: return "T_p";
        case PatternKind::KSp: return "kS_p";
        case PatternKind::KTp: return "kT_p";
        case PatternKind::Generic: return "generic";
    }
    return "?";
}

std::optional<PatternKind> kind_from_name(std::string_view name) {
    for (auto k : {PatternKind::Star, PatternKind::Path, PatternKind::Cycle, PatternKind::Sp, PatternKind::Tp,
                   PatternKind::KSp, PatternKind::KTp, PatternKind::Generic})
        if (name == kind_name(k)) return k;
    return std::nullopt;
}

std::string Certificate::describe() const {
    auto param = [&](std::size_t i) { return i < params.size() ? std::to_string(params[i]) : std::string("?"); };
    switch (kind) {
        case PatternKind::Star: return "K_{1," + param(0) + "}";
        case PatternKind::Path: return "P_" + param(0);
        case PatternKind::Cycle: return "C_" + param(0);
        case PatternKind::Sp: return "S_" + param(0);
        case PatternKind::Tp: return "T_" + param(0);
        case PatternKind::KSp: return param(0) + "S_" + param(1);
        case PatternKind::KTp: return param(0) + "T_" + param(1);
        case PatternKind::Generic: return "graph on " + std::to_string(generic.order()) + " vertices";
    }
    return "?";
}

namespace {

void need_params(const std::vector<int>& params, std::size_t count, const char* what) {
    if (params.size() != count) throw InputError(std::string(what) + " needs " + std::to_string(count) + " parameter(s)");
    for (int x : params)
        if (x < 1) throw InputError(std::string(what) + " parameters must be positive");
}

Graph copies(const Graph& g, int k) {
    Graph out(0);
    for (int i = 0; i < k; ++i) out = disjoint_union(out, g);
    return out;
}

}  // namespace

Graph pattern_graph(PatternKind kind, const std::vector<int>& params) {
    switch (kind) {
        case PatternKind::Star: need_params(params, 1, "star"); return star_graph(params[0]);
        case PatternKind::Path: need_params(params, 1, "path"); return path_graph(params[0]);
        case PatternKind::Cycle: need_params(params, 1, "cycle"); return cycle_graph(params[0]);
        case PatternKind::Sp: need_params(params, 1, "S_p"); return gen_spqr(params[0], params[0], params[0]);
        case PatternKind::Tp: need_params(params, 1, "T_p"); return gen_tpqr(params[0], params[0], params[0]);
        case PatternKind::KSp:
            need_params(params, 2, "kS_p");
            return copies(gen_spqr(params[1], params[1], params[1]), params[0]);
        case PatternKind::KTp:
            need_params(params, 2, "kT_p");
            return copies(gen_tpqr(params[1], params[1], params[1]), params[0]);
        case PatternKind::Generic: throw InputError("generic certificates carry their own pattern");
    }
    throw InputError("unknown pattern kind");
}

Graph pattern_of(const Certificate& c) {
    return c.kind == PatternKind::Generic ? c.generic : pattern_graph(c.kind, c.params);
}

bool embeds_induced(const Graph& host, const Graph& pattern, const std::vector<int>& embedding) {
    const int k = pattern.order();
    if (static_cast<int>(embedding.size()) != k) return false;
    VertexSet used = host.empty_set();
    for (int x : embedding) {
        if (x < 0 || x >= host.order() || used.test(static_cast<std::size_t>(x))) return false;
        used.set(static_cast<std::size_t>(x));
    }
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (pattern.adjacent(i, j) != host.adjacent(embedding[i], embedding[j])) return false;
    return true;
}

bool revalidate(const Graph& host, Certificate& c) {
    try {
        c.validated = embeds_induced(host, pattern_of(c), c.embedding);
    } catch (const InputError&) {
        c.validated = false;
    }
    return c.validated;
}

Certificate certify(const Graph& host, PatternKind kind, std::vector<int> params, std::vector<int> embedding) {
    Certificate c;
    c.kind = kind;
    c.params = std::move(params);
    c.embedding = std::move(embedding);
    if (!revalidate(host, c)) throw InternalError("constructed " + c.describe() + " certificate does not validate");
    return c;
}

namespace {

class EmbeddingSearch {
public:
    EmbeddingSearch(const Graph& g, const Graph& h, const VertexSet& within, SearchBudget& budget)
        : g_(g), h_(h), within_(within), budget_(budget) {}

    std::optional<std::vector<int>> run() {
        const int k = h_.order();
        if (k == 0) return std::vector<int>{};
        if (static_cast<int>(within_.count()) < k) return std::nullopt;
        plan_order();
        domains_.assign(static_cast<std::size_t>(k), g_.empty_set());
        for (int v = 0; v < k; ++v) {
            within_.for_each([&](int x) {
                if (static_cast<int>((g_.neighbors(x) & within_).count()) >= h_.degree(v))
                    domains_[v].set(static_cast<std::size_t>(x));
            });
        }
        image_.assign(static_cast<std::size_t>(k), -1);
        used_ = g_.empty_set();
        if (!place(0)) return std::nullopt;
        return image_;
    }

private:
    // Next pattern vertex: most placed neighbours, then highest degree.
    void plan_order() {
        const int k = h_.order();
        std::vector<int> placed_nbrs(static_cast<std::size_t>(k), 0);
        std::vector<bool> done(static_cast<std::size_t>(k), false);
        for (int step = 0; step < k; ++step) {
            int best = -1;
            for (int v = 0; v < k; ++v) {
                if (done[v]) continue;
                if (best < 0 || placed_nbrs[v] > placed_nbrs[best] ||
                    (placed_nbrs[v] == placed_nbrs[best] && h_.degree(v) > h_.degree(best)))
                    best = v;
            }
            done[best] = true;
            order_.push_back(best);
            h_.neighbors(best).for_each([&](int u) { ++placed_nbrs[u]; });
        }
    }

    bool place(int depth) {
        if (depth == static_cast<int>(order_.size())) return true;
        budget_.tick();
        const int v = order_[depth];
        VertexSet candidates = domains_[v] - used_;
        for (int j = 0; j < depth && candidates.any(); ++j) {
            int u = order_[j];
            if (h_.adjacent(u, v)) candidates &= g_.neighbors(image_[u]);
            else candidates.subtract(g_.neighbors(image_[u]));
        }
        for (int x = candidates.first(); x >= 0; x = candidates.next(x)) {
            image_[v] = x;
            used_.set(static_cast<std::size_t>(x));
            if (place(depth + 1)) return true;
            used_.reset(static_cast<std::size_t>(x));
        }
        image_[v] = -1;
        return false;
    }

    const Graph& g_;
    const Graph& h_;
    VertexSet within_;
    SearchBudget& budget_;
    std::vector<int> order_;
    std::vector<VertexSet> domains_;
    std::vector<int> image_;
    VertexSet used_;
};

}  // namespace

std::optional<std::vector<int>> find_induced_embedding(const Graph& g, const Graph& h, SearchBudget& budget) {
    return find_induced_embedding(g, h, g.all_vertices(), budget);
}

std::optional<std::vector<int>> find_induced_embedding(const Graph& g, const Graph& h, const VertexSet& within,
                                                       SearchBudget& budget) {
    return EmbeddingSearch(g, h, within, budget).run();
}

std::optional<Certificate> find_induced_pattern(const Graph& g, const Graph& h) {
    SearchBudget budget;
    auto emb = find_induced_embedding(g, h, budget);
    if (!emb) return std::nullopt;
    Certificate c;
    c.kind = PatternKind::Generic;
    c.generic = h;
    c.embedding = std::move(*emb);
    revalidate(g, c);
    return c;
}

std::optional<Certificate> find_induced_star(const Graph& g, int d, SearchBudget& budget) {
    return find_induced_star(g, d, g.all_vertices(), budget);
}

std::optional<Certificate> find_induced_star(const Graph& g, int d, const VertexSet& within, SearchBudget& budget) {
    if (d < 1) throw InputError("star needs d >= 1");
    for (int v = within.first(); v >= 0; v = within.next(v)) {
        VertexSet nb = g.neighbors(v) & within;
        if (static_cast<int>(nb.count()) < d) continue;
        auto leaves = max_independent_set(g, nb, budget);
        if (static_cast<int>(leaves.size()) < d) continue;
        std::vector<int> emb{v};
        emb.insert(emb.end(), leaves.begin(), leaves.begin() + d);
        return certify(g, PatternKind::Star, {d}, std::move(emb));
    }
    return std::nullopt;
}

std::optional<Certificate> find_induced_star(const Graph& g, int d) {
    SearchBudget budget;
    return find_induced_star(g, d, budget);
}

namespace {

/// Size of the part of `region` reachable from `from` (a set of starts).
int reach_count(const Graph& g, const VertexSet& from, const VertexSet& region) {
    VertexSet seen = from & region;
    VertexSet frontier = seen;
    while (frontier.any()) {
        VertexSet next = g.empty_set();
        frontier.for_each([&](int x) { next |= g.neighbors(x); });
        next &= region;
        next.subtract(seen);
        seen |= next;
        frontier = std::move(next);
    }
    return static_cast<int>(seen.count());
}

class InducedPathSearch {
public:
    InducedPathSearch(const Graph& g, int target, const VertexSet& within, SearchBudget& budget)
        : g_(g), target_(target), within_(within), budget_(budget) {}

    std::optional<Path> run() {
        for (int s = within_.first(); s >= 0; s = within_.next(s)) {
            path_ = {s};
            if (extend(g_.empty_set())) return Path{path_, true};
        }
        return std::nullopt;
    }

private:
    // `earlier` is N[v_1..v_{k-1}]; the next vertex avoids it and is
    // adjacent to v_k.
    bool extend(const VertexSet& earlier) {
        budget_.tick();
        const int k = static_cast<int>(path_.size());
        if (k >= target_) return true;
        const int last = path_.back();
        VertexSet region = within_ - earlier;
        region.reset(static_cast<std::size_t>(last));
        VertexSet candidates = g_.neighbors(last) & region;
        if (candidates.none()) return false;
        if (k + reach_count(g_, candidates, region) < target_) return false;
        std::vector<int> order = candidates.to_vector();
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return g_.degree(a) < g_.degree(b); });
        const VertexSet next_earlier = earlier | g_.closed_neighbors(last);
        for (int x : order) {
            path_.push_back(x);
            if (extend(next_earlier)) return true;
            path_.pop_back();
        }
        return false;
    }

    const Graph& g_;
    int target_;
    VertexSet within_;
    SearchBudget& budget_;
    std::vector<int> path_;
};

}  // namespace

std::optional<Path> find_induced_path_geq(const Graph& g, int L, SearchBudget& budget) {
    return find_induced_path_geq(g, L, g.all_vertices(), budget);
}

std::optional<Path> find_induced_path_geq(const Graph& g, int L, const VertexSet& within, SearchBudget& budget) {
    if (L < 1) throw InputError("path length must be >= 1");
    return InducedPathSearch(g, L, within, budget).run();
}

std::optional<Path> find_induced_path_geq(const Graph& g, int L) {
    SearchBudget budget;
    return find_induced_path_geq(g, L, budget);
}

namespace {

class InducedCycleSearch {
public:
    InducedCycleSearch(const Graph& g, int qmin, const VertexSet& within, SearchBudget& budget)
        : g_(g), qmin_(qmin), within_(within), budget_(budget) {}

    std::optional<Path> run() {
        for (int s = within_.first(); s >= 0; s = within_.next(s)) {
            VertexSet higher = within_;
            for (int x = higher.first(); x >= 0 && x <= s; x = higher.next(x)) higher.reset(static_cast<std::size_t>(x));
            start_ = s;
            allowed_ = higher;
            VertexSet second = g_.neighbors(s) & allowed_;
            for (int v2 = second.first(); v2 >= 0; v2 = second.next(v2)) {
                path_ = {s, v2};
                // inner = N[v_2..v_{k-1}], initially empty
                if (extend(g_.empty_set())) return Path{path_, true};
            }
        }
        return std::nullopt;
    }

private:
    bool extend(const VertexSet& inner) {
        budget_.tick();
        const int k = static_cast<int>(path_.size());
        const int last = path_.back();
        VertexSet on_path = VertexSet::of(static_cast<std::size_t>(g_.order()), path_);
        VertexSet free = allowed_ - inner - on_path;
        VertexSet next = g_.neighbors(last) & free;
        VertexSet closers = next & g_.neighbors(start_);
        if (k + 1 >= qmin_) {
            // closing through x gives the cycle v_1..v_k x
            int x = closers.first();
            if (x >= 0) {
                path_.push_back(x);
                return true;
            }
        }
        VertexSet continuing = next - g_.neighbors(start_);
        if (continuing.none()) return false;
        // The rest of the cycle runs through `middle` and ends in a vertex
        // adjacent to the start.
        VertexSet middle = free - g_.neighbors(start_);
        VertexSet reach = continuing;
        {
            VertexSet frontier = continuing;
            while (frontier.any()) {
                VertexSet grow = g_.empty_set();
                frontier.for_each([&](int x) { grow |= g_.neighbors(x); });
                grow &= middle;
                grow.subtract(reach);
                reach |= grow;
                frontier = std::move(grow);
            }
        }
        VertexSet targets = free & g_.neighbors(start_);
        bool can_close = false;
        reach.for_each([&](int x) {
            if (!can_close && g_.neighbors(x).intersects(targets)) can_close = true;
        });
        if (!can_close) return false;
        if (k + static_cast<int>(reach.count()) + 1 < qmin_) return false;
        VertexSet next_inner = inner | g_.closed_neighbors(last);
        for (int x = continuing.first(); x >= 0; x = continuing.next(x)) {
            path_.push_back(x);
            if (extend(next_inner)) return true;
            path_.pop_back();
        }
        return false;
    }

    const Graph& g_;
    int qmin_;
    VertexSet within_;
    SearchBudget& budget_;
    int start_ = -1;
    VertexSet allowed_;
    std::vector<int> path_;
};

}  // namespace

std::optional<Path> find_long_induced_cycle(const Graph& g, int qmin, SearchBudget& budget) {
    return find_long_induced_cycle(g, qmin, g.all_vertices(), budget);
}

std::optional<Path> find_long_induced_cycle(const Graph& g, int qmin, const VertexSet& within, SearchBudget& budget) {
    if (qmin < 3) throw InputError("cycle length must be >= 3");
    return InducedCycleSearch(g, qmin, within, budget).run();
}

std::optional<Path> find_long_induced_cycle(const Graph& g, int qmin) {
    SearchBudget budget;
    return find_long_induced_cycle(g, qmin, budget);
}

VertexSet neighbors_on_path(const Graph& g, const Path& p, int v) {
    return g.neighbors(v) & VertexSet::of(static_cast<std::size_t>(g.order()), p.vertices);
}

std::vector<int> neighbor_positions(const Graph& g, const Path& p, int v) {
    std::vector<int> out;
    for (int i = 0; i < static_cast<int>(p.vertices.size()); ++i)
        if (g.adjacent(v, p.vertices[i])) out.push_back(i);
    return out;
}

namespace {

Path subpath(const Path& p, int first, int last) {
    return Path{std::vector<int>(p.vertices.begin() + first, p.vertices.begin() + last + 1), p.induced};
}

}  // namespace

std::vector<Path> segments_of_path(const Graph& g, const Path& p, int v, bool cyclic) {
    auto pos = neighbor_positions(g, p, v);
    const int n = static_cast<int>(p.vertices.size());
    std::vector<Path> out;
    if (!cyclic) {
        if (pos.empty()) throw InputError("no segments defined: vertex has no neighbour on the path");
        std::vector<int> cuts;
        cuts.push_back(0);
        for (int x : pos)
            if (x != 0 && x != n - 1) cuts.push_back(x);
        cuts.push_back(n - 1);
        for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
            if (cuts[i] < cuts[i + 1]) out.push_back(subpath(p, cuts[i], cuts[i + 1]));
        if (n == 1) out.push_back(p);
        return out;
    }
    if (pos.size() < 2) throw InputError("no segments defined: vertex has fewer than two neighbours on the cycle");
    for (std::size_t i = 0; i < pos.size(); ++i) {
        int a = pos[i];
        int b = pos[(i + 1) % pos.size()];
        Path seg;
        for (int x = a;; x = (x + 1) % n) {
            seg.vertices.push_back(p.vertices[x]);
            if (x == b && seg.vertices.size() > 1) break;
        }
        out.push_back(std::move(seg));
    }
    return out;
}

OrCertificate<Path> long_segment(const Graph& g, const Path& p, int v, int blocks, int d) {
    const int n = static_cast<int>(p.vertices.size());
    if (d < 1 || blocks < 1) throw InputError("long_segment needs d, p >= 1");
    if (static_cast<long long>(n) < static_cast<long long>(d) * blocks)
        throw InputError("long_segment needs a path on at least dp vertices");
    auto pos = neighbor_positions(g, p, v);
    if (pos.empty()) return p;
    std::vector<char> hit(static_cast<std::size_t>(n), 0);
    for (int x : pos) hit[x] = 1;
    // Block i (0-based) covers positions i*p .. (i+1)*p - 2.
    std::vector<int> leaves;
    for (int i = 0; i < d; ++i) {
        int lo = i * blocks, hi = (i + 1) * blocks - 2;
        int found = -1;
        for (int x = lo; x <= hi && found < 0; ++x)
            if (hit[x]) found = x;
        if (found < 0) {
            int a = 0, b = n - 1;
            for (int x : pos)
                if (x < lo) a = x;
            for (int x : pos)
                if (x > std::max(hi, a)) {
                    b = x;
                    break;
                }
            return subpath(p, a, b);
        }
        leaves.push_back(p.vertices[found]);
    }
    std::vector<int> emb{v};
    emb.insert(emb.end(), leaves.begin(), leaves.end());
    return certify(g, PatternKind::Star, {d}, std::move(emb));
}

OrCertificate<PathInterval> path_interval(const Graph& g, const Path& p, int v, int q, int d) {
    if (d < 2) throw InputError("path_interval needs d >= 2");
    if (q < 3) throw InputError("path_interval needs q >= 3");
    auto pos = neighbor_positions(g, p, v);
    if (pos.empty()) throw InputError("vertex " + std::to_string(v) + " has no neighbour on the path");
    PathInterval iv{pos.front(), pos.back()};
    const long long cap = 2LL * (d - 1) * (q - 2);
    if (iv.count() <= cap) return iv;
    for (std::size_t i = 0; i + 1 < pos.size(); ++i) {
        int a = pos[i], b = pos[i + 1];
        if (b - a + 1 >= q - 1) {
            std::vector<int> cyc{v};
            for (int x = a; x <= b; ++x) cyc.push_back(p.vertices[x]);
            int len = static_cast<int>(cyc.size());
            return certify(g, PatternKind::Cycle, {len}, std::move(cyc));
        }
    }
    // Every gap is short, so v has many neighbours; d of them share a parity.
    std::vector<int> parity[2];
    for (int x : pos) parity[x % 2].push_back(p.vertices[x]);
    auto& side = parity[0].size() >= parity[1].size() ? parity[0] : parity[1];
    if (static_cast<int>(side.size()) < d) throw InternalError("path_interval: neither a long gap nor a star");
    std::vector<int> emb{v};
    emb.insert(emb.end(), side.begin(), side.begin() + d);
    return certify(g, PatternKind::Star, {d}, std::move(emb));
}

OrCertificate<PathInterval> component_attachment_interval(const Graph& g, const Path& p, const VertexSet& h, int v,
                                                          int q, int d) {
    const int n = static_cast<int>(p.vertices.size());
    VertexSet on_path = VertexSet::of(static_cast<std::size_t>(g.order()), p.vertices);
    VertexSet attach = open_neighborhood(g, h);
    if (!attach.test(static_cast<std::size_t>(v)))
        throw InputError("vertex " + std::to_string(v) + " is not adjacent to the component");
    if (!g.neighbors(v).intersects(on_path))
        throw InputError("vertex " + std::to_string(v) + " has no neighbour on the path");
    if (closed_neighborhood(g, on_path).intersects(h)) throw InputError("component meets N[V(P)]");
    auto pv = path_interval(g, p, v, q, d);
    if (auto* cert = std::get_if<Certificate>(&pv)) return *cert;
    const auto core = std::get<PathInterval>(pv);
    PathInterval ph{std::max(0, core.first - q), std::min(n - 1, core.last + q)};
    VertexSet window = VertexSet::of(static_cast<std::size_t>(g.order()),
                                     std::span<const int>(p.vertices.data() + ph.first, static_cast<std::size_t>(ph.count())));
    for (int u = attach.first(); u >= 0; u = attach.next(u)) {
        if (g.neighbors(u).intersects(window)) continue;
        auto upos = neighbor_positions(g, p, u);
        if (upos.empty()) throw InputError("attachment vertex " + std::to_string(u) + " has no neighbour on the path");
        VertexSet through = h;
        through.set(static_cast<std::size_t>(u));
        through.set(static_cast<std::size_t>(v));
        VertexSet from = g.empty_set(), to = g.empty_set();
        from.set(static_cast<std::size_t>(u));
        to.set(static_cast<std::size_t>(v));
        auto r = shortest_xy_path(g, from, to, through);
        if (!r) throw InternalError("component does not connect its attachments");
        std::vector<int> cyc{u};
        if (upos.front() < ph.first) {
            int w = -1;
            for (int x : upos)
                if (x < ph.first) w = x;
            for (int x = w; x <= core.first; ++x) cyc.push_back(p.vertices[x]);
        } else {
            int w = -1;
            for (int x : upos)
                if (x > ph.last) {
                    w = x;
                    break;
                }
            for (int x = w; x >= core.last; --x) cyc.push_back(p.vertices[x]);
        }
        // back from v to u through H
        for (int i = static_cast<int>(r->vertices.size()) - 1; i >= 1; --i) cyc.push_back(r->vertices[i]);
        int len = static_cast<int>(cyc.size());
        return certify(g, PatternKind::Cycle, {len}, std::move(cyc));
    }
    return ph;
}

}  // namespace tinkit
