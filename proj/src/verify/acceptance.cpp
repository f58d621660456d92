#include "verify/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <map>
#include <sstream>

#include "tinkit/backbone.hpp"
#include "tinkit/cograph.hpp"
#include "tinkit/generators.hpp"
#include "tinkit/lift.hpp"
#include "tinkit/mwis.hpp"
#include "tinkit/oracle.hpp"
#include "tinkit/starpath.hpp"
#include "verify/canonical.hpp"

namespace tinkit::verify {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
double uniform_real(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

/// Collects violations; the first few are kept verbatim.
class Tally {
public:
    void check(bool ok, const std::string& what) {
        ++checks_;
        if (ok) return;
        ++failures_;
        if (examples_.size() < 3) examples_.push_back(what);
    }
    bool ok() const noexcept { return failures_ == 0; }
    int checks() const noexcept { return checks_; }
    std::string summary() const {
        std::ostringstream out;
        out << checks_ << " checks, " << failures_ << " violations";
        for (const auto& e : examples_) out << "; " << e;
        return out.str();
    }

private:
    int checks_ = 0, failures_ = 0;
    std::vector<std::string> examples_;
};

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", x);
    return buf;
}

Graph complement_of_triangle_free(int n, Rng& rng) {
    return complement(random_triangle_free(n, uniform_real(rng, 0.2, 0.8), rng));
}

bool starpath_class(const Graph& g) {
    return !find_induced_star(g, 3) && !find_induced_path_geq(g, 5);
}

bool backbone_class(const Graph& g, int d, int p) {
    SearchBudget budget;
    if (find_induced_star(g, d, budget)) return false;
    if (find_induced_embedding(g, pattern_graph(PatternKind::Sp, {p}), budget)) return false;
    return !find_induced_embedding(g, pattern_graph(PatternKind::Tp, {p}), budget);
}

Graph disjoint_all(const std::vector<Graph>& parts) {
    Graph out(0);
    for (const auto& g : parts) out = disjoint_union(out, g);
    return out;
}

Graph square_of_path(int n) {
    GraphBuilder b(n);
    for (int i = 0; i + 1 < n; ++i) b.add_edge(i, i + 1);
    for (int i = 0; i + 2 < n; ++i) b.add_edge(i, i + 2);
    return std::move(b).build();
}

Weight random_weight(Rng& rng) { return Weight(uniform(rng, 0, 20), uniform(rng, 1, 6)); }

}  // namespace

std::string format_line(const CriterionResult& r) {
    return std::string(r.pass ? "PASS" : "FAIL") + " criterion " + std::to_string(r.id) + " (" + r.title +
           "): " + r.detail + " [" + fmt(r.seconds) + " s]";
}

CriterionResult Acceptance::exact_values() {
    auto t0 = Clock::now();
    const int jobs = options_.jobs;
    Tally tally;
    auto expect = [&](const std::string& name, const Graph& g, int want) {
        int got = tin_exact(g, jobs);
        tally.check(got == want, name + ": tin " + std::to_string(got) + " != " + std::to_string(want));
    };
    for (int n = 1; n <= 3; ++n) expect("K_{" + std::to_string(n) + "," + std::to_string(n) + "}", complete_bipartite(n, n), n);
    for (int m = 2; m <= 3; ++m) expect("L(K_{m,m}) m=" + std::to_string(m), line_graph(complete_bipartite(m, m)).graph, m);
    for (int n = 3; n <= 5; ++n) expect("L(K_" + std::to_string(n) + ")", line_graph(complete_graph(n)).graph, n / 2);
    double secs = since(t0);
    tally.check(secs <= kCriterion1MaxSeconds, "runtime " + fmt(secs) + " s over " + fmt(kCriterion1MaxSeconds));
    return {1, "exact values", tally.ok(), tally.summary(), secs};
}

CriterionResult Acceptance::sharpness_witness() {
    auto t0 = Clock::now();
    Tally tally;
    auto gn = gen_Gn(3);
    int tw = tw_exact(gn.graph, options_.jobs);
    tally.check(tw == 2, "tw(G_3) = " + std::to_string(tw));
    auto host = gn_chordal_decomposition(gn);
    tally.check(validate(gn.graph, host).ok && width(host) == 2, "chordal decomposition of G_3 is not of width 2");
    auto ld = line_decomposition(gn.graph, host, options_.jobs);
    int alpha = independence_number(ld.line.graph, ld.td, options_.jobs);
    tally.check(alpha <= 3, "α of the lifted decomposition = " + std::to_string(alpha));
    auto model = gn_biclique_model(gn, ld.line);
    auto mc = verify_induced_minor_model(ld.line.graph, complete_bipartite(3, 3), model);
    tally.check(mc.ok, "K_{3,3} model rejected: " + mc.violation + " " + mc.detail);
    int tin = tin_exact(ld.line.graph, options_.jobs);
    tally.check(tin == 3, "tin(L(G_3)) = " + std::to_string(tin));
    double secs = since(t0);
    tally.check(secs <= kCriterion2MaxSeconds, "runtime " + fmt(secs) + " s");
    return {2, "sharpness witness G_3", tally.ok(), tally.summary() + "; tw=2, α(lift)=" + std::to_string(alpha) +
                                                    ", tin(L(G_3))=" + std::to_string(tin), secs};
}

CriterionResult Acceptance::starpath_bound() {
    auto t0 = Clock::now();
    Rng rng(options_.seed + 3);
    Tally tally;
    int worst = 0;
    for (int i = 0; i < kStarPathInClass; ++i) {
        Graph g;
        switch (i % 4) {
            case 0: g = complement_of_triangle_free(uniform(rng, 4, 20), rng); break;
            case 1:
                for (int tries = 0; tries < 200; ++tries) {
                    g = random_gnp(uniform(rng, 4, 12), uniform_real(rng, 0.3, 0.9), rng);
                    if (starpath_class(g)) break;
                }
                if (!starpath_class(g)) g = complement_of_triangle_free(uniform(rng, 4, 20), rng);
                break;
            case 2:
                for (int tries = 0; tries < 200; ++tries) {
                    g = random_cograph(uniform(rng, 4, 20), rng);
                    if (starpath_class(g)) break;
                }
                if (!starpath_class(g)) g = complement_of_triangle_free(uniform(rng, 4, 20), rng);
                break;
            default:
                g = disjoint_union(complement_of_triangle_free(uniform(rng, 1, 10), rng),
                                   complement_of_triangle_free(uniform(rng, 1, 10), rng));
        }
        if (!starpath_class(g)) throw InternalError("in-class sampler produced a graph with K_{1,3} or P_5");
        auto res = starpath_decompose(g, 3, 5);
        if (auto* cert = std::get_if<Certificate>(&res)) {
            tally.check(false, "certificate " + cert->describe() + " on a {K_{1,3}, P_5}-free graph");
            continue;
        }
        const auto& td = std::get<TreeDecomposition>(res);
        auto v = validate(g, td);
        tally.check(v.ok, std::string("invalid decomposition: ") + axiom_name(v.axiom));
        if (!v.ok) continue;
        int a = independence_number(g, td, options_.jobs);
        worst = std::max(worst, a);
        tally.check(a <= 6, "α(T) = " + std::to_string(a) + " > 6");
    }
    int produced = 0;
    while (produced < kStarPathOutOfClass) {
        Graph g = random_gnp(uniform(rng, 5, 20), uniform_real(rng, 0.08, 0.5), rng);
        if (starpath_class(g)) continue;
        ++produced;
        auto res = starpath_decompose(g, 3, 5, StarPathOptions{true});
        auto* cert = std::get_if<Certificate>(&res);
        tally.check(cert != nullptr, "no certificate on a graph with K_{1,3} or P_5");
        if (!cert) continue;
        bool kind_ok = (cert->kind == PatternKind::Star && cert->params == std::vector<int>{3}) ||
                       (cert->kind == PatternKind::Path && cert->params == std::vector<int>{5});
        Certificate copy = *cert;
        tally.check(kind_ok && revalidate(g, copy), "certificate fails: " + cert->describe());
        issued_.push_back({g, *cert, "star-path"});
    }
    return {3, "star-path bound (d=3, s=5)", tally.ok(),
            tally.summary() + "; max α(T) = " + std::to_string(worst) + " <= 6", since(t0)};
}

CriterionResult Acceptance::backbone_bound() {
    auto t0 = Clock::now();
    Rng rng(options_.seed + 4);
    Tally tally;
    struct Instance {
        Graph g;
        int d, p, k;
        std::string name;
    };
    std::vector<Instance> suite;
    for (int d : {3, 4}) {
        // {K_{1,d}, K_{1,3}, K_3}-free: unions of paths and long cycles.
        for (int n : {4, 7, 12, 20, 33, 40}) suite.push_back({cycle_graph(n), d, 1, 1, "C_" + std::to_string(n)});
        for (int n : {1, 2, 5, 17, 40}) suite.push_back({path_graph(n), d, 1, 1, "P_" + std::to_string(n)});
        for (int i = 0; i < 6; ++i) {
            std::vector<Graph> parts;
            int left = 40;
            while (left >= 4 && parts.size() < 5) {
                int len = uniform(rng, 4, std::min(left, 14));
                parts.push_back(uniform(rng, 0, 1) ? cycle_graph(len) : path_graph(len));
                left -= len;
            }
            suite.push_back({disjoint_all(parts), d, 1, 1, "paths and cycles"});
        }
        for (int p : {1, 2}) suite.push_back({Graph(0), d, p, 1, "null graph"});
        // p = 2
        for (int n : {6, 15, 28, 40}) suite.push_back({square_of_path(n), d, 2, 1, "P_n^2"});
        for (int i = 0; i < 8; ++i) suite.push_back({complement_of_triangle_free(uniform(rng, 5, 14), rng), d, 2, 1,
                                                     "complement of triangle-free"});
        for (int i = 0, made = 0; made < 10 && i < 2000; ++i) {
            Graph host = uniform(rng, 0, 1) ? random_tree(uniform(rng, 4, 30), rng)
                                            : random_gnp(uniform(rng, 5, 16), uniform_real(rng, 0.1, 0.25), rng);
            if (host.size() == 0 || host.size() > 40) continue;
            Graph lg = line_graph(host).graph;
            if (!backbone_class(lg, d, 2)) continue;
            suite.push_back({lg, d, 2, 1, "line graph of a sparse graph"});
            ++made;
        }
        // decompose_k with k = 2: one S_p peeled, the rest in class
        suite.push_back({disjoint_union(star_graph(3), cycle_graph(10)), 4, 1, 2, "K_{1,3} + C_10, k=2"});
        suite.push_back({disjoint_union(gen_spqr(2, 2, 2), square_of_path(12)), 4, 2, 2, "S_2 + P_12^2, k=2"});
    }
    int instances = 0;
    long long worst_ratio_alpha = 0;
    for (const auto& inst : suite) {
        if (inst.k == 1 && !backbone_class(inst.g, inst.d, inst.p))
            throw InternalError("backbone suite instance " + inst.name + " is outside its class");
        ++instances;
        auto res = decompose_k(inst.g, inst.d, inst.p, inst.k);
        if (auto* cert = std::get_if<Certificate>(&res)) {
            tally.check(false, inst.name + ": certificate " + cert->describe() + " inside the class");
            continue;
        }
        const auto& td = std::get<TreeDecomposition>(res);
        auto v = validate(inst.g, td);
        tally.check(v.ok, inst.name + ": invalid decomposition");
        if (!v.ok) continue;
        long long a = independence_number(inst.g, td, options_.jobs);
        long long bound = decompose_k_bound(inst.d, inst.p, inst.k);
        worst_ratio_alpha = std::max(worst_ratio_alpha, a);
        tally.check(a <= bound, inst.name + ": α " + std::to_string(a) + " > " + std::to_string(bound));
    }
    int refuted = 0;
    for (int i = 0; i < 60; ++i) {
        int d = 3 + i % 2, p = 1 + (i / 2) % 2;
        Graph g = random_gnp(uniform(rng, 7, 20), uniform_real(rng, 0.1, 0.5), rng);
        if (backbone_class(g, d, p)) continue;
        auto res = backbone_decompose(g, d, p, BackboneOptions{true});
        auto* cert = std::get_if<Certificate>(&res);
        tally.check(cert != nullptr, "no certificate on a graph outside the class");
        if (!cert) continue;
        ++refuted;
        bool kind_ok = (cert->kind == PatternKind::Star && cert->params == std::vector<int>{d}) ||
                       ((cert->kind == PatternKind::Sp || cert->kind == PatternKind::Tp) &&
                        cert->params == std::vector<int>{p});
        Certificate copy = *cert;
        tally.check(kind_ok && revalidate(g, copy), "certificate fails: " + cert->describe());
        issued_.push_back({g, *cert, "backbone"});
    }
    double secs = since(t0);
    tally.check(secs <= kCriterion4MaxSeconds, "runtime " + fmt(secs) + " s");
    return {4, "backbone bound", tally.ok(),
            tally.summary() + "; " + std::to_string(instances) + " in-class instances, max α(T) = " +
                std::to_string(worst_ratio_alpha) + ", " + std::to_string(refuted) + " refuted",
            secs};
}

CriterionResult Acceptance::lift_bound() {
    auto t0 = Clock::now();
    Rng rng(options_.seed + 5);
    Tally tally;
    int equal = 0;
    auto run = [&](const Graph& g, const std::optional<TreeDecomposition>& host, const std::string& name) {
        auto ld = line_decomposition(g, host, options_.jobs);
        auto v = validate(ld.line.graph, ld.td);
        tally.check(v.ok, name + ": invalid lifted decomposition");
        if (!v.ok) return;
        int a = independence_number(ld.line.graph, ld.td, options_.jobs);
        tally.check(a <= ld.host_width + 1, name + ": α " + std::to_string(a) + " > w+1");
        if (a == ld.host_width + 1) ++equal;
    };
    for (int i = 0; i < kLiftInstances; ++i)
        run(random_gnp(uniform(rng, 2, 12), uniform_real(rng, 0.15, 0.7), rng), std::nullopt,
            "random graph " + std::to_string(i));
    int witness_equal = 0;
    for (int n : {3, 4}) {
        auto gn = gen_Gn(n);
        int before = equal;
        run(gn.graph, gn_chordal_decomposition(gn), "G_" + std::to_string(n));
        witness_equal += equal - before;
    }
    tally.check(witness_equal == 2, "the G_n witnesses do not attain w+1");
    return {5, "lift bound", tally.ok(),
            tally.summary() + "; equality in " + std::to_string(equal) + " instances (incl. G_3, G_4)", since(t0)};
}

CriterionResult Acceptance::cograph_equivalence() {
    auto t0 = Clock::now();
    Rng rng(options_.seed + 6);
    Tally tally;
    auto check_one = [&](const Graph& g, const std::string& name) {
        auto res = build_cotree(g);
        if (std::holds_alternative<Certificate>(res)) {
            tally.check(false, name + ": P4 reported in a cograph");
            return;
        }
        const auto& ct = std::get<Cotree>(res);
        int tin = std::get<int>(tin_cograph(g));
        int exact = tin_exact(g, options_.jobs);
        tally.check(tin == exact, name + ": tin_cograph " + std::to_string(tin) + " != " + std::to_string(exact));
        tally.check(alpha_cotree(ct) == alpha_exact(g), name + ": α mismatch");
        tally.check(ibn_cotree(ct) == ibn_exact(g), name + ": ibn mismatch");
        tally.check(cotree_graph(ct) == g, name + ": cotree does not reproduce the graph");
        auto td = decompose_cograph(g);
        int a = independence_number(g, td, options_.jobs);
        tally.check(a == tin, name + ": decomposition α " + std::to_string(a) + " != " + std::to_string(tin));
    };
    int exhaustive = 0;
    for (int n = 1; n <= 6; ++n)
        for (const auto& g : all_graphs(n)) {
            if (!std::holds_alternative<Cotree>(build_cotree(g))) {
                tally.check(find_induced_pattern(g, path_graph(4)).has_value(), "P4-free graph rejected");
                continue;
            }
            ++exhaustive;
            check_one(g, "catalog n=" + std::to_string(n));
        }
    for (int i = 0; i < kRandomCographs; ++i) check_one(random_cograph(uniform(rng, 1, 8), rng), "random cograph");
    Graph big = random_cograph(kScalingCographOrder, rng);
    auto ts = Clock::now();
    auto tin = tin_cograph(big);
    double scaling = since(ts);
    tally.check(std::holds_alternative<int>(tin), "large cograph rejected");
    tally.check(scaling <= kCriterion6ScalingMaxSeconds, "n=10^4 took " + fmt(scaling) + " s");
    return {6, "cograph equivalence", tally.ok(),
            tally.summary() + "; " + std::to_string(exhaustive) + " catalog cographs, n=10^4 in " + fmt(scaling) + " s",
            since(t0)};
}

CriterionResult Acceptance::universal_inequalities() {
    auto t0 = Clock::now();
    Tally tally;
    std::map<std::uint64_t, int> tin_of;
    int graphs = 0;
    for (int n = 1; n <= 7; ++n) {
        for (const auto& g : all_graphs(n)) {
            ++graphs;
            int tin = tin_exact(g, options_.jobs);
            int tw = tw_exact(g, options_.jobs);
            int alpha = alpha_exact(g);
            int ibn = ibn_exact(g);
            tin_of[canonical_code(g)] = tin;
            std::string name = "n=" + std::to_string(n) + " code " + std::to_string(canonical_code(g));
            tally.check(std::max(ibn, 1) <= tin, name + ": max{ibn,1} > tin");
            tally.check(tin <= alpha, name + ": tin > α");
            tally.check(tin <= tw + 1, name + ": tin > tw+1");
            if (n == 1) continue;
            for (int v = 0; v < n; ++v) {
                VertexSet keep = g.all_vertices();
                keep.reset(static_cast<std::size_t>(v));
                Graph h = induced_subgraph(g, keep).graph;
                auto it = tin_of.find(canonical_code(h));
                tally.check(it != tin_of.end() && it->second <= tin, name + ": tin grows under deletion");
            }
        }
    }
    return {7, "universal inequalities", tally.ok(), tally.summary() + " over " + std::to_string(graphs) + " graphs",
            since(t0)};
}

CriterionResult Acceptance::mwis_equivalence() {
    auto t0 = Clock::now();
    Rng rng(options_.seed + 8);
    Tally tally;
    std::map<std::string, int> used;
    for (int i = 0; i < kMwisInstances; ++i) {
        int n = uniform(rng, 1, 15);
        Graph g;
        switch (i % 3) {
            case 0: g = random_gnp(n, uniform_real(rng, 0.1, 0.8), rng); break;
            case 1: g = random_cograph(n, rng); break;
            default: {
                Graph host = random_gnp(uniform(rng, 3, 8), uniform_real(rng, 0.2, 0.6), rng);
                g = host.size() > 0 && host.size() <= 15 ? line_graph(host).graph : random_gnp(n, 0.3, rng);
            }
        }
        WeightedInstance inst{g, {}};
        for (int v = 0; v < g.order(); ++v) inst.weights.push_back(random_weight(rng));
        const Weight truth = mwis_exact(g, inst.weights).weight;
        std::vector<std::pair<std::string, TreeDecomposition>> tds{
            {"heuristic", heuristic_td(g)}, {"single-bag", single_bag(g)}, {"exact-width", exact_width_td(g)}};
        auto cot = build_cotree(g);
        if (auto* ct = std::get_if<Cotree>(&cot)) tds.emplace_back("cograph", decompose_cotree(*ct));
        const int alpha = alpha_exact(g);
        if (alpha >= 1) {
            // Every graph is {K_{1,α+1}, P_{n+1}}-free and, for n < 16, free of S_6 and T_6.
            auto sp = starpath_decompose(g, alpha + 1, std::max(3, g.order() + 1));
            if (auto* td = std::get_if<TreeDecomposition>(&sp)) tds.emplace_back("star-path", *td);
            else tally.check(false, "star-path refuted a trivially satisfied class");
            auto bb = backbone_decompose(g, std::max(2, alpha + 1), 6);
            if (auto* td = std::get_if<TreeDecomposition>(&bb)) tds.emplace_back("backbone", *td);
            else tally.check(false, "backbone refuted a trivially satisfied class");
        }
        for (const auto& [name, td] : tds) {
            ++used[name];
            auto got = solve(inst, td, options_.jobs);
            tally.check(got.weight == truth, name + " DP weight differs from the oracle on instance " + std::to_string(i));
        }
        auto autosol = solve_auto(inst, std::nullopt, options_.jobs);
        tally.check(autosol.best.weight == truth, "solve_auto differs from the oracle");
    }
    double secs = since(t0);
    tally.check(secs <= kCriterion8MaxSeconds, "runtime " + fmt(secs) + " s");
    std::string strategies;
    for (const auto& [name, count] : used) strategies += " " + name + "=" + std::to_string(count);
    return {8, "MWIS oracle equivalence", tally.ok(), tally.summary() + ";" + strategies, secs};
}

CriterionResult Acceptance::certificate_soundness() {
    auto t0 = Clock::now();
    Tally tally;
    for (const auto& ic : issued_) {
        Graph pattern = pattern_of(ic.cert);
        bool ok = embeds_induced(ic.host, pattern, ic.cert.embedding) &&
                  static_cast<int>(ic.cert.embedding.size()) == pattern.order();
        tally.check(ok, ic.origin + " certificate " + ic.cert.describe() + " does not embed");
    }
    tally.check(!issued_.empty(), "no certificates were issued");
    return {9, "certificate soundness", tally.ok(),
            tally.summary() + " over " + std::to_string(issued_.size()) + " certificates", since(t0)};
}

std::vector<CriterionResult> Acceptance::run_all(const std::function<void(const CriterionResult&)>& report) {
    std::vector<CriterionResult> out;
    using Step = CriterionResult (Acceptance::*)();
    const Step steps[] = {&Acceptance::exact_values,     &Acceptance::sharpness_witness,
                          &Acceptance::starpath_bound,   &Acceptance::backbone_bound,
                          &Acceptance::lift_bound,       &Acceptance::cograph_equivalence,
                          &Acceptance::universal_inequalities, &Acceptance::mwis_equivalence,
                          &Acceptance::certificate_soundness};
    int id = 1;
    for (Step step : steps) {
        CriterionResult r;
        try {
            r = (this->*step)();
        } catch (const std::exception& e) {
            r = {id, "criterion " + std::to_string(id), false, std::string("exception: ") + e.what(), 0.0};
        }
        if (report) report(r);
        out.push_back(std::move(r));
        ++id;
    }
    return out;
}

}  // namespace tinkit::verify
