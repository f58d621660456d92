// tinkit: generation, detection, decomposition, oracles, lifting, cographs
// and MWIS from the command line.
//
// Exit codes: 0 success, 1 certificate returned (graph outside the class),
// 2 input error, 3 search budget exhausted, 4 internal error.

#include <chrono>
#include <fstream>
#include <sstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "tinkit/backbone.hpp"
#include "tinkit/cograph.hpp"
#include "tinkit/generators.hpp"
#include "tinkit/io.hpp"
#include "tinkit/lift.hpp"
#include "tinkit/mwis.hpp"
#include "tinkit/oracle.hpp"
#include "tinkit/starpath.hpp"
#include "verify/acceptance.hpp"

using namespace tinkit;

namespace {

constexpr int kExitCertificate = 1;
constexpr int kExitInput = 2;
constexpr int kExitBudget = 3;
constexpr int kExitInternal = 4;

struct Globals {
    int jobs = 1;
    std::uint64_t seed = 1;
    bool deterministic = false;
    std::string report_path;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    int threads() const { return deterministic ? 1 : jobs; }
};

struct GenArgs {
    std::string family, out;
    int n = 0, a = 0, b = 0, d = 3, k = 3, p = 1, q = 1, r = 1;
    double prob = 0.5;
};

struct DecomposeArgs {
    std::string graph, strategy = "heuristic", out, cert_out;
    int d = 3, s = 5, p = 1, k = 1;
    bool strict = false;
};

Graph generate(const GenArgs& a, Rng& rng) {
    const std::string& f = a.family;
    if (f == "path") return path_graph(a.n);
    if (f == "cycle") return cycle_graph(a.n);
    if (f == "complete") return complete_graph(a.n);
    if (f == "empty") return empty_graph(a.n);
    if (f == "biclique" || f == "Knn") return complete_bipartite(a.a ? a.a : a.n, a.b ? a.b : a.n);
    if (f == "star") return star_graph(a.d);
    if (f == "spqr") return gen_spqr(a.p, a.q, a.r);
    if (f == "tpqr") return gen_tpqr(a.p, a.q, a.r);
    if (f == "wall") return gen_wall(a.k);
    if (f == "Gn") return gen_Gn(a.n).graph;
    if (f == "line-Kn") return line_graph(complete_graph(a.n)).graph;
    if (f == "line-Knn") return line_graph(complete_bipartite(a.n, a.n)).graph;
    if (f == "gnp") return random_gnp(a.n, a.prob, rng);
    if (f == "tree") return random_tree(a.n, rng);
    if (f == "triangle-free") return random_triangle_free(a.n, a.prob, rng);
    if (f == "cograph") return random_cograph(a.n, rng);
    throw InputError("unknown family '" + f + "'");
}

std::optional<Certificate> detect(const Graph& g, const std::string& pattern, int d, int s, int p, int k) {
    SearchBudget budget;
    if (pattern == "star") return find_induced_star(g, d, budget);
    if (pattern == "path") {
        auto path = find_induced_path_geq(g, s, budget);
        if (!path) return std::nullopt;
        return certify(g, PatternKind::Path, {s}, path->vertices);
    }
    if (pattern == "cycle") {
        auto cyc = find_long_induced_cycle(g, s, budget);
        if (!cyc) return std::nullopt;
        int len = static_cast<int>(cyc->vertices.size());
        return certify(g, PatternKind::Cycle, {len}, cyc->vertices);
    }
    std::optional<PatternKind> kind = kind_from_name(pattern);
    if (!kind || *kind == PatternKind::Generic || *kind == PatternKind::Star || *kind == PatternKind::Path ||
        *kind == PatternKind::Cycle)
        throw InputError("unknown pattern '" + pattern + "' (star, path, cycle, S_p, T_p, kS_p, kT_p)");
    std::vector<int> params = (*kind == PatternKind::KSp || *kind == PatternKind::KTp) ? std::vector<int>{k, p}
                                                                                         : std::vector<int>{p};
    auto emb = find_induced_embedding(g, pattern_graph(*kind, params), budget);
    if (!emb) return std::nullopt;
    return certify(g, *kind, params, *emb);
}

int emit(RunReport& report, const Globals& globals) {
    report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - globals.start).count();
    Json j = report.to_json();
    if (!globals.report_path.empty()) {
        std::ofstream out(globals.report_path);
        if (!out) throw InputError("cannot write " + globals.report_path);
        out << j.dump(2) << '\n';
    }
    std::cout << j.dump(2) << '\n';
    return 0;
}

int certificate_exit(RunReport& report, const Certificate& c, const std::string& cert_out, const Globals& globals) {
    report.outputs["certificate"] = certificate_to_json(c);
    if (!cert_out.empty()) {
        std::ofstream out(cert_out);
        if (!out) throw InputError("cannot write " + cert_out);
        out << certificate_to_json(c).dump(2) << '\n';
        report.outputs["certificate_file"] = cert_out;
    }
    emit(report, globals);
    return kExitCertificate;
}

void write_td_output(RunReport& report, const TreeDecomposition& td, const std::string& path) {
    if (path.empty()) {
        report.outputs["td"] = to_td_string(td);
        return;
    }
    write_td_file(path, td);
    if (read_td_file(path) != td) throw InternalError("written .td does not read back identically");
    report.outputs["td_file"] = path;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"tinkit: tree decompositions with bounded independence number"};
    app.require_subcommand(1);
    Globals globals;
    app.add_option("--jobs", globals.jobs, "OpenMP threads for parallel kernels (0 = runtime default)")
        ->check(CLI::NonNegativeNumber);
    app.add_option("--seed", globals.seed, "seed for every random choice");
    app.add_flag("--deterministic", globals.deterministic, "force --jobs 1");
    app.add_option("--report", globals.report_path, "also write the run report JSON here");

    RunReport report;
    for (int i = 0; i < argc; ++i) report.command += (i ? " " : "") + std::string(argv[i]);
    int code = 0;

    // gen
    GenArgs gen;
    auto* cmd_gen = app.add_subcommand("gen", "write a named or random graph family as .gr");
    cmd_gen->add_option("--family", gen.family,
                        "path, cycle, complete, empty, biclique, star, spqr, tpqr, wall, Gn, line-Kn, line-Knn, gnp, "
                        "tree, triangle-free, cograph")
        ->required();
    cmd_gen->add_option("--n", gen.n, "order or family index")->check(CLI::NonNegativeNumber);
    cmd_gen->add_option("--a", gen.a, "biclique side");
    cmd_gen->add_option("--b", gen.b, "biclique side");
    cmd_gen->add_option("--d", gen.d, "star leaves");
    cmd_gen->add_option("--k", gen.k, "wall size");
    cmd_gen->add_option("--p", gen.p);
    cmd_gen->add_option("--q", gen.q);
    cmd_gen->add_option("--r", gen.r);
    cmd_gen->add_option("--prob", gen.prob, "edge probability")->check(CLI::Range(0.0, 1.0));
    cmd_gen->add_option("-o,--out", gen.out, "output .gr (stdout if absent)");
    cmd_gen->callback([&] {
        Rng rng(globals.seed);
        Graph g = generate(gen, rng);
        report.outputs["n"] = g.order();
        report.outputs["m"] = g.size();
        if (gen.out.empty()) {
            write_gr(std::cout, g);
            return;
        }
        write_gr_file(gen.out, g);
        if (!(read_gr_file(gen.out) == g)) throw InternalError("written .gr does not read back identically");
        report.outputs["graph_file"] = gen.out;
        emit(report, globals);
    });

    // detect
    std::string detect_graph, detect_pattern, detect_cert;
    int det_d = 3, det_s = 5, det_p = 1, det_k = 1;
    auto* cmd_detect = app.add_subcommand("detect", "search for an induced pattern; exit 1 when found");
    cmd_detect->add_option("--graph", detect_graph)->required()->check(CLI::ExistingFile);
    cmd_detect->add_option("--pattern", detect_pattern, "star, path, cycle, S_p, T_p, kS_p, kT_p")->required();
    cmd_detect->add_option("--d", det_d, "star leaves");
    cmd_detect->add_option("--s", det_s, "path order / minimum cycle length");
    cmd_detect->add_option("--p", det_p);
    cmd_detect->add_option("--k", det_k);
    cmd_detect->add_option("--cert-out", detect_cert);
    cmd_detect->callback([&] {
        report.hash_input(detect_graph);
        Graph g = read_gr_file(detect_graph);
        auto c = detect(g, detect_pattern, det_d, det_s, det_p, det_k);
        report.outputs["found"] = c.has_value();
        if (c) {
            code = certificate_exit(report, *c, detect_cert, globals);
            return;
        }
        emit(report, globals);
    });

    // decompose
    DecomposeArgs dec;
    auto* cmd_dec = app.add_subcommand("decompose", "build a tree decomposition or a certificate");
    cmd_dec->add_option("--graph", dec.graph)->required()->check(CLI::ExistingFile);
    cmd_dec->add_option("--strategy", dec.strategy, "star-path, backbone, cograph, heuristic, exact")
        ->check(CLI::IsMember({"star-path", "backbone", "cograph", "heuristic", "exact"}));
    cmd_dec->add_option("--d", dec.d);
    cmd_dec->add_option("--s", dec.s);
    cmd_dec->add_option("--p", dec.p);
    cmd_dec->add_option("--k", dec.k);
    cmd_dec->add_flag("--strict", dec.strict, "search exactly for the forbidden patterns after success");
    cmd_dec->add_option("-o,--out", dec.out, "output .td");
    cmd_dec->add_option("--cert-out", dec.cert_out, "certificate JSON");
    cmd_dec->callback([&] {
        report.hash_input(dec.graph);
        Graph g = read_gr_file(dec.graph);
        SearchBudget budget;
        DecompositionOrCertificate res;
        std::optional<long long> bound;
        if (dec.strategy == "star-path") {
            res = starpath_decompose(g, dec.d, dec.s, StarPathOptions{dec.strict}, budget);
            bound = static_cast<long long>(dec.d - 1) * (dec.s - 2);
        } else if (dec.strategy == "backbone") {
            res = decompose_k(g, dec.d, dec.p, dec.k, BackboneOptions{dec.strict}, budget);
            bound = decompose_k_bound(dec.d, dec.p, dec.k);
        } else if (dec.strategy == "cograph") {
            auto ct = build_cotree(g);
            if (auto* c = std::get_if<Certificate>(&ct)) res = *c;
            else {
                res = decompose_cotree(std::get<Cotree>(ct));
                bound = std::max(ibn_cotree(std::get<Cotree>(ct)), g.order() > 0 ? 1 : 0);
            }
        } else if (dec.strategy == "exact") {
            res = exact_width_td(g, globals.threads());
        } else {
            res = heuristic_td(g);
        }
        if (auto* c = std::get_if<Certificate>(&res)) {
            code = certificate_exit(report, *c, dec.cert_out, globals);
            return;
        }
        const auto& td = std::get<TreeDecomposition>(res);
        int alpha = independence_number(g, td, globals.threads());
        report.outputs["strategy"] = dec.strategy;
        report.outputs["alpha"] = alpha;
        report.outputs["width"] = width(td);
        report.outputs["bags"] = td.node_count();
        if (bound) report.bounds.push_back({"alpha(T) <= class bound", alpha, *bound});
        write_td_output(report, td, dec.out);
        emit(report, globals);
    });

    // validate
    std::string val_graph, val_td;
    auto* cmd_val = app.add_subcommand("validate", "check a .td against a .gr; exit 2 names the failed axiom");
    cmd_val->add_option("--graph", val_graph)->required()->check(CLI::ExistingFile);
    cmd_val->add_option("--td", val_td)->required()->check(CLI::ExistingFile);
    cmd_val->callback([&] {
        report.hash_input(val_graph);
        report.hash_input(val_td);
        Graph g = read_gr_file(val_graph);
        TreeDecomposition td = read_td_file(val_td);
        auto v = validate(g, td);
        report.outputs["valid"] = v.ok;
        if (!v.ok) {
            report.outputs["axiom"] = axiom_name(v.axiom);
            report.outputs["witness"] = v.witness;
            emit(report, globals);
            std::cerr << "invalid decomposition: " << axiom_name(v.axiom) << ": " << v.witness << '\n';
            code = kExitInput;
            return;
        }
        report.outputs["width"] = width(td);
        report.outputs["alpha"] = independence_number(g, td, globals.threads());
        emit(report, globals);
    });

    // oracle
    std::string oracle_measure, oracle_graph, oracle_weights;
    bool oracle_reference = false;
    auto* cmd_oracle = app.add_subcommand("oracle", "exact tin, tw, alpha, ibn or mwis of a small graph");
    cmd_oracle->add_option("measure", oracle_measure)->required()->check(CLI::IsMember({"tin", "tw", "alpha", "ibn", "mwis"}));
    cmd_oracle->add_option("graph", oracle_graph)->required()->check(CLI::ExistingFile);
    cmd_oracle->add_option("--weights", oracle_weights, "weights JSON for mwis");
    cmd_oracle->add_flag("--reference", oracle_reference, "use the serial permutation search for tin/tw");
    cmd_oracle->callback([&] {
        report.hash_input(oracle_graph);
        Graph g = read_gr_file(oracle_graph);
        Json& out = report.outputs;
        if (oracle_measure == "tin" || oracle_measure == "tw") {
            auto m = oracle_measure == "tin" ? OrderingMeasure::Independence : OrderingMeasure::Width;
            auto r = oracle_reference ? ordering_reference(g, m) : ordering_dp(g, m, globals.threads());
            out["value"] = r.value;
            out["ordering"] = r.ordering;
        } else if (oracle_measure == "alpha") {
            auto s = max_independent_set(g, g.all_vertices());
            out["value"] = s.size();
            out["set"] = s;
        } else if (oracle_measure == "ibn") {
            SearchBudget budget;
            auto b = ibn_witness(g, budget);
            out["value"] = b.size();
            out["left"] = b.left;
            out["right"] = b.right;
        } else {
            if (oracle_weights.empty()) throw InputError("mwis needs --weights");
            report.hash_input(oracle_weights);
            auto w = weights_from_json(read_json_file(oracle_weights), g.order());
            auto s = mwis_exact(g, w);
            out["weight"] = weight_to_json(s.weight);
            out["set"] = s.vertices;
        }
        emit(report, globals);
    });

    // lift
    std::string lift_host, lift_td, lift_family, lift_out;
    auto* cmd_lift = app.add_subcommand("lift", "decompose an intersection graph from a host decomposition");
    cmd_lift->add_option("--host", lift_host)->required()->check(CLI::ExistingFile);
    cmd_lift->add_option("--td", lift_td)->required()->check(CLI::ExistingFile);
    cmd_lift->add_option("--family", lift_family, "JSON array of member vertex arrays")->required()->check(CLI::ExistingFile);
    cmd_lift->add_option("-o,--out", lift_out);
    cmd_lift->callback([&] {
        for (const auto* f : {&lift_host, &lift_td, &lift_family}) report.hash_input(*f);
        SubgraphFamily fam{read_gr_file(lift_host), {}};
        fam.members = vertex_lists_from_json(read_json_file(lift_family), fam.host.order(), "family");
        TreeDecomposition host_td = read_td_file(lift_td);
        TreeDecomposition td = lift_decomposition(fam, host_td, globals.threads());
        int alpha = independence_number(intersection_graph(fam), td, globals.threads());
        report.outputs["alpha"] = alpha;
        report.outputs["host_width"] = width(host_td);
        report.bounds.push_back({"alpha(T) <= tw(host T) + 1", alpha, width(host_td) + 1});
        write_td_output(report, td, lift_out);
        emit(report, globals);
    });

    // line-td
    std::string line_graph_path, line_td_path, line_out, line_graph_out;
    auto* cmd_line = app.add_subcommand("line-td", "decompose L(G) from a decomposition of G");
    cmd_line->add_option("--graph", line_graph_path)->required()->check(CLI::ExistingFile);
    cmd_line->add_option("--td", line_td_path, "host .td (min-fill heuristic if absent)")->check(CLI::ExistingFile);
    cmd_line->add_option("-o,--out", line_out);
    cmd_line->add_option("--line-out", line_graph_out, "write L(G) as .gr");
    cmd_line->callback([&] {
        report.hash_input(line_graph_path);
        Graph g = read_gr_file(line_graph_path);
        std::optional<TreeDecomposition> host;
        if (!line_td_path.empty()) {
            report.hash_input(line_td_path);
            host = read_td_file(line_td_path);
        }
        auto ld = line_decomposition(g, host, globals.threads());
        int alpha = independence_number(ld.line.graph, ld.td, globals.threads());
        report.outputs["alpha"] = alpha;
        report.outputs["host_width"] = ld.host_width;
        report.outputs["edge_of"] = ld.line.edge_of;
        report.bounds.push_back({"alpha(T) <= tw(host T) + 1", alpha, ld.host_width + 1});
        if (!line_graph_out.empty()) write_gr_file(line_graph_out, ld.line.graph);
        write_td_output(report, ld.td, line_out);
        emit(report, globals);
    });

    // cograph
    std::string co_graph, co_td_out, co_cotree_out;
    auto* cmd_co = app.add_subcommand("cograph", "cotree, tin and an optimal decomposition of a P4-free graph");
    cmd_co->add_option("--graph", co_graph)->required()->check(CLI::ExistingFile);
    cmd_co->add_option("--td-out", co_td_out);
    cmd_co->add_option("--cotree-out", co_cotree_out);
    cmd_co->callback([&] {
        report.hash_input(co_graph);
        Graph g = read_gr_file(co_graph);
        auto res = build_cotree(g);
        if (auto* c = std::get_if<Certificate>(&res)) {
            code = certificate_exit(report, *c, "", globals);
            return;
        }
        const auto& ct = std::get<Cotree>(res);
        int tin = ct.root < 0 ? 0 : std::max(ibn_cotree(ct), 1);
        report.outputs["alpha"] = alpha_cotree(ct);
        report.outputs["ibn"] = ibn_cotree(ct);
        report.outputs["tin"] = tin;
        if (!co_cotree_out.empty()) {
            std::ofstream out(co_cotree_out);
            if (!out) throw InputError("cannot write " + co_cotree_out);
            out << cotree_to_json(ct).dump(2) << '\n';
        } else {
            report.outputs["cotree"] = cotree_to_json(ct);
        }
        if (!co_td_out.empty()) {
            auto td = decompose_cotree(ct);
            int alpha = independence_number(g, td, globals.threads());
            report.bounds.push_back({"alpha(T) <= max{ibn, 1}", alpha, tin});
            write_td_output(report, td, co_td_out);
        }
        emit(report, globals);
    });

    // mwis
    std::string mw_graph, mw_td, mw_weights, mw_hint;
    auto* cmd_mw = app.add_subcommand("mwis", "maximum weight independent set by decomposition DP");
    cmd_mw->add_option("--graph", mw_graph)->required()->check(CLI::ExistingFile);
    cmd_mw->add_option("--td", mw_td)->check(CLI::ExistingFile);
    cmd_mw->add_option("--weights", mw_weights)->required()->check(CLI::ExistingFile);
    cmd_mw->add_option("--hint", mw_hint, "star-path:<d>,<s> or backbone:<d>,<p>[,<k>]");
    cmd_mw->callback([&] {
        report.hash_input(mw_graph);
        report.hash_input(mw_weights);
        WeightedInstance inst{read_gr_file(mw_graph), {}};
        inst.weights = weights_from_json(read_json_file(mw_weights), inst.graph.order());
        WeightedSet best;
        std::string strategy;
        if (!mw_td.empty()) {
            report.hash_input(mw_td);
            best = solve(inst, read_td_file(mw_td), globals.threads());
            strategy = "given";
        } else {
            std::optional<ClassHint> hint;
            if (!mw_hint.empty()) {
                auto colon = mw_hint.find(':');
                std::string kind = mw_hint.substr(0, colon);
                std::vector<int> xs;
                std::stringstream rest(colon == std::string::npos ? "" : mw_hint.substr(colon + 1));
                for (std::string tok; std::getline(rest, tok, ',');) xs.push_back(std::stoi(tok));
                ClassHint h;
                if (kind == "star-path" && xs.size() == 2) {
                    h.kind = ClassHint::Kind::StarPath;
                    h.d = xs[0];
                    h.s = xs[1];
                } else if (kind == "backbone" && (xs.size() == 2 || xs.size() == 3)) {
                    h.kind = ClassHint::Kind::Backbone;
                    h.d = xs[0];
                    h.p = xs[1];
                    h.k = xs.size() == 3 ? xs[2] : 1;
                } else {
                    throw InputError("malformed --hint '" + mw_hint + "'");
                }
                hint = h;
            }
            auto r = solve_auto(inst, hint, globals.threads());
            best = r.best;
            strategy = r.strategy;
            report.outputs["td_alpha"] = r.td_alpha;
            if (r.refutation) report.outputs["refutation"] = certificate_to_json(*r.refutation);
        }
        report.outputs["weight"] = weight_to_json(best.weight);
        report.outputs["set"] = best.vertices;
        report.outputs["strategy"] = strategy;
        emit(report, globals);
    });

    // verify-paper
    auto* cmd_verify = app.add_subcommand("verify-paper", "run the nine acceptance checks");
    cmd_verify->callback([&] {
        verify::Acceptance acc({globals.seed, globals.threads()});
        bool all = true;
        Json results = Json::array();
        acc.run_all([&](const verify::CriterionResult& r) {
            std::cerr << verify::format_line(r) << '\n';
            all = all && r.pass;
            results.push_back({{"id", r.id}, {"title", r.title}, {"pass", r.pass}, {"detail", r.detail}});
        });
        report.outputs["criteria"] = results;
        report.outputs["all_pass"] = all;
        emit(report, globals);
        if (!all) code = kExitInternal;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kExitInput;
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget: " << e.what() << '\n';
        return kExitBudget;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitInternal;
    }
    return code;
}
