#include "tinkit/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace tinkit {

namespace {

[[noreturn]] void fail(const std::string& source, int line, const std::string& what) {
    throw InputError(source + ":" + std::to_string(line) + ": " + what);
}

long long parse_int(const std::string& tok, const std::string& source, int line) {
    try {
        std::size_t used = 0;
        long long v = std::stoll(tok, &used);
        if (used != tok.size()) fail(source, line, "expected an integer, got '" + tok + "'");
        return v;
    } catch (const std::logic_error&) {
        fail(source, line, "expected an integer, got '" + tok + "'");
    }
}

std::vector<std::string> tokens(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> out;
    for (std::string t; in >> t;) out.push_back(t);
    return out;
}

std::ifstream open_in(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    return in;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot write " + path);
    return out;
}

}  // namespace

Graph read_gr(std::istream& in, const std::string& source) {
    std::string line;
    int lineno = 0;
    long long n = -1, m = -1;
    std::vector<Edge> edges;
    while (std::getline(in, line)) {
        ++lineno;
        auto t = tokens(line);
        if (t.empty() || t[0] == "c") continue;
        if (t[0] == "p") {
            if (n >= 0) fail(source, lineno, "second header line");
            if (t.size() != 4 || t[1] != "tw") fail(source, lineno, "header must be 'p tw <n> <m>'");
            n = parse_int(t[2], source, lineno);
            m = parse_int(t[3], source, lineno);
            if (n < 0 || m < 0) fail(source, lineno, "negative count in header");
            continue;
        }
        if (n < 0) fail(source, lineno, "edge before header");
        if (t.size() != 2) fail(source, lineno, "edge line must have two endpoints");
        long long u = parse_int(t[0], source, lineno), v = parse_int(t[1], source, lineno);
        if (u < 1 || u > n || v < 1 || v > n) fail(source, lineno, "endpoint out of range [1, " + std::to_string(n) + "]");
        if (u == v) fail(source, lineno, "self-loop at " + std::to_string(u));
        edges.emplace_back(static_cast<int>(u - 1), static_cast<int>(v - 1));
    }
    if (n < 0) fail(source, lineno, "missing 'p tw' header");
    if (static_cast<long long>(edges.size()) != m)
        fail(source, lineno, "header announces " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
    return make_graph(static_cast<int>(n), edges);
}

Graph read_gr_file(const std::string& path) {
    auto in = open_in(path);
    return read_gr(in, path);
}

void write_gr(std::ostream& out, const Graph& g) {
    auto edges = g.edges();
    out << "p tw " << g.order() << ' ' << edges.size() << '\n';
    for (auto [u, v] : edges) out << u + 1 << ' ' << v + 1 << '\n';
}

void write_gr_file(const std::string& path, const Graph& g) {
    auto out = open_out(path);
    write_gr(out, g);
}

TreeDecomposition read_td(std::istream& in, const std::string& source) {
    std::string line;
    int lineno = 0;
    long long nbags = -1, n = -1;
    TreeDecomposition td;
    std::vector<char> seen;
    while (std::getline(in, line)) {
        ++lineno;
        auto t = tokens(line);
        if (t.empty() || t[0] == "c") continue;
        if (t[0] == "s") {
            if (nbags >= 0) fail(source, lineno, "second header line");
            if (t.size() != 5 || t[1] != "td") fail(source, lineno, "header must be 's td <bags> <max bag> <n>'");
            nbags = parse_int(t[2], source, lineno);
            parse_int(t[3], source, lineno);
            n = parse_int(t[4], source, lineno);
            if (nbags < 0 || n < 0) fail(source, lineno, "negative count in header");
            td.graph_order = static_cast<int>(n);
            td.bags.assign(static_cast<std::size_t>(nbags), {});
            seen.assign(static_cast<std::size_t>(nbags), 0);
            continue;
        }
        if (nbags < 0) fail(source, lineno, "line before header");
        if (t[0] == "b") {
            if (t.size() < 2) fail(source, lineno, "bag line without id");
            long long id = parse_int(t[1], source, lineno);
            if (id < 1 || id > nbags) fail(source, lineno, "bag id out of range");
            if (seen[id - 1]) fail(source, lineno, "bag " + std::to_string(id) + " defined twice");
            seen[id - 1] = 1;
            std::vector<int> bag;
            for (std::size_t i = 2; i < t.size(); ++i) {
                long long v = parse_int(t[i], source, lineno);
                if (v < 1 || v > n) fail(source, lineno, "vertex out of range in bag");
                bag.push_back(static_cast<int>(v - 1));
            }
            std::sort(bag.begin(), bag.end());
            if (std::adjacent_find(bag.begin(), bag.end()) != bag.end()) fail(source, lineno, "repeated vertex in bag");
            td.bags[id - 1] = std::move(bag);
            continue;
        }
        if (t.size() != 2) fail(source, lineno, "tree edge line must have two bag ids");
        long long a = parse_int(t[0], source, lineno), b = parse_int(t[1], source, lineno);
        if (a < 1 || a > nbags || b < 1 || b > nbags) fail(source, lineno, "tree edge endpoint out of range");
        td.add_edge(static_cast<int>(a - 1), static_cast<int>(b - 1));
    }
    if (nbags < 0) fail(source, lineno, "missing 's td' header");
    for (std::size_t i = 0; i < seen.size(); ++i)
        if (!seen[i]) fail(source, lineno, "bag " + std::to_string(i + 1) + " never defined");
    return td;
}

TreeDecomposition read_td_file(const std::string& path) {
    auto in = open_in(path);
    return read_td(in, path);
}

void write_td(std::ostream& out, const TreeDecomposition& td) {
    std::size_t max_bag = 0;
    for (const auto& b : td.bags) max_bag = std::max(max_bag, b.size());
    out << "s td " << td.node_count() << ' ' << max_bag << ' ' << td.graph_order << '\n';
    for (int i = 0; i < td.node_count(); ++i) {
        out << "b " << i + 1;
        for (int v : td.bags[i]) out << ' ' << v + 1;
        out << '\n';
    }
    for (auto [a, b] : td.tree_edges) out << a + 1 << ' ' << b + 1 << '\n';
}

void write_td_file(const std::string& path, const TreeDecomposition& td) {
    auto out = open_out(path);
    write_td(out, td);
}

std::string to_gr_string(const Graph& g) {
    std::ostringstream out;
    write_gr(out, g);
    return out.str();
}

std::string to_td_string(const TreeDecomposition& td) {
    std::ostringstream out;
    write_td(out, td);
    return out.str();
}

Json certificate_to_json(const Certificate& c) {
    Json j{{"kind", kind_name(c.kind)}, {"params", c.params}, {"embedding", c.embedding}, {"validated", c.validated}};
    if (c.kind == PatternKind::Generic) j["pattern"] = graph_to_json(c.generic);
    return j;
}

Certificate certificate_from_json(const Json& j, const Graph& host) {
    try {
        auto kind = kind_from_name(j.at("kind").get<std::string>());
        if (!kind) throw InputError("unknown certificate kind " + j.at("kind").dump());
        Certificate c;
        c.kind = *kind;
        c.params = j.at("params").get<std::vector<int>>();
        c.embedding = j.at("embedding").get<std::vector<int>>();
        if (c.kind == PatternKind::Generic) {
            const auto& pj = j.at("pattern");
            int n = pj.at("n").get<int>();
            c.generic = make_graph(n, pj.at("edges").get<std::vector<Edge>>());
        }
        for (int v : c.embedding)
            if (v < 0 || v >= host.order()) throw InputError("certificate vertex out of range");
        if (!revalidate(host, c)) throw InputError("certificate " + c.describe() + " does not embed in the host");
        return c;
    } catch (const Json::exception& e) {
        throw InputError(std::string("malformed certificate JSON: ") + e.what());
    }
}

Json weight_to_json(const Weight& w) {
    return Json{{"num", weight_numerator(w)}, {"den", weight_denominator(w)}};
}

Weight weight_from_json(const Json& j) {
    Weight w;
    try {
        if (j.is_number_integer()) {
            w = Weight(j.get<long long>());
        } else if (j.is_string()) {
            w = Weight(j.get<std::string>());
        } else if (j.is_object()) {
            auto part = [&](const char* key) {
                const auto& x = j.at(key);
                return x.is_string() ? boost::multiprecision::cpp_int(x.get<std::string>())
                                     : boost::multiprecision::cpp_int(x.get<long long>());
            };
            auto den = part("den");
            if (den == 0) throw InputError("weight with zero denominator");
            w = Weight(part("num"), den);
        } else {
            throw InputError("weight must be an integer, \"a/b\" or {num, den}: " + j.dump());
        }
    } catch (const InputError&) {
        throw;
    } catch (const Json::exception& e) {
        throw InputError(std::string("malformed weight: ") + e.what());
    } catch (const std::exception& e) {
        // boost reports a zero denominator as a logic error
        throw InputError("malformed weight " + j.dump() + ": " + e.what());
    }
    if (w < 0) throw InputError("negative weight " + j.dump());
    return w;
}

WeightVector weights_from_json(const Json& j, int order) {
    const Json& arr = j.is_object() && j.contains("weights") ? j.at("weights") : j;
    if (!arr.is_array()) throw InputError("weights must be a JSON array");
    if (static_cast<int>(arr.size()) != order)
        throw InputError("expected " + std::to_string(order) + " weights, got " + std::to_string(arr.size()));
    WeightVector w;
    for (const auto& x : arr) w.push_back(weight_from_json(x));
    return w;
}

std::vector<std::vector<int>> vertex_lists_from_json(const Json& j, int order, const std::string& what) {
    if (!j.is_array()) throw InputError(what + " must be an array of vertex arrays");
    std::vector<std::vector<int>> out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_array()) throw InputError(what + " entry " + std::to_string(i) + " is not an array");
        std::vector<int> xs;
        for (const auto& v : j[i]) {
            if (!v.is_number_integer()) throw InputError(what + " entry " + std::to_string(i) + " has a non-integer");
            int x = v.get<int>();
            if (x < 0 || x >= order) throw InputError(what + " entry " + std::to_string(i) + " has vertex out of range");
            xs.push_back(x);
        }
        out.push_back(std::move(xs));
    }
    return out;
}

Json graph_to_json(const Graph& g) {
    Json adj = Json::array();
    for (int v = 0; v < g.order(); ++v) adj.push_back(g.neighbors(v).to_vector());
    return Json{{"n", g.order()}, {"edges", g.edges()}, {"adjacency", adj}};
}

std::string read_text_file(const std::string& path) {
    auto in = open_in(path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Json read_json_file(const std::string& path) {
    try {
        return Json::parse(read_text_file(path));
    } catch (const Json::parse_error& e) {
        throw InputError(path + ": " + e.what());
    }
}

std::uint64_t fnv1a64(const std::string& bytes) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string hex64(std::uint64_t x) {
    static const char* digits = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i, x >>= 4) s[static_cast<std::size_t>(i)] = digits[x & 15];
    return s;
}

void RunReport::hash_input(const std::string& path) {
    input_hashes.emplace_back(path, hex64(fnv1a64(read_text_file(path))));
}

Json RunReport::to_json() const {
    Json b = Json::array();
    for (const auto& c : bounds) {
        if (!c.ok())
            throw InternalError("reported bound " + c.name + " fails: " + std::to_string(c.achieved) + " > " +
                                std::to_string(c.bound));
        b.push_back({{"name", c.name}, {"achieved", c.achieved}, {"bound", c.bound}, {"holds", true}});
    }
    Json inputs = Json::object();
    for (const auto& [path, hash] : input_hashes) inputs[path] = hash;
    return Json{{"command", command}, {"inputs", inputs}, {"outputs", outputs}, {"bounds", b},
                {"wall_seconds", wall_seconds}};
}

}  // namespace tinkit
