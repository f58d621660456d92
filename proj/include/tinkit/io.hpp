#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "tinkit/graph.hpp"
#include "tinkit/patterns.hpp"
#include "tinkit/tdecomp.hpp"
#include "tinkit/weights.hpp"

namespace tinkit {

using Json = nlohmann::json;

// PACE-2017 formats, 1-indexed on disk. Parse errors are InputError with
// "<source>:<line>: ..." messages.
Graph read_gr(std::istream& in, const std::string& source = "<stream>");
Graph read_gr_file(const std::string& path);
/// Edges in sorted order, so equal graphs serialize identically.
void write_gr(std::ostream& out, const Graph& g);
void write_gr_file(const std::string& path, const Graph& g);

TreeDecomposition read_td(std::istream& in, const std::string& source = "<stream>");
TreeDecomposition read_td_file(const std::string& path);
void write_td(std::ostream& out, const TreeDecomposition& td);
void write_td_file(const std::string& path, const TreeDecomposition& td);

std::string to_gr_string(const Graph& g);
std::string to_td_string(const TreeDecomposition& td);

Json certificate_to_json(const Certificate& c);
/// Parses and re-validates against `host`; a failing embedding is an
/// InputError.
Certificate certificate_from_json(const Json& j, const Graph& host);

Json weight_to_json(const Weight& w);
/// Accepts integers, "a/b" strings, or {"num": a, "den": b} objects.
Weight weight_from_json(const Json& j);
WeightVector weights_from_json(const Json& j, int order);

/// Array of arrays of host vertices (0-indexed).
std::vector<std::vector<int>> vertex_lists_from_json(const Json& j, int order, const std::string& what);

Json graph_to_json(const Graph& g);
Json read_json_file(const std::string& path);
std::string read_text_file(const std::string& path);

std::uint64_t fnv1a64(const std::string& bytes);
std::string hex64(std::uint64_t x);

struct BoundCheck {
    std::string name;
    long long achieved = 0;
    long long bound = 0;
    bool ok() const noexcept { return achieved <= bound; }
};

/// Summary printed by every CLI command.
struct RunReport {
    std::string command;
    std::vector<std::pair<std::string, std::string>> input_hashes;  // path, fnv1a64 hex
    Json outputs = Json::object();
    std::vector<BoundCheck> bounds;
    double wall_seconds = 0.0;

    void hash_input(const std::string& path);
    /// Throws InternalError if any bound does not hold.
    Json to_json() const;
};

}  // namespace tinkit
