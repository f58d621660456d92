#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "tinkit/errors.hpp"
#include "tinkit/graph.hpp"

namespace tinkit {

enum class PatternKind { Star, Path, Cycle, Sp, Tp, KSp, KTp, Generic };

const char* kind_name(PatternKind k);
std::optional<PatternKind> kind_from_name(std::string_view name);

/// Witness that the host contains a forbidden induced subgraph.
///
/// params: Star {d}, Path {s}, Cycle {l}, Sp {p}, Tp {p}, KSp {k, p},
/// KTp {k, p}, Generic {}. embedding[i] is the host vertex playing pattern
/// vertex i, with pattern vertices ordered as in pattern_graph.
struct Certificate {
    PatternKind kind = PatternKind::Generic;
    std::vector<int> params;
    std::vector<int> embedding;
    bool validated = false;
    /// Pattern of a Generic certificate.
    Graph generic;

    std::string describe() const;
};

/// Star: centre 0 then leaves; Path/Cycle: in order; Sp = gen_spqr(p,p,p);
/// Tp = gen_tpqr(p,p,p); KSp/KTp: k copies one after another.
Graph pattern_graph(PatternKind kind, const std::vector<int>& params);
Graph pattern_of(const Certificate& c);

/// True iff `embedding` is injective into the host and reproduces the
/// pattern's adjacency exactly on every pair.
bool embeds_induced(const Graph& host, const Graph& pattern, const std::vector<int>& embedding);
/// Re-checks the embedding and records the outcome in c.validated.
bool revalidate(const Graph& host, Certificate& c);
/// Builds and validates; a failing embedding is an InternalError.
Certificate certify(const Graph& host, PatternKind kind, std::vector<int> params, std::vector<int> embedding);

/// Induced embedding of H into G[within] by backtracking over bitset
/// domains.
std::optional<std::vector<int>> find_induced_embedding(const Graph& g, const Graph& h, SearchBudget& budget);
std::optional<std::vector<int>> find_induced_embedding(const Graph& g, const Graph& h, const VertexSet& within,
                                                       SearchBudget& budget);
/// Certificate wrapper: Generic kind carrying H.
std::optional<Certificate> find_induced_pattern(const Graph& g, const Graph& h);

/// Induced K_{1,d} centred at the lowest-index vertex that admits one.
std::optional<Certificate> find_induced_star(const Graph& g, int d, SearchBudget& budget);
std::optional<Certificate> find_induced_star(const Graph& g, int d, const VertexSet& within, SearchBudget& budget);
std::optional<Certificate> find_induced_star(const Graph& g, int d);

/// Induced path on exactly L vertices (a prefix of any longer one), or none.
std::optional<Path> find_induced_path_geq(const Graph& g, int L, SearchBudget& budget);
std::optional<Path> find_induced_path_geq(const Graph& g, int L, const VertexSet& within, SearchBudget& budget);
std::optional<Path> find_induced_path_geq(const Graph& g, int L);

/// Induced cycle of length >= qmin, vertices in cyclic order starting at
/// its lowest vertex.
std::optional<Path> find_long_induced_cycle(const Graph& g, int qmin, SearchBudget& budget);
std::optional<Path> find_long_induced_cycle(const Graph& g, int qmin, const VertexSet& within, SearchBudget& budget);
std::optional<Path> find_long_induced_cycle(const Graph& g, int qmin);

VertexSet neighbors_on_path(const Graph& g, const Path& p, int v);
/// Positions i with p.vertices[i] adjacent to v, ascending.
std::vector<int> neighbor_positions(const Graph& g, const Path& p, int v);

/// Maximal subpaths whose interiors avoid N(v). For a cycle the first
/// vertex is not repeated in `p`; each cyclic segment lists its vertices
/// walking forward.
std::vector<Path> segments_of_path(const Graph& g, const Path& p, int v, bool cyclic);

template <class T>
using OrCertificate = std::variant<T, Certificate>;

/// Inclusive position range [first, last] on a path.
struct PathInterval {
    int first = 0;
    int last = -1;
    int count() const noexcept { return last - first + 1; }
};

/// A segment of P with respect to v holding at least p - 1 non-neighbours
/// of v, or an induced K_{1,d} on v and one neighbour in each block.
/// Requires |P| >= dp.
OrCertificate<Path> long_segment(const Graph& g, const Path& p, int v, int blocks, int d);

/// Shortest subpath of P spanning N(v) ∩ V(P). When it has more than
/// 2(d-1)(q-2) vertices: an induced cycle of length >= q through v, or an
/// induced K_{1,d} if no gap is long enough. d < 2 is rejected.
OrCertificate<PathInterval> path_interval(const Graph& g, const Path& p, int v, int q, int d);

/// Interval P_H of P with N(H) ⊆ N(V(P_H)) obtained by widening P_v by q
/// on both sides, or the induced cycle through a violating u.
OrCertificate<PathInterval> component_attachment_interval(const Graph& g, const Path& p, const VertexSet& h, int v,
                                                          int q, int d);

}  // namespace tinkit
