#pragma once

#include <variant>

#include "tinkit/patterns.hpp"
#include "tinkit/tdecomp.hpp"

namespace tinkit {

using DecompositionOrCertificate = std::variant<TreeDecomposition, Certificate>;

struct StarPathOptions {
    /// After a successful peel, also search exactly for K_{1,d} and P_s so
    /// that every graph outside the class yields a certificate.
    bool strict = false;
};

/// Peeling decomposer for {K_{1,d}, P_s}-free graphs, d >= 2, s >= 3.
///
/// Each component is rooted at its lowest vertex v_1. A frame at depth i
/// removes R_i = N[v_i] from its vertex set W_i; the frame's bag is
/// R_1 ∪ ... ∪ R_i along its ancestor chain. Every component H of W_i \ R_i
/// becomes a child frame on H ∪ {a}, entered through the lowest a in N(v_i)
/// with a neighbour in H. A child below depth s - 2 means v_1 ... v_{s-1}
/// plus a neighbour of v_{s-1} form an induced P_s.
///
/// Returns a valid decomposition with α ≤ (d-1)(s-2), or a validated
/// induced P_s or K_{1,d}.
DecompositionOrCertificate starpath_decompose(const Graph& g, int d, int s, const StarPathOptions& options,
                                              SearchBudget& budget);
DecompositionOrCertificate starpath_decompose(const Graph& g, int d, int s, const StarPathOptions& options = {});

/// Lowest vertex of `a` with a neighbour in `component`; InternalError when
/// none exists.
int choose_entry(const Graph& g, const VertexSet& component, const VertexSet& a);

}  // namespace tinkit
