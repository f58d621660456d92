#pragma once

#include <cstdint>
#include <vector>

#include "tinkit/graph.hpp"

namespace tinkit::verify {

inline constexpr int kCanonicalMaxOrder = 8;

/// Isomorphism invariant for n ≤ 8: the largest upper-triangle adjacency
/// code over all vertex orders that list degrees in non-increasing order.
/// The order n is folded into the top bits.
std::uint64_t canonical_code(const Graph& g);
Graph canonical_form(const Graph& g);
bool isomorphic_small(const Graph& a, const Graph& b);

/// One representative per isomorphism class on exactly n vertices, n ≤ 7,
/// in canonical form, sorted by code.
std::vector<Graph> all_graphs(int n);

}  // namespace tinkit::verify
