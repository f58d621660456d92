#pragma once

#include <variant>
#include <vector>

#include <json.hpp>

#include "tinkit/generators.hpp"
#include "tinkit/graph.hpp"
#include "tinkit/patterns.hpp"
#include "tinkit/tdecomp.hpp"

namespace tinkit {

enum class CoKind { Leaf, Union, Join };

/// Canonical cotree: internal nodes have >= 2 children and never share a
/// label with their parent. Each node caches α and ibn of its subgraph.
struct Cotree {
    struct Node {
        CoKind kind = CoKind::Leaf;
        int vertex = -1;  // leaves only
        std::vector<int> children;
        int size = 1;  // leaves below
        int alpha = 1;
        int ibn = 0;
    };
    std::vector<Node> nodes;
    int root = -1;
    int order = 0;

    /// Leaves below `node`, in tree order.
    std::vector<int> vertices(int node) const;
};

using CotreeOrCertificate = std::variant<Cotree, Certificate>;

/// Splits by components, then by co-components; a graph that is connected
/// and co-connected yields an induced P4. O(n^2 / 64) work per tree level.
CotreeOrCertificate build_cotree(const Graph& g);

/// The graph the cotree denotes.
Graph cotree_graph(const Cotree& ct);

/// α(G1 + G2) = α(G1) + α(G2), α(G1 * G2) = max. ibn(G1 + G2) = max of
/// the ibn's; ibn(G1 * G2) also admits min{α(G1), α(G2)}, which for many
/// children becomes the second largest child α.
int alpha_cotree(const Cotree& ct);
int ibn_cotree(const Cotree& ct);

/// max{ibn(G), 1}, or the P4 certificate. The null graph gives 0.
std::variant<int, Certificate> tin_cograph(const Graph& g);

/// UNION: merge children at an empty hub. JOIN: decompose the child of
/// largest α (ties: more vertices, then lower node id) and add the other
/// children to every bag. InputError on a non-cograph.
TreeDecomposition decompose_cograph(const Graph& g);
TreeDecomposition decompose_cotree(const Cotree& ct);

/// Random canonical cotree on n leaves (2..max_children children per
/// internal node), with leaves shuffled over the vertex ids.
Cotree random_cotree(int n, Rng& rng, int max_children = 3);
Graph random_cograph(int n, Rng& rng);

nlohmann::json cotree_to_json(const Cotree& ct);

}  // namespace tinkit
