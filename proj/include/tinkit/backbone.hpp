#pragma once

#include <vector>

#include "tinkit/patterns.hpp"
#include "tinkit/starpath.hpp"
#include "tinkit/tdecomp.hpp"

namespace tinkit {

/// Constants of the {K_{1,d}, S_p, T_p}-free construction, in checked
/// integer arithmetic.
struct ClassParams {
    int d = 0, p = 0;
    long long q = 0;               // 2d(p+1): cycles this long are excluded after removing N[P0]
    long long r = 0;               // 2(d-1)(q-2): bound on |P_v|
    long long h = 0;               // 2dq: backbone window
    long long first_path = 0;      // dp
    long long spine_path = 0;      // 6dq
    long long component_path = 0;  // d(r+p-1)
    long long bound = 0;           // 20(d-1)^4(p+1)

    static ClassParams make(int d, int p);
};

/// Bound reached by decompose_k: 6(d-1)(k-1)(p+1) + 20(d-1)^4(p+1).
long long decompose_k_bound(int d, int p, int k);

struct BackboneOptions {
    /// After a successful decomposition, search exactly for K_{1,d}, S_p and
    /// T_p (kS_p, kT_p in decompose_k) so that out-of-class inputs always
    /// yield a certificate.
    bool strict = false;
};

/// h-backbone structure of an induced path: node i has bag N[v_i ... v_{i+h-1}].
struct BackboneStructure {
    Path spine;
    int h = 0;
    TreeDecomposition td;  // path decomposition over the host order
};

/// Builds the h-backbone structure and checks it decomposes G[N[V(P)]].
/// An uncovered edge or a broken trace yields an induced cycle on more
/// than h + 2 vertices instead.
OrCertificate<BackboneStructure> build_backbone(const Graph& g, const Path& spine, int h);

/// Smallest node whose bag contains N(H), or the certificate obtained from
/// component_attachment_interval when there is none.
OrCertificate<int> attach_index(const Graph& g, const BackboneStructure& bb, const VertexSet& h, const ClassParams& cp);

/// One step of the spine-lengthening loop. F is an induced path on
/// d(r+p-1) vertices inside a component of G - N[V(spine)]. Returns a
/// strictly longer induced path, or a certificate (S_p, T_p, K_{1,d}, or a
/// long induced cycle from path_interval).
OrCertificate<Path> improve_or_certify(const Graph& g, const Path& spine, const Path& f, const ClassParams& cp);

/// Turns an induced cycle of length >= d(2p+2) disjoint from N[V(P)] into an
/// induced S_p, T_p or K_{1,d}. P is an induced path on >= dp vertices and
/// G must connect P to C.
Certificate certify_from_long_cycle(const Graph& g, const Path& p, const std::vector<int>& cycle, int d, int pp);

/// Decomposer for {K_{1,d}, S_p, T_p}-free graphs: a decomposition with
/// α ≤ 20(d-1)^4(p+1), or a validated star, S_p or T_p certificate.
DecompositionOrCertificate backbone_decompose(const Graph& g, int d, int p, const BackboneOptions& options,
                                              SearchBudget& budget);
DecompositionOrCertificate backbone_decompose(const Graph& g, int d, int p, const BackboneOptions& options = {});

/// {K_{1,d}, kS_p, kT_p}-free version: peels N[S_p] and N[T_p] k-1 times.
DecompositionOrCertificate decompose_k(const Graph& g, int d, int p, int k, const BackboneOptions& options,
                                       SearchBudget& budget);
DecompositionOrCertificate decompose_k(const Graph& g, int d, int p, int k, const BackboneOptions& options = {});

/// Rewrites a certificate found in an induced subgraph into host indices.
Certificate map_certificate(Certificate c, const Graph& host, const std::vector<int>& original_of);

}  // namespace tinkit
