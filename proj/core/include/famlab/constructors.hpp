#pragma once

#include <vector>

#include "famlab/family.hpp"

namespace famlab {

// The canonical intersecting k-family M_k: k+1 blocks on k(k+1)/2
// vertices, every vertex of degree 2, every two blocks meeting in
// exactly one vertex. Deterministic labeling: block m+1 takes the
// smallest degree-1 vertex of each earlier block, then the next k-m
// fresh integers. Requires k >= 2.
SetFamily build_mk(int k);

struct OneFactorization {
    SetFamily family;                            // build_mk(k)
    std::vector<std::vector<int>> transversals;  // k pairwise-disjoint covers
};

// For odd k >= 3: k disjoint transversals of M_k, each of size (k+1)/2,
// partitioning the vertex set. Each M_k vertex is the unique common
// vertex of two blocks; the transversals are the rounds of the
// round-robin (circle method) one-factorization of the complete graph
// on the k+1 block indices: round r pairs index k+1 with r+1 and
// ((r+i) mod k)+1 with ((r-i) mod k)+1 for i = 1..(k-1)/2.
OneFactorization build_one_factorization(int k);

// Projective plane of order 2 with a pinned labeling.
SetFamily fano_plane();

// For k = 2^m - 1: a k-uniform intersecting family of length 2k+1 with
// every vertex of degree exactly 3. Base m=2 is the Fano plane; the
// step glues blocks of the (m-1)-family onto the disjoint transversals
// of M_k. Requires m >= 2.
SetFamily build_degree3_family(int m);

// The 9-block intersecting 4-family of transversal size 4 witnessing
// q(4) <= 9; its first five blocks equal build_mk(4).
SetFamily q4_witness_family();

}  // namespace famlab
