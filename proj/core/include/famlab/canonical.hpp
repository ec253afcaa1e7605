#pragma once

#include <map>
#include <optional>
#include <vector>

#include "famlab/family.hpp"

namespace famlab {

struct CanonicalForm {
    // Minimal relabeled block list (labels 1..n, each block sorted,
    // list sorted); equal for two families iff they are isomorphic.
    std::vector<Block> canonical_blocks;
    // One vertex bijection achieving it: original id -> canonical label.
    std::map<int, int> certificate;
};

// Deterministic, relabeling-invariant canonical form. Exact backtracking
// over vertex orderings pruned by iterated degree/incidence partition
// refinement; no invariant hashing.
CanonicalForm canonical_form(const SetFamily& f);

// Equal canonical forms, with quick rejections on (k, length, vertex
// count, degree multiset, intersection-size multiset).
bool is_isomorphic(const SetFamily& a, const SetFamily& b);

// Vertex bijection a -> b when isomorphic.
std::optional<std::map<int, int>> isomorphism_map(const SetFamily& a, const SetFamily& b);

}  // namespace famlab
