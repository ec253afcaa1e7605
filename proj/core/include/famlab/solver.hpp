#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "famlab/family.hpp"

namespace famlab {

struct TransversalResult {
    int tau = 0;
    std::vector<int> witness;  // lexicographically smallest minimum cover
    int degree_lower_bound = 0;  // ceil(length / max_degree)
    std::uint64_t search_nodes = 0;
};

// Raised when exact_tau exceeds its node budget; the answer is never
// silently approximated.
struct NodeBudgetExceeded : std::runtime_error {
    std::uint64_t nodes;
    explicit NodeBudgetExceeded(std::uint64_t n);
};

// A cover built by repeatedly taking a maximum-degree vertex among the
// still-uncovered blocks (ties: smallest id).
std::vector<int> greedy_cover(const SetFamily& f);

// Exact minimum transversal via depth-first branch and bound: branch on
// the vertices of an uncovered block (fewest undecided vertices first,
// ties by lowest block index), prune when
// |partial| + ceil(uncovered / max_hits) >= best.
TransversalResult exact_tau(const SetFamily& f,
                            std::optional<std::uint64_t> node_budget = std::nullopt);

// Every cover of size exactly t (minimality not required), in
// lexicographic order of the sorted vertex sequences.
std::vector<std::vector<int>> enumerate_covers_of_size(const SetFamily& f, int t);

// The covers of size tau(f).
std::vector<std::vector<int>> enumerate_min_transversals(const SetFamily& f);

// The tau-uniform family whose blocks are the minimum transversals of f,
// over f's own vertex ids. Rejects the empty family.
SetFamily transversal_family(const SetFamily& f);

}  // namespace famlab
