#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "famlab/family.hpp"

namespace famlab {

struct EnumerationConstraints {
    int k = 0;
    int max_blocks = 1;
    // 0 means the trivial bound k * max_blocks.
    int max_vertices = 0;
    bool intersecting = false;
    std::optional<int> exact_blocks;
    // Degree and tau bounds apply to the finished families; only the
    // monotone side (max_degree, exact pairwise sizes) prunes during
    // generation.
    std::optional<int> min_degree;
    std::optional<int> max_degree;
    std::optional<int> exact_pairwise_intersection;
    std::optional<int> min_tau;
    std::optional<int> max_tau;
    // Upper bound on candidate blocks scanned across all levels;
    // exceeding it raises EnumerationBudgetExceeded, never a truncated
    // answer.
    std::uint64_t candidate_budget = 50'000'000ULL;

    int resolved_max_vertices() const;
    void check() const;  // throws std::invalid_argument
};

struct FamilyClass {
    SetFamily representative;  // canonically labeled
    int tau = 0;
};

struct LevelStats {
    int blocks = 0;
    std::uint64_t candidates = 0;  // candidate blocks scanned at this level
    std::uint64_t classes = 0;
};

struct SearchReport {
    EnumerationConstraints constraints;
    std::vector<FamilyClass> classes;  // one per isomorphism class, deterministic order
    std::vector<LevelStats> levels;
    std::uint64_t candidates_examined = 0;
    bool budget_exceeded = false;
};

struct EnumerationBudgetExceeded : std::runtime_error {
    SearchReport partial;
    explicit EnumerationBudgetExceeded(SearchReport p);
};

// Isomorph-free exhaustive generation: families grow block by block and
// each candidate is replaced by its canonical representative, kept only
// when that class is new. Emitted classes satisfy every constraint
// (re-validated on emission).
SearchReport enumerate_families(const EnumerationConstraints& c);

// Every intersecting 4-family with at most 4 blocks has tau <= 2.
struct Length4Verdict {
    bool pass = false;
    int class_count = 0;
    int max_tau = 0;
};
Length4Verdict verify_length4_claim(std::optional<std::uint64_t> budget = std::nullopt);

// The intersecting k-family of length <= k+1 with all degrees 2 and
// tau = ceil((k+1)/2) is unique up to isomorphism and is M_k. k in {3,4}.
struct UniquenessVerdict {
    bool pass = false;
    int class_count = 0;
    bool isomorphic_to_mk = false;
};
UniquenessVerdict verify_mk_uniqueness(int k, std::optional<std::uint64_t> budget = std::nullopt);

// No intersecting 3-family with at most 5 blocks has tau = 3, and a
// 6-block one with tau = 3 exists (default witness: the Fano plane
// minus one line), so q(3) = 6.
struct Q3Verdict {
    bool pass = false;
    int class_count = 0;
    int tau3_class_count = 0;
    int max_tau = 0;
    int witness_length = 0;
    int witness_tau = 0;
    bool witness_intersecting = false;
};
Q3Verdict verify_q3_lower_bound(const std::optional<SetFamily>& witness = std::nullopt,
                                std::optional<std::uint64_t> budget = std::nullopt);

// The structured case analysis behind q(4) > 8: every 4-block through a
// fresh vertex x that meets all of M_4 is {x} union a 3-cover of M_4,
// and every extension of M_4 by three such blocks has tau <= 3.
struct Q4Verdict {
    bool pass = false;
    int cover3_count = 0;              // size-3 covers of M_4
    bool block_shape_forced = false;   // checked over all 3-subsets of M_4's vertices
    bool fresh_vertex_excluded = false;  // <= 2 old vertices never cover M_4
    std::uint64_t candidates_examined = 0;  // C(cover3_count, 3)
    bool candidate_count_matches = false;
    int max_candidate_tau = 0;         // expected <= 3
    int pairs_total = 0;               // C(11,2) = 55
    int pairs_upper_bound = 0;         // C(4,2) * 8 = 48
    int max_pairs_occurring = 0;
    int min_unused_pairs = 0;          // expected >= 7
    bool pair_bound_holds = false;
};
Q4Verdict q4_case_search(std::optional<std::uint64_t> budget = std::nullopt);

}  // namespace famlab
