#pragma once

#include <map>
#include <string>
#include <vector>

namespace famlab {

// A block is a k-set of vertices, stored as a strictly increasing
// sequence of positive integer ids.
using Block = std::vector<int>;

// Sorts the given vertex list into block form. Duplicates are kept
// (validate() reports them); callers that need hard errors check first.
Block make_block(std::vector<int> vertices);

int intersection_size(const Block& a, const Block& b);

struct Violation {
    int block_index = -1;  // -1 for family-level violations
    std::string rule;
    std::string message;
};

// A uniform set family: an ordered list of k-blocks over integer vertices.
// Vertex ids need not be contiguous; serialization normalizes them to 1..n.
struct SetFamily {
    int k = 0;
    std::vector<Block> blocks;
    std::string comment;

    int length() const { return static_cast<int>(blocks.size()); }

    // Sorted distinct vertex ids (union of all blocks).
    std::vector<int> vertex_set() const;
    int vertex_count() const;

    // Per-vertex block counts; sum of values == k * length().
    std::map<int, int> degrees() const;
    int max_degree() const;

    // Empty iff all invariants hold: k >= 1, every block sorted/distinct/
    // positive with exactly k vertices, no two blocks equal as sets.
    std::vector<Violation> validate() const;
    bool is_valid() const { return validate().empty(); }

    // True iff every pair of blocks meets. Throws std::invalid_argument
    // on an invalid family. Empty and single-block families qualify.
    bool is_intersecting() const;

    // L x L matrix of |B_i ∩ B_j|; diagonal entries equal k.
    std::vector<std::vector<int>> pairwise_intersections() const;

    // Relabels vertices to 1..n preserving their relative order.
    SetFamily normalized() const;

    friend bool operator==(const SetFamily& a, const SetFamily& b) {
        return a.k == b.k && a.blocks == b.blocks;
    }
};

// Throws std::invalid_argument naming the first violation.
void require_valid(const SetFamily& f);

}  // namespace famlab
