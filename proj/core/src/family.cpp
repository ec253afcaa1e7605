#include "famlab/family.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace famlab {

Block make_block(std::vector<int> vertices) {
    std::sort(vertices.begin(), vertices.end());
    return vertices;
}

int intersection_size(const Block& a, const Block& b) {
    int count = 0;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j]) {
            ++i;
        } else if (a[i] > b[j]) {
            ++j;
        } else {
            ++count;
            ++i;
            ++j;
        }
    }
    return count;
}

std::vector<int> SetFamily::vertex_set() const {
    std::set<int> verts;
    for (const Block& b : blocks) verts.insert(b.begin(), b.end());
    return {verts.begin(), verts.end()};
}

int SetFamily::vertex_count() const { return static_cast<int>(vertex_set().size()); }

std::map<int, int> SetFamily::degrees() const {
    std::map<int, int> deg;
    for (const Block& b : blocks)
        for (int v : b) ++deg[v];
    return deg;
}

int SetFamily::max_degree() const {
    int best = 0;
    for (const auto& [v, d] : degrees()) best = std::max(best, d);
    return best;
}

std::vector<Violation> SetFamily::validate() const {
    std::vector<Violation> out;
    if (k < 1) {
        out.push_back({-1, "uniformity", "k must be a positive integer"});
        return out;
    }
    for (int i = 0; i < length(); ++i) {
        const Block& b = blocks[i];
        if (static_cast<int>(b.size()) != k) {
            std::ostringstream msg;
            msg << "block has " << b.size() << " vertices, expected " << k;
            out.push_back({i, "uniformity", msg.str()});
        }
        for (int v : b) {
            if (v < 1) {
                out.push_back({i, "vertex-id", "vertex ids must be >= 1"});
                break;
            }
        }
        for (std::size_t j = 1; j < b.size(); ++j) {
            if (b[j] <= b[j - 1]) {
                out.push_back({i, "block-order",
                               b[j] == b[j - 1] ? "duplicate vertex in block"
                                                : "block vertices must be sorted ascending"});
                break;
            }
        }
    }
    std::set<Block> seen;
    for (int i = 0; i < length(); ++i) {
        Block sorted = blocks[i];
        std::sort(sorted.begin(), sorted.end());
        if (!seen.insert(sorted).second)
            out.push_back({i, "duplicate-block", "block repeats an earlier block"});
    }
    return out;
}

bool SetFamily::is_intersecting() const {
    require_valid(*this);
    for (std::size_t i = 0; i < blocks.size(); ++i)
        for (std::size_t j = i + 1; j < blocks.size(); ++j)
            if (intersection_size(blocks[i], blocks[j]) == 0) return false;
    return true;
}

std::vector<std::vector<int>> SetFamily::pairwise_intersections() const {
    const int n = length();
    std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) {
        m[i][i] = k;
        for (int j = i + 1; j < n; ++j)
            m[i][j] = m[j][i] = intersection_size(blocks[i], blocks[j]);
    }
    return m;
}

SetFamily SetFamily::normalized() const {
    std::map<int, int> relabel;
    for (int v : vertex_set()) {
        int next = static_cast<int>(relabel.size()) + 1;
        relabel.emplace(v, next);
    }
    SetFamily out;
    out.k = k;
    out.comment = comment;
    out.blocks.reserve(blocks.size());
    for (const Block& b : blocks) {
        Block nb;
        nb.reserve(b.size());
        for (int v : b) nb.push_back(relabel.at(v));
        std::sort(nb.begin(), nb.end());
        out.blocks.push_back(std::move(nb));
    }
    return out;
}

void require_valid(const SetFamily& f) {
    auto violations = f.validate();
    if (violations.empty()) return;
    const Violation& v = violations.front();
    std::ostringstream msg;
    msg << "invalid family: " << v.rule;
    if (v.block_index >= 0) msg << " (block " << v.block_index << ")";
    msg << ": " << v.message;
    throw std::invalid_argument(msg.str());
}

}  // namespace famlab
