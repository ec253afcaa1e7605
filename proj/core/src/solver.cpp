#include "famlab/solver.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <map>
#include <sstream>

namespace famlab {

NodeBudgetExceeded::NodeBudgetExceeded(std::uint64_t n)
    : std::runtime_error("solver node budget exceeded"), nodes(n) {}

namespace {

constexpr int kMaxBlocks = 64;

// Block incidence packed into one word per vertex.
struct Compact {
    std::vector<int> ids;                      // vertex index -> original id, ascending
    std::vector<std::uint64_t> hits;           // vertex index -> mask of blocks containing it
    std::vector<std::vector<int>> block_verts; // block -> vertex indices, ascending
    std::uint64_t all_blocks = 0;
    int n = 0;
    int block_count = 0;
};

Compact compact(const SetFamily& f) {
    require_valid(f);
    if (f.length() > kMaxBlocks) {
        std::ostringstream msg;
        msg << "solver supports at most " << kMaxBlocks << " blocks, got " << f.length();
        throw std::invalid_argument(msg.str());
    }
    Compact c;
    c.ids = f.vertex_set();
    c.n = static_cast<int>(c.ids.size());
    c.block_count = f.length();
    c.all_blocks = c.block_count == 64 ? ~0ULL : (1ULL << c.block_count) - 1;
    std::map<int, int> index;
    for (int i = 0; i < c.n; ++i) index[c.ids[i]] = i;
    c.hits.assign(c.n, 0);
    c.block_verts.assign(c.block_count, {});
    for (int b = 0; b < c.block_count; ++b) {
        for (int v : f.blocks[b]) {
            int idx = index[v];
            c.hits[idx] |= 1ULL << b;
            c.block_verts[b].push_back(idx);
        }
    }
    return c;
}

struct TauSearch {
    const Compact& c;
    std::vector<char> forbidden;
    int best;
    std::uint64_t nodes = 0;
    std::uint64_t budget;

    TauSearch(const Compact& c_, int upper, std::uint64_t budget_)
        : c(c_), forbidden(c_.n, 0), best(upper), budget(budget_) {}

    void run(std::uint64_t uncovered, int chosen) {
        if (++nodes > budget) throw NodeBudgetExceeded(nodes);
        if (uncovered == 0) {
            best = chosen;  // guarded by the pruning below, so strictly better
            return;
        }
        int uncovered_count = std::popcount(uncovered);
        int max_hits = 0;
        for (int v = 0; v < c.n; ++v) {
            if (forbidden[v]) continue;
            max_hits = std::max(max_hits, std::popcount(c.hits[v] & uncovered));
        }
        if (max_hits == 0) return;
        if (chosen + (uncovered_count + max_hits - 1) / max_hits >= best) return;

        // fail-first: the uncovered block with fewest undecided vertices
        int pick = -1, pick_size = std::numeric_limits<int>::max();
        for (int b = 0; b < c.block_count; ++b) {
            if (!(uncovered & (1ULL << b))) continue;
            int free_count = 0;
            for (int v : c.block_verts[b])
                if (!forbidden[v]) ++free_count;
            if (free_count < pick_size) {
                pick_size = free_count;
                pick = b;
            }
        }
        if (pick_size == 0) return;

        std::vector<int> branched;
        for (int v : c.block_verts[pick]) {
            if (forbidden[v]) continue;
            run(uncovered & ~c.hits[v], chosen + 1);
            forbidden[v] = 1;  // later branches search covers without v
            branched.push_back(v);
        }
        for (int v : branched) forbidden[v] = 0;
    }
};

// DFS over vertices in ascending id order, include-branch first, so
// covers are produced in lexicographic order of their sorted sequences.
struct CoverEnumerator {
    const Compact& c;
    int target;
    std::size_t limit;
    std::vector<std::uint64_t> suffix_cover;  // OR of hits[v..]
    std::vector<int> chosen;
    std::vector<std::vector<int>>& out;

    CoverEnumerator(const Compact& c_, int target_, std::size_t limit_,
                    std::vector<std::vector<int>>& out_)
        : c(c_), target(target_), limit(limit_), out(out_) {
        suffix_cover.assign(c.n + 1, 0);
        for (int v = c.n - 1; v >= 0; --v) suffix_cover[v] = suffix_cover[v + 1] | c.hits[v];
    }

    bool full() const { return out.size() >= limit; }

    void run(int v, std::uint64_t uncovered) {
        if (full()) return;
        if (static_cast<int>(chosen.size()) == target) {
            if (uncovered == 0) {
                std::vector<int> cover;
                cover.reserve(chosen.size());
                for (int idx : chosen) cover.push_back(c.ids[idx]);
                out.push_back(std::move(cover));
            }
            return;
        }
        if (v == c.n) return;
        if (c.n - v < target - static_cast<int>(chosen.size())) return;
        if (uncovered & ~suffix_cover[v]) return;  // some block is out of reach

        chosen.push_back(v);
        run(v + 1, uncovered & ~c.hits[v]);
        chosen.pop_back();
        run(v + 1, uncovered);
    }
};

std::vector<std::vector<int>> covers_of_size(const Compact& c, int t, std::size_t limit) {
    std::vector<std::vector<int>> out;
    if (t < 0) return out;
    if (c.block_count == 0 && t == 0) {
        out.push_back({});
        return out;
    }
    if (t > c.n) return out;
    CoverEnumerator e(c, t, limit, out);
    e.run(0, c.all_blocks);
    return out;
}

}  // namespace

std::vector<int> greedy_cover(const SetFamily& f) {
    Compact c = compact(f);
    std::vector<int> cover;
    std::uint64_t uncovered = c.all_blocks;
    while (uncovered) {
        int pick = -1, pick_hits = 0;
        for (int v = 0; v < c.n; ++v) {
            int h = std::popcount(c.hits[v] & uncovered);
            if (h > pick_hits) {
                pick_hits = h;
                pick = v;
            }
        }
        cover.push_back(c.ids[pick]);
        uncovered &= ~c.hits[pick];
    }
    std::sort(cover.begin(), cover.end());
    return cover;
}

TransversalResult exact_tau(const SetFamily& f, std::optional<std::uint64_t> node_budget) {
    Compact c = compact(f);
    TransversalResult r;
    if (c.block_count == 0) return r;

    int max_degree = 0;
    for (int v = 0; v < c.n; ++v) max_degree = std::max(max_degree, std::popcount(c.hits[v]));
    r.degree_lower_bound = (c.block_count + max_degree - 1) / max_degree;

    int upper = static_cast<int>(greedy_cover(f).size());
    TauSearch search(c, upper, node_budget.value_or(std::numeric_limits<std::uint64_t>::max()));
    search.run(c.all_blocks, 0);
    r.tau = search.best;
    r.search_nodes = search.nodes;

    auto first = covers_of_size(c, r.tau, 1);
    r.witness = first.at(0);
    return r;
}

std::vector<std::vector<int>> enumerate_covers_of_size(const SetFamily& f, int t) {
    if (t < 0) throw std::invalid_argument("cover size must be >= 0");
    Compact c = compact(f);
    return covers_of_size(c, t, std::numeric_limits<std::size_t>::max());
}

std::vector<std::vector<int>> enumerate_min_transversals(const SetFamily& f) {
    return enumerate_covers_of_size(f, exact_tau(f).tau);
}

SetFamily transversal_family(const SetFamily& f) {
    require_valid(f);
    if (f.length() == 0) throw std::invalid_argument("transversal_family rejects the empty family");
    TransversalResult r = exact_tau(f);
    SetFamily out;
    out.k = r.tau;
    out.blocks = enumerate_covers_of_size(f, r.tau);
    return out;
}

}  // namespace famlab
