#include "famlab/canonical.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

namespace famlab {

namespace {

struct Instance {
    int n = 0, block_count = 0;
    std::vector<int> ids;                        // vertex index -> original id
    std::vector<std::vector<int>> blocks;        // block -> vertex indices
    std::vector<std::vector<int>> vertex_blocks; // vertex index -> block indices
    std::vector<int> twin;                       // id of the vertex's block-membership class
};

Instance build_instance(const SetFamily& f) {
    Instance g;
    g.ids = f.vertex_set();
    g.n = static_cast<int>(g.ids.size());
    g.block_count = f.length();
    std::map<int, int> index;
    for (int i = 0; i < g.n; ++i) index[g.ids[i]] = i;
    g.blocks.resize(g.block_count);
    g.vertex_blocks.resize(g.n);
    for (int b = 0; b < g.block_count; ++b) {
        for (int v : f.blocks[b]) {
            int idx = index[v];
            g.blocks[b].push_back(idx);
            g.vertex_blocks[idx].push_back(b);
        }
    }
    // vertices with identical membership are interchangeable by an
    // automorphism; the search branches on one per class
    g.twin.resize(g.n);
    std::map<std::vector<int>, int> classes;
    for (int v = 0; v < g.n; ++v)
        g.twin[v] = classes.emplace(g.vertex_blocks[v], static_cast<int>(classes.size()))
                        .first->second;
    return g;
}

// One alternating refinement pass; colors are reassigned as ranks of the
// sorted signatures, so they depend only on structure, never on input
// labels. Returns true when anything changed.
bool refine_step(const Instance& g, std::vector<int>& vcol, std::vector<int>& bcol) {
    using Sig = std::pair<int, std::vector<int>>;
    bool changed = false;

    {
        std::vector<Sig> sig(g.block_count);
        for (int b = 0; b < g.block_count; ++b) {
            std::vector<int> member_cols;
            member_cols.reserve(g.blocks[b].size());
            for (int v : g.blocks[b]) member_cols.push_back(vcol[v]);
            std::sort(member_cols.begin(), member_cols.end());
            sig[b] = {bcol[b], std::move(member_cols)};
        }
        std::vector<Sig> distinct(sig);
        std::sort(distinct.begin(), distinct.end());
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
        for (int b = 0; b < g.block_count; ++b) {
            int rank = static_cast<int>(
                std::lower_bound(distinct.begin(), distinct.end(), sig[b]) - distinct.begin());
            if (rank != bcol[b]) changed = true;
            bcol[b] = rank;
        }
    }
    {
        std::vector<Sig> sig(g.n);
        for (int v = 0; v < g.n; ++v) {
            std::vector<int> container_cols;
            container_cols.reserve(g.vertex_blocks[v].size());
            for (int b : g.vertex_blocks[v]) container_cols.push_back(bcol[b]);
            std::sort(container_cols.begin(), container_cols.end());
            sig[v] = {vcol[v], std::move(container_cols)};
        }
        std::vector<Sig> distinct(sig);
        std::sort(distinct.begin(), distinct.end());
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
        for (int v = 0; v < g.n; ++v) {
            int rank = static_cast<int>(
                std::lower_bound(distinct.begin(), distinct.end(), sig[v]) - distinct.begin());
            if (rank != vcol[v]) changed = true;
            vcol[v] = rank;
        }
    }
    return changed;
}

void refine(const Instance& g, std::vector<int>& vcol, std::vector<int>& bcol) {
    while (refine_step(g, vcol, bcol)) {
    }
}

struct CanonSearch {
    const Instance& g;
    std::vector<Block> best;
    std::vector<int> best_order;  // vertex index -> label-1
    bool have_best = false;

    explicit CanonSearch(const Instance& g_) : g(g_) {}

    void leaf(const std::vector<int>& vcol) {
        std::vector<Block> candidate(g.block_count);
        for (int b = 0; b < g.block_count; ++b) {
            Block blk;
            blk.reserve(g.blocks[b].size());
            for (int v : g.blocks[b]) blk.push_back(vcol[v] + 1);
            std::sort(blk.begin(), blk.end());
            candidate[b] = std::move(blk);
        }
        std::sort(candidate.begin(), candidate.end());
        if (!have_best || candidate < best) {
            best = std::move(candidate);
            best_order = vcol;
            have_best = true;
        }
    }

    void run(std::vector<int> vcol, std::vector<int> bcol) {
        refine(g, vcol, bcol);

        // target cell: the lowest color class with more than one vertex
        int target = -1;
        {
            std::vector<int> count(g.n + 1, 0);
            for (int v = 0; v < g.n; ++v) ++count[vcol[v]];
            for (int c = 0; c <= g.n; ++c) {
                if (count[c] > 1) {
                    target = c;
                    break;
                }
            }
        }
        if (target < 0) {
            leaf(vcol);
            return;
        }
        std::set<int> branched_twins;
        for (int v = 0; v < g.n; ++v) {
            if (vcol[v] != target) continue;
            if (!branched_twins.insert(g.twin[v]).second) continue;
            std::vector<int> child(vcol);
            for (int u = 0; u < g.n; ++u)
                if (child[u] >= target && u != v) ++child[u];
            run(std::move(child), bcol);
        }
    }
};

std::vector<int> sorted_degrees(const SetFamily& f) {
    std::vector<int> degs;
    for (const auto& [v, d] : f.degrees()) degs.push_back(d);
    std::sort(degs.begin(), degs.end());
    return degs;
}

std::vector<int> sorted_intersections(const SetFamily& f) {
    std::vector<int> sizes;
    const int n = f.length();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            sizes.push_back(intersection_size(f.blocks[i], f.blocks[j]));
    std::sort(sizes.begin(), sizes.end());
    return sizes;
}

}  // namespace

CanonicalForm canonical_form(const SetFamily& f) {
    require_valid(f);
    Instance g = build_instance(f);
    CanonicalForm out;
    if (g.n == 0) return out;

    CanonSearch search(g);
    search.run(std::vector<int>(g.n, 0), std::vector<int>(g.block_count, 0));
    out.canonical_blocks = std::move(search.best);
    for (int v = 0; v < g.n; ++v) out.certificate[g.ids[v]] = search.best_order[v] + 1;
    return out;
}

bool is_isomorphic(const SetFamily& a, const SetFamily& b) {
    require_valid(a);
    require_valid(b);
    if (a.k != b.k || a.length() != b.length()) return false;
    if (a.vertex_count() != b.vertex_count()) return false;
    if (sorted_degrees(a) != sorted_degrees(b)) return false;
    if (sorted_intersections(a) != sorted_intersections(b)) return false;
    return canonical_form(a).canonical_blocks == canonical_form(b).canonical_blocks;
}

std::optional<std::map<int, int>> isomorphism_map(const SetFamily& a, const SetFamily& b) {
    if (!is_isomorphic(a, b)) return std::nullopt;
    CanonicalForm ca = canonical_form(a);
    CanonicalForm cb = canonical_form(b);
    std::map<int, int> label_to_b;
    for (const auto& [id, label] : cb.certificate) label_to_b[label] = id;
    std::map<int, int> out;
    for (const auto& [id, label] : ca.certificate) out[id] = label_to_b.at(label);
    return out;
}

}  // namespace famlab
