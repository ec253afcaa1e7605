#include "famlab/constructors.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace famlab {

SetFamily build_mk(int k) {
    if (k < 2) throw std::invalid_argument("build_mk requires k >= 2");
    SetFamily fam;
    fam.k = k;
    std::ostringstream comment;
    comment << "mk(" << k << ")";
    fam.comment = comment.str();

    std::map<int, int> degree;
    Block first(k);
    for (int v = 1; v <= k; ++v) {
        first[v - 1] = v;
        degree[v] = 1;
    }
    fam.blocks.push_back(std::move(first));
    int next_fresh = k + 1;

    for (int m = 1; m <= k; ++m) {
        Block b;
        b.reserve(k);
        for (int i = 0; i < m; ++i) {
            int pick = 0;
            for (int v : fam.blocks[i]) {
                if (degree[v] == 1) {
                    pick = v;
                    break;
                }
            }
            b.push_back(pick);
        }
        for (int j = 0; j < k - m; ++j) b.push_back(next_fresh++);
        for (int v : b) ++degree[v];
        std::sort(b.begin(), b.end());
        fam.blocks.push_back(std::move(b));
    }
    return fam;
}

OneFactorization build_one_factorization(int k) {
    if (k < 3 || k % 2 == 0)
        throw std::invalid_argument("build_one_factorization requires odd k >= 3");
    OneFactorization out;
    out.family = build_mk(k);

    // Each vertex lies in exactly two blocks; key it by that index pair.
    std::map<std::pair<int, int>, int> vertex_of_pair;
    {
        std::map<int, std::vector<int>> blocks_of;
        for (int i = 0; i < out.family.length(); ++i)
            for (int v : out.family.blocks[i]) blocks_of[v].push_back(i + 1);
        for (const auto& [v, idxs] : blocks_of)
            vertex_of_pair[{idxs[0], idxs[1]}] = v;
    }

    auto vertex_for = [&](int a, int b) {
        if (a > b) std::swap(a, b);
        return vertex_of_pair.at({a, b});
    };

    for (int r = 0; r < k; ++r) {
        std::vector<int> t;
        t.push_back(vertex_for(k + 1, r + 1));
        for (int i = 1; i <= (k - 1) / 2; ++i) {
            int a = (r + i) % k + 1;
            int b = ((r - i) % k + k) % k + 1;
            t.push_back(vertex_for(a, b));
        }
        std::sort(t.begin(), t.end());
        out.transversals.push_back(std::move(t));
    }
    return out;
}

SetFamily fano_plane() {
    SetFamily fam;
    fam.k = 3;
    fam.comment = "fano plane";
    fam.blocks = {{1, 2, 3}, {1, 4, 5}, {1, 6, 7}, {2, 4, 6}, {2, 5, 7}, {3, 4, 7}, {3, 5, 6}};
    return fam;
}

SetFamily build_degree3_family(int m) {
    if (m < 2) throw std::invalid_argument("build_degree3_family requires m >= 2");
    if (m == 2) return fano_plane();

    const int k = (1 << m) - 1;
    SetFamily inner = build_degree3_family(m - 1);
    OneFactorization fact = build_one_factorization(k);

    SetFamily fam = fact.family;
    std::ostringstream comment;
    comment << "degree3(" << m << ")";
    fam.comment = comment.str();

    const int offset = k * (k + 1) / 2;  // keeps inner labels disjoint from M_k's
    for (int i = 0; i < k; ++i) {
        Block b = fact.transversals[i];
        for (int v : inner.blocks[i]) b.push_back(v + offset);
        std::sort(b.begin(), b.end());
        fam.blocks.push_back(std::move(b));
    }
    return fam;
}

SetFamily q4_witness_family() {
    SetFamily fam;
    fam.k = 4;
    fam.comment = "9-block witness for q(4) <= 9";
    fam.blocks = {{1, 2, 3, 4}, {1, 5, 6, 7},  {2, 5, 8, 9},
                  {3, 6, 8, 10}, {4, 7, 9, 10}, {1, 8, 9, 11},
                  {2, 6, 7, 11}, {3, 4, 5, 11}, {1, 2, 5, 10}};
    return fam;
}

}  // namespace famlab
