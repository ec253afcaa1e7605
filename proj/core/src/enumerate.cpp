#include "famlab/enumerate.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <sstream>
#include <utility>

#include "famlab/canonical.hpp"
#include "famlab/constructors.hpp"
#include "famlab/parallel.hpp"
#include "famlab/solver.hpp"

namespace famlab {

EnumerationBudgetExceeded::EnumerationBudgetExceeded(SearchReport p)
    : std::runtime_error("enumeration candidate budget exceeded"), partial(std::move(p)) {}

int EnumerationConstraints::resolved_max_vertices() const {
    return max_vertices > 0 ? max_vertices : k * max_blocks;
}

void EnumerationConstraints::check() const {
    if (k < 1) throw std::invalid_argument("constraints: k must be >= 1");
    if (max_blocks < 1) throw std::invalid_argument("constraints: max_blocks must be >= 1");
    if (resolved_max_vertices() < k)
        throw std::invalid_argument("constraints: max_vertices must be >= k");
    if (exact_blocks && (*exact_blocks < 1 || *exact_blocks > max_blocks))
        throw std::invalid_argument("constraints: exact_blocks must lie in 1..max_blocks");
    if (min_degree && *min_degree < 1)
        throw std::invalid_argument("constraints: min_degree must be >= 1");
    if (max_degree && *max_degree < 1)
        throw std::invalid_argument("constraints: max_degree must be >= 1");
    if (min_degree && max_degree && *min_degree > *max_degree)
        throw std::invalid_argument("constraints: min_degree > max_degree");
    if (exact_pairwise_intersection &&
        (*exact_pairwise_intersection < 0 || *exact_pairwise_intersection > k))
        throw std::invalid_argument("constraints: exact_pairwise_intersection must lie in 0..k");
    if (min_tau && *min_tau < 0) throw std::invalid_argument("constraints: min_tau must be >= 0");
    if (max_tau && *max_tau < 0) throw std::invalid_argument("constraints: max_tau must be >= 0");
    if (min_tau && max_tau && *min_tau > *max_tau)
        throw std::invalid_argument("constraints: min_tau > max_tau");
    if (candidate_budget < 1) throw std::invalid_argument("constraints: budget must be >= 1");
}

namespace {

using BlockList = std::vector<Block>;

struct ExtensionScan {
    std::vector<Block> blocks;
    std::uint64_t visited = 0;  // every subset looked at, counted toward the budget
    bool hit_cap = false;
};

// All admissible new blocks for a canonically labeled family on
// vertices 1..n: any k-subset drawing fresh vertices contiguously from
// n+1 upward. Fresh labels are interchangeable, so this loses no
// isomorphism class. Stops once visit_cap subsets have been scanned.
ExtensionScan extensions(const BlockList& rep, const EnumerationConstraints& c, int maxv,
                         std::uint64_t visit_cap) {
    int n = 0;
    for (const Block& b : rep)
        for (int v : b) n = std::max(n, v);
    std::vector<int> degree(n + 1, 0);
    for (const Block& b : rep)
        for (int v : b) ++degree[v];

    ExtensionScan scan;
    for (int fresh = 0; fresh <= c.k; ++fresh) {
        if (n + fresh > maxv) break;
        const int old_count = c.k - fresh;
        if (old_count > n) continue;

        std::vector<int> comb(old_count);
        for (int i = 0; i < old_count; ++i) comb[i] = i + 1;
        for (;;) {
            if (++scan.visited > visit_cap) {
                scan.hit_cap = true;
                return scan;
            }
            Block s(comb.begin(), comb.end());
            for (int j = 0; j < fresh; ++j) s.push_back(n + 1 + j);

            bool ok = fresh > 0 || !std::binary_search(rep.begin(), rep.end(), s);
            if (ok && c.max_degree) {
                for (int i = 0; i < old_count && ok; ++i)
                    ok = degree[s[i]] + 1 <= *c.max_degree;
            }
            if (ok && (c.intersecting || c.exact_pairwise_intersection)) {
                for (const Block& b : rep) {
                    int isz = intersection_size(s, b);
                    if (c.intersecting && isz == 0) {
                        ok = false;
                        break;
                    }
                    if (c.exact_pairwise_intersection && isz != *c.exact_pairwise_intersection) {
                        ok = false;
                        break;
                    }
                }
            }
            if (ok) scan.blocks.push_back(std::move(s));

            if (old_count == 0) break;
            int i = old_count - 1;
            while (i >= 0 && comb[i] == n - (old_count - 1 - i)) --i;
            if (i < 0) break;
            ++comb[i];
            for (int j = i + 1; j < old_count; ++j) comb[j] = comb[j - 1] + 1;
        }
    }
    return scan;
}

bool passes_final_filters(const SetFamily& fam, const EnumerationConstraints& c) {
    if (c.exact_blocks && fam.length() != *c.exact_blocks) return false;
    if (c.min_degree || c.max_degree) {
        for (const auto& [v, d] : fam.degrees()) {
            if (c.min_degree && d < *c.min_degree) return false;
            if (c.max_degree && d > *c.max_degree) return false;
        }
    }
    return true;
}

// Monotone constraints are re-validated on every emitted representative;
// a failure here is a generator bug, not a filter outcome.
void recheck_invariants(const SetFamily& fam, const EnumerationConstraints& c, int maxv) {
    require_valid(fam);
    if (fam.vertex_count() > maxv)
        throw std::logic_error("enumerator emitted a family over the vertex budget");
    if (c.intersecting && !fam.is_intersecting())
        throw std::logic_error("enumerator emitted a non-intersecting family");
    if (c.exact_pairwise_intersection) {
        auto m = fam.pairwise_intersections();
        for (int i = 0; i < fam.length(); ++i)
            for (int j = i + 1; j < fam.length(); ++j)
                if (m[i][j] != *c.exact_pairwise_intersection)
                    throw std::logic_error("enumerator emitted a wrong pairwise intersection");
    }
}

SearchReport assemble_report(const EnumerationConstraints& c, int maxv,
                             const std::vector<std::vector<BlockList>>& reps_by_level,
                             std::vector<LevelStats> levels, std::uint64_t candidates,
                             bool exceeded) {
    SearchReport report;
    report.constraints = c;
    report.levels = std::move(levels);
    report.candidates_examined = candidates;
    report.budget_exceeded = exceeded;

    std::vector<SetFamily> fams;
    for (const auto& level : reps_by_level) {
        for (const BlockList& rep : level) {
            SetFamily fam;
            fam.k = c.k;
            fam.blocks = rep;
            recheck_invariants(fam, c, maxv);
            if (!passes_final_filters(fam, c)) continue;
            fams.push_back(std::move(fam));
        }
    }
    std::vector<int> taus(fams.size(), 0);
    parallel_for(fams.size(), [&](std::size_t i) { taus[i] = exact_tau(fams[i]).tau; });
    for (std::size_t i = 0; i < fams.size(); ++i) {
        if (c.min_tau && taus[i] < *c.min_tau) continue;
        if (c.max_tau && taus[i] > *c.max_tau) continue;
        report.classes.push_back({std::move(fams[i]), taus[i]});
    }
    return report;
}

}  // namespace

SearchReport enumerate_families(const EnumerationConstraints& c) {
    c.check();
    const int maxv = c.resolved_max_vertices();

    std::vector<std::vector<BlockList>> reps_by_level;
    std::vector<LevelStats> levels;
    std::uint64_t candidates_examined = 0;

    // level 1: the single block 1..k
    {
        Block first(c.k);
        for (int i = 0; i < c.k; ++i) first[i] = i + 1;
        reps_by_level.push_back({BlockList{first}});
        levels.push_back({1, 1, 1});
        candidates_examined = 1;
    }

    for (int level = 2; level <= c.max_blocks; ++level) {
        const auto& parents = reps_by_level.back();

        // each parent's scan is capped by the remaining budget, so the
        // abort decision is independent of scheduling
        const std::uint64_t remaining = c.candidate_budget > candidates_examined
                                            ? c.candidate_budget - candidates_examined
                                            : 0;
        std::vector<ExtensionScan> exts(parents.size());
        parallel_for(parents.size(),
                     [&](std::size_t i) { exts[i] = extensions(parents[i], c, maxv, remaining); });

        std::uint64_t level_visited = 0, level_candidates = 0;
        bool hit_cap = false;
        for (const auto& e : exts) {
            level_visited += e.visited;
            level_candidates += e.blocks.size();
            hit_cap = hit_cap || e.hit_cap;
        }
        candidates_examined += level_visited;
        if (hit_cap || candidates_examined > c.candidate_budget) {
            levels.push_back({level, level_visited, 0});
            throw EnumerationBudgetExceeded(assemble_report(
                c, maxv, reps_by_level, std::move(levels), candidates_examined, true));
        }

        // flatten (parent, extension) pairs, canonicalize in parallel
        std::vector<std::pair<std::size_t, std::size_t>> flat;
        flat.reserve(level_candidates);
        for (std::size_t i = 0; i < exts.size(); ++i)
            for (std::size_t j = 0; j < exts[i].blocks.size(); ++j) flat.emplace_back(i, j);

        std::vector<BlockList> canon(flat.size());
        parallel_for(flat.size(), [&](std::size_t t) {
            auto [i, j] = flat[t];
            SetFamily fam;
            fam.k = c.k;
            fam.blocks = parents[i];
            fam.blocks.push_back(exts[i].blocks[j]);
            canon[t] = canonical_form(fam).canonical_blocks;
        });

        std::set<BlockList> unique(canon.begin(), canon.end());
        std::vector<BlockList> next(unique.begin(), unique.end());
        levels.push_back({level, level_visited, next.size()});
        if (next.empty()) break;
        reps_by_level.push_back(std::move(next));
    }

    return assemble_report(c, maxv, reps_by_level, std::move(levels), candidates_examined, false);
}

Length4Verdict verify_length4_claim(std::optional<std::uint64_t> budget) {
    EnumerationConstraints c;
    c.k = 4;
    c.max_blocks = 4;
    c.intersecting = true;
    if (budget) c.candidate_budget = *budget;
    SearchReport report = enumerate_families(c);
    Length4Verdict v;
    v.class_count = static_cast<int>(report.classes.size());
    for (const auto& cls : report.classes) v.max_tau = std::max(v.max_tau, cls.tau);
    v.pass = v.max_tau <= 2;
    return v;
}

UniquenessVerdict verify_mk_uniqueness(int k, std::optional<std::uint64_t> budget) {
    if (k != 3 && k != 4) throw std::invalid_argument("verify_mk_uniqueness expects k in {3,4}");
    EnumerationConstraints c;
    c.k = k;
    c.max_blocks = k + 1;
    c.max_vertices = k * (k + 1) / 2;
    c.intersecting = true;
    c.min_degree = 2;
    c.max_degree = 2;
    c.min_tau = (k + 2) / 2;
    c.max_tau = (k + 2) / 2;
    if (budget) c.candidate_budget = *budget;
    SearchReport report = enumerate_families(c);
    UniquenessVerdict v;
    v.class_count = static_cast<int>(report.classes.size());
    v.isomorphic_to_mk =
        v.class_count == 1 && is_isomorphic(report.classes[0].representative, build_mk(k));
    v.pass = v.class_count == 1 && v.isomorphic_to_mk;
    return v;
}

Q3Verdict verify_q3_lower_bound(const std::optional<SetFamily>& witness,
                                std::optional<std::uint64_t> budget) {
    EnumerationConstraints c;
    c.k = 3;
    c.max_blocks = 5;
    c.intersecting = true;
    if (budget) c.candidate_budget = *budget;
    SearchReport report = enumerate_families(c);

    Q3Verdict v;
    v.class_count = static_cast<int>(report.classes.size());
    for (const auto& cls : report.classes) {
        v.max_tau = std::max(v.max_tau, cls.tau);
        if (cls.tau == 3) ++v.tau3_class_count;
    }

    SetFamily w;
    if (witness) {
        w = *witness;
    } else {
        w = fano_plane();
        w.blocks.pop_back();
        w.comment = "fano plane minus one line";
    }
    require_valid(w);
    v.witness_length = w.length();
    v.witness_intersecting = w.is_intersecting();
    v.witness_tau = exact_tau(w).tau;
    v.pass = v.tau3_class_count == 0 && w.k == 3 && v.witness_length == 6 &&
             v.witness_intersecting && v.witness_tau == 3;
    return v;
}

namespace {

std::uint64_t choose3(std::uint64_t n) { return n * (n - 1) * (n - 2) / 6; }

}  // namespace

Q4Verdict q4_case_search(std::optional<std::uint64_t> budget) {
    const SetFamily m4 = build_mk(4);
    const std::vector<int> verts = m4.vertex_set();  // 1..10
    const int n = static_cast<int>(verts.size());
    const int x = verts.back() + 1;  // the adjoined degree-3 vertex

    Q4Verdict v;
    auto covers3 = enumerate_covers_of_size(m4, 3);
    v.cover3_count = static_cast<int>(covers3.size());

    auto covers_m4 = [&](const std::vector<int>& vs) {
        for (const Block& b : m4.blocks) {
            bool hit = false;
            for (int u : vs)
                if (std::binary_search(b.begin(), b.end(), u)) {
                    hit = true;
                    break;
                }
            if (!hit) return false;
        }
        return true;
    };

    // (ii) a block {x, a, b, c} meets all of M_4 iff {a,b,c} covers M_4
    // (x itself hits nothing), so checking all 3-subsets pins the shape.
    v.block_shape_forced = true;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int cc = b + 1; cc < n; ++cc) {
                std::vector<int> t = {verts[a], verts[b], verts[cc]};
                bool covers = covers_m4(t);
                bool listed = std::binary_search(covers3.begin(), covers3.end(), t);
                if (covers != listed) v.block_shape_forced = false;
            }

    // a block through x with extra fresh vertices keeps <= 2 old ones,
    // and no 0-, 1- or 2-subset of M_4's vertices covers it
    v.fresh_vertex_excluded = !covers_m4({});
    for (int a = 0; a < n && v.fresh_vertex_excluded; ++a) {
        if (covers_m4({verts[a]})) v.fresh_vertex_excluded = false;
        for (int b = a + 1; b < n && v.fresh_vertex_excluded; ++b)
            if (covers_m4({verts[a], verts[b]})) v.fresh_vertex_excluded = false;
    }

    // (iii) all C(N,3) extensions of M_4 by three blocks through x
    if (budget && choose3(covers3.size()) > *budget)
        throw EnumerationBudgetExceeded(SearchReport{});
    std::vector<std::array<int, 3>> triples;
    for (int i = 0; i < v.cover3_count; ++i)
        for (int j = i + 1; j < v.cover3_count; ++j)
            for (int l = j + 1; l < v.cover3_count; ++l) triples.push_back({i, j, l});
    v.candidates_examined = triples.size();
    v.candidate_count_matches = v.candidates_examined == choose3(covers3.size());

    v.pairs_total = (n + 1) * n / 2;                 // C(11,2)
    v.pairs_upper_bound = 6 * (m4.length() + 3);     // C(4,2) * 8

    struct CandidateResult {
        int tau = 0;
        int pairs = 0;
        bool intersecting = false;
    };
    std::vector<CandidateResult> results(triples.size());
    parallel_for(triples.size(), [&](std::size_t t) {
        SetFamily fam = m4;
        for (int idx : triples[t]) {
            Block blk = covers3[idx];
            blk.push_back(x);
            fam.blocks.push_back(std::move(blk));
        }
        CandidateResult r;
        r.intersecting = fam.is_intersecting();
        r.tau = exact_tau(fam).tau;
        std::set<std::pair<int, int>> pairs;
        for (const Block& b : fam.blocks)
            for (std::size_t i = 0; i < b.size(); ++i)
                for (std::size_t j = i + 1; j < b.size(); ++j) pairs.emplace(b[i], b[j]);
        r.pairs = static_cast<int>(pairs.size());
        results[t] = r;
    });

    v.pair_bound_holds = true;
    v.min_unused_pairs = v.pairs_total;
    bool all_intersecting = true;
    for (const auto& r : results) {
        v.max_candidate_tau = std::max(v.max_candidate_tau, r.tau);
        v.max_pairs_occurring = std::max(v.max_pairs_occurring, r.pairs);
        v.min_unused_pairs = std::min(v.min_unused_pairs, v.pairs_total - r.pairs);
        if (r.pairs > v.pairs_upper_bound) v.pair_bound_holds = false;
        all_intersecting = all_intersecting && r.intersecting;
    }
    v.pass = v.block_shape_forced && v.fresh_vertex_excluded && v.candidate_count_matches &&
             all_intersecting && v.max_candidate_tau <= 3 && v.pair_bound_holds;
    return v;
}

}  // namespace famlab
