#include "doctest.h"

#include <random>

#include "famlab/canonical.hpp"
#include "famlab/constructors.hpp"
#include "oracles.hpp"

using namespace famlab;

namespace {

// replay the certificate and compare against canonical_blocks
bool certificate_sound(const SetFamily& f) {
    CanonicalForm form = canonical_form(f);
    std::vector<Block> relabeled;
    for (const Block& b : f.blocks) {
        Block nb;
        for (int v : b) nb.push_back(form.certificate.at(v));
        std::sort(nb.begin(), nb.end());
        relabeled.push_back(std::move(nb));
    }
    std::sort(relabeled.begin(), relabeled.end());
    return relabeled == form.canonical_blocks;
}

}  // namespace

TEST_CASE("canonical form is invariant under 1000 relabelings of each golden family") {
    std::mt19937 rng(424242);
    SetFamily goldens[] = {build_mk(3), build_mk(4), fano_plane(), q4_witness_family()};
    for (const SetFamily& f : goldens) {
        auto base = canonical_form(f).canonical_blocks;
        for (int i = 0; i < 1000; ++i) {
            SetFamily r = oracle::relabel(f, rng, i % 3 == 0);
            CHECK(canonical_form(r).canonical_blocks == base);
        }
    }
}

TEST_CASE("canonical form is invariant on larger families too") {
    std::mt19937 rng(5);
    for (const SetFamily& f : {build_mk(5), build_mk(6), build_degree3_family(3)}) {
        auto base = canonical_form(f).canonical_blocks;
        for (int i = 0; i < 3; ++i)
            CHECK(canonical_form(oracle::relabel(f, rng)).canonical_blocks == base);
    }
}

TEST_CASE("certificates replay to the canonical blocks") {
    CHECK(certificate_sound(build_mk(4)));
    CHECK(certificate_sound(fano_plane()));
    CHECK(certificate_sound(q4_witness_family()));
    std::mt19937 rng(17);
    for (int trial = 0; trial < 40; ++trial)
        CHECK(certificate_sound(oracle::random_family(rng, 4, 6, 11)));
}

TEST_CASE("canonical form of the empty family") {
    SetFamily empty;
    empty.k = 3;
    CHECK(canonical_form(empty).canonical_blocks.empty());
    CHECK(canonical_form(empty).certificate.empty());
}

TEST_CASE("is_isomorphic on the golden families") {
    std::mt19937 rng(31);
    CHECK(is_isomorphic(build_mk(3), oracle::relabel(build_mk(3), rng)));
    CHECK(is_isomorphic(build_mk(4), oracle::relabel(build_mk(4), rng, true)));

    // first five blocks of the witness family are mk(4)
    SetFamily head = q4_witness_family();
    head.blocks.resize(5);
    CHECK(is_isomorphic(head, build_mk(4)));
    CHECK(canonical_form(head).canonical_blocks == canonical_form(build_mk(4)).canonical_blocks);

    // the 3-regular base case is the fano plane in any labeling
    CHECK(is_isomorphic(build_degree3_family(2), oracle::relabel(fano_plane(), rng)));

    // length mismatch
    CHECK_FALSE(is_isomorphic(build_mk(3), fano_plane()));

    // degree multiset mismatch: mk(3) vs four fano lines
    SetFamily fano4 = fano_plane();
    fano4.blocks.resize(4);
    CHECK_FALSE(is_isomorphic(build_mk(3), fano4));

    // same size but different degree profile than fano: a 7-block sunflower
    SetFamily sunflower;
    sunflower.k = 3;
    sunflower.blocks = {{1, 2, 3}, {1, 4, 5}, {1, 6, 7}, {1, 2, 4}, {1, 2, 5}, {1, 2, 6}, {1, 2, 7}};
    REQUIRE(sunflower.is_valid());
    CHECK_FALSE(is_isomorphic(fano_plane(), sunflower));
    CHECK(canonical_form(fano_plane()).canonical_blocks !=
          canonical_form(sunflower).canonical_blocks);
}

TEST_CASE("is_isomorphic behaves like an equivalence relation") {
    std::mt19937 rng(77);
    SetFamily a = build_mk(4);
    SetFamily b = oracle::relabel(a, rng);
    SetFamily c = oracle::relabel(b, rng, true);
    CHECK(is_isomorphic(a, a));
    CHECK(is_isomorphic(a, b));
    CHECK(is_isomorphic(b, a));
    CHECK(is_isomorphic(b, c));
    CHECK(is_isomorphic(a, c));  // transitivity spot check

    SetFamily d = fano_plane();
    CHECK(is_isomorphic(d, d));
    CHECK_FALSE(is_isomorphic(a, d));
}

namespace {

// independent oracle: try every bijection between the vertex sets
bool iso_by_permutations(const SetFamily& a, const SetFamily& b) {
    if (a.k != b.k || a.length() != b.length()) return false;
    auto va = a.vertex_set(), vb = b.vertex_set();
    if (va.size() != vb.size()) return false;
    std::set<Block> b_blocks(b.blocks.begin(), b.blocks.end());
    std::vector<int> perm(vb);
    std::sort(perm.begin(), perm.end());
    do {
        std::map<int, int> m;
        for (std::size_t i = 0; i < va.size(); ++i) m[va[i]] = perm[i];
        bool ok = true;
        for (const Block& blk : a.blocks) {
            Block image;
            for (int v : blk) image.push_back(m[v]);
            std::sort(image.begin(), image.end());
            if (!b_blocks.count(image)) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

}  // namespace

TEST_CASE("is_isomorphic agrees with a permutation-search oracle") {
    std::mt19937 rng(2026);
    for (int trial = 0; trial < 300; ++trial) {
        SetFamily f = oracle::random_family(rng, 3, 4, 7);
        SetFamily g = trial % 2 == 0 ? oracle::relabel(f, rng)
                                     : oracle::random_family(rng, 3, 4, 7);
        CHECK(is_isomorphic(f, g) == iso_by_permutations(f, g));
    }
}

TEST_CASE("isomorphism_map maps blocks onto blocks") {
    std::mt19937 rng(123);
    SetFamily a = q4_witness_family();
    SetFamily b = oracle::relabel(a, rng, true);
    auto map = isomorphism_map(a, b);
    REQUIRE(map.has_value());
    std::set<Block> b_blocks(b.blocks.begin(), b.blocks.end());
    for (const Block& blk : a.blocks) {
        Block image;
        for (int v : blk) image.push_back(map->at(v));
        std::sort(image.begin(), image.end());
        CHECK(b_blocks.count(image) == 1);
    }
    CHECK_FALSE(isomorphism_map(build_mk(3), fano_plane()).has_value());
}
