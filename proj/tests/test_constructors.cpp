#include "doctest.h"

#include <set>

#include "famlab/constructors.hpp"
#include "famlab/io.hpp"

using namespace famlab;

TEST_CASE("build_mk goldens") {
    CHECK(build_mk(2).blocks == std::vector<Block>{{1, 2}, {1, 3}, {2, 3}});
    CHECK(build_mk(4).blocks == std::vector<Block>{{1, 2, 3, 4},
                                                   {1, 5, 6, 7},
                                                   {2, 5, 8, 9},
                                                   {3, 6, 8, 10},
                                                   {4, 7, 9, 10}});
    CHECK(build_mk(7).vertex_count() == 28);
}

TEST_CASE("build_mk structural invariants") {
    for (int k = 2; k <= 9; ++k) {
        SetFamily f = build_mk(k);
        CHECK(f.is_valid());
        CHECK(f.length() == k + 1);
        CHECK(f.vertex_count() == k * (k + 1) / 2);
        for (const auto& [v, d] : f.degrees()) CHECK(d == 2);
        auto m = f.pairwise_intersections();
        for (int i = 0; i < f.length(); ++i)
            for (int j = i + 1; j < f.length(); ++j) CHECK(m[i][j] == 1);
    }
    CHECK_THROWS_AS(build_mk(1), std::invalid_argument);
    CHECK_THROWS_AS(build_mk(0), std::invalid_argument);
}

TEST_CASE("build_mk is deterministic byte for byte") {
    CHECK(to_fam(build_mk(6)) == to_fam(build_mk(6)));
    CHECK(to_family_json(build_mk(6)) == to_family_json(build_mk(6)));
}

TEST_CASE("one-factorization of mk(3) golden") {
    OneFactorization fact = build_one_factorization(3);
    std::set<std::vector<int>> got(fact.transversals.begin(), fact.transversals.end());
    std::set<std::vector<int>> want = {{3, 4}, {2, 5}, {1, 6}};
    CHECK(got == want);
}

TEST_CASE("one-factorization invariants for odd k") {
    for (int k : {3, 5, 7, 9, 11}) {
        OneFactorization fact = build_one_factorization(k);
        REQUIRE(static_cast<int>(fact.transversals.size()) == k);

        std::set<int> used;
        for (const auto& t : fact.transversals) {
            CHECK(static_cast<int>(t.size()) == (k + 1) / 2);
            for (int v : t) CHECK(used.insert(v).second);  // pairwise disjoint
            for (const Block& b : fact.family.blocks) {
                bool hit = false;
                for (int v : t)
                    if (std::binary_search(b.begin(), b.end(), v)) hit = true;
                CHECK(hit);
            }
        }
        // all k(k+1)/2 vertices used exactly once = all block-index pairs
        CHECK(static_cast<int>(used.size()) == fact.family.vertex_count());
    }
    CHECK_THROWS_AS(build_one_factorization(4), std::invalid_argument);
    CHECK_THROWS_AS(build_one_factorization(1), std::invalid_argument);
}

TEST_CASE("fano plane golden") {
    SetFamily f = fano_plane();
    CHECK(f.blocks == std::vector<Block>{{1, 2, 3},
                                         {1, 4, 5},
                                         {1, 6, 7},
                                         {2, 4, 6},
                                         {2, 5, 7},
                                         {3, 4, 7},
                                         {3, 5, 6}});
    CHECK(f.is_intersecting());
    for (const auto& [v, d] : f.degrees()) CHECK(d == 3);
}

TEST_CASE("degree-3 family") {
    CHECK(build_degree3_family(2) == fano_plane());

    SetFamily f = build_degree3_family(3);
    CHECK(f.k == 7);
    CHECK(f.length() == 15);
    CHECK(f.vertex_count() == 35);
    CHECK(f.is_valid());
    CHECK(f.is_intersecting());
    for (const auto& [v, d] : f.degrees()) CHECK(d == 3);

    CHECK_THROWS_AS(build_degree3_family(1), std::invalid_argument);
}

TEST_CASE("q4 witness family golden") {
    SetFamily f = q4_witness_family();
    CHECK(f.k == 4);
    CHECK(f.length() == 9);
    CHECK(f.vertex_count() == 11);
    CHECK(f.is_intersecting());
    CHECK(f.blocks == std::vector<Block>{{1, 2, 3, 4},
                                         {1, 5, 6, 7},
                                         {2, 5, 8, 9},
                                         {3, 6, 8, 10},
                                         {4, 7, 9, 10},
                                         {1, 8, 9, 11},
                                         {2, 6, 7, 11},
                                         {3, 4, 5, 11},
                                         {1, 2, 5, 10}});
    SetFamily head = f;
    head.blocks.resize(5);
    CHECK(head == build_mk(4));
}
