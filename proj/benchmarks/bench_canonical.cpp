#include <benchmark/benchmark.h>

#include "famlab/canonical.hpp"
#include "famlab/constructors.hpp"

namespace {

void BM_CanonicalMk(benchmark::State& state) {
    famlab::SetFamily f = famlab::build_mk(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(famlab::canonical_form(f).canonical_blocks.size());
}
BENCHMARK(BM_CanonicalMk)->DenseRange(3, 6, 1);

void BM_CanonicalFano(benchmark::State& state) {
    famlab::SetFamily f = famlab::fano_plane();
    for (auto _ : state)
        benchmark::DoNotOptimize(famlab::canonical_form(f).canonical_blocks.size());
}
BENCHMARK(BM_CanonicalFano);

void BM_CanonicalWitnessFamily(benchmark::State& state) {
    famlab::SetFamily f = famlab::q4_witness_family();
    for (auto _ : state)
        benchmark::DoNotOptimize(famlab::canonical_form(f).canonical_blocks.size());
}
BENCHMARK(BM_CanonicalWitnessFamily);

void BM_IsIsomorphicMk4(benchmark::State& state) {
    famlab::SetFamily a = famlab::build_mk(4);
    famlab::SetFamily b = a;
    for (auto& blk : b.blocks)
        for (auto& v : blk) v += 1;
    for (auto _ : state) benchmark::DoNotOptimize(famlab::is_isomorphic(a, b));
}
BENCHMARK(BM_IsIsomorphicMk4);

}  // namespace
