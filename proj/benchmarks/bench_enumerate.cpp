#include <benchmark/benchmark.h>

#include "famlab/enumerate.hpp"

namespace {

void BM_EnumerateK3Intersecting(benchmark::State& state) {
    famlab::EnumerationConstraints c;
    c.k = 3;
    c.max_blocks = static_cast<int>(state.range(0));
    c.intersecting = true;
    for (auto _ : state)
        benchmark::DoNotOptimize(famlab::enumerate_families(c).classes.size());
}
BENCHMARK(BM_EnumerateK3Intersecting)->DenseRange(3, 5, 1)->Unit(benchmark::kMillisecond);

void BM_VerifyLength4Claim(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(famlab::verify_length4_claim().class_count);
}
BENCHMARK(BM_VerifyLength4Claim)->Unit(benchmark::kMillisecond);

void BM_Q4CaseSearch(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(famlab::q4_case_search().max_candidate_tau);
}
BENCHMARK(BM_Q4CaseSearch)->Unit(benchmark::kMillisecond);

}  // namespace
