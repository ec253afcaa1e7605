#include <benchmark/benchmark.h>

#include "famlab/constructors.hpp"
#include "famlab/solver.hpp"

namespace {

void BM_ExactTauMk(benchmark::State& state) {
    famlab::SetFamily f = famlab::build_mk(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(famlab::exact_tau(f).tau);
}
BENCHMARK(BM_ExactTauMk)->DenseRange(4, 12, 4);

void BM_ExactTauDegree3(benchmark::State& state) {
    famlab::SetFamily f = famlab::build_degree3_family(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(famlab::exact_tau(f).tau);
}
BENCHMARK(BM_ExactTauDegree3)->Arg(2)->Arg(3);

void BM_ExactTauWitnessFamily(benchmark::State& state) {
    famlab::SetFamily f = famlab::q4_witness_family();
    for (auto _ : state) benchmark::DoNotOptimize(famlab::exact_tau(f).tau);
}
BENCHMARK(BM_ExactTauWitnessFamily);

void BM_MinTransversalsMk5(benchmark::State& state) {
    famlab::SetFamily f = famlab::build_mk(5);
    for (auto _ : state) benchmark::DoNotOptimize(famlab::enumerate_min_transversals(f).size());
}
BENCHMARK(BM_MinTransversalsMk5);

void BM_TransversalFamilyTau(benchmark::State& state) {
    famlab::SetFamily tf = famlab::transversal_family(famlab::build_mk(5));
    for (auto _ : state) benchmark::DoNotOptimize(famlab::exact_tau(tf).tau);
}
BENCHMARK(BM_TransversalFamilyTau);

}  // namespace
