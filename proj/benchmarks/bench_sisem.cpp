#include <benchmark/benchmark.h>

#include "sisem/builders.hpp"
#include "sisem/demo.hpp"

namespace {

using namespace sisem;

CMatrix e1() { return gallery_find("E1")->matrix; }
CMatrix j2_one() { return gallery_find("J2-1")->matrix; }

void BM_Mul(benchmark::State& state) {
    const CMatrix a = e1();
    const CMatrix b = adjoint(a);
    for (auto _ : state) benchmark::DoNotOptimize(mul(a, b));
}
BENCHMARK(BM_Mul);

void BM_Svalues(benchmark::State& state) {
    const CMatrix a = e1();
    for (auto _ : state) benchmark::DoNotOptimize(svalues(a));
}
BENCHMARK(BM_Svalues);

void BM_Enumerate(benchmark::State& state) {
    const CMatrix a = j2_one();
    for (auto _ : state)
        benchmark::DoNotOptimize(enumerate_semigroup(a, static_cast<int>(state.range(0))));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Enumerate)->Arg(6)->Arg(8)->Arg(10);

void BM_SiScan(benchmark::State& state) {
    const CMatrix a = j2_one();
    const SemigroupTable table = enumerate_semigroup(a, 8);
    for (auto _ : state) benchmark::DoNotOptimize(si_scan(a, 4, table));
}
BENCHMARK(BM_SiScan);

void BM_SolveBilinear(benchmark::State& state) {
    const CMatrix a = e1();
    const SemigroupTable table = enumerate_semigroup(a, 8);
    const Word w{Letter::G};
    for (auto _ : state) benchmark::DoNotOptimize(solve_bilinear(a, w, table));
}
BENCHMARK(BM_SolveBilinear);

void BM_Classify(benchmark::State& state) {
    const CMatrix a = e1();
    for (auto _ : state) benchmark::DoNotOptimize(classify_si(a));
}
BENCHMARK(BM_Classify);

void BM_Demo(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(run_demo());
}
BENCHMARK(BM_Demo)->Unit(benchmark::kMillisecond)->Iterations(1);

}  // namespace

BENCHMARK_MAIN();
