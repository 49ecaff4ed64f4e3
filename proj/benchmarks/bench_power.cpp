#include "hopfpow/power_analysis.hpp"

#include <benchmark/benchmark.h>

#include <memory>

using namespace hopfpow;

namespace {

std::shared_ptr<const HopfAlgebra> algebra(int which) {
    switch (which) {
    case 0: return std::make_shared<const HopfAlgebra>(bismash(double_pair(symmetric_group(3))));
    case 1: return std::make_shared<const HopfAlgebra>(bismash(from_factorizable_symmetric(5)));
    default: return std::make_shared<const HopfAlgebra>(bismash(double_pair(alternating_group(4))));
    }
}

const char* name(int which) {
    static const char* names[] = {"D(QS3)", "Q^C5#QS4", "D(QA4)"};
    return names[which];
}

} // namespace

// One step A_n -> A_{n+1}.
static void BM_NextPowerMatrix(benchmark::State& state) {
    const auto h = algebra(static_cast<int>(state.range(0)));
    PowerMatrixFamily family(h, PowerOptions{1, nullptr, 256});
    const ExactMatrix a2 = family.power(2);
    for (auto _ : state) benchmark::DoNotOptimize(next_power_matrix(*h, a2, 1));
    state.SetLabel(name(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_NextPowerMatrix)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

static void BM_Exponent(benchmark::State& state) {
    const auto h = algebra(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        PowerMatrixFamily family(h, PowerOptions{1, nullptr, 256});
        benchmark::DoNotOptimize(family.exponent());
    }
    state.SetLabel(name(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_Exponent)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

static void BM_Nullspace(benchmark::State& state) {
    const auto h = algebra(static_cast<int>(state.range(0)));
    PowerMatrixFamily family(h, PowerOptions{1, nullptr, 256});
    const auto m = subtract(family.power(2), family.eta_epsilon());
    for (auto _ : state) benchmark::DoNotOptimize(nullspace(m));
    state.SetLabel(name(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_Nullspace)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

// Fraction-free against rational elimination on the same integral matrix.
static void BM_RankBareiss(benchmark::State& state) {
    PowerMatrixFamily family(algebra(1), PowerOptions{1, nullptr, 256});
    const auto& m = family.power(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(rank_bareiss(m));
}
BENCHMARK(BM_RankBareiss)->Arg(6)->Arg(12)->Unit(benchmark::kMillisecond);

static void BM_RankGaussJordan(benchmark::State& state) {
    PowerMatrixFamily family(algebra(1), PowerOptions{1, nullptr, 256});
    const auto& m = family.power(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(rank_gauss_jordan(m));
}
BENCHMARK(BM_RankGaussJordan)->Arg(6)->Arg(12)->Unit(benchmark::kMillisecond);

static void BM_Table(benchmark::State& state) {
    const auto h = algebra(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        PowerAnalysis a(h, PowerOptions{1, nullptr, 256});
        benchmark::DoNotOptimize(a.table(1));
    }
    state.SetLabel(name(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_Table)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
