#include <benchmark/benchmark.h>

#include "psdblock/constructions.hpp"
#include "psdblock/decompose.hpp"
#include "psdblock/linalg.hpp"

using namespace psdblock;

static void BM_Lemma1Decompose(benchmark::State& state) {
    const Eigen::Index n = state.range(0);
    Rng rng(1);
    const PsdBlockMatrix m = split(random_psd(2 * n, rng), n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(lemma1_decompose(m));
    }
}
BENCHMARK(BM_Lemma1Decompose)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

static void BM_SingularValues(benchmark::State& state) {
    const Eigen::Index n = state.range(0);
    Rng rng(2);
    const Matrix m = rng.complex_gaussian_matrix(n, n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(singular_values(m));
    }
}
BENCHMARK(BM_SingularValues)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

static void BM_Dominance(benchmark::State& state) {
    const Eigen::Index n = state.range(0);
    Rng rng(3);
    const PsdBlockMatrix m = split(random_psd(2 * n, rng), n);
    const Matrix sum = (m.A.mat() + m.B.mat()).eval();
    for (auto _ : state) {
        benchmark::DoNotOptimize(dominance(m.assembled(), sum));
    }
}
BENCHMARK(BM_Dominance)->Arg(4)->Arg(8)->Arg(16);

static void BM_SchurTest(benchmark::State& state) {
    const Eigen::Index n = state.range(0);
    Rng rng(4);
    const PsdBlockMatrix m = split(random_psd(2 * n, rng), n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(schur_pd_test(m.A, m.X, m.B));
    }
}
BENCHMARK(BM_SchurTest)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

static void BM_CheckMainInequality(benchmark::State& state) {
    const Eigen::Index n = state.range(0);
    const PsdBlockMatrix m = random_commuting_normal_instance(n, 5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(check_main_inequality(m));
    }
}
BENCHMARK(BM_CheckMainInequality)->Arg(4)->Arg(8)->Arg(16);

static void BM_SqrtPsd(benchmark::State& state) {
    const Eigen::Index n = state.range(0);
    Rng rng(6);
    const HermitianMatrix m = random_psd(n, rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(sqrt_psd(m));
    }
}
BENCHMARK(BM_SqrtPsd)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

BENCHMARK_MAIN();
