#include <benchmark/benchmark.h>

#include <numbers>

#include "bellgap/bell_operators.hpp"
#include "bellgap/lhv.hpp"
#include "bellgap/schmidt.hpp"
#include "bellgap/separability.hpp"
#include "bellgap/violation.hpp"

using namespace bellgap;

static void BM_EnumerateBounds(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto result = enumerate_bounds(n);
        benchmark::DoNotOptimize(result);
    }
    state.SetComplexityN(1LL << (2 * n));
}
BENCHMARK(BM_EnumerateBounds)->DenseRange(6, 12, 2)->Unit(benchmark::kMillisecond)->Complexity();

static void BM_SparseExpectation(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const PureState ghz = ghz_state({n, std::numbers::pi / 4});
    for (auto _ : state) {
        double v = bell_expectation_pure(ghz, BellKind::Plus);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_SparseExpectation)->Arg(8)->Arg(16)->Arg(20);

static void BM_DenseFromExpansion(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const BellExpansion expansion = expand_monomials(n, BellKind::Plus);
    for (auto _ : state) {
        auto dense = dense_from_expansion(expansion);
        benchmark::DoNotOptimize(dense);
    }
    state.SetComplexityN(1LL << n);
}
BENCHMARK(BM_DenseFromExpansion)->DenseRange(4, 10, 2)->Unit(benchmark::kMillisecond)->Complexity();

static void BM_SchmidtBalancedCut(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const PureState ghz = ghz_state({n, 0.3});
    std::vector<int> side1;
    for (int q = 1; q <= n / 2; ++q) side1.push_back(q);
    const Bipartition cut = Bipartition::from_side_one(n, side1);
    for (auto _ : state) {
        auto result = schmidt_decompose(ghz, cut);
        benchmark::DoNotOptimize(result);
    }
}
BENCHMARK(BM_SchmidtBalancedCut)->DenseRange(4, 12, 2)->Unit(benchmark::kMicrosecond);

static void BM_MaximizeSeparable(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    OptimizerConfig cfg;
    cfg.restarts = 8;
    cfg.rng_seed = 1;
    for (auto _ : state) {
        auto result = maximize_over_separable(n, OptimTarget::Sum, cfg);
        benchmark::DoNotOptimize(result);
    }
}
BENCHMARK(BM_MaximizeSeparable)->DenseRange(2, 8, 2)->Unit(benchmark::kMillisecond);

static void BM_VerifyLhvRepresentation(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::vector<MixedFactorTerm> terms;
    MixedFactorTerm term;
    term.weight = 1.0;
    for (int k = 0; k < n; ++k) term.factors.push_back(0.5 * Eigen::Matrix2cd::Identity());
    terms.push_back(term);
    const MixedSeparableInput input(n, terms);
    for (auto _ : state) {
        double residual = verify_lhv_representation(input);
        benchmark::DoNotOptimize(residual);
    }
}
BENCHMARK(BM_VerifyLhvRepresentation)->DenseRange(2, 8, 2)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
