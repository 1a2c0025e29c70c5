#include <benchmark/benchmark.h>

#include <random>

#include "bspline/basis_matrix.hpp"
#include "bspline/coxdeboor.hpp"
#include "bspline/curve.hpp"
#include "bspline_cli/check.hpp"

using namespace bspline;

namespace {

BasisMatrix uniform_by_recursion(int k)
{
    const auto kv = ExactKnotVector::uniform(Rational(0), Rational(1), static_cast<std::size_t>(2 * k + 2));
    return general_basis_matrix(kv, k, SpanIndex(k));
}

void BM_GeneralMatrixUniformKnots(benchmark::State& state)
{
    const int k = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(uniform_by_recursion(k));
}
BENCHMARK(BM_GeneralMatrixUniformKnots)->DenseRange(2, 10, 4);

void BM_GeneralMatrixIrregularKnots(benchmark::State& state)
{
    const int k = static_cast<int>(state.range(0));
    std::mt19937_64 rng(5);
    const auto kv = cli::random_knots(rng, k, k + 1, cli::KnotLayout::clamped);
    for (auto _ : state)
        benchmark::DoNotOptimize(general_basis_matrix(kv, k, SpanIndex(k)));
}
BENCHMARK(BM_GeneralMatrixIrregularKnots)->DenseRange(2, 10, 4);

void BM_CumulativeMatrix(benchmark::State& state)
{
    const auto& m = uniform_basis_matrix(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(cumulative_matrix(m));
}
BENCHMARK(BM_CumulativeMatrix)->Arg(3)->Arg(10);

void BM_BasisRowMatrix(benchmark::State& state)
{
    const int k = static_cast<int>(state.range(0));
    const auto m = uniform_basis_matrix(k).to_double();
    double u = 0.0;
    for (auto _ : state) {
        u = u < 0.99 ? u + 0.01 : 0.0;
        benchmark::DoNotOptimize(basis_row(m, u));
    }
}
BENCHMARK(BM_BasisRowMatrix)->Arg(3)->Arg(10);

void BM_BasisRowCoxDeBoor(benchmark::State& state)
{
    const int k = static_cast<int>(state.range(0));
    const auto kv = KnotVector::uniform(0.0, 1.0, static_cast<std::size_t>(2 * k + 2));
    double u = 0.0;
    for (auto _ : state) {
        u = u < 0.99 ? u + 0.01 : 0.0;
        benchmark::DoNotOptimize(coxdeboor::basis_functions(kv, k, k + u));
    }
}
BENCHMARK(BM_BasisRowCoxDeBoor)->Arg(3)->Arg(10);

enum class Path
{
    coxdeboor,
    matrix,
    cumulative,
};

template <Path P>
void BM_CurveEval(benchmark::State& state)
{
    std::mt19937_64 rng(11);
    const auto curve = cli::random_curve(rng, static_cast<int>(state.range(0)), 3, cli::KnotLayout::uniform);
    const auto [lo, hi] = curve.domain();
    double tau = lo;
    const double step = (hi - lo) / 97.0;
    for (auto _ : state) {
        tau = tau + step <= hi ? tau + step : lo;
        if constexpr (P == Path::coxdeboor)
            benchmark::DoNotOptimize(curve.eval_coxdeboor(tau));
        else if constexpr (P == Path::matrix)
            benchmark::DoNotOptimize(curve.eval_matrix(tau));
        else
            benchmark::DoNotOptimize(curve.eval_cumulative(tau));
    }
}
BENCHMARK(BM_CurveEval<Path::coxdeboor>)->Arg(3)->Arg(5);
BENCHMARK(BM_CurveEval<Path::matrix>)->Arg(3)->Arg(5);
BENCHMARK(BM_CurveEval<Path::cumulative>)->Arg(3)->Arg(5);

} // namespace

BENCHMARK_MAIN();
