#include "topvert/abelian.hpp"
#include "topvert/recursion.hpp"
#include "topvert/skein.hpp"
#include "topvert/symfunc.hpp"
#include "topvert/vertex.hpp"

#include <benchmark/benchmark.h>

using namespace topvert;

namespace {

void BM_ScalarArithmetic(benchmark::State& state) {
  const QScalar z = QScalar::z();
  const QScalar a = z.inverse() + sPow(3), b = (QScalar(1) - qPow(2)).inverse() * z;
  for (auto _ : state) {
    QScalar r = (a + b) * (a - b) / (a * b + QScalar(1));
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_ScalarArithmetic);

void BM_SchurAtFresh(benchmark::State& state) {
  const Partition lam{3, 2, 1};
  for (auto _ : state) {
    clearSymfuncCaches();
    benchmark::DoNotOptimize(schurAt(lam, plusRho(Partition{2, 1})));
  }
}
BENCHMARK(BM_SchurAtFresh);

void BM_VertexTable(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    clearSymfuncCaches();
    benchmark::DoNotOptimize(buildTable(n, VertexFormula::T));
  }
}
BENCHMARK(BM_VertexTable)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_RecursionSolve(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(solveRecursion(n));
}
BENCHMARK(BM_RecursionSolve)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_SkeinApply(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const SkeinState z = buildZ(n, buildTable(n, VertexFormula::T));
  const OperatorSum a1 = operatorA(1);
  for (auto _ : state) benchmark::DoNotOptimize(applyOperator(a1, z));
}
BENCHMARK(BM_SkeinApply)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_AbelianApply(benchmark::State& state) {
  const LaurentSeries3 z = specializeZ(static_cast<int>(state.range(0)));
  const AbelianOperator a1 = abelianOperator(Family::Main, 1);
  for (auto _ : state) benchmark::DoNotOptimize(applyAbelian(a1, z));
}
BENCHMARK(BM_AbelianApply)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
