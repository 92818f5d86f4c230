#include <benchmark/benchmark.h>

#include "spw/cuspidal.hpp"

namespace {

using namespace spw;

const LieAlgebra& lie(int n) {
  static LieAlgebra l2(2), l3(3);
  return n == 2 ? l2 : l3;
}

void BM_Straighten(benchmark::State& state) {
  const int n = (int)state.range(0);
  UsAlgebra U(lie(n));
  // Worst-ish case: a negative letter times an inverse Ore block.
  NcPoly p = U.multiply(U.gen(neg_sum_root(1, 1)), U.gen(cartan(1)));
  NcPoly q = U.multiply(U.gen(diff_root(1, 2), -2), U.gen(sum_root(1, 1), -1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(U.multiply(p, q));
  }
}
BENCHMARK(BM_Straighten)->Arg(2)->Arg(3);

void BM_CentralizerCheck(benchmark::State& state) {
  const int n = (int)state.range(0);
  UsAlgebra U(lie(n));
  WAlgebra W(U);
  const NcPoly& a = W.a_value({AKind::Neg11, 0, 0});
  for (auto _ : state) {
    benchmark::DoNotOptimize(W.centralizer_check(a));
  }
}
BENCHMARK(BM_CentralizerCheck)->Arg(2)->Arg(3);

void BM_GaRelations(benchmark::State& state) {
  const int n = (int)state.range(0);
  GaModule mod(lie(n), std::vector<Rational>(n, rat(1, 3)));
  auto interior = box_points(n, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(relation_report(mod, interior));
  }
}
BENCHMARK(BM_GaRelations)->Arg(2)->Arg(3);

void BM_Factorize(benchmark::State& state) {
  const int n = (int)state.range(0);
  UsAlgebra U(lie(n));
  WAlgebra W(U);
  NcPoly p = U.multiply(U.gen(neg_sum_root(1, 1)), U.gen(sum_root(1, 2)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(W.factorize(p));
  }
}
BENCHMARK(BM_Factorize)->Arg(2)->Arg(3);

}  // namespace

BENCHMARK_MAIN();
