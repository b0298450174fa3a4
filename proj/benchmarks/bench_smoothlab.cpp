#include "smoothlab/approx.hpp"
#include "smoothlab/quadrature.hpp"

#include <benchmark/benchmark.h>

using namespace smoothlab;

namespace {

void BM_gauss_jacobi_nodes(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(gauss_jacobi(order, 2.0, 2.0));
  }
}
BENCHMARK(BM_gauss_jacobi_nodes)->Arg(16)->Arg(64)->Arg(256);

void BM_weighted_norm(benchmark::State& state) {
  const FunctionRep f = FunctionRep::named("abspow:a=0,s=1");
  const NormParams params{2.0, 1.25, 1.25};
  for (auto _ : state) {
    benchmark::DoNotOptimize(weighted_norm(f, params));
  }
}
BENCHMARK(BM_weighted_norm);

void BM_apply_hatT_grid(benchmark::State& state) {
  const FunctionRep f =
      to_grid(FunctionRep::named("abspow:a=0,s=1"), 257);
  for (auto _ : state) {
    benchmark::DoNotOptimize(apply_hatT(f, 0.25));
  }
}
BENCHMARK(BM_apply_hatT_grid);

void BM_modulus_r1(benchmark::State& state) {
  const FunctionRep f = FunctionRep::named("abspow:a=0,s=1");
  const NormParams params{2.0, 1.25, 1.25};
  for (auto _ : state) {
    benchmark::DoNotOptimize(modulus(f, 1, 0.25, params, 4));
  }
}
BENCHMARK(BM_modulus_r1);

void BM_best_approx_p2(benchmark::State& state) {
  const FunctionRep f = FunctionRep::named("abspow:a=0,s=1");
  const NormParams params{2.0, 1.25, 1.25};
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(best_approx(f, n, params));
  }
}
BENCHMARK(BM_best_approx_p2)->Arg(8)->Arg(32)->Arg(128);

void BM_jackson_approximant(benchmark::State& state) {
  const FunctionRep f = FunctionRep::named("abspow:a=0,s=1");
  const JacksonKernel k{3, 8};
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        jackson_approximant(f, 2, k, k.cosine_degree() + 8));
  }
}
BENCHMARK(BM_jackson_approximant);

} // namespace

BENCHMARK_MAIN();
