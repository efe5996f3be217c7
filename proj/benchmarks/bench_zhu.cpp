#include <tzhu/models.hpp>
#include <tzhu/zhu.hpp>

#include <benchmark/benchmark.h>

using namespace tzhu;

namespace {

void BM_QuotientTwistedHeisenberg(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0)), K = static_cast<int>(state.range(1));
  for (auto _ : state) {
    ZhuAlgebra a = build_quotient(build_heisenberg(zhu_model_cutoff(N, K), Twist::charge_conjugation), N, K);
    benchmark::DoNotOptimize(a.dim());
  }
}
BENCHMARK(BM_QuotientTwistedHeisenberg)->Args({4, 2})->Args({6, 3})->Args({6, 4})->Unit(benchmark::kMillisecond);

void BM_QuotientIsing(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0)), K = static_cast<int>(state.range(1));
  for (auto _ : state) {
    ZhuAlgebra a = build_quotient(build_virasoro_simple(make_rational(1, 2), zhu_model_cutoff(N, K)), N, K);
    benchmark::DoNotOptimize(semisimplicity_report(a).omega_spectrum.size());
  }
}
BENCHMARK(BM_QuotientIsing)->Args({6, 2})->Args({8, 3})->Unit(benchmark::kMillisecond);

void BM_PhiCheck(benchmark::State& state) {
  ZhuAlgebra a = build_quotient(build_virasoro_simple(make_rational(1, 2), zhu_model_cutoff(8, 3)), 8, 3);
  for (auto _ : state) benchmark::DoNotOptimize(check_phi(a, a).checked);
}
BENCHMARK(BM_PhiCheck)->Unit(benchmark::kMillisecond);

}  // namespace
