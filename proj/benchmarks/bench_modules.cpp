#include <tzhu/models.hpp>
#include <tzhu/modules.hpp>
#include <tzhu/zhu.hpp>

#include <benchmark/benchmark.h>

using namespace tzhu;

namespace {

const ZhuAlgebra& theta_algebra() {
  static const ZhuAlgebra a = build_quotient(build_heisenberg(zhu_model_cutoff(6, 4), Twist::charge_conjugation), 6, 4);
  return a;
}

// Full pipeline at depth range(0)/2: Verma, relations, radical.
void BM_TwistedFockPipeline(benchmark::State& state) {
  const Rational depth = make_rational(state.range(0), 2);
  ZhuModule U = character_module(theta_algebra(), make_rational(1, 16));
  for (auto _ : state) {
    InducedModule verma = verma_build(theta_algebra(), U, depth);
    InducedModule L = radical_and_simple(mbar_build(verma, relations_W(verma)));
    benchmark::DoNotOptimize(L.dims().size());
  }
}
BENCHMARK(BM_TwistedFockPipeline)->Arg(2)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_TwistedAssociativity(benchmark::State& state) {
  ZhuModule U = character_module(theta_algebra(), make_rational(1, 16));
  InducedModule verma = verma_build(theta_algebra(), U, make_rational(5, 2));
  InducedModule L = radical_and_simple(mbar_build(verma, relations_W(verma)));
  for (auto _ : state) benchmark::DoNotOptimize(check_twisted_associativity(L, 2).report.checked);
}
BENCHMARK(BM_TwistedAssociativity)->Unit(benchmark::kMillisecond);

void BM_IsingModule(benchmark::State& state) {
  static const ZhuAlgebra alg =
      build_quotient(build_virasoro_simple(make_rational(1, 2), zhu_model_cutoff(8, 3)), 8, 3);
  ZhuModule U = character_module(alg, make_rational(1, 16));
  const Rational depth(static_cast<long>(state.range(0)));
  for (auto _ : state) {
    InducedModule verma = verma_build(alg, U, depth);
    InducedModule L = radical_and_simple(mbar_build(verma, relations_W(verma)));
    benchmark::DoNotOptimize(omega_functor(L).dims.size());
  }
}
BENCHMARK(BM_IsingModule)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

}  // namespace
