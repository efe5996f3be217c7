#include <tzhu/lie.hpp>
#include <tzhu/models.hpp>

#include <benchmark/benchmark.h>

using namespace tzhu;

namespace {

// Cold memo: every u_n v for basis vectors of weight <= w is computed once.
void BM_ModeTableHeisenberg(benchmark::State& state) {
  const int w = static_cast<int>(state.range(0));
  for (auto _ : state) {
    VoaSpec h = build_heisenberg(2 * w + 2, Twist::charge_conjugation);
    std::size_t terms = 0;
    for (int wu = 0; wu <= w; ++wu)
      for (KeyId u : h.enumerate_basis(wu))
        for (int wv = 0; wv <= w; ++wv)
          for (KeyId v : h.enumerate_basis(wv))
            for (int n = -1; n < wu + wv; ++n) terms += h.mode_apply(h.monomial(u), n, h.monomial(v)).size();
    benchmark::DoNotOptimize(terms);
  }
}
BENCHMARK(BM_ModeTableHeisenberg)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_ModeTableVirasoro(benchmark::State& state) {
  const int w = static_cast<int>(state.range(0));
  for (auto _ : state) {
    VoaSpec v = build_virasoro(make_rational(1, 2), 2 * w + 2);
    std::size_t terms = 0;
    for (int wa = 0; wa <= w; ++wa)
      for (KeyId a : v.enumerate_basis(wa))
        for (int wb = 0; wb <= w; ++wb)
          for (KeyId b : v.enumerate_basis(wb))
            for (int n = -1; n < wa + wb; ++n) terms += v.mode_apply(v.monomial(a), n, v.monomial(b)).size();
    benchmark::DoNotOptimize(terms);
  }
}
BENCHMARK(BM_ModeTableVirasoro)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_SimpleQuotientModel(benchmark::State& state) {
  const int cutoff = static_cast<int>(state.range(0));
  for (auto _ : state) {
    VoaSpec s = build_virasoro_simple(make_rational(1, 2), cutoff);
    benchmark::DoNotOptimize(s.enumerate_basis(cutoff).size());
  }
}
BENCHMARK(BM_SimpleQuotientModel)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_LieJacobi(benchmark::State& state) {
  VoaSpec v = build_virasoro(make_rational(1, 2), 10);
  for (auto _ : state) {
    LieAlgebra lie(v);
    auto sample = sample_terms(lie, 3, make_rational(5, 2));
    benchmark::DoNotOptimize(check_jacobi(lie, sample).checked);
  }
}
BENCHMARK(BM_LieJacobi)->Unit(benchmark::kMillisecond);

}  // namespace
