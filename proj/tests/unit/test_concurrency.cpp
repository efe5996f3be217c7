#include <tzhu/models.hpp>
#include <tzhu/modules.hpp>
#include <tzhu/zhu.hpp>

#include <gtest/gtest.h>

#include <thread>

using namespace tzhu;

namespace {

constexpr int kThreads = 4;

// All u_n v for basis u, v of weight <= 3 and |n| <= 3.
std::vector<Vec> mode_table(const VoaSpec& spec, int part, int parts) {
  std::vector<Vec> out;
  int idx = 0;
  for (int wu = 0; wu <= 3; ++wu)
    for (KeyId u : spec.enumerate_basis(wu))
      for (int wv = 0; wv <= 3; ++wv)
        for (KeyId v : spec.enumerate_basis(wv))
          for (int n = -3; n <= 3; ++n)
            if (idx++ % parts == part) out.push_back(spec.mode_apply(spec.monomial(u), n, spec.monomial(v)));
  return out;
}

}  // namespace

TEST(Concurrency, ModeApplyMatchesSequential) {
  for (const auto& make : {+[] { return build_heisenberg(10, Twist::charge_conjugation); },
                           +[] { return build_virasoro_simple(make_rational(1, 2), 10); }}) {
    VoaSpec fresh = make();
    std::vector<std::vector<Vec>> parallel(kThreads);
    std::vector<std::thread> pool;
    for (int t = 0; t < kThreads; ++t)
      pool.emplace_back([&, t] { parallel[t] = mode_table(fresh, t, kThreads); });
    for (auto& th : pool) th.join();
    VoaSpec seq = make();
    for (int t = 0; t < kThreads; ++t) EXPECT_EQ(parallel[t], mode_table(seq, t, kThreads));
  }
}

TEST(Concurrency, QuotientIsScheduleIndependent) {
  VoaSpec spec = build_heisenberg(zhu_model_cutoff(4, 2), Twist::charge_conjugation);
  std::vector<std::size_t> dims(kThreads);
  std::vector<std::optional<std::vector<Rational>>> omegas(kThreads);
  std::vector<std::thread> pool;
  for (int t = 0; t < kThreads; ++t)
    pool.emplace_back([&, t] {
      ZhuAlgebra a = build_quotient(spec, 4, 2);
      dims[t] = a.dim();
      omegas[t] = a.omega_class();
    });
  for (auto& th : pool) th.join();
  ZhuAlgebra ref = build_quotient(build_heisenberg(zhu_model_cutoff(4, 2), Twist::charge_conjugation), 4, 2);
  for (int t = 0; t < kThreads; ++t) {
    EXPECT_EQ(dims[t], ref.dim());
    EXPECT_EQ(omegas[t], ref.omega_class());
  }
}

TEST(Concurrency, ModuleActionMatchesSequential) {
  ZhuAlgebra alg = build_quotient(build_heisenberg(zhu_model_cutoff(4, 2), Twist::charge_conjugation), 4, 2);
  ZhuModule U = character_module(alg, make_rational(1, 16));
  InducedModule M = verma_build(alg, U, Rational(2));
  const VoaSpec& spec = M.spec();
  std::vector<KeyId> states;
  for (int w = 1; w <= 2; ++w)
    for (KeyId k : spec.enumerate_basis(w)) states.push_back(k);
  auto compute = [&](std::size_t part, std::size_t parts) {
    std::vector<ModVec> out;
    for (std::size_t s = part; s < states.size(); s += parts) {
      Rational shift(spec.g_exponent(states[s]), spec.order());
      shift.canonicalize();
      for (int m = -2; m <= 2; ++m) out.push_back(M.act(spec.monomial(states[s]), shift + m, M.basis_vector(0, 0)));
    }
    return out;
  };
  std::vector<std::vector<ModVec>> parallel(kThreads);
  std::vector<std::thread> pool;
  for (int t = 0; t < kThreads; ++t) pool.emplace_back([&, t] { parallel[t] = compute(t, kThreads); });
  for (auto& th : pool) th.join();
  InducedModule seq = verma_build(alg, U, Rational(2));
  for (int t = 0; t < kThreads; ++t) {
    std::vector<ModVec> want;
    for (std::size_t s = t; s < states.size(); s += kThreads) {
      Rational shift(spec.g_exponent(states[s]), spec.order());
      shift.canonicalize();
      for (int m = -2; m <= 2; ++m)
        want.push_back(seq.act(seq.spec().monomial(states[s]), shift + m, seq.basis_vector(0, 0)));
    }
    EXPECT_EQ(parallel[t], want);
  }
}
