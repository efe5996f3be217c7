#include <tzhu/errors.hpp>
#include <tzhu/invariants.hpp>
#include <tzhu/models.hpp>
#include <tzhu/zhu.hpp>

#include <gtest/gtest.h>

#include <algorithm>

#include "oracles.hpp"

using namespace tzhu;

namespace {

Vec key(const VoaSpec& s, std::vector<GenMode> modes, Rational c = 1) {
  return Vec{{s.key_id(BasisKey{std::move(modes)}), c}};
}

void expect_report(const CheckReport& r) {
  EXPECT_TRUE(r.passed()) << r.name << ": " << (r.failures.empty() ? "" : r.failures.front());
  EXPECT_GT(r.checked, 0u) << r.name;
}

const VoaSpec& theta() {
  static const VoaSpec s = build_heisenberg(zhu_model_cutoff(6, 4), Twist::charge_conjugation);
  return s;
}

const ZhuAlgebra& theta_algebra() {
  static const ZhuAlgebra a = build_quotient(theta(), 6, 4);
  return a;
}

const ZhuAlgebra& ising_algebra() {
  static const ZhuAlgebra a = build_quotient(build_virasoro_simple(make_rational(1, 2), zhu_model_cutoff(8, 3)), 8, 3);
  return a;
}

}  // namespace

TEST(CircProduct, Examples) {
  const VoaSpec& t = theta();
  Vec a = t.generator_state(0);
  // i = 0: a(-1)^2 1; i = 1: a_0 a = 0; i = 2: C(1/2, 2) a_1 a = -1/8
  Vec want = key(t, {{0, -1}, {0, -1}});
  add_term(want, VoaSpec::vacuum_id(), make_rational(-1, 8));
  EXPECT_EQ(circ_product(t, a, a), want);
  EXPECT_EQ(circ_product(t, a, t.vacuum()), a);
  Vec odd = key(t, {{0, -2}, {0, -1}, {0, -1}});
  EXPECT_EQ(circ_product(t, odd, t.vacuum()), odd);

  VoaSpec h = build_heisenberg(6);
  EXPECT_TRUE(circ_product(h, h.vacuum(), h.vacuum()).empty());
}

TEST(StarProduct, Examples) {
  VoaSpec v = build_virasoro(make_rational(1, 2), 8);
  Vec w = v.omega();
  EXPECT_EQ(star_product(v, v.vacuum(), w), w);
  EXPECT_EQ(star_product(v, w, v.vacuum()), w);
  const VoaSpec& t = theta();
  Vec a = t.generator_state(0);
  EXPECT_TRUE(star_product(t, a, t.omega()).empty());
  EXPECT_TRUE(star_product(t, a, a).empty());
  // omega * a = L(-2) a + 2 L(-1) a + L(0) a on the Virasoro side of the Heisenberg model
  VoaSpec h = build_heisenberg(6);
  Vec ha = h.generator_state(0);
  Vec want = h.l_operator(-2, ha);
  axpy(want, Rational(2), h.l_operator(-1, ha));
  axpy(want, Rational(1), h.l_operator(0, ha));
  EXPECT_EQ(star_product(h, h.omega(), ha), want);
}

TEST(SpanningFamily, Examples) {
  const VoaSpec& t = theta();
  auto fam = spanning_family(t, 1, 1);
  Vec a = t.generator_state(0);
  EXPECT_TRUE(std::any_of(fam.begin(), fam.end(), [&](const FamilyMember& f) { return f.value == a; }));
  for (const auto& f : fam) {
    if (f.m == 0 && f.n == 0) EXPECT_EQ(f.value, circ_product(t, t.monomial(f.u), t.monomial(f.v)));
  }
  VoaSpec v = build_virasoro(make_rational(1, 2), zhu_model_cutoff(6, 2));
  auto f1 = spanning_family(v, 6, 2);
  auto f2 = spanning_family(v, 6, 2);
  EXPECT_FALSE(f1.empty());
  ASSERT_EQ(f1.size(), f2.size());
  for (std::size_t i = 0; i < f1.size(); ++i) EXPECT_EQ(f1[i].value, f2[i].value);
  EXPECT_THROW(spanning_family(build_virasoro(make_rational(1, 2), 6), 6, 2), CutoffExceeded);
}

TEST(BuildQuotient, TwistedHeisenberg) {
  const ZhuAlgebra& alg = theta_algebra();
  EXPECT_EQ(alg.dim(), 1u);
  EXPECT_EQ(alg.basis(), std::vector<KeyId>{VoaSpec::vacuum_id()});
  EXPECT_EQ(alg.dim_previous_margin(), 1u);
  EXPECT_TRUE(alg.stabilized());
  ASSERT_TRUE(alg.omega_class().has_value());
  // ground-state energy shift of the half-integer-moded boson
  EXPECT_EQ(oracle::twisted_ground_energy_shift(), make_rational(1, 16));
  EXPECT_EQ(*alg.omega_class(), std::vector<Rational>{oracle::twisted_ground_energy_shift()});
  for (int w = 1; w <= 6; ++w)
    for (KeyId k : theta().enumerate_basis(w))
      if (theta().g_exponent(k) != 0) EXPECT_EQ(alg.vanishes(theta().monomial(k)), std::optional<bool>(true));
}

TEST(BuildQuotient, UniversalVirasoroIsPolynomialInOmega) {
  VoaSpec v = build_virasoro(make_rational(1, 2), zhu_model_cutoff(6, 2));
  ZhuAlgebra alg = build_quotient(v, 6, 2);
  EXPECT_EQ(alg.dim(), 4u);
  ASSERT_TRUE(alg.omega_class().has_value());
  // 1, w, w^2, w^3 are independent and span
  Matrix m(4, 4);
  std::vector<Rational> p = alg.identity_class();
  for (std::size_t k = 0; k < 4; ++k) {
    for (std::size_t j = 0; j < 4; ++j) m(k, j) = p[j];
    if (k < 3) {
      auto next = alg.multiply(p, *alg.omega_class());
      ASSERT_TRUE(next.has_value());
      p = *next;
    }
  }
  EXPECT_EQ(m.rank(), 4u);
  EXPECT_FALSE(alg.stabilized());
  EXPECT_FALSE(semisimplicity_report(alg).decided);
}

TEST(BuildQuotient, UntwistedHeisenbergDoesNotStabilize) {
  VoaSpec h = build_heisenberg(zhu_model_cutoff(6, 3));
  ZhuAlgebra alg = build_quotient(h, 6, 3);
  EXPECT_EQ(alg.dim(), 7u);
  EXPECT_FALSE(alg.stabilized());
  EXPECT_LT(alg.dim_lower_cutoff(), alg.dim());
}

TEST(BuildQuotient, IsingSpectrum) {
  const ZhuAlgebra& alg = ising_algebra();
  EXPECT_EQ(alg.dim(), 3u);
  EXPECT_TRUE(alg.stabilized());
  auto rep = semisimplicity_report(alg);
  EXPECT_TRUE(rep.decided);
  EXPECT_EQ(rep.radical_dim, 0u);
  std::vector<Rational> want{oracle::minimal_model_h(4, 3, 1, 1), oracle::minimal_model_h(4, 3, 1, 2),
                             oracle::minimal_model_h(4, 3, 2, 1)};
  std::sort(want.begin(), want.end());
  EXPECT_EQ(want, (std::vector<Rational>{0, make_rational(1, 16), make_rational(1, 2)}));
  EXPECT_EQ(rep.omega_spectrum, want);
  EXPECT_TRUE(rep.irreducible_residual.size() <= 1);
}

TEST(ZhuChecks, TwistedHeisenberg) {
  const ZhuAlgebra& alg = theta_algebra();
  expect_report(check_ideal(alg));
  expect_report(check_associativity(alg));
  expect_report(check_phi(alg, alg));
  expect_report(check_identity_laws(alg));
  expect_report(check_centrality(alg));
  expect_report(check_odd_vanishing(alg));
  expect_report(check_star_residue_identities(alg));
  expect_report(check_margin_monotonicity(alg));
  auto rep = semisimplicity_report(alg);
  EXPECT_TRUE(rep.decided);
  EXPECT_EQ(rep.radical_dim, 0u);
  EXPECT_EQ(rep.omega_spectrum, std::vector<Rational>{make_rational(1, 16)});
}

TEST(ZhuChecks, Ising) {
  const ZhuAlgebra& alg = ising_algebra();
  expect_report(check_ideal(alg));
  expect_report(check_associativity(alg));
  expect_report(check_phi(alg, alg));
  expect_report(check_identity_laws(alg));
  expect_report(check_centrality(alg));
  expect_report(check_star_residue_identities(alg));
  expect_report(check_margin_monotonicity(alg));
}

TEST(ZhuChecks, IdealExamples) {
  const ZhuAlgebra& alg = theta_algebra();
  const VoaSpec& t = alg.spec();
  Vec a = t.generator_state(0);
  Vec u = circ_product(t, a, a);
  EXPECT_EQ(alg.vanishes(u), std::optional<bool>(true));
  EXPECT_EQ(alg.vanishes(star_product(t, t.omega(), u)), std::optional<bool>(true));
  EXPECT_EQ(alg.vanishes(star_product(t, u, t.omega())), std::optional<bool>(true));
  EXPECT_EQ(alg.vanishes(t.vacuum()), std::optional<bool>(false));
}

TEST(ZhuChecks, NegativeControlLosesStabilization) {
  // A(V) = C[x] for the untwisted Heisenberg algebra: dim grows with the cutoff.
  std::vector<std::size_t> dims;
  for (int n : {4, 6, 8}) dims.push_back(build_quotient(build_heisenberg(zhu_model_cutoff(n, 2)), n, 2).dim());
  EXPECT_EQ(dims, (std::vector<std::size_t>{5, 7, 9}));
}
