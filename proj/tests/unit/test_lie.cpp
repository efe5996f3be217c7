#include <tzhu/errors.hpp>
#include <tzhu/lie.hpp>
#include <tzhu/models.hpp>
#include <tzhu/zhu.hpp>

#include <gtest/gtest.h>

using namespace tzhu;

namespace {

Vec key(const VoaSpec& s, std::vector<GenMode> modes, Rational c = 1) {
  return Vec{{s.key_id(BasisKey{std::move(modes)}), c}};
}

void expect_report(const CheckReport& r) {
  EXPECT_TRUE(r.passed()) << r.name << ": " << (r.failures.empty() ? "" : r.failures.front());
  EXPECT_GT(r.checked, 0u) << r.name;
}

LieElement single(KeyId a, const Rational& m, const Rational& c = 1) { return LieElement{{LieTerm{a, m}, c}}; }

}  // namespace

TEST(Normalize, Examples) {
  VoaSpec h = build_heisenberg(8);
  LieAlgebra lie(h);
  KeyId a = h.key_id(BasisKey{{{0, -1}}});
  for (int m = -3; m <= 3; ++m) {
    EXPECT_TRUE(lie.normalize(h.l_operator(-1, h.vacuum()), Rational(m)).empty());
    // a(-2) 1 = L(-1) a(-1) 1
    EXPECT_EQ(lie.normalize(key(h, {{0, -2}}), Rational(m)), m == 0 ? LieElement{} : single(a, Rational(m - 1), -m));
  }
  // 1(m) lies in the image of D except at m = -1
  EXPECT_EQ(lie.normalize(h.vacuum(), Rational(-1)), single(VoaSpec::vacuum_id(), Rational(-1)));
  EXPECT_TRUE(lie.normalize(h.vacuum(), Rational(0)).empty());
  EXPECT_TRUE(lie.normalize(h.vacuum(), Rational(2)).empty());

  LieElement x = lie_add(lie.normalize(key(h, {{0, -3}}), Rational(2)), lie.normalize(key(h, {{0, -2}, {0, -1}}), 1));
  EXPECT_EQ(lie.normalize(x), x);

  VoaSpec t = build_heisenberg(8, Twist::charge_conjugation);
  LieAlgebra tl(t);
  EXPECT_THROW(tl.normalize(t.generator_state(0), Rational(1)), GradingError);
  EXPECT_FALSE(tl.valid_shift(t.key_id(BasisKey{{{0, -1}}}), Rational(0)));
  EXPECT_TRUE(tl.valid_shift(t.key_id(BasisKey{{{0, -1}}}), make_rational(1, 2)));
}

TEST(Bracket, TwistedOscillator) {
  VoaSpec t = build_heisenberg(8, Twist::charge_conjugation);
  LieAlgebra lie(t);
  KeyId a = t.key_id(BasisKey{{{0, -1}}});
  // [a(m), a(n)] = m delta_{m+n,0} 1(-1)
  for (int i = -5; i <= 5; i += 2)
    for (int j = -5; j <= 5; j += 2) {
      Rational m = make_rational(i, 2), n = make_rational(j, 2);
      LieElement want = (i + j == 0) ? single(VoaSpec::vacuum_id(), Rational(-1), m) : LieElement{};
      EXPECT_EQ(lie.bracket(lie.term(a, m), lie.term(a, n)), want) << i << " " << j;
    }
}

TEST(Bracket, CentralElements) {
  VoaSpec v = build_virasoro(make_rational(1, 2), 8);
  LieAlgebra lie(v);
  KeyId w = v.key_id(BasisKey{{{0, -2}}});
  LieElement one = single(VoaSpec::vacuum_id(), Rational(-1));
  for (const auto& x : sample_terms(lie, 4, Rational(3))) {
    EXPECT_TRUE(lie.bracket(one, x).empty());
    ASSERT_EQ(x.size(), 1u);
    const auto& [t, c] = *x.begin();
    EXPECT_EQ(lie.bracket(lie.term(w, 0), x), lie.normalize(single(t.base, t.m - 1, -t.m * c)));
  }
}

TEST(Degree, Examples) {
  VoaSpec t = build_heisenberg(8, Twist::charge_conjugation);
  LieAlgebra lie(t);
  KeyId w = t.key_id(BasisKey{{{0, -1}, {0, -1}}});
  KeyId a = t.key_id(BasisKey{{{0, -1}}});
  EXPECT_EQ(lie.degree(LieTerm{w, 1}), Rational(0));
  EXPECT_EQ(lie.degree(LieTerm{a, make_rational(-3, 2)}), make_rational(3, 2));
  EXPECT_EQ(lie.part(LieTerm{a, make_rational(-3, 2)}), TriangularPart::plus);
  EXPECT_EQ(lie.part(LieTerm{a, make_rational(1, 2)}), TriangularPart::minus);
  EXPECT_EQ(lie.degree(LieTerm{VoaSpec::vacuum_id(), -1}), Rational(0));
  EXPECT_EQ(lie.part(LieTerm{VoaSpec::vacuum_id(), -1}), TriangularPart::zero);
  EXPECT_EQ(lie.degree(lie_add(single(a, make_rational(1, 2)), single(a, make_rational(-1, 2)))), std::nullopt);
}

TEST(OMap, Examples) {
  VoaSpec h = build_heisenberg(8);
  LieAlgebra lie(h);
  EXPECT_EQ(lie.o_map(h.vacuum()), single(VoaSpec::vacuum_id(), Rational(-1)));
  EXPECT_EQ(lie.o_map(h.omega()), lie.normalize(h.omega(), Rational(1)));
  for (int w = 1; w <= 4; ++w)
    for (KeyId k : h.enumerate_basis(w)) {
      // o(L(-1) v) + o(L(0) v) = 0
      LieElement x = lie_add(lie.o_map(h.l_operator(-1, h.monomial(k))), lie.o_map(scaled(h.monomial(k), Rational(w))));
      EXPECT_TRUE(x.empty()) << h.format_key(k);
    }
  VoaSpec t = build_heisenberg(8, Twist::charge_conjugation);
  EXPECT_THROW(LieAlgebra(t).o_map(t.generator_state(0)), GradingError);
}

TEST(LieChecks, AllModels) {
  for (const auto& spec : {build_heisenberg(10, Twist::charge_conjugation), build_heisenberg(10),
                           build_virasoro(make_rational(1, 2), 10)}) {
    LieAlgebra lie(spec);
    auto sample = sample_terms(lie, 3, make_rational(5, 2));
    expect_report(check_antisymmetry(lie, sample));
    expect_report(check_jacobi(lie, sample));
    expect_report(check_bracket_grading(lie, sample));
    expect_report(check_lie_centrality(lie, sample));
    expect_report(check_degree_zero_bracket(lie, 3));
  }
}

TEST(LieChecks, Epimorphism) {
  VoaSpec t = build_heisenberg(zhu_model_cutoff(6, 3), Twist::charge_conjugation);
  expect_report(check_epimorphism(LieAlgebra(t), build_quotient(t, 6, 3)));
  VoaSpec s = build_virasoro_simple(make_rational(1, 2), zhu_model_cutoff(8, 3));
  expect_report(check_epimorphism(LieAlgebra(s), build_quotient(s, 8, 3)));
}

TEST(LieChecks, CorruptBracketIsDetected) {
  VoaSpec v = build_virasoro(make_rational(1, 2), 10);
  LieAlgebra lie(v, LieAlgebra::Options{true});
  auto sample = sample_terms(lie, 3, make_rational(5, 2));
  EXPECT_FALSE(check_jacobi(lie, sample).passed());
  EXPECT_FALSE(check_antisymmetry(lie, sample).passed());
}
