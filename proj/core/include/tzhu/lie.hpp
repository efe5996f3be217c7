#pragma once

#include "tzhu/check.hpp"
#include "tzhu/voa.hpp"
#include "tzhu/zhu.hpp"

#include <map>
#include <memory>
#include <optional>

namespace tzhu {

// a(m): the class of t^m (x) a, with m in r/T + Z for a in V^r.
struct LieTerm {
  KeyId base;
  Rational m;
  bool operator==(const LieTerm& o) const { return base == o.base && m == o.m; }
  bool operator<(const LieTerm& o) const { return base != o.base ? base < o.base : m < o.m; }
};

using LieElement = std::map<LieTerm, Rational>;

enum class TriangularPart { plus, zero, minus };

class LieAlgebra {
 public:
  struct Options {
    bool corrupt_bracket = false;  // fault injection: flips the sign of the i = 1 bracket term
  };

  explicit LieAlgebra(const VoaSpec& spec) : LieAlgebra(spec, Options{}) {}
  LieAlgebra(const VoaSpec& spec, Options opts);

  const VoaSpec& spec() const { return spec_; }

  // Normal form of a(m) modulo the image of d/dt (x) 1 + 1 (x) L(-1).
  LieElement normalize(const Vec& a, const Rational& m) const;
  LieElement normalize(const LieElement& x) const;
  LieElement term(KeyId a, const Rational& m) const { return normalize(spec_.monomial(a), m); }

  LieElement bracket(const LieElement& x, const LieElement& y) const;

  bool valid_shift(KeyId a, const Rational& m) const;
  Rational degree(const LieTerm& t) const { return Rational(spec_.weight(t.base) - 1) - t.m; }
  // Common degree of all terms; nullopt for zero or mixed elements.
  std::optional<Rational> degree(const LieElement& x) const;
  TriangularPart part(const LieTerm& t) const;

  // a(wt a - 1) for weight-homogeneous a in V^0.
  LieElement o_map(const Vec& a) const;

  std::string format(const LieElement& x) const;

 private:
  struct Cache;
  LieElement bracket_terms(const LieTerm& x, const LieTerm& y) const;
  VoaSpec spec_;
  Options opts_;
  std::shared_ptr<Cache> cache_;
};

LieElement lie_add(const LieElement& x, const LieElement& y, const Rational& c = Rational(1));
LieElement lie_scaled(const LieElement& x, const Rational& c);

// Normal terms a(m) with wt a <= max_weight and |m| <= max_abs_m.
std::vector<LieElement> sample_terms(const LieAlgebra& lie, int max_weight, const Rational& max_abs_m);

CheckReport check_antisymmetry(const LieAlgebra& lie, const std::vector<LieElement>& sample);
CheckReport check_jacobi(const LieAlgebra& lie, const std::vector<LieElement>& sample);
CheckReport check_bracket_grading(const LieAlgebra& lie, const std::vector<LieElement>& sample);
// [omega(0), a(m)] = -m a(m-1) and [1(-1), x] = 0.
CheckReport check_lie_centrality(const LieAlgebra& lie, const std::vector<LieElement>& sample);
// [a(wt a-1), b(wt b-1)] = sum_j C(wt a-1, j) (a_j b)(wt(a_j b)-1), evaluated term by term.
CheckReport check_degree_zero_bracket(const LieAlgebra& lie, int max_weight);
// Degree-zero brackets map onto commutators in the Zhu algebra.
CheckReport check_epimorphism(const LieAlgebra& lie, const ZhuAlgebra& alg);

}  // namespace tzhu
