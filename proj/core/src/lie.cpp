#include "tzhu/lie.hpp"

#include <mutex>
#include <sstream>

namespace tzhu {

struct LieAlgebra::Cache {
  std::recursive_mutex mu;
  std::map<int, TrackedEchelon<KeyId, KeyId>> complements;
  std::map<std::pair<KeyId, Rational>, LieElement> normal;
  std::map<std::pair<LieTerm, LieTerm>, LieElement> brackets;
};

LieAlgebra::LieAlgebra(const VoaSpec& spec, Options opts)
    : spec_(spec), opts_(opts), cache_(std::make_shared<Cache>()) {}

LieElement lie_add(const LieElement& x, const LieElement& y, const Rational& c) {
  LieElement out = x;
  if (sgn(c) == 0) return out;
  for (const auto& [t, v] : y) {
    auto [it, fresh] = out.try_emplace(t, c * v);
    if (!fresh) {
      it->second += c * v;
      if (sgn(it->second) == 0) out.erase(it);
    }
  }
  return out;
}

LieElement lie_scaled(const LieElement& x, const Rational& c) {
  LieElement out;
  if (sgn(c) == 0) return out;
  for (const auto& [t, v] : x) out.emplace(t, c * v);
  return out;
}

bool LieAlgebra::valid_shift(KeyId a, const Rational& m) const {
  return is_integer(m - make_rational(spec_.g_exponent(a), spec_.order()));
}

LieElement LieAlgebra::normalize(const Vec& a, const Rational& m) const {
  LieElement out;
  for (const auto& [k, c] : a) {
    if (!valid_shift(k, m))
      throw GradingError("shift " + to_string(m) + " incompatible with g-exponent of " + spec_.format_key(k));
  }
  Vec reduced = spec_.reduce(a);
  std::map<int, Vec> parts;
  for (const auto& [k, c] : reduced) parts[spec_.weight(k)].emplace(k, c);
  std::lock_guard lock(cache_->mu);
  for (auto& [w, part] : parts) {
    if (w == 0) {
      if (m == -1) out = lie_add(out, LieElement{{LieTerm{VoaSpec::vacuum_id(), Rational(-1)}, part.begin()->second}});
      continue;
    }
    auto it = cache_->complements.find(w);
    if (it == cache_->complements.end()) {
      TrackedEchelon<KeyId, KeyId> e;
      for (auto k : spec_.enumerate_basis(w - 1)) e.insert(spec_.l_operator(-1, spec_.monomial(k)), spec_.monomial(k));
      it = cache_->complements.emplace(w, std::move(e)).first;
    }
    auto [rest, pre] = it->second.reduce(part);
    for (const auto& [k, c] : rest) out = lie_add(out, LieElement{{LieTerm{k, m}, c}});
    if (!pre.empty() && sgn(m) != 0) out = lie_add(out, normalize(pre, m - 1), -m);
  }
  return out;
}

LieElement LieAlgebra::normalize(const LieElement& x) const {
  LieElement out;
  for (const auto& [t, c] : x) out = lie_add(out, normalize(spec_.monomial(t.base), t.m), c);
  return out;
}

LieElement LieAlgebra::bracket_terms(const LieTerm& x, const LieTerm& y) const {
  {
    std::lock_guard lock(cache_->mu);
    auto it = cache_->brackets.find({x, y});
    if (it != cache_->brackets.end()) return it->second;
  }
  LieElement out;
  const Vec a = spec_.monomial(x.base), b = spec_.monomial(y.base);
  const int top = spec_.weight(x.base) + spec_.weight(y.base);
  Rational c(1);
  for (int i = 0; i < top; ++i) {
    Rational coeff = c;
    if (opts_.corrupt_bracket && i == 1) coeff = -coeff;
    if (sgn(coeff) != 0) {
      Vec ab = spec_.mode_apply(a, i, b);
      if (!ab.empty()) out = lie_add(out, normalize(ab, x.m + y.m - i), coeff);
    }
    c *= x.m - i;
    c /= i + 1;
  }
  std::lock_guard lock(cache_->mu);
  cache_->brackets.emplace(std::make_pair(x, y), out);
  return out;
}

LieElement LieAlgebra::bracket(const LieElement& x, const LieElement& y) const {
  LieElement out;
  for (const auto& [tx, cx] : x)
    for (const auto& [ty, cy] : y) out = lie_add(out, bracket_terms(tx, ty), cx * cy);
  return out;
}

std::optional<Rational> LieAlgebra::degree(const LieElement& x) const {
  if (x.empty()) return std::nullopt;
  Rational d = degree(x.begin()->first);
  for (const auto& [t, c] : x)
    if (degree(t) != d) return std::nullopt;
  return d;
}

TriangularPart LieAlgebra::part(const LieTerm& t) const {
  int s = sgn(degree(t));
  return s > 0 ? TriangularPart::plus : s == 0 ? TriangularPart::zero : TriangularPart::minus;
}

LieElement LieAlgebra::o_map(const Vec& a) const {
  if (a.empty()) return {};
  if (!spec_.is_weight_homogeneous(a)) throw GradingError("o(a) needs a weight-homogeneous vector");
  for (const auto& [k, c] : a)
    if (spec_.g_exponent(k) != 0) throw GradingError("o(a) needs a g-invariant vector");
  return normalize(a, Rational(spec_.weight(a.begin()->first) - 1));
}

std::string LieAlgebra::format(const LieElement& x) const {
  if (x.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [t, c] : x) {
    if (!first) os << " + ";
    first = false;
    if (c != 1) os << "(" << to_string(c) << ") ";
    os << "[" << spec_.format_key(t.base) << "](" << to_string(t.m) << ")";
  }
  return os.str();
}

std::vector<LieElement> sample_terms(const LieAlgebra& lie, int max_weight, const Rational& max_abs_m) {
  const VoaSpec& spec = lie.spec();
  std::vector<LieElement> out;
  const long bound = floor_long(max_abs_m) + 1;
  for (int w = 0; w <= max_weight; ++w)
    for (auto k : spec.enumerate_basis(w)) {
      const Rational shift = make_rational(spec.g_exponent(k), spec.order());
      for (long j = -bound - 1; j <= bound; ++j) {
        Rational m = shift + j;
        if (abs(m) > max_abs_m) continue;
        LieElement t = lie.term(k, m);
        if (t.size() == 1 && t.begin()->first == LieTerm{k, m} && t.begin()->second == 1) out.push_back(t);
      }
    }
  return out;
}

CheckReport check_antisymmetry(const LieAlgebra& lie, const std::vector<LieElement>& s) {
  CheckReport rep{"lie-antisymmetry"};
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i; j < s.size(); ++j) {
      LieElement sum = lie_add(lie.bracket(s[i], s[j]), lie.bracket(s[j], s[i]));
      rep.expect(sum.empty(), "[x,y] + [y,x] != 0 for x = " + lie.format(s[i]) + ", y = " + lie.format(s[j]));
    }
  return rep;
}

CheckReport check_jacobi(const LieAlgebra& lie, const std::vector<LieElement>& s) {
  CheckReport rep{"lie-jacobi"};
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i; j < s.size(); ++j)
      for (std::size_t k = j; k < s.size(); ++k) {
        const auto &x = s[i], &y = s[j], &z = s[k];
        LieElement sum = lie.bracket(x, lie.bracket(y, z));
        sum = lie_add(sum, lie.bracket(y, lie.bracket(z, x)));
        sum = lie_add(sum, lie.bracket(z, lie.bracket(x, y)));
        rep.expect(sum.empty(), "Jacobi fails for " + lie.format(x) + ", " + lie.format(y) + ", " + lie.format(z) +
                                    ": " + lie.format(sum));
      }
  return rep;
}

CheckReport check_bracket_grading(const LieAlgebra& lie, const std::vector<LieElement>& s) {
  CheckReport rep{"lie-grading"};
  for (const auto& x : s)
    for (const auto& y : s) {
      LieElement b = lie.bracket(x, y);
      if (b.empty()) {
        rep.pass();
        continue;
      }
      auto d = lie.degree(b);
      rep.expect(d && *d == *lie.degree(x) + *lie.degree(y),
                 "degree not additive for " + lie.format(x) + ", " + lie.format(y));
    }
  return rep;
}

CheckReport check_lie_centrality(const LieAlgebra& lie, const std::vector<LieElement>& s) {
  CheckReport rep{"lie-centrality"};
  const VoaSpec& spec = lie.spec();
  const LieElement w0 = lie.normalize(spec.omega(), Rational(0));
  const LieElement one = lie.normalize(spec.vacuum(), Rational(-1));
  for (const auto& x : s) {
    LieElement expected;
    for (const auto& [t, c] : x) expected = lie_add(expected, lie.term(t.base, t.m - 1), -t.m * c);
    rep.expect(lie.bracket(w0, x) == expected, "[omega(0), x] law fails for x = " + lie.format(x));
    rep.expect(lie.bracket(one, x).empty() && lie.bracket(x, one).empty(),
               "1(-1) not central against " + lie.format(x));
  }
  return rep;
}

CheckReport check_degree_zero_bracket(const LieAlgebra& lie, int max_weight) {
  CheckReport rep{"lie-degree-zero"};
  const VoaSpec& spec = lie.spec();
  std::vector<KeyId> keys;
  for (int w = 0; w <= max_weight; ++w)
    for (auto k : spec.enumerate_basis(w))
      if (spec.g_exponent(k) == 0) keys.push_back(k);
  for (auto a : keys)
    for (auto b : keys) {
      const int wa = spec.weight(a), wb = spec.weight(b);
      LieElement lhs = lie.bracket(lie.o_map(spec.monomial(a)), lie.o_map(spec.monomial(b)));
      LieElement rhs;
      for (int j = 0; j < wa + wb; ++j) {
        Vec ab = spec.mode_apply(spec.monomial(a), j, spec.monomial(b));
        if (ab.empty()) continue;
        rhs = lie_add(rhs, lie.normalize(ab, Rational(wa + wb - j - 2)), rat_binomial(Rational(wa - 1), j));
      }
      rep.expect(lhs == rhs, "degree-zero bracket mismatch for " + spec.format_key(a) + ", " + spec.format_key(b));
    }
  return rep;
}

CheckReport check_epimorphism(const LieAlgebra& lie, const ZhuAlgebra& alg) {
  CheckReport rep{"lie-epimorphism"};
  const VoaSpec& spec = lie.spec();
  std::vector<KeyId> keys;
  for (int w = 0; w <= alg.cutoff(); ++w)
    for (auto k : spec.enumerate_basis(w))
      if (spec.g_exponent(k) == 0) keys.push_back(k);
  for (std::size_t i = 0; i < keys.size(); ++i)
    for (std::size_t j = i; j < keys.size(); ++j) {
      const KeyId a = keys[i], b = keys[j];
      if (spec.weight(a) + spec.weight(b) > alg.cutoff()) continue;
      const Vec av = spec.monomial(a), bv = spec.monomial(b);
      LieElement br = lie.bracket(lie.o_map(av), lie.o_map(bv));
      Vec image;
      bool degree_zero = true;
      for (const auto& [t, c] : br) {
        if (sgn(lie.degree(t)) != 0) degree_zero = false;
        add_term(image, t.base, c);
      }
      auto lhs = alg.coordinates(image);
      auto rhs = alg.coordinates(difference(star_product(spec, av, bv), star_product(spec, bv, av)));
      if (!lhs || !rhs) {
        ++rep.skipped;
        continue;
      }
      rep.expect(degree_zero && *lhs == *rhs,
                 "bracket image differs from commutator for " + spec.format_key(a) + ", " + spec.format_key(b));
    }
  return rep;
}

}  // namespace tzhu
