#include "tzhu/zhu.hpp"

#include <algorithm>
#include <sstream>

namespace tzhu {

namespace {

Rational twist_fraction(const VoaSpec& spec, KeyId k) { return make_rational(spec.g_exponent(k), spec.order()); }

}  // namespace

Vec residue_product(const VoaSpec& spec, const Vec& u, const Vec& v, int m, int n) {
  Vec out;
  if (v.empty()) return out;
  const int top_v = spec.top_weight(v);
  for (const auto& [ku, cu] : u) {
    const int r = spec.g_exponent(ku);
    const int delta = r == 0 ? 1 : 0;
    const int wt = spec.weight(ku);
    const Rational e = Rational(wt - 1 + delta + n) + twist_fraction(spec, ku);
    const Vec um = spec.monomial(ku);
    Rational c(1);
    for (int i = 0; i - m - delta - 1 < wt + top_v; ++i) {
      if (sgn(c) != 0) axpy(out, cu * c, spec.mode_apply(um, i - m - delta - 1, v));
      c *= e - i;
      c /= i + 1;
    }
  }
  return out;
}

Vec circ_product(const VoaSpec& spec, const Vec& u, const Vec& v) { return residue_product(spec, u, v, 0, 0); }

Vec star_product(const VoaSpec& spec, const Vec& u, const Vec& v) {
  Vec out;
  if (v.empty()) return out;
  const int top_v = spec.top_weight(v);
  for (const auto& [ku, cu] : u) {
    if (spec.g_exponent(ku) != 0) continue;
    const int wt = spec.weight(ku);
    const Vec um = spec.monomial(ku);
    for (int i = 0; i <= wt; ++i) {
      if (i - 1 >= wt + top_v) break;
      axpy(out, cu * rat_binomial(Rational(wt), i), spec.mode_apply(um, i - 1, v));
    }
  }
  return out;
}

std::vector<FamilyMember> spanning_family(const VoaSpec& spec, int N, int K) {
  if (N < 0 || K < 0) throw ConfigError("cutoff and margin must be nonnegative");
  if (N + K > spec.cutoff())
    throw CutoffExceeded("N + K = " + std::to_string(N + K) + " exceeds model cutoff " + std::to_string(spec.cutoff()));
  std::vector<KeyId> keys;
  for (int w = 0; w <= N + K; ++w)
    for (auto k : spec.enumerate_basis(w)) keys.push_back(k);
  std::vector<FamilyMember> out;
  for (auto u : keys) {
    const int wu = spec.weight(u);
    const int delta = spec.g_exponent(u) == 0 ? 1 : 0;
    for (auto v : keys) {
      const int wv = spec.weight(v);
      if (wu + wv > N + K) continue;
      for (int m = 0; m <= K; ++m) {
        const int top = wu + wv + m + delta;
        if (top > spec.cutoff()) continue;
        for (int n = 0; n <= m; ++n) {
          Vec value = residue_product(spec, spec.monomial(u), spec.monomial(v), m, n);
          if (value.empty()) continue;
          out.push_back({u, v, m, n, top, std::move(value)});
        }
      }
    }
  }
  return out;
}

ZhuAlgebra::ZhuAlgebra(const VoaSpec& spec, int N, int K) : spec_(spec), N_(N), K_(K) {
  family_ = spanning_family(spec_, N, K);

  auto earlier_margin = [&](const FamilyMember& f) {
    return K >= 1 && spec_.weight(f.u) + spec_.weight(f.v) <= N + K - 1 && f.m <= K - 1;
  };
  std::vector<std::size_t> order(family_.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    bool ea = earlier_margin(family_[a]), eb = earlier_margin(family_[b]);
    if (ea != eb) return ea;
    return family_[a].top_weight < family_[b].top_weight;
  });

  auto count_free = [&](int upto) {
    std::size_t c = 0;
    for (int w = 0; w <= upto; ++w)
      for (auto k : spec_.enumerate_basis(w))
        if (!span_.is_pivot(k)) ++c;
    return c;
  };

  bool recorded = false;
  for (auto idx : order) {
    if (!recorded && !earlier_margin(family_[idx])) {
      dim_prev_margin_ = count_free(N);
      recorded = true;
    }
    span_.insert(family_[idx].value);
  }
  if (!recorded) dim_prev_margin_ = count_free(N);

  for (int w = 0; w <= N; ++w)
    for (auto k : spec_.enumerate_basis(w))
      if (!span_.is_pivot(k)) {
        position_[k] = basis_.size();
        basis_.push_back(k);
      }
  dim_lower_cutoff_ = N >= 2 ? count_free(N - 2) : 0;
  stabilized_ = K >= 1 && N >= 2 && basis_.size() == dim_prev_margin_ && basis_.size() == dim_lower_cutoff_;

  const std::size_t d = basis_.size();
  table_.assign(d, std::vector<std::optional<std::vector<Rational>>>(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      if (spec_.weight(basis_[i]) + spec_.weight(basis_[j]) > spec_.cutoff()) continue;
      table_[i][j] = coordinates(star_product(spec_, spec_.monomial(basis_[i]), spec_.monomial(basis_[j])));
    }

  auto id = coordinates(spec_.vacuum());
  identity_ = id ? *id : std::vector<Rational>(d);
  if (N >= 2) omega_ = coordinates(spec_.omega());
}

Vec ZhuAlgebra::reduce(const Vec& v) const { return span_.reduce(spec_.reduce(v)); }

std::optional<std::vector<Rational>> ZhuAlgebra::coordinates(const Vec& v) const {
  Vec r = reduce(v);
  std::vector<Rational> x(basis_.size());
  for (const auto& [k, c] : r) {
    auto it = position_.find(k);
    if (it == position_.end()) return std::nullopt;
    x[it->second] = c;
  }
  return x;
}

Vec ZhuAlgebra::from_coordinates(const std::vector<Rational>& x) const {
  Vec v;
  for (std::size_t i = 0; i < x.size(); ++i) add_term(v, basis_[i], x[i]);
  return v;
}

std::optional<bool> ZhuAlgebra::vanishes(const Vec& v) const {
  Vec r = reduce(v);
  if (r.empty()) return true;
  for (const auto& [k, c] : r)
    if (!position_.count(k)) return std::nullopt;
  return false;
}

std::optional<std::vector<Rational>> ZhuAlgebra::multiply(const std::vector<Rational>& x,
                                                          const std::vector<Rational>& y) const {
  std::vector<Rational> z(dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < dim(); ++j) {
      if (sgn(y[j]) == 0) continue;
      const auto& p = table_[i][j];
      if (!p) return std::nullopt;
      for (std::size_t k = 0; k < dim(); ++k) z[k] += x[i] * y[j] * (*p)[k];
    }
  }
  return z;
}

bool ZhuAlgebra::table_complete() const {
  for (const auto& row : table_)
    for (const auto& e : row)
      if (!e) return false;
  return true;
}

std::optional<Matrix> ZhuAlgebra::left_multiplication(const std::vector<Rational>& x) const {
  Matrix m(dim(), dim());
  for (std::size_t j = 0; j < dim(); ++j) {
    std::vector<Rational> e(dim());
    e[j] = 1;
    auto col = multiply(x, e);
    if (!col) return std::nullopt;
    for (std::size_t i = 0; i < dim(); ++i) m(i, j) = (*col)[i];
  }
  return m;
}

ZhuAlgebra build_quotient(const VoaSpec& spec, int N, int K) { return ZhuAlgebra(spec, N, K); }

namespace {

std::string coords_str(const std::vector<Rational>& x) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < x.size(); ++i) os << (i ? ", " : "") << to_string(x[i]);
  os << "]";
  return os.str();
}

}  // namespace

CheckReport check_ideal(const ZhuAlgebra& alg, std::size_t max_samples_per_class) {
  CheckReport rep{"zhu-ideal"};
  const VoaSpec& spec = alg.spec();
  std::vector<Vec> classes;
  for (auto k : alg.basis()) classes.push_back(spec.monomial(k));
  if (alg.cutoff() >= 2) classes.push_back(spec.omega());
  const auto& fam = alg.family();
  for (const auto& c : classes) {
    const int wc = spec.top_weight(c);
    std::vector<const FamilyMember*> pool;
    for (const auto& f : fam)
      if (f.top_weight + wc <= alg.cutoff()) pool.push_back(&f);
    const std::size_t stride = std::max<std::size_t>(1, pool.size() / std::max<std::size_t>(1, max_samples_per_class));
    for (std::size_t i = 0; i < pool.size(); i += stride) {
      const auto& f = *pool[i];
      for (int side = 0; side < 2; ++side) {
        Vec p = side == 0 ? star_product(spec, c, f.value) : star_product(spec, f.value, c);
        auto z = alg.vanishes(p);
        if (!z) {
          ++rep.skipped;
          continue;
        }
        rep.expect(*z, (side == 0 ? "c*u" : "u*c") + std::string(" nonzero for c = ") + spec.format(c) +
                           ", u from (" + spec.format_key(f.u) + ", " + spec.format_key(f.v) + ", m=" +
                           std::to_string(f.m) + ", n=" + std::to_string(f.n) + ")");
      }
    }
  }
  return rep;
}

CheckReport check_associativity(const ZhuAlgebra& alg) {
  CheckReport rep{"zhu-associativity"};
  const std::size_t d = alg.dim();
  auto unit = [&](std::size_t i) {
    std::vector<Rational> e(d);
    e[i] = 1;
    return e;
  };
  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t y = 0; y < d; ++y)
      for (std::size_t z = 0; z < d; ++z) {
        auto xy = alg.multiply(unit(x), unit(y));
        auto yz = alg.multiply(unit(y), unit(z));
        if (!xy || !yz) {
          ++rep.skipped;
          continue;
        }
        auto l = alg.multiply(*xy, unit(z));
        auto r = alg.multiply(unit(x), *yz);
        if (!l || !r) {
          ++rep.skipped;
          continue;
        }
        rep.expect(*l == *r, "(xy)z != x(yz) for basis (" + std::to_string(x) + "," + std::to_string(y) + "," +
                                 std::to_string(z) + "): " + coords_str(*l) + " vs " + coords_str(*r));
      }
  return rep;
}

CheckReport check_phi(const ZhuAlgebra& g, const ZhuAlgebra& ginv) {
  CheckReport rep{"zhu-phi"};
  const VoaSpec& sg = g.spec();
  const VoaSpec& si = ginv.spec();
  for (const auto& f : g.family()) {
    auto z = ginv.vanishes(si.phi(f.value));
    if (!z) {
      ++rep.skipped;
      continue;
    }
    rep.expect(*z, "phi of family member (" + sg.format_key(f.u) + ", " + sg.format_key(f.v) + ", m=" +
                       std::to_string(f.m) + ", n=" + std::to_string(f.n) + ") leaves the span");
  }
  for (auto a : g.basis())
    for (auto b : g.basis()) {
      if (sg.weight(a) + sg.weight(b) > sg.cutoff()) {
        ++rep.skipped;
        continue;
      }
      Vec ab = star_product(sg, sg.monomial(a), sg.monomial(b));
      auto lhs = ginv.coordinates(si.phi(ab));
      auto rhs = ginv.coordinates(star_product(si, si.phi(si.monomial(b)), si.phi(si.monomial(a))));
      if (!lhs || !rhs) {
        ++rep.skipped;
        continue;
      }
      rep.expect(*lhs == *rhs, "[phi(a*b)] != [phi(b)]*[phi(a)] for a = " + sg.format_key(a) +
                                   ", b = " + sg.format_key(b));
    }
  return rep;
}

CheckReport check_identity_laws(const ZhuAlgebra& alg) {
  CheckReport rep{"zhu-identity-laws"};
  const VoaSpec& spec = alg.spec();
  for (auto x : alg.basis()) {
    Vec xv = spec.monomial(x);
    for (int side = 0; side < 2; ++side) {
      Vec p = side == 0 ? star_product(spec, spec.vacuum(), xv) : star_product(spec, xv, spec.vacuum());
      auto z = alg.vanishes(difference(p, xv));
      if (!z) {
        ++rep.skipped;
        continue;
      }
      rep.expect(*z, (side == 0 ? "1*x != x for x = " : "x*1 != x for x = ") + spec.format_key(x));
    }
  }
  return rep;
}

CheckReport check_centrality(const ZhuAlgebra& alg) {
  CheckReport rep{"zhu-centrality"};
  const VoaSpec& spec = alg.spec();
  if (alg.cutoff() < 2) {
    rep.note = "cutoff below the weight of omega";
    return rep;
  }
  const Vec w = spec.omega();
  for (auto x : alg.basis()) {
    if (spec.weight(x) + 2 > spec.cutoff()) {
      ++rep.skipped;
      continue;
    }
    Vec xv = spec.monomial(x);
    auto z = alg.vanishes(difference(star_product(spec, w, xv), star_product(spec, xv, w)));
    if (!z) {
      ++rep.skipped;
      continue;
    }
    rep.expect(*z, "omega does not commute with " + spec.format_key(x));
  }
  return rep;
}

CheckReport check_odd_vanishing(const ZhuAlgebra& alg) {
  CheckReport rep{"zhu-odd-vanishing"};
  const VoaSpec& spec = alg.spec();
  for (int w = 0; w <= alg.cutoff(); ++w)
    for (auto k : spec.enumerate_basis(w)) {
      if (spec.g_exponent(k) == 0) continue;
      rep.expect(alg.reduce(spec.monomial(k)).empty(), spec.format_key(k) + " does not reduce to 0");
    }
  if (spec.order() == 1) rep.note = "untwisted model: no vectors with nonzero g-exponent";
  return rep;
}

CheckReport check_star_residue_identities(const ZhuAlgebra& alg) {
  CheckReport rep{"zhu-star-residue"};
  const VoaSpec& spec = alg.spec();
  std::vector<KeyId> even;
  for (int w = 0; w <= alg.cutoff(); ++w)
    for (auto k : spec.enumerate_basis(w))
      if (spec.g_exponent(k) == 0) even.push_back(k);
  for (auto u : even)
    for (auto v : even) {
      const int wu = spec.weight(u), wv = spec.weight(v);
      if (wu + wv > alg.cutoff()) continue;
      const Vec uv = spec.monomial(u), vv = spec.monomial(v);
      const Vec s = star_product(spec, uv, vv);
      // u*v - Res (1+z)^{wt v - 1} z^{-1} Y(v,z) u
      Vec right;
      for (int i = 0; i - 1 < wu + wv; ++i)
        axpy(right, rat_binomial(Rational(wv - 1), i), spec.mode_apply(vv, i - 1, uv));
      auto z1 = alg.vanishes(difference(s, right));
      // u*v - v*u - Res (1+z)^{wt u - 1} Y(u,z) v
      Vec comm = difference(s, star_product(spec, vv, uv));
      for (int i = 0; i < wu + wv; ++i)
        axpy(comm, -rat_binomial(Rational(wu - 1), i), spec.mode_apply(uv, i, vv));
      auto z2 = alg.vanishes(comm);
      const std::string tag = " for u = " + spec.format_key(u) + ", v = " + spec.format_key(v);
      if (z1) rep.expect(*z1, "right residue identity fails" + tag); else ++rep.skipped;
      if (z2) rep.expect(*z2, "commutator residue identity fails" + tag); else ++rep.skipped;
    }
  return rep;
}

SemisimplicityReport semisimplicity_report(const ZhuAlgebra& alg) {
  SemisimplicityReport rep;
  rep.dim = alg.dim();
  if (!alg.stabilized()) {
    rep.note = "dimension not stabilized in margin and cutoff; no verdict";
    return rep;
  }
  if (!alg.table_complete()) {
    rep.note = "multiplication table incomplete at this cutoff; no verdict";
    return rep;
  }
  const std::size_t d = alg.dim();
  std::vector<Matrix> left;
  for (std::size_t i = 0; i < d; ++i) {
    std::vector<Rational> e(d);
    e[i] = 1;
    left.push_back(*alg.left_multiplication(e));
  }
  Matrix form(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) form(i, j) = (left[i] * left[j]).trace();
  rep.radical_dim = d - form.rank();
  rep.decided = true;
  if (!alg.omega_class()) {
    rep.note = "omega class unavailable";
    return rep;
  }
  Matrix lw = *alg.left_multiplication(*alg.omega_class());
  rep.omega_minimal_polynomial = minimal_polynomial(lw);
  auto split = rational_roots(rep.omega_minimal_polynomial);
  rep.omega_spectrum = split.roots;
  if (split.residual.size() > 1) rep.irreducible_residual = split.residual;
  rep.note = rep.radical_dim == 0 ? "semisimple" : "nonzero radical";
  return rep;
}

}  // namespace tzhu
