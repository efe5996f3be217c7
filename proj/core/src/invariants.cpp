#include "tzhu/invariants.hpp"

#include "tzhu/errors.hpp"
#include "tzhu/models.hpp"

namespace tzhu {

namespace {

std::vector<KeyId> keys_up_to(const VoaSpec& spec, int max_weight) {
  std::vector<KeyId> out;
  for (int w = 0; w <= std::min(max_weight, spec.cutoff()); ++w)
    for (auto k : spec.enumerate_basis(w)) out.push_back(k);
  return out;
}

}  // namespace

CheckReport check_vertex_commutator(const VoaSpec& spec, int max_weight, int w_weight) {
  CheckReport rep{"vertex-commutator"};
  const auto keys = keys_up_to(spec, max_weight);
  const auto targets = keys_up_to(spec, w_weight);
  for (auto u : keys)
    for (auto v : keys)
      for (auto w : targets) {
        const Vec uv = spec.monomial(u), vv = spec.monomial(v), wv = spec.monomial(w);
        const int wu = spec.weight(u), wvv = spec.weight(v), ww = spec.weight(w);
        for (int m = -2; m <= wu + wvv + ww; ++m)
          for (int n = -2; n <= wu + wvv + ww; ++n) {
            try {
              Vec lhs = spec.mode_apply(uv, m, spec.mode_apply(vv, n, wv));
              axpy(lhs, Rational(-1), spec.mode_apply(vv, n, spec.mode_apply(uv, m, wv)));
              Vec rhs;
              for (int i = 0; i < wu + wvv; ++i) {
                Rational c = rat_binomial(Rational(m), static_cast<unsigned>(i));
                Vec ui = spec.mode_apply(uv, i, vv);
                if (!ui.empty()) axpy(rhs, c, spec.mode_apply(ui, m + n - i, wv));
              }
              rep.expect(spec.reduce(difference(lhs, rhs)).empty(),
                         "[u_m, v_n] w mismatch for u = " + spec.format_key(u) + ", v = " + spec.format_key(v) +
                             ", w = " + spec.format_key(w) + ", m = " + std::to_string(m) +
                             ", n = " + std::to_string(n));
            } catch (const CutoffExceeded&) {
              ++rep.skipped;
            }
          }
      }
  return rep;
}

CheckReport check_derivative(const VoaSpec& spec, int max_weight, int w_weight) {
  CheckReport rep{"l-1-derivative"};
  for (auto u : keys_up_to(spec, max_weight)) {
    const Vec uv = spec.monomial(u);
    Vec du;
    try {
      du = spec.l_operator(-1, uv);
    } catch (const CutoffExceeded&) {
      ++rep.skipped;
      continue;
    }
    for (auto w : keys_up_to(spec, w_weight)) {
      const Vec wv = spec.monomial(w);
      for (int n = -2; n <= spec.weight(u) + spec.weight(w) + 1; ++n) {
        try {
          Vec lhs = du.empty() ? Vec{} : spec.mode_apply(du, n, wv);
          Vec rhs = scaled(spec.mode_apply(uv, n - 1, wv), Rational(-n));
          rep.expect(difference(lhs, rhs).empty(), "(L(-1)u)_n != -n u_{n-1} for u = " + spec.format_key(u) +
                                                       ", w = " + spec.format_key(w) + ", n = " + std::to_string(n));
        } catch (const CutoffExceeded&) {
          ++rep.skipped;
        }
      }
    }
  }
  return rep;
}

CheckReport check_creation(const VoaSpec& spec, int max_weight) {
  CheckReport rep{"creation"};
  const Vec one = spec.vacuum();
  for (auto u : keys_up_to(spec, max_weight)) {
    const Vec uv = spec.monomial(u);
    rep.expect(spec.mode_apply(uv, -1, one) == uv, "u_{-1} 1 != u for u = " + spec.format_key(u));
    for (int n = 0; n <= spec.weight(u) + 1; ++n)
      rep.expect(spec.mode_apply(uv, n, one).empty(),
                 "u_n 1 != 0 for u = " + spec.format_key(u) + ", n = " + std::to_string(n));
  }
  return rep;
}

CheckReport check_g_grading(const VoaSpec& spec, int max_weight) {
  CheckReport rep{"g-grading"};
  const int T = spec.order();
  const auto keys = keys_up_to(spec, max_weight);
  for (auto u : keys)
    for (auto v : keys)
      for (int n = -2; n < spec.weight(u) + spec.weight(v); ++n) {
        Vec r;
        try {
          r = spec.mode_apply(spec.monomial(u), n, spec.monomial(v));
        } catch (const CutoffExceeded&) {
          ++rep.skipped;
          continue;
        }
        const int want = (spec.g_exponent(u) + spec.g_exponent(v)) % T;
        bool ok = true;
        for (const auto& [k, c] : r) ok = ok && spec.g_exponent(k) == want;
        rep.expect(ok, "u_n v leaves V^" + std::to_string(want) + " for u = " + spec.format_key(u) +
                           ", v = " + spec.format_key(v) + ", n = " + std::to_string(n));
      }
  return rep;
}

CheckReport check_phi_involution(const VoaSpec& spec, int max_weight) {
  CheckReport rep{"phi-involution"};
  for (auto u : keys_up_to(spec, max_weight)) {
    const Vec uv = spec.monomial(u);
    const Vec p = spec.phi(uv);
    // unitriangular up to sign with respect to weight, hence invertible on V_{<=n}
    bool triangular = true;
    for (const auto& [k, c] : p) {
      if (spec.weight(k) > spec.weight(u)) triangular = false;
      if (spec.weight(k) == spec.weight(u) && !(k == u && c == sign_power(spec.weight(u)))) triangular = false;
    }
    rep.expect(triangular && p.count(u), "phi(u) is not (-1)^{wt u} u plus lower weights for u = " + spec.format_key(u));
    rep.expect(spec.phi(p) == uv, "phi(phi(u)) != u for u = " + spec.format_key(u));
  }
  return rep;
}

CheckReport check_gram_symmetry(const VoaSpec& spec, int max_weight) {
  CheckReport rep{"gram-symmetry"};
  for (int w = 0; w <= std::min(max_weight, spec.cutoff()); ++w) {
    Matrix g = shapovalov_gram(spec, w);
    rep.expect(g == g.transpose(), "Gram matrix not symmetric at weight " + std::to_string(w));
  }
  return rep;
}

CheckReport check_radical_null(const VoaSpec& spec, int max_weight) {
  CheckReport rep{"radical-null"};
  for (int w = 1; w <= std::min(max_weight, spec.cutoff()); ++w) {
    const auto keys = spec.enumerate_universal(w);
    Matrix g = shapovalov_gram(spec, w);
    const auto radical = gram_radical(spec, w);
    for (const auto& [piv, row] : radical.rows()) {
      std::vector<Rational> x(keys.size());
      for (std::size_t i = 0; i < keys.size(); ++i) {
        auto it = row.find(keys[i]);
        if (it != row.end()) x[i] = it->second;
      }
      bool zero = true;
      for (const auto& y : g.apply(x)) zero = zero && sgn(y) == 0;
      rep.expect(zero, "radical vector pairs nontrivially at weight " + std::to_string(w));
    }
  }
  return rep;
}

CheckReport check_quotient_well_defined(const VoaSpec& spec, int max_weight, int u_weight) {
  CheckReport rep{"quotient-well-defined"};
  if (!spec.is_quotient()) {
    rep.note = "universal model: nothing to check";
    return rep;
  }
  const auto keys = keys_up_to(spec, u_weight);
  for (int w = 1; w <= std::min(max_weight, spec.cutoff()); ++w)
    for (const auto& [piv, row] : spec.radical(w).rows())
      for (auto u : keys)
        for (int n = -2; n < spec.weight(u) + w; ++n) {
          try {
            const Vec uv = spec.monomial(u);
            rep.expect(spec.mode_apply(uv, n, row).empty(),
                       "u_n r leaves the radical for u = " + spec.format_key(u) + ", weight " + std::to_string(w));
            rep.expect(spec.mode_apply(row, n, uv).empty(),
                       "r_n u leaves the radical for u = " + spec.format_key(u) + ", weight " + std::to_string(w));
          } catch (const CutoffExceeded&) {
            ++rep.skipped;
          }
        }
  return rep;
}

CheckReport check_margin_monotonicity(const ZhuAlgebra& alg) {
  CheckReport rep{"margin-monotonicity"};
  if (alg.margin() < 1) {
    ++rep.skipped;
    return rep;
  }
  rep.expect(alg.dim() <= alg.dim_previous_margin(),
             "dimension grew from " + std::to_string(alg.dim_previous_margin()) + " to " + std::to_string(alg.dim()));
  return rep;
}

}  // namespace tzhu
