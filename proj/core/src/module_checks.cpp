#include "tzhu/modules.hpp"

#include <algorithm>

namespace tzhu {

namespace {

std::vector<KeyId> keys_up_to(const VoaSpec& spec, int max_weight) {
  std::vector<KeyId> out;
  for (int w = 0; w <= max_weight; ++w)
    for (auto k : spec.enumerate_basis(w)) out.push_back(k);
  return out;
}

// Modes a_m with scaled degree delta in [lo, hi]; m in r/T + Z for a in V^r,
// or in -r/T + Z when `dual` is set.
std::vector<std::pair<Rational, int>> modes_in_window(const VoaSpec& spec, KeyId a, int lo, int hi, bool dual) {
  const int T = spec.order();
  const int r = (dual ? -1 : 1) * spec.g_exponent(a);
  std::vector<std::pair<Rational, int>> out;
  for (int d = lo; d <= hi; ++d) {
    if (((d + r) % T + T) % T != 0) continue;
    out.emplace_back(Rational(spec.weight(a) - 1) - make_rational(d, T), d);
  }
  return out;
}

ModVec module_act(const InducedModule& M, const Vec& a, const Rational& m, const ModVec& v) {
  if (a.empty() || v.empty()) return {};
  return M.act(a, m, v);
}


std::optional<Rational> lowest_scalar(const InducedModule& M) {
  const ZhuModule& U = M.lowest();
  if (U.lowest_weight) return U.lowest_weight;
  auto w = M.algebra().omega_class();
  if (!w) return std::nullopt;
  Matrix rho = U.act(*w);
  if (U.dim == 0) return std::nullopt;
  Rational h = rho(0, 0);
  if (!(rho == Matrix::identity(U.dim).scaled(h))) return std::nullopt;
  return h;
}

bool matrix_is_zero(const Matrix& m) { return m.is_zero(); }

}  // namespace

OmegaResult omega_functor(const InducedModule& M, int term_weight, std::size_t max_zero_samples) {
  if (M.depth_index() < 1)
    throw InsufficientDepth("lowest-weight vectors need depth at least 1/" + std::to_string(M.order()));
  OmegaResult out;
  const VoaSpec& spec = M.spec();
  const ZhuAlgebra& alg = M.algebra();
  const int D = M.depth_index();
  const auto keys = keys_up_to(spec, term_weight);
  for (int n = 0; n <= D; ++n) {
    std::vector<Matrix> blocks;
    std::size_t rows = 0;
    for (auto a : keys)
      for (const auto& [m, d] : modes_in_window(spec, a, -n, -1, false)) {
        Matrix b = M.mode_matrix(spec.monomial(a), m, n);
        ++out.conditions;
        rows += b.rows();
        blocks.push_back(std::move(b));
      }
    Matrix stacked(rows, M.dim(n));
    std::size_t at = 0;
    for (const auto& b : blocks)
      for (std::size_t i = 0; i < b.rows(); ++i, ++at)
        for (std::size_t j = 0; j < b.cols(); ++j) stacked(at, j) = b(i, j);
    out.dims.push_back(M.dim(n) - stacked.rank());
  }
  CheckReport& rep = out.report;
  std::size_t total = 0;
  for (auto d : out.dims) total += d;
  rep.expect(total == M.lowest().dim, "lowest-weight space has dimension " + std::to_string(total) + ", expected " +
                                          std::to_string(M.lowest().dim));
  rep.expect(out.dims[0] == M.dim(0), "degree-0 piece is not annihilated by lowering modes");
  // Degree 0 carries no lowering conditions, so Omega(0) = M(0) with its own basis.
  ZhuModule& Z = out.module;
  Z.dim = M.dim(0);
  Z.lowest_weight = M.lowest().lowest_weight;
  Z.label = "Omega(" + M.lowest().label + ")";
  for (std::size_t i = 0; i < alg.dim(); ++i) {
    const KeyId x = alg.basis()[i];
    Matrix o = M.mode_matrix(spec.monomial(x), Rational(spec.weight(x) - 1), 0);
    Z.action.push_back(o);
    rep.expect(o == M.lowest().action.at(i),
               "o(" + spec.format_key(x) + ") differs from its action on U");
  }
  std::vector<const FamilyMember*> fam;
  for (const auto& f : alg.family()) fam.push_back(&f);
  std::stable_sort(fam.begin(), fam.end(),
                   [](const FamilyMember* a, const FamilyMember* b) { return a->top_weight < b->top_weight; });
  std::size_t sampled = 0;
  for (const FamilyMember* f : fam) {
    if (sampled >= max_zero_samples) break;
    Matrix o(Z.dim, Z.dim);
    for (const auto& [k, c] : f->value) {
      if (spec.g_exponent(k) != 0) continue;
      o = o + M.mode_matrix(spec.monomial(k), Rational(spec.weight(k) - 1), 0).scaled(c);
    }
    ++sampled;
    rep.expect(matrix_is_zero(o), "o(x) != 0 on lowest-weight vectors for x = " + spec.format(f->value));
  }
  rep.note = std::to_string(out.conditions) + " annihilation conditions with wt <= " + std::to_string(term_weight) +
             "; " + std::to_string(sampled) + " relation members sampled";
  return out;
}

CheckReport check_module_commutator(const InducedModule& M, int max_weight) {
  CheckReport rep{"module-commutator"};
  const VoaSpec& spec = M.spec();
  const int D = M.depth_index();
  const auto keys = keys_up_to(spec, max_weight);
  for (auto u : keys)
    for (auto v : keys) {
      const Vec uv = spec.monomial(u), vv = spec.monomial(v);
      for (int p = 0; p <= D; ++p)
        for (const auto& [m, du] : modes_in_window(spec, u, -D, D, false))
          for (const auto& [n, dv] : modes_in_window(spec, v, -D, D, false)) {
            const int q = p + du + dv;
            if (q < 0 || q > D) continue;
            for (std::size_t b = 0; b < M.dim(p); ++b) {
              const ModVec w = M.basis_vector(p, b);
              ModVec lhs = module_act(M, uv, m, module_act(M, vv, n, w));
              axpy(lhs, Rational(-1), module_act(M, vv, n, module_act(M, uv, m, w)));
              ModVec rhs;
              for (int i = 0; i < spec.weight(u) + spec.weight(v); ++i) {
                Rational c = rat_binomial(m, static_cast<unsigned>(i));
                if (sgn(c) == 0) continue;
                Vec ui = spec.mode_apply(uv, i, vv);
                axpy(rhs, c, module_act(M, ui, m + n - i, w));
              }
              rep.expect(M.reduce(difference(lhs, rhs)).empty(),
                         "[u_m, v_n] mismatch for u = " + spec.format_key(u) + ", v = " + spec.format_key(v) +
                             ", m = " + to_string(m) + ", n = " + to_string(n) + " at degree " +
                             to_string(M.degree_value(p)));
            }
          }
    }
  return rep;
}

AssociativityResult check_twisted_associativity(const InducedModule& M, int max_weight) {
  AssociativityResult res;
  CheckReport& rep = res.report;
  const VoaSpec& spec = M.spec();
  const int T = M.order();
  const int D = M.depth_index();
  const auto keys = keys_up_to(spec, max_weight);
  res.a_min = 0;
  res.a_max = 0;
  bool first = true;
  for (auto u : keys) {
    const int wu = spec.weight(u);
    const Rational p = make_rational(spec.g_exponent(u), T);
    for (int deg = 0; deg <= D; ++deg)
      for (std::size_t b = 0; b < M.dim(deg); ++b) {
        const ModVec w = M.basis_vector(deg, b);
        // least k >= 0 with u_m w = 0 for all m >= k + p; modes landing above the
        // depth cannot be tested, so k also pushes every u_{k+p+j} into the window
        int k = std::max(0, static_cast<int>(-floor_long(make_rational(D - deg, T) + p + 1 - wu)));
        for (const auto& [m, d] : modes_in_window(spec, u, -deg, D - deg, false)) {
          if (m < p) continue;
          if (!M.reduce(M.act(spec.monomial(u), m, w)).empty()) k = std::max(k, static_cast<int>(to_long(m - p)) + 1);
        }
        res.k_used.push_back(spec.format_key(u) + ", degree " +
                             to_string(M.degree_value(deg)) + " vector " + std::to_string(b) + " -> k = " + std::to_string(k));
        for (auto v : keys) {
          const int wv = spec.weight(v);
          const int a_lo = -(wu + wv) - 2;
          const int a_hi = std::min(D + k + wu + 2, spec.cutoff() - wu - wv);
          if (first || a_lo < res.a_min) res.a_min = a_lo;
          if (first || a_hi > res.a_max) res.a_max = a_hi;
          first = false;
          for (int A = a_lo; A <= a_hi; ++A)
            for (int q = 0; q <= D; ++q) {
              auto [lhs, rhs] = detail::associativity_coefficient(M, u, v, w, deg, k, A, q);
              rep.expect(M.reduce(difference(lhs, rhs)).empty(),
                         "associativity mismatch for u = " + spec.format_key(u) + ", v = " + spec.format_key(v) +
                             ", A = " + std::to_string(A) + ", landing degree " + to_string(M.degree_value(q)));
            }
        }
      }
  }
  return res;
}

CheckReport check_l0_spectrum(const InducedModule& M) {
  CheckReport rep{"l0-spectrum"};
  auto h = lowest_scalar(M);
  if (!h) {
    rep.note = "[omega] does not act as a scalar on U";
    ++rep.skipped;
    return rep;
  }
  const Vec omega = M.spec().omega();
  for (int n = 0; n <= M.depth_index(); ++n)
    for (std::size_t b = 0; b < M.dim(n); ++b) {
      const ModVec v = M.basis_vector(n, b);
      const Rational e = M.degree_value(n) + *h;
      ModVec diff = M.reduce(M.act(omega, Rational(1), v));
      axpy(diff, -e, v);
      rep.expect(diff.empty(), "L(0) eigenvalue differs from " + to_string(e) + " at degree " +
                                   to_string(M.degree_value(n)));
    }
  return rep;
}

CheckReport check_pbw_soundness(const InducedModule& M, int max_weight) {
  CheckReport rep{"pbw-soundness"};
  const VoaSpec& spec = M.spec();
  LieAlgebra lie(spec);
  const int D = M.depth_index();
  auto sample = sample_terms(lie, max_weight, M.depth());
  auto act_el = [&](const LieElement& x, const ModVec& v) {
    ModVec out;
    for (const auto& [t, c] : x) axpy(out, c, M.act_term(t, v));
    return out;
  };
  auto scaled_degree = [&](const LieElement& x) {
    return static_cast<int>(to_long(lie.degree(x.begin()->first) * M.order()));
  };
  for (std::size_t i = 0; i < sample.size(); ++i)
    for (std::size_t j = i + 1; j < sample.size(); ++j) {
      const int dx = scaled_degree(sample[i]), dy = scaled_degree(sample[j]);
      LieElement br = lie.bracket(sample[i], sample[j]);
      for (int p = 0; p <= D; ++p) {
        const int q = p + dx + dy;
        if (q < 0 || q > D) continue;
        for (std::size_t b = 0; b < M.dim(p); ++b) {
          const ModVec v = M.basis_vector(p, b);
          ModVec lhs = act_el(sample[i], act_el(sample[j], v));
          axpy(lhs, Rational(-1), act_el(sample[j], act_el(sample[i], v)));
          rep.expect(M.reduce(difference(lhs, act_el(br, v))).empty(),
                     "x y - y x != [x, y] for x = " + lie.format(sample[i]) + ", y = " + lie.format(sample[j]));
        }
      }
    }
  return rep;
}

CheckReport check_universality(const InducedModule& simple, const RelationSet& W) {
  CheckReport rep{"universality"};
  for (std::size_t i = 0; i < W.vectors.size(); ++i)
    rep.expect(simple.reduce(W.vectors[i]).empty(), "relation survives in the simple quotient: " + W.labels[i]);
  rep.note = std::to_string(W.coefficients) + " coefficients extracted, " + std::to_string(W.vectors.size()) +
             " nonzero in the Verma module";
  return rep;
}

CheckReport check_simplicity(const InducedModule& simple) {
  CheckReport rep{"simplicity-witness"};
  for (const auto& pr : simple.pairing_ranks()) {
    const std::string at = " at degree " + to_string(simple.degree_value(pr.degree));
    rep.expect(pr.full_column_rank, "pairing is degenerate on the retained basis" + at);
    rep.expect(pr.rank == pr.rank_extended, "raising the word bound changes the pairing rank" + at);
  }
  if (simple.pairing_ranks().empty()) rep.note = "depth 0: nothing to pair";
  return rep;
}

Contragredient::Contragredient(const InducedModule& M)
    : Contragredient(M, [&M](const Vec& a, const Rational& m, int from) { return M.mode_matrix(a, m, from); }, 1) {}

Contragredient::Contragredient(const InducedModule& M, ModeFn base, int) : M_(&M), base_(std::move(base)) {}

std::vector<std::size_t> Contragredient::dims() const { return M_->dims(); }

Matrix Contragredient::mode_matrix(const Vec& a, const Rational& m, int from) const {
  if (a.empty()) throw std::invalid_argument("mode of the zero vector");
  const VoaSpec& spec = M_->spec();
  const int T = M_->order();
  const int wa = spec.weight(a.begin()->first);
  const int to = from + static_cast<int>(to_long((Rational(wa - 1) - m) * T));
  const std::size_t cols = M_->dim(from);
  if (to < 0) return Matrix(0, cols);
  if (to > M_->depth_index())
    throw InsufficientDepth("mode lands at degree " + to_string(M_->degree_value(to)) + " beyond depth");
  Matrix out(M_->dim(to), cols);
  Vec b = a;
  Rational fact = 1;
  for (int j = 0; !b.empty(); ++j) {
    if (j > 0) fact *= j;
    Matrix t = base_(b, Rational(2 * wa - 2 - j) - m, to);
    out = out + t.transpose().scaled(sign_power(wa) / fact);
    b = spec.l_operator(1, b);
  }
  return out;
}

Contragredient::ModeFn Contragredient::as_fn() const {
  return [this](const Vec& a, const Rational& m, int from) { return mode_matrix(a, m, from); };
}

CheckReport check_contragredient_commutator(const InducedModule& M, int max_weight) {
  CheckReport rep{"contragredient-commutator"};
  Contragredient C(M);
  const VoaSpec& spec = M.spec();
  const int D = M.depth_index();
  const auto keys = keys_up_to(spec, max_weight);
  auto in_range = [D](int d) { return d >= 0 && d <= D; };
  for (auto u : keys)
    for (auto v : keys) {
      const Vec uv = spec.monomial(u), vv = spec.monomial(v);
      for (int p = 0; p <= D; ++p)
        for (const auto& [m, du] : modes_in_window(spec, u, -D, D, true))
          for (const auto& [n, dv] : modes_in_window(spec, v, -D, D, true)) {
            const int q = p + du + dv;
            if (!in_range(q) || !in_range(p + du) || !in_range(p + dv)) {
              ++rep.skipped;
              continue;
            }
            Matrix lhs = C.mode_matrix(uv, m, p + dv) * C.mode_matrix(vv, n, p) -
                         C.mode_matrix(vv, n, p + du) * C.mode_matrix(uv, m, p);
            Matrix rhs(M.dim(q), M.dim(p));
            for (int i = 0; i < spec.weight(u) + spec.weight(v); ++i) {
              Rational c = rat_binomial(m, static_cast<unsigned>(i));
              if (sgn(c) == 0) continue;
              Vec ui = spec.mode_apply(uv, i, vv);
              if (ui.empty()) continue;
              rhs = rhs + C.mode_matrix(ui, m + n - i, p).scaled(c);
            }
            rep.expect(lhs == rhs, "[u'_m, v'_n] mismatch for u = " + spec.format_key(u) + ", v = " +
                                       spec.format_key(v) + ", m = " + to_string(m) + ", n = " + to_string(n));
          }
    }
  return rep;
}

CheckReport check_double_dual(const InducedModule& M, const Rational& max_degree, int max_weight) {
  CheckReport rep{"double-dual"};
  Contragredient C1(M);
  Contragredient C2(M, C1.as_fn(), 2);
  const VoaSpec& spec = M.spec();
  const int top = std::min(M.depth_index(), static_cast<int>(floor_long(max_degree * M.order())));
  rep.expect(C2.dims() == M.dims(), "graded dimensions of M'' differ from M");
  for (auto a : keys_up_to(spec, max_weight))
    for (int p = 0; p <= top; ++p)
      for (const auto& [m, d] : modes_in_window(spec, a, -p, top - p, false)) {
        const Vec av = spec.monomial(a);
        rep.expect(C2.mode_matrix(av, m, p) == M.mode_matrix(av, m, p),
                   "a''_m != a_m for a = " + spec.format_key(a) + ", m = " + to_string(m) + " at degree " +
                       to_string(M.degree_value(p)));
      }
  return rep;
}

CheckReport check_contragredient_grading(const InducedModule& M) {
  CheckReport rep{"contragredient-grading"};
  Contragredient C(M);
  rep.expect(C.dims() == M.dims(), "graded dimensions of M' differ from M");
  auto h = lowest_scalar(M);
  if (!h) {
    ++rep.skipped;
    rep.note = "[omega] does not act as a scalar on U";
    return rep;
  }
  for (int n = 0; n <= M.depth_index(); ++n) {
    Matrix l0 = C.mode_matrix(M.spec().omega(), Rational(1), n);
    rep.expect(l0 == Matrix::identity(M.dim(n)).scaled(M.degree_value(n) + *h),
               "L'(0) is not " + to_string(M.degree_value(n) + *h) + " at degree " + to_string(M.degree_value(n)));
  }
  return rep;
}

}  // namespace tzhu
