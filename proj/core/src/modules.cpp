#include "tzhu/modules.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <sstream>

namespace tzhu {

Matrix ZhuModule::act(const std::vector<Rational>& coords) const {
  Matrix m(dim, dim);
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (sgn(coords[i]) != 0) m = m + action.at(i).scaled(coords[i]);
  return m;
}

ZhuModule character_module(const ZhuAlgebra& alg, const Rational& h) {
  const std::size_t d = alg.dim();
  if (!alg.omega_class()) throw ConfigError("omega class unavailable at this cutoff");
  const auto& w = *alg.omega_class();
  // unknowns chi_0..chi_{d-1}; last column is the right-hand side
  std::vector<std::vector<Rational>> rows;
  auto push = [&](std::vector<Rational> r) { rows.push_back(std::move(r)); };
  {
    std::vector<Rational> r(d + 1);
    for (std::size_t k = 0; k < d; ++k) r[k] = alg.identity_class()[k];
    r[d] = 1;
    push(r);
  }
  {
    std::vector<Rational> r(d + 1);
    for (std::size_t k = 0; k < d; ++k) r[k] = w[k];
    r[d] = h;
    push(r);
  }
  for (std::size_t j = 0; j < d; ++j) {
    std::vector<Rational> e(d);
    e[j] = 1;
    auto p = alg.multiply(w, e);
    if (!p) continue;
    std::vector<Rational> r(d + 1);
    for (std::size_t k = 0; k < d; ++k) r[k] = (*p)[k];
    r[j] -= h;
    push(r);
  }
  Matrix sys(rows.size(), d + 1);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t k = 0; k <= d; ++k) sys(i, k) = rows[i][k];
  auto pivots = sys.rref();
  if (!pivots.empty() && pivots.back() == d)
    throw ConfigError("no one-dimensional Zhu-algebra module with lowest weight " + to_string(h));
  if (pivots.size() != d)
    throw ConfigError("lowest weight " + to_string(h) + " does not determine a one-dimensional module");
  ZhuModule U;
  U.dim = 1;
  U.lowest_weight = h;
  U.label = "C_" + to_string(h);
  for (std::size_t k = 0; k < d; ++k) {
    Matrix m(1, 1);
    m(0, 0) = sys(k, d);
    U.action.push_back(m);
  }
  return U;
}

CheckReport check_zhu_module(const ZhuModule& U, const ZhuAlgebra& alg) {
  CheckReport rep{"zhu-module"};
  rep.expect(U.act(alg.identity_class()) == Matrix::identity(U.dim), "[1] does not act as the identity");
  for (std::size_t i = 0; i < alg.dim(); ++i)
    for (std::size_t j = 0; j < alg.dim(); ++j) {
      const auto& p = alg.product(i, j);
      if (!p) {
        ++rep.skipped;
        continue;
      }
      rep.expect(U.action[i] * U.action[j] == U.act(*p),
                 "rho(x)rho(y) != rho(x*y) for basis pair " + std::to_string(i) + "," + std::to_string(j));
    }
  return rep;
}

namespace detail {

class ModuleEngine {
 public:
  ModuleEngine(const ZhuAlgebra& alg, const ZhuModule& U)
      : alg(alg), spec(alg.spec()), U(U), T(alg.spec().order()) {
    const auto& gens = spec.generators();
    for (int g = 0; g < static_cast<int>(gens.size()); ++g) {
      if (gens[g].g_exponent != 0) {
        zero_modes.emplace_back();
        continue;
      }
      auto coords = alg.coordinates(spec.generator_state(g));
      if (!coords) throw InsufficientDepth("generator " + gens[g].name + " lies above the Zhu cutoff");
      zero_modes.push_back(U.act(*coords));
    }
  }

  const ZhuAlgebra& alg;
  const VoaSpec& spec;
  ZhuModule U;
  const int T;
  std::vector<Matrix> zero_modes;
  std::recursive_mutex mu;
  std::map<std::tuple<int, int, PbwMonomial>, ModVec> gen_memo;
  std::map<std::tuple<KeyId, int, PbwMonomial>, ModVec> state_memo;

  Rational frac(int s) const { return make_rational(s, T); }

  // x[s / T] on a monomial.
  ModVec apply_gen(int x, int s, const PbwMonomial& v) {
    if (v.degree - s < 0) return {};
    auto mk = std::make_tuple(x, s, v);
    if (auto it = gen_memo.find(mk); it != gen_memo.end()) return it->second;
    ModVec out;
    if (v.factors.empty()) {
      if (s < 0) {
        out.emplace(PbwMonomial{v.degree - s, {{x, s}}, v.tail}, 1);
      } else if (s == 0) {
        const Matrix& z = zero_modes.at(x);
        for (std::size_t t = 0; t < U.dim; ++t)
          if (sgn(z(t, v.tail)) != 0) out.emplace(PbwMonomial{0, {}, static_cast<int>(t)}, z(t, v.tail));
      }
    } else {
      const ModeFactor lead = v.factors.front();
      if (s < 0 && (s < lead.index || (s == lead.index && x <= lead.gen))) {
        PbwMonomial n{v.degree - s, {}, v.tail};
        n.factors.reserve(v.factors.size() + 1);
        n.factors.push_back({x, s});
        n.factors.insert(n.factors.end(), v.factors.begin(), v.factors.end());
        out.emplace(std::move(n), 1);
      } else {
        PbwMonomial rest{v.degree + lead.index, std::vector<ModeFactor>(v.factors.begin() + 1, v.factors.end()), v.tail};
        ModVec inner = apply_gen(x, s, rest);
        for (const auto& [m, c] : inner) axpy(out, c, apply_gen(lead.gen, lead.index, m));
        Commutator com = spec.commutator(x, frac(s), lead.gen, frac(lead.index));
        for (const auto& t : com.terms) {
          Rational scaled_index = t.index * T;
          axpy(out, t.coeff, apply_gen(t.gen, static_cast<int>(to_long(scaled_index)), rest));
        }
        if (sgn(com.central) != 0) add_term(out, rest, com.central);
      }
    }
    gen_memo.emplace(mk, out);
    return out;
  }

  ModVec apply_gen(int x, int s, const ModVec& v) {
    ModVec out;
    for (const auto& [m, c] : v) axpy(out, c, apply_gen(x, s, m));
    return out;
  }

  // a_{n/T} on a monomial, for a basis key of V (universal representative):
  // (x_j b)_n = sum_i (-1)^i C(j,i) [x_{p+j-i} b_{n-p+i} - (-1)^j b_{j+n-p-i} x_{p+i}]
  //             - sum_{i>=1} C(p,i) (x_{j+i} b)_{n-i},   p = r/T for x in V^r.
  ModVec apply_state(KeyId a, int n, const PbwMonomial& v) {
    if (a == VoaSpec::vacuum_id()) return n == -T ? ModVec{{v, Rational(1)}} : ModVec{};
    const int wa = spec.weight(a);
    if (v.degree + T * wa - n - T < 0) return {};
    auto mk = std::make_tuple(a, n, v);
    if (auto it = state_memo.find(mk); it != state_memo.end()) return it->second;
    ModVec out;
    const BasisKey& key = spec.key(a);
    const GenMode lead = key.modes.front();
    const int x = lead.gen;
    const int wx = spec.generators()[x].weight;
    const int r = spec.generators()[x].g_exponent;
    const int j = lead.index + wx - 1;
    const KeyId b = spec.key_id(BasisKey{std::vector<GenMode>(key.modes.begin() + 1, key.modes.end())});
    const int shift = T * (wx - 1);  // vertex index -> shifted index, scaled
    if (b == VoaSpec::vacuum_id() && j == -1) {
      out = apply_gen(x, n - shift, v);
    } else {
      const int wb = spec.weight(b);
      const Rational jq(j);
      for (int i = 0;; ++i) {
        const int bn = n - r + T * i;
        if (v.degree + T * wb - bn - T < 0) break;
        Rational coeff = sign_power(i) * rat_binomial(jq, i);
        if (sgn(coeff) == 0) continue;
        ModVec t = apply_state(b, bn, v);
        const int xs = r + T * (j - i) - shift;
        for (const auto& [m, c] : t) axpy(out, coeff * c, apply_gen(x, xs, m));
      }
      for (int i = 0;; ++i) {
        const int xs = r + T * i - shift;
        if (v.degree - xs < 0) break;
        Rational coeff = -sign_power(j) * sign_power(i) * rat_binomial(jq, i);
        if (sgn(coeff) == 0) continue;
        ModVec t = apply_gen(x, xs, v);
        const int bn = T * j + n - r - T * i;
        for (const auto& [m, c] : t) axpy(out, coeff * c, apply_state(b, bn, m));
      }
      if (r != 0) {
        const Rational p = frac(r);
        Rational c = p;  // C(p, 1)
        for (int i = 1; j + i < wx + wb; ++i) {
          if (sgn(c) != 0) {
            Vec xb = spec.raw_generator(x, j + i - wx + 1, b);
            for (const auto& [k, kc] : xb) {
              ModVec t = apply_state(k, n - T * i, v);
              axpy(out, -c * kc, t);
            }
          }
          c *= p - i;
          c /= i + 1;
        }
      }
    }
    state_memo.emplace(mk, out);
    return out;
  }
};

}  // namespace detail

namespace {

std::vector<PbwMonomial> enumerate_monomials(const VoaSpec& spec, int T, int degree, std::size_t tails) {
  std::vector<ModeFactor> slots;
  const auto& gens = spec.generators();
  for (int s = -degree; s <= -1; ++s)
    for (int g = 0; g < static_cast<int>(gens.size()); ++g)
      if (((s - gens[g].g_exponent) % T + T) % T == 0) slots.push_back({g, s});
  std::vector<std::vector<ModeFactor>> found;
  std::vector<ModeFactor> cur;
  std::function<void(std::size_t, int)> rec = [&](std::size_t from, int left) {
    if (left == 0) {
      found.push_back(cur);
      return;
    }
    for (std::size_t i = from; i < slots.size(); ++i) {
      if (-slots[i].index > left) continue;
      cur.push_back(slots[i]);
      rec(i, left + slots[i].index);
      cur.pop_back();
    }
  };
  rec(0, degree);
  std::vector<PbwMonomial> out;
  for (auto& f : found)
    for (std::size_t t = 0; t < tails; ++t) out.push_back({degree, f, static_cast<int>(t)});
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

InducedModule::InducedModule(const ZhuAlgebra& alg, const ZhuModule& U, const Rational& depth)
    : engine_(std::make_shared<detail::ModuleEngine>(alg, U)) {
  const int T = alg.spec().order();
  Rational scaled = depth * T;
  if (sgn(depth) < 0 || !is_integer(scaled))
    throw ConfigError("depth must be a nonnegative multiple of 1/" + std::to_string(T));
  depth_index_ = static_cast<int>(to_long(scaled));
  for (int n = 0; n <= depth_index_; ++n) verma_basis_.push_back(enumerate_monomials(alg.spec(), T, n, U.dim));
  relations_.assign(depth_index_ + 1, Echelon<PbwMonomial>{});
  rebuild_basis();
}

void InducedModule::rebuild_basis() {
  basis_.clear();
  for (int n = 0; n <= depth_index_; ++n) {
    std::vector<PbwMonomial> b;
    for (const auto& m : verma_basis_[n])
      if (!relations_[n].is_pivot(m)) b.push_back(m);
    basis_.push_back(std::move(b));
  }
}

std::string InducedModule::stage_name() const {
  switch (stage_) {
    case Stage::verma: return "verma";
    case Stage::mbar: return "mbar";
    case Stage::simple: return "simple";
  }
  return "";
}

const VoaSpec& InducedModule::spec() const { return engine_->spec; }
const ZhuAlgebra& InducedModule::algebra() const { return engine_->alg; }
const ZhuModule& InducedModule::lowest() const { return engine_->U; }
int InducedModule::order() const { return engine_->T; }
Rational InducedModule::depth() const { return make_rational(depth_index_, order()); }
Rational InducedModule::degree_value(int index) const { return make_rational(index, order()); }

std::vector<std::size_t> InducedModule::dims() const {
  std::vector<std::size_t> d;
  for (const auto& b : basis_) d.push_back(b.size());
  return d;
}

ModVec InducedModule::act(const Vec& a, const Rational& m, const ModVec& v) const {
  ModVec out;
  Rational scaled = m * order();
  if (!is_integer(scaled)) throw GradingError("mode " + to_string(m) + " is not in (1/T)Z");
  const int n = static_cast<int>(to_long(scaled));
  std::lock_guard lock(engine_->mu);
  for (const auto& [k, c] : a) {
    if (!is_integer(m - make_rational(spec().g_exponent(k), order())))
      throw GradingError("mode " + to_string(m) + " incompatible with " + spec().format_key(k));
    for (const auto& [mono, x] : v) axpy(out, c * x, engine_->apply_state(k, n, mono));
  }
  return out;
}

ModVec InducedModule::act_generator(int gen, const Rational& index, const ModVec& v) const {
  Rational scaled = index * order();
  std::lock_guard lock(engine_->mu);
  return engine_->apply_gen(gen, static_cast<int>(to_long(scaled)), v);
}

ModVec InducedModule::reduce(const ModVec& v) const {
  std::map<int, ModVec> parts;
  for (const auto& [m, c] : v) {
    if (m.degree > depth_index_)
      throw InsufficientDepth("vector of degree " + to_string(degree_value(m.degree)) + " beyond depth " +
                              to_string(depth()));
    parts[m.degree].emplace(m, c);
  }
  ModVec out;
  for (auto& [n, p] : parts) {
    ModVec r = relations_[n].reduce(p);
    out.insert(r.begin(), r.end());
  }
  return out;
}

std::vector<Rational> InducedModule::coordinates(const ModVec& reduced, int n) const {
  const auto& b = basis_.at(n);
  std::vector<Rational> x(b.size());
  for (const auto& [m, c] : reduced) {
    auto it = std::lower_bound(b.begin(), b.end(), m);
    if (it == b.end() || !(*it == m)) throw std::logic_error("vector not in normal form");
    x[it - b.begin()] = c;
  }
  return x;
}

ModVec InducedModule::basis_vector(int n, std::size_t i) const { return ModVec{{basis_.at(n).at(i), Rational(1)}}; }

int InducedModule::mode_degree(KeyId a, const Rational& m) const {
  Rational d = (Rational(spec().weight(a) - 1) - m) * order();
  return static_cast<int>(to_long(d));
}

Matrix InducedModule::mode_matrix(const Vec& a, const Rational& m, int from) const {
  if (a.empty()) throw std::invalid_argument("mode of the zero vector");
  const int to = from + mode_degree(a.begin()->first, m);
  const std::size_t cols = dim(from);
  if (to < 0) return Matrix(0, cols);
  if (to > depth_index_)
    throw InsufficientDepth("mode lands at degree " + to_string(degree_value(to)) + " beyond depth");
  Matrix out(dim(to), cols);
  for (std::size_t i = 0; i < cols; ++i) {
    auto x = coordinates(reduce(act(a, m, basis_vector(from, i))), to);
    for (std::size_t r = 0; r < x.size(); ++r) out(r, i) = x[r];
  }
  return out;
}

InducedModule InducedModule::with_relations(Stage stage, std::vector<Echelon<PbwMonomial>> rel) const {
  InducedModule out = *this;
  out.stage_ = stage;
  out.relations_ = std::move(rel);
  out.pairing_.clear();
  out.rebuild_basis();
  return out;
}

InducedModule verma_build(const ZhuAlgebra& alg, const ZhuModule& U, const Rational& depth) {
  return InducedModule(alg, U, depth);
}

namespace detail {

// Coefficient of z0^A z2^B (B fixed by the landing degree q) in
// (z0+z2)^{k+p} Y(u, z0+z2) Y(v, z2) w  and  (z2+z0)^{k+p} Y(Y(u,z0)v, z2) w.
std::pair<ModVec, ModVec> associativity_coefficient(const InducedModule& M, KeyId u, KeyId v, const ModVec& w,
                                                    int wdeg, int k, int A, int q) {
  const VoaSpec& spec = M.spec();
  const int T = M.order();
  const Rational p = make_rational(spec.g_exponent(u), T);
  const int wu = spec.weight(u), wv = spec.weight(v);
  // B = q - wu - wv - wdeg + k + p - A   (q, wdeg scaled)
  const Rational B = make_rational(q - wdeg, T) - wu - wv + k + p - A;
  ModVec lhs, rhs;
  // landing degree incompatible with the twist of v
  if (!is_integer(B + make_rational(spec.g_exponent(v), T))) return {lhs, rhs};
  // LHS: m = k + p - 1 - e, e >= A, n = e - A - 1 - B
  for (int e = A;; ++e) {
    const Rational m = Rational(k) + p - 1 - e;
    const Rational n = Rational(e - A - 1) - B;
    // v_n w vanishes once its degree is negative
    if ((Rational(wv - 1) - n) * T + wdeg < 0) break;
    const Rational c = rat_binomial(Rational(e), static_cast<unsigned>(e - A));
    if (sgn(c) == 0) continue;
    ModVec vw = M.act(spec.monomial(v), n, w);
    if (vw.empty()) continue;
    axpy(lhs, c, M.act(spec.monomial(u), m, vw));
  }
  // RHS: sum_i C(k+p, i) (u_j v)_{n} w, j = i - A - 1, n = k + p - i - 1 - B
  const Rational top = Rational(k) + p;
  for (int i = 0; i - A - 1 < wu + wv; ++i) {
    const int j = i - A - 1;
    const Rational c = rat_binomial(top, static_cast<unsigned>(i));
    if (sgn(c) == 0) continue;
    Vec uv = spec.mode_apply(spec.monomial(u), j, spec.monomial(v));
    if (uv.empty()) continue;
    const Rational n = top - i - 1 - B;
    axpy(rhs, c, M.act(uv, n, w));
  }
  return {lhs, rhs};
}

}  // namespace detail

RelationSet relations_W(const InducedModule& M, int weight_bound) {
  RelationSet out;
  const VoaSpec& spec = M.spec();
  if (M.depth_index() < 1) throw InsufficientDepth("relations need depth at least 1/T");
  std::vector<KeyId> keys;
  for (int w = 0; w <= weight_bound; ++w)
    for (auto k : spec.enumerate_basis(w)) keys.push_back(k);
  const int D = M.depth_index();
  for (auto a : keys)
    for (auto b : keys) {
      const int wa = spec.weight(a), wb = spec.weight(b);
      const int k = wa - 1 + (spec.g_exponent(a) == 0 ? 1 : 0);
      const int a_min = -(wa + wb) - 2;
      const int a_max = std::min(D + k + wa + 2, spec.cutoff() - wa - wb);
      for (std::size_t t = 0; t < M.lowest().dim; ++t) {
        ModVec u{{PbwMonomial{0, {}, static_cast<int>(t)}, Rational(1)}};
        for (int A = a_min; A <= a_max; ++A)
          for (int q = 0; q <= D; ++q) {
            auto [lhs, rhs] = detail::associativity_coefficient(M, a, b, u, 0, k, A, q);
            ++out.coefficients;
            ModVec diff = difference(lhs, rhs);
            if (diff.empty()) continue;
            out.labels.push_back("a=" + spec.format_key(a) + " b=" + spec.format_key(b) + " A=" + std::to_string(A) +
                                 " degree=" + to_string(M.degree_value(q)));
            out.vectors.push_back(std::move(diff));
          }
      }
    }
  return out;
}

InducedModule mbar_build(const InducedModule& verma, const RelationSet& W) {
  const int D = verma.depth_index();
  const int T = verma.order();
  const auto& gens = verma.spec().generators();
  std::vector<Echelon<PbwMonomial>> rel(D + 1);
  std::vector<ModVec> work;
  auto add = [&](const ModVec& v) {
    std::map<int, ModVec> parts;
    for (const auto& [m, c] : v) parts[m.degree].emplace(m, c);
    for (auto& [n, p] : parts)
      if (n <= D && rel[n].insert(p)) work.push_back(p);
  };
  for (const auto& v : W.vectors) add(v);
  // close under generator modes within depth
  for (std::size_t head = 0; head < work.size(); ++head) {
    const ModVec v = work[head];
    const int n = v.begin()->first.degree;
    for (int g = 0; g < static_cast<int>(gens.size()); ++g)
      for (int s = -(D - n); s <= n; ++s) {
        if (((s - gens[g].g_exponent) % T + T) % T != 0) continue;
        ModVec img = verma.act_generator(g, make_rational(s, T), v);
        if (!img.empty()) add(img);
      }
  }
  return verma.with_relations(InducedModule::Stage::mbar, std::move(rel));
}

namespace {

struct WordSearch {
  const InducedModule& M;
  int T;
  std::vector<ModeFactor> lowering;  // positive index
  std::vector<ModeFactor> zero;      // zero modes
  std::vector<std::vector<Rational>> rows;
  std::size_t words = 0;

  void run(std::vector<ModVec> cols, int remaining, int length_left) {
    if (remaining == 0) {
      ++words;
      for (std::size_t t = 0; t < M.lowest().dim; ++t) {
        std::vector<Rational> row(cols.size());
        PbwMonomial target{0, {}, static_cast<int>(t)};
        for (std::size_t c = 0; c < cols.size(); ++c) {
          auto it = cols[c].find(target);
          if (it != cols[c].end()) row[c] = it->second;
        }
        rows.push_back(std::move(row));
      }
    }
    if (length_left == 0) return;
    auto step = [&](const ModeFactor& f) {
      std::vector<ModVec> next;
      next.reserve(cols.size());
      bool any = false;
      for (const auto& v : cols) {
        next.push_back(M.act_generator(f.gen, make_rational(f.index, T), v));
        any = any || !next.back().empty();
      }
      if (any) run(std::move(next), remaining - f.index, length_left - 1);
    };
    for (const auto& f : lowering)
      if (f.index <= remaining) step(f);
    for (const auto& f : zero) step(f);
  }
};

std::pair<Matrix, std::size_t> pairing_matrix(const InducedModule& M, int n, int bound) {
  const VoaSpec& spec = M.spec();
  const int T = M.order();
  WordSearch ws{M, T, {}, {}, {}, 0};
  const auto& gens = spec.generators();
  for (int g = 0; g < static_cast<int>(gens.size()); ++g) {
    for (int s = 1; s <= n; ++s)
      if (((s - gens[g].g_exponent) % T + T) % T == 0) ws.lowering.push_back({g, s});
    if (gens[g].g_exponent == 0) ws.zero.push_back({g, 0});
  }
  const auto& cols = M.verma_basis(n);
  std::vector<ModVec> start;
  for (const auto& m : cols) start.push_back(ModVec{{m, Rational(1)}});
  ws.run(start, n, bound);
  Matrix P(ws.rows.size(), cols.size());
  for (std::size_t i = 0; i < ws.rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) P(i, j) = ws.rows[i][j];
  return {P, ws.words};
}

}  // namespace

InducedModule radical_and_simple(const InducedModule& m, int extra) {
  const int D = m.depth_index();
  std::vector<Echelon<PbwMonomial>> rel(D + 1);
  std::vector<PairingRank> ranks;
  for (int n = 1; n <= D; ++n) {
    const int bound = n + extra;
    auto [P, words] = pairing_matrix(m, n, bound);
    auto [P2, words2] = pairing_matrix(m, n, bound + 1);
    const auto& cols = m.verma_basis(n);
    for (const auto& x : P.nullspace()) {
      ModVec v;
      for (std::size_t j = 0; j < cols.size(); ++j) add_term(v, cols[j], x[j]);
      rel[n].insert(v);
    }
    PairingRank pr;
    pr.degree = n;
    pr.words = words;
    pr.word_bound = bound;
    pr.rank = P.rank();
    pr.rank_extended = P2.rank();
    // restrict to retained columns
    std::vector<std::size_t> keep;
    for (std::size_t j = 0; j < cols.size(); ++j)
      if (!rel[n].is_pivot(cols[j])) keep.push_back(j);
    Matrix R(P.rows(), keep.size());
    for (std::size_t i = 0; i < P.rows(); ++i)
      for (std::size_t j = 0; j < keep.size(); ++j) R(i, j) = P(i, keep[j]);
    pr.full_column_rank = R.rank() == keep.size();
    ranks.push_back(pr);
  }
  InducedModule out = m.with_relations(InducedModule::Stage::simple, std::move(rel));
  out.set_pairing(std::move(ranks));
  return out;
}

}  // namespace tzhu
