#include "tzhu/models.hpp"

namespace tzhu {

Twist parse_twist(std::string_view s) {
  if (s == "identity") return Twist::identity;
  if (s == "charge-conjugation") return Twist::charge_conjugation;
  throw ConfigError("unknown twist: " + std::string(s));
}

std::string twist_name(Twist t) { return t == Twist::identity ? "identity" : "charge-conjugation"; }

const std::vector<std::string>& model_names() {
  static const std::vector<std::string> names{"heisenberg", "virasoro-universal", "virasoro-simple"};
  return names;
}

VoaSpec build_heisenberg(int cutoff, Twist twist) {
  if (cutoff < 2) throw ConfigError("heisenberg model needs cutoff >= 2");
  VoaSpec::Definition d;
  d.name = "heisenberg";
  d.order = twist == Twist::charge_conjugation ? 2 : 1;
  d.generators = {{"a", 1, twist == Twist::charge_conjugation ? 1 : 0}};
  d.central_charge = 1;
  d.omega = {{BasisKey{{{0, -1}, {0, -1}}}, Rational(1, 2)}};
  d.commutator = [](int, const Rational& m, int, const Rational& n) {
    Commutator c;
    if (m + n == 0) c.central = m;
    return c;
  };
  d.cutoff = cutoff;
  return VoaSpec(std::move(d));
}

VoaSpec build_virasoro(const Rational& c, int cutoff) {
  if (cutoff < 4) throw ConfigError("virasoro model needs cutoff >= 4");
  VoaSpec::Definition d;
  d.name = "virasoro-universal";
  d.order = 1;
  d.generators = {{"L", 2, 0}};
  d.central_charge = c;
  d.omega = {{BasisKey{{{0, -2}}}, Rational(1)}};
  d.commutator = [c](int, const Rational& m, int, const Rational& n) {
    Commutator r;
    if (m != n) r.terms.push_back({0, m + n, m - n});
    if (m + n == 0) r.central = c * (m * m * m - m) / 12;
    return r;
  };
  d.cutoff = cutoff;
  return VoaSpec(std::move(d));
}

VoaSpec build_virasoro_simple(const Rational& c, int cutoff) {
  if (cutoff < 6) throw ConfigError("virasoro-simple model needs cutoff >= 6");
  VoaSpec::Definition d;
  d.name = "virasoro-simple";
  d.order = 1;
  d.generators = {{"L", 2, 0}};
  d.central_charge = c;
  d.omega = {{BasisKey{{{0, -2}}}, Rational(1)}};
  d.commutator = [c](int, const Rational& m, int, const Rational& n) {
    Commutator r;
    if (m != n) r.terms.push_back({0, m + n, m - n});
    if (m + n == 0) r.central = c * (m * m * m - m) / 12;
    return r;
  };
  d.cutoff = cutoff;
  VoaSpec spec(std::move(d));
  spec.set_radical(gram_radical);
  return spec;
}

VoaSpec build_model(const ModelId& id, int cutoff) {
  if (id.name == "heisenberg") return build_heisenberg(cutoff, id.twist);
  if (id.twist != Twist::identity)
    throw ConfigError("twist " + twist_name(id.twist) + " is only available for heisenberg");
  if (id.name == "virasoro-universal") return build_virasoro(id.c, cutoff);
  if (id.name == "virasoro-simple") return build_virasoro_simple(id.c, cutoff);
  throw ConfigError("unknown model: " + id.name);
}

Matrix shapovalov_gram(const VoaSpec& spec, int w) {
  auto keys = spec.enumerate_universal(w);
  const std::size_t n = keys.size();
  Matrix g(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto modes = spec.key(keys[i]).modes;
    for (std::size_t j = 0; j < n; ++j) {
      Vec cur = spec.monomial(keys[j]);
      for (const auto& m : modes) {
        Vec next;
        for (const auto& [k, c] : cur) axpy(next, c, spec.raw_generator(m.gen, -m.index, k));
        cur = std::move(next);
      }
      auto it = cur.find(VoaSpec::vacuum_id());
      if (it != cur.end()) g(i, j) = it->second;
    }
  }
  return g;
}

Echelon<KeyId> gram_radical(const VoaSpec& spec, int w) {
  Echelon<KeyId> e;
  if (w <= 0) return e;
  auto keys = spec.enumerate_universal(w);
  Matrix g = shapovalov_gram(spec, w);
  for (const auto& x : g.nullspace()) {
    Vec v;
    for (std::size_t i = 0; i < keys.size(); ++i) add_term(v, keys[i], x[i]);
    e.insert(v);
  }
  return e;
}

}  // namespace tzhu
