#include "tzhu/voa.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <sstream>
#include <unordered_map>

namespace tzhu {

namespace {

struct KeyHash {
  std::size_t operator()(const BasisKey& k) const {
    std::size_t h = 1469598103934665603ull;
    for (const auto& m : k.modes) {
      h ^= static_cast<std::size_t>(m.gen) * 0x9e3779b97f4a7c15ull + static_cast<std::size_t>(m.index + 4096);
      h *= 1099511628211ull;
    }
    return h;
  }
};

std::uint64_t pack3(std::uint64_t a, int mid, std::uint64_t b) {
  return (a << 40) | (static_cast<std::uint64_t>(mid + 32768) << 24) | b;
}

}  // namespace

namespace detail {

struct KeyInfo {
  BasisKey key;
  int weight;
  int g_exponent;
  KeyId tail;
};

class Engine {
 public:
  explicit Engine(VoaSpec::Definition d) : def(std::move(d)) {
    keys.push_back({BasisKey{}, 0, 0, 0});
    index.emplace(BasisKey{}, 0);
    block_start.push_back(0);
  }

  VoaSpec::Definition def;
  mutable std::recursive_mutex mu;

  std::deque<KeyInfo> keys;
  std::unordered_map<BasisKey, KeyId, KeyHash> index;
  std::vector<KeyId> block_start;  // first id of each weight; block_start.size()-1 = max built weight

  std::unordered_map<std::uint64_t, Vec> gen_memo;
  std::unordered_map<std::uint64_t, Vec> state_memo;

  VoaSpec::RadicalProvider radical_provider;
  std::map<int, Echelon<KeyId>> radicals;

  int built_weight() const { return static_cast<int>(block_start.size()) - 1; }

  void ensure_weight(int w) {
    while (built_weight() < w) build_block(built_weight() + 1);
  }

  void build_block(int w) {
    // creation slots in factor order: index ascending, then generator
    std::vector<GenMode> slots;
    for (int k = -w; k <= -1; ++k)
      for (int g = 0; g < static_cast<int>(def.generators.size()); ++g)
        if (k <= -def.generators[g].weight) slots.push_back({g, k});
    std::vector<BasisKey> found;
    std::vector<GenMode> cur;
    std::function<void(std::size_t, int)> rec = [&](std::size_t from, int left) {
      if (left == 0) {
        found.push_back(BasisKey{cur});
        return;
      }
      for (std::size_t s = from; s < slots.size(); ++s) {
        if (-slots[s].index > left) continue;
        cur.push_back(slots[s]);
        rec(s, left + slots[s].index);
        cur.pop_back();
      }
    };
    rec(0, w);
    std::sort(found.begin(), found.end());
    block_start.push_back(static_cast<KeyId>(keys.size()));
    for (auto& k : found) {
      int gexp = 0;
      for (auto& m : k.modes) gexp += def.generators[m.gen].g_exponent;
      gexp %= def.order;
      BasisKey tail{std::vector<GenMode>(k.modes.begin() + 1, k.modes.end())};
      KeyId tid = index.at(tail);
      KeyId id = static_cast<KeyId>(keys.size());
      index.emplace(k, id);
      keys.push_back({std::move(k), w, gexp, tid});
    }
  }

  KeyId id_of(const BasisKey& k) {
    int w = 0;
    for (auto& m : k.modes) w -= m.index;
    ensure_weight(w);
    auto it = index.find(k);
    if (it == index.end()) throw std::invalid_argument("not a normal-ordered basis key");
    return it->second;
  }

  int gen_weight(int g) const { return def.generators[g].weight; }

  // x[k] applied to a basis key of the vacuum module.
  Vec apply_gen(int x, int k, KeyId v) {
    const int wv = keys[v].weight;
    if (wv - k < 0) return {};
    const std::uint64_t mk = pack3(static_cast<std::uint64_t>(x), k, v);
    if (auto it = gen_memo.find(mk); it != gen_memo.end()) return it->second;
    Vec out;
    const bool creation = k <= -gen_weight(x);
    if (v == 0) {
      if (creation) out.emplace(id_of(BasisKey{{{x, k}}}), 1);
    } else {
      const GenMode lead = keys[v].key.modes.front();
      if (creation && (k < lead.index || (k == lead.index && x <= lead.gen))) {
        BasisKey nk;
        nk.modes.reserve(keys[v].key.modes.size() + 1);
        nk.modes.push_back({x, k});
        for (auto& m : keys[v].key.modes) nk.modes.push_back(m);
        out.emplace(id_of(nk), 1);
      } else {
        const KeyId rest = keys[v].tail;
        Vec inner = apply_gen(x, k, rest);
        for (const auto& [kid, c] : inner) axpy(out, c, apply_gen(lead.gen, lead.index, kid));
        Commutator com = def.commutator(x, Rational(k), lead.gen, Rational(lead.index));
        for (const auto& t : com.terms)
          axpy(out, t.coeff, apply_gen(t.gen, static_cast<int>(to_long(t.index)), rest));
        if (sgn(com.central) != 0) add_term(out, rest, com.central);
      }
    }
    gen_memo.emplace(mk, out);
    return out;
  }

  // u_n v for basis keys, via the iterate recursion on the leading factor of u:
  // (x_j b)_n = sum_i (-1)^i C(j,i) [ x_{j-i} b_{n+i} - (-1)^j b_{j+n-i} x_i ].
  Vec apply_state(KeyId u, int n, KeyId v) {
    if (u == 0) return n == -1 ? Vec{{v, Rational(1)}} : Vec{};
    const int wu = keys[u].weight, wv = keys[v].weight;
    if (wu + wv - n - 1 < 0) return {};
    const std::uint64_t mk = pack3(u, n, v);
    if (auto it = state_memo.find(mk); it != state_memo.end()) return it->second;
    Vec out;
    const GenMode lead = keys[u].key.modes.front();
    const int x = lead.gen, wx = gen_weight(x);
    const int j = lead.index + wx - 1;
    const KeyId b = keys[u].tail;
    if (b == 0 && j == -1) {
      out = apply_gen(x, n - wx + 1, v);
    } else {
      const int wb = keys[b].weight;
      const Rational jq(j);
      for (int i = 0; n + i <= wb + wv - 1; ++i) {
        Rational coeff = sign_power(i) * rat_binomial(jq, i);
        if (sgn(coeff) == 0) continue;
        Vec t = apply_state(b, n + i, v);
        for (const auto& [kid, c] : t) axpy(out, coeff * c, apply_gen(x, j - i - wx + 1, kid));
      }
      for (int i = 0; i <= wx + wv - 1; ++i) {
        Rational coeff = -sign_power(j) * sign_power(i) * rat_binomial(jq, i);
        if (sgn(coeff) == 0) continue;
        Vec t = apply_gen(x, i - wx + 1, v);
        for (const auto& [kid, c] : t) axpy(out, coeff * c, apply_state(b, j + n - i, kid));
      }
    }
    state_memo.emplace(mk, out);
    return out;
  }

  const Echelon<KeyId>& radical(const VoaSpec& spec, int w) {
    auto it = radicals.find(w);
    if (it != radicals.end()) return it->second;
    Echelon<KeyId> e = radical_provider ? radical_provider(spec, w) : Echelon<KeyId>{};
    return radicals.emplace(w, std::move(e)).first->second;
  }
};

}  // namespace detail

VoaSpec::VoaSpec(Definition def) : engine_(std::make_shared<detail::Engine>(std::move(def))) {
  const auto& d = engine_->def;
  if (d.order < 1) throw ConfigError("automorphism order must be positive");
  for (const auto& g : d.generators) {
    if (g.weight <= 0) throw ConfigError("generator weights must be positive");
    if (g.g_exponent < 0 || g.g_exponent >= d.order) throw ConfigError("g-exponent out of range");
  }
}

const std::string& VoaSpec::name() const { return engine_->def.name; }
int VoaSpec::order() const { return engine_->def.order; }
const Rational& VoaSpec::central_charge() const { return engine_->def.central_charge; }
int VoaSpec::cutoff() const { return engine_->def.cutoff; }
const std::vector<Generator>& VoaSpec::generators() const { return engine_->def.generators; }
bool VoaSpec::is_quotient() const { return static_cast<bool>(engine_->radical_provider); }

KeyId VoaSpec::key_id(const BasisKey& key) const {
  std::lock_guard lock(engine_->mu);
  return engine_->id_of(key);
}

const BasisKey& VoaSpec::key(KeyId id) const {
  std::lock_guard lock(engine_->mu);
  return engine_->keys.at(id).key;
}

int VoaSpec::weight(KeyId id) const {
  std::lock_guard lock(engine_->mu);
  return engine_->keys.at(id).weight;
}

int VoaSpec::g_exponent(KeyId id) const {
  std::lock_guard lock(engine_->mu);
  return engine_->keys.at(id).g_exponent;
}

std::vector<KeyId> VoaSpec::enumerate_universal(int w) const {
  if (w > cutoff()) throw CutoffExceeded("weight " + std::to_string(w) + " exceeds cutoff " + std::to_string(cutoff()));
  if (w < 0) return {};
  std::lock_guard lock(engine_->mu);
  engine_->ensure_weight(w + 1);
  std::vector<KeyId> out;
  for (KeyId id = engine_->block_start[w]; id < engine_->block_start[w + 1]; ++id) out.push_back(id);
  return out;
}

std::vector<KeyId> VoaSpec::enumerate_basis(int w) const {
  auto all = enumerate_universal(w);
  if (!is_quotient()) return all;
  const auto& rad = radical(w);
  std::vector<KeyId> out;
  for (auto id : all)
    if (!rad.is_pivot(id)) out.push_back(id);
  return out;
}

Vec VoaSpec::vacuum() const { return Vec{{vacuum_id(), Rational(1)}}; }

Vec VoaSpec::omega() const {
  Vec w;
  for (const auto& [k, c] : engine_->def.omega) add_term(w, key_id(k), c);
  return w;
}

Vec VoaSpec::generator_state(int gen) const {
  return monomial(key_id(BasisKey{{{gen, -generators().at(gen).weight}}}));
}

Vec VoaSpec::raw_apply(KeyId u, int n, KeyId v) const {
  std::lock_guard lock(engine_->mu);
  return engine_->apply_state(u, n, v);
}

Vec VoaSpec::raw_generator(int gen, int index, KeyId v) const {
  std::lock_guard lock(engine_->mu);
  return engine_->apply_gen(gen, index, v);
}

Commutator VoaSpec::commutator(int x, const Rational& m, int y, const Rational& n) const {
  return engine_->def.commutator(x, m, y, n);
}

Vec VoaSpec::mode_apply(const Vec& u, int n, const Vec& v) const {
  Vec out;
  for (const auto& [ku, cu] : u) {
    for (const auto& [kv, cv] : v) {
      const int w = weight(ku) + weight(kv) - n - 1;
      if (w > cutoff())
        throw CutoffExceeded("mode product of weight " + std::to_string(w) + " exceeds cutoff " +
                             std::to_string(cutoff()));
      if (w < 0) continue;
      axpy(out, cu * cv, raw_apply(ku, n, kv));
    }
  }
  return reduce(out);
}

Vec VoaSpec::l_operator(int k, const Vec& v) const { return mode_apply(omega(), k + 1, v); }

Vec VoaSpec::phi(const Vec& v) const {
  Vec signed_v;
  for (const auto& [k, c] : v) add_term(signed_v, k, sign_power(weight(k)) * c);
  Vec out = signed_v;
  Vec term = signed_v;
  for (int j = 1; !term.empty(); ++j) {
    term = scaled(l_operator(1, term), Rational(1, j));
    axpy(out, Rational(1), term);
  }
  return out;
}

Vec VoaSpec::g_project(const Vec& v, int r) const {
  Vec out;
  const int t = order();
  const int rr = ((r % t) + t) % t;
  for (const auto& [k, c] : v)
    if (g_exponent(k) == rr) out.emplace(k, c);
  return out;
}

void VoaSpec::set_radical(RadicalProvider provider) {
  std::lock_guard lock(engine_->mu);
  engine_->radical_provider = std::move(provider);
  engine_->radicals.clear();
}

const Echelon<KeyId>& VoaSpec::radical(int w) const {
  std::lock_guard lock(engine_->mu);
  return engine_->radical(*this, w);
}

Vec VoaSpec::reduce(const Vec& v) const {
  if (!is_quotient() || v.empty()) return v;
  std::map<int, Vec> parts;
  for (const auto& [k, c] : v) parts[weight(k)].emplace(k, c);
  Vec out;
  for (auto& [w, part] : parts) {
    Vec r = radical(w).reduce(part);
    out.insert(r.begin(), r.end());
  }
  return out;
}

int VoaSpec::top_weight(const Vec& v) const {
  int t = -1;
  for (const auto& [k, c] : v) t = std::max(t, weight(k));
  return t;
}

bool VoaSpec::is_weight_homogeneous(const Vec& v) const {
  if (v.empty()) return true;
  int w = weight(v.begin()->first);
  return std::all_of(v.begin(), v.end(), [&](const auto& kc) { return weight(kc.first) == w; });
}

bool VoaSpec::is_g_homogeneous(const Vec& v) const {
  if (v.empty()) return true;
  int r = g_exponent(v.begin()->first);
  return std::all_of(v.begin(), v.end(), [&](const auto& kc) { return g_exponent(kc.first) == r; });
}

std::string VoaSpec::format_key(KeyId id) const {
  const auto& modes = key(id).modes;
  std::ostringstream os;
  const auto& gens = generators();
  for (std::size_t i = 0; i < modes.size();) {
    std::size_t j = i;
    while (j < modes.size() && modes[j] == modes[i]) ++j;
    os << gens[modes[i].gen].name << "(" << modes[i].index << ")";
    if (j - i > 1) os << "^" << (j - i);
    os << " ";
    i = j;
  }
  os << "1";
  return os.str();
}

std::string VoaSpec::format(const Vec& v) const {
  if (v.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = v.rbegin(); it != v.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    if (it->second != 1) os << "(" << to_string(it->second) << ") ";
    os << format_key(it->first);
  }
  return os.str();
}

std::size_t VoaSpec::memo_size() const {
  std::lock_guard lock(engine_->mu);
  return engine_->gen_memo.size() + engine_->state_memo.size();
}

}  // namespace tzhu
