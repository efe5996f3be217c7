#pragma once

#include "tzhu/errors.hpp"
#include "tzhu/linalg.hpp"
#include "tzhu/rational.hpp"

#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace tzhu {

struct Generator {
  std::string name;
  int weight;
  int g_exponent;  // g acts on the generator by exp(2 pi i g_exponent / T)
};

// A generator mode x[k]. The index is shifted so that x[k] changes weight by -k:
// x[k] = x_{k + wt x - 1} in vertex-operator indexing.
struct GenMode {
  int gen;
  int index;
  auto operator<=>(const GenMode&) const = default;
};

// Normal-ordered PBW monomial applied to the vacuum. Factors are listed left to
// right with the index ascending (ties by generator id). Empty = vacuum.
struct BasisKey {
  std::vector<GenMode> modes;
  auto operator<=>(const BasisKey&) const = default;
};

// Keys are interned; ids follow the canonical order (weight ascending, then
// lexicographic on (generator, index) sequences), so id order is pivot order.
using KeyId = std::uint32_t;
using Vec = SparseVec<KeyId>;

struct CommutatorTerm {
  int gen;
  Rational index;  // x[index] in the shifted indexing
  Rational coeff;
};

// [x[m], y[n]] = sum coeff * gen[index] + central * identity
struct Commutator {
  std::vector<CommutatorTerm> terms;
  Rational central;
};

using CommutatorTable = std::function<Commutator(int x, const Rational& m, int y, const Rational& n)>;

namespace detail {
class Engine;
}

class VoaSpec {
 public:
  struct Definition {
    std::string name;
    std::vector<Generator> generators;
    int order = 1;
    Rational central_charge;
    std::vector<std::pair<BasisKey, Rational>> omega;
    CommutatorTable commutator;
    int cutoff = 0;
  };

  explicit VoaSpec(Definition def);

  const std::string& name() const;
  int order() const;
  const Rational& central_charge() const;
  int cutoff() const;
  const std::vector<Generator>& generators() const;
  bool is_quotient() const;

  // Keys.
  KeyId key_id(const BasisKey& key) const;
  const BasisKey& key(KeyId id) const;
  int weight(KeyId id) const;
  int g_exponent(KeyId id) const;
  static constexpr KeyId vacuum_id() { return 0; }

  // Basis of V_weight: all PBW keys, or the complement of the radical for a
  // quotient model. Throws CutoffExceeded above the cutoff.
  std::vector<KeyId> enumerate_basis(int weight) const;
  // All PBW keys of the given weight, ignoring any radical.
  std::vector<KeyId> enumerate_universal(int weight) const;

  Vec vacuum() const;
  Vec omega() const;
  Vec generator_state(int gen) const;  // x[-wt x] 1
  Vec monomial(KeyId id) const { return Vec{{id, Rational(1)}}; }

  // u_n v, reduced modulo the radical. Throws CutoffExceeded if any pair of
  // components would land above the cutoff.
  Vec mode_apply(const Vec& u, int n, const Vec& v) const;
  // L(k) = omega_{k+1}
  Vec l_operator(int k, const Vec& v) const;
  // e^{L(1)} (-1)^{L(0)}
  Vec phi(const Vec& v) const;
  Vec g_project(const Vec& v, int r) const;
  // Normal form modulo the radical (identity for universal models).
  Vec reduce(const Vec& v) const;

  // Largest weight among the components, -1 for zero.
  int top_weight(const Vec& v) const;
  bool is_weight_homogeneous(const Vec& v) const;
  bool is_g_homogeneous(const Vec& v) const;
  std::string format(const Vec& v) const;
  std::string format_key(KeyId id) const;

  // PBW-level engine on universal representatives: no cutoff wall, no radical.
  Vec raw_apply(KeyId u, int n, KeyId v) const;
  Vec raw_generator(int gen, int index, KeyId v) const;
  Commutator commutator(int x, const Rational& m, int y, const Rational& n) const;

  // Quotient support: a provider returning an echelon basis of the radical
  // at a given weight (computed once per weight).
  using RadicalProvider = std::function<Echelon<KeyId>(const VoaSpec&, int weight)>;
  void set_radical(RadicalProvider provider);
  const Echelon<KeyId>& radical(int weight) const;

  std::size_t memo_size() const;

 private:
  std::shared_ptr<detail::Engine> engine_;
};

}  // namespace tzhu
