#pragma once

#include "tzhu/check.hpp"
#include "tzhu/voa.hpp"

#include <optional>

namespace tzhu {

// Res_z (1+z)^{wt u - 1 + delta_r + r/T + n} z^{-m-delta_r-1} Y(u,z) v, extended
// linearly over the weight- and g-homogeneous components of u. m = n = 0 is the
// circle product.
Vec residue_product(const VoaSpec& spec, const Vec& u, const Vec& v, int m, int n);
Vec circ_product(const VoaSpec& spec, const Vec& u, const Vec& v);
// sum_i C(wt u, i) u_{i-1} v on the g-invariant part of u; 0 on the rest.
Vec star_product(const VoaSpec& spec, const Vec& u, const Vec& v);

struct FamilyMember {
  KeyId u, v;
  int m, n;
  int top_weight;
  Vec value;
};

// All residue products of basis keys with wt u + wt v <= N + K, 0 <= n <= m <= K,
// whose top weight fits under the model cutoff. Throws CutoffExceeded if
// N + K is above the model cutoff.
std::vector<FamilyMember> spanning_family(const VoaSpec& spec, int N, int K);

// Model cutoff that admits every family member for (N, K).
inline int zhu_model_cutoff(int N, int K) { return N + 2 * K + 1; }

class ZhuAlgebra {
 public:
  ZhuAlgebra(const VoaSpec& spec, int N, int K);

  const VoaSpec& spec() const { return spec_; }
  int cutoff() const { return N_; }
  int margin() const { return K_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<KeyId>& basis() const { return basis_; }
  const std::vector<FamilyMember>& family() const { return family_; }
  const Echelon<KeyId>& span() const { return span_; }

  // Normal form modulo the generated span.
  Vec reduce(const Vec& v) const;
  // Coordinates in the quotient basis, if the normal form lies in V_{<=N}.
  std::optional<std::vector<Rational>> coordinates(const Vec& v) const;
  Vec from_coordinates(const std::vector<Rational>& x) const;
  // true: reduces to 0; false: nonzero within V_{<=N}; nullopt: undecided.
  std::optional<bool> vanishes(const Vec& v) const;

  const std::optional<std::vector<Rational>>& product(std::size_t i, std::size_t j) const {
    return table_[i][j];
  }
  // Product of two classes given in coordinates, if every needed entry exists.
  std::optional<std::vector<Rational>> multiply(const std::vector<Rational>& x,
                                                const std::vector<Rational>& y) const;
  bool table_complete() const;

  const std::vector<Rational>& identity_class() const { return identity_; }
  const std::optional<std::vector<Rational>>& omega_class() const { return omega_; }

  // Dimension with the previous margin, and dimension of the V_{<=N-2} part.
  std::size_t dim_previous_margin() const { return dim_prev_margin_; }
  std::size_t dim_lower_cutoff() const { return dim_lower_cutoff_; }
  bool stabilized() const { return stabilized_; }

  // Left multiplication by the class with these coordinates; requires the
  // needed table entries.
  std::optional<Matrix> left_multiplication(const std::vector<Rational>& x) const;

 private:
  VoaSpec spec_;
  int N_, K_;
  std::vector<FamilyMember> family_;
  Echelon<KeyId> span_;
  std::vector<KeyId> basis_;
  std::map<KeyId, std::size_t> position_;
  std::vector<std::vector<std::optional<std::vector<Rational>>>> table_;
  std::vector<Rational> identity_;
  std::optional<std::vector<Rational>> omega_;
  std::size_t dim_prev_margin_ = 0, dim_lower_cutoff_ = 0;
  bool stabilized_ = false;
};

ZhuAlgebra build_quotient(const VoaSpec& spec, int N, int K);

CheckReport check_ideal(const ZhuAlgebra& alg, std::size_t max_samples_per_class = 200);
CheckReport check_associativity(const ZhuAlgebra& alg);
CheckReport check_phi(const ZhuAlgebra& alg_g, const ZhuAlgebra& alg_ginv);
CheckReport check_identity_laws(const ZhuAlgebra& alg);
CheckReport check_centrality(const ZhuAlgebra& alg);
CheckReport check_odd_vanishing(const ZhuAlgebra& alg);  // V^r, r != 0, reduces to 0
CheckReport check_star_residue_identities(const ZhuAlgebra& alg);

struct SemisimplicityReport {
  bool decided = false;
  std::string note;
  std::size_t dim = 0;
  std::size_t radical_dim = 0;
  Poly omega_minimal_polynomial;
  std::vector<Rational> omega_spectrum;
  Poly irreducible_residual;  // part of the minimal polynomial without rational roots
};

SemisimplicityReport semisimplicity_report(const ZhuAlgebra& alg);

}  // namespace tzhu
