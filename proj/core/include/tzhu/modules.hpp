#pragma once

#include "tzhu/check.hpp"
#include "tzhu/lie.hpp"
#include "tzhu/zhu.hpp"

#include <functional>
#include <memory>
#include <optional>

namespace tzhu {

// A finite-dimensional module for the Zhu algebra: one matrix per quotient-basis class.
struct ZhuModule {
  std::size_t dim = 0;
  std::vector<Matrix> action;
  std::optional<Rational> lowest_weight;
  std::string label;

  Matrix act(const std::vector<Rational>& coords) const;
};

// One-dimensional module on which [omega] acts by h. Throws ConfigError if h
// does not determine a unique character at this cutoff.
ZhuModule character_module(const ZhuAlgebra& alg, const Rational& h);
CheckReport check_zhu_module(const ZhuModule& U, const ZhuAlgebra& alg);

// x[index / T] in the shifted indexing of voa.hpp: degree change -index / T.
struct ModeFactor {
  int gen;
  int index;
  auto operator<=>(const ModeFactor&) const = default;
};

// Raising generator modes (index ascending) applied to the basis vector `tail` of U.
// Degrees are stored multiplied by T.
struct PbwMonomial {
  int degree;
  std::vector<ModeFactor> factors;
  int tail;
  auto operator<=>(const PbwMonomial&) const = default;
};

using ModVec = SparseVec<PbwMonomial>;

namespace detail {
class ModuleEngine;
}

struct PairingRank {
  int degree = 0;              // scaled by T
  std::size_t words = 0;       // operator words used
  std::size_t rank = 0;        // rank with the word-length bound
  std::size_t rank_extended = 0;  // rank with the bound raised by one
  std::size_t word_bound = 0;
  bool full_column_rank = false;  // on the retained basis
};

class InducedModule {
 public:
  enum class Stage { verma, mbar, simple };

  InducedModule(const ZhuAlgebra& alg, const ZhuModule& U, const Rational& depth);

  Stage stage() const { return stage_; }
  std::string stage_name() const;
  const VoaSpec& spec() const;
  const ZhuAlgebra& algebra() const;
  const ZhuModule& lowest() const;
  int order() const;
  int depth_index() const { return depth_index_; }  // depth * T
  Rational depth() const;
  Rational degree_value(int index) const;

  const std::vector<PbwMonomial>& verma_basis(int n) const { return verma_basis_.at(n); }
  const std::vector<PbwMonomial>& basis(int n) const { return basis_.at(n); }
  std::size_t dim(int n) const { return basis_.at(n).size(); }
  std::vector<std::size_t> dims() const;
  const Echelon<PbwMonomial>& relations(int n) const { return relations_.at(n); }

  // Exact action in the generalized Verma module.
  ModVec act(const Vec& a, const Rational& m, const ModVec& v) const;
  ModVec act_term(const LieTerm& t, const ModVec& v) const { return act(spec().monomial(t.base), t.m, v); }
  ModVec act_generator(int gen, const Rational& index, const ModVec& v) const;

  // Normal form modulo the stage relations. Throws InsufficientDepth above depth.
  ModVec reduce(const ModVec& v) const;
  std::vector<Rational> coordinates(const ModVec& reduced, int n) const;
  ModVec basis_vector(int n, std::size_t i) const;

  // Scaled degree of a_m on the module: T * (wt a - m - 1).
  int mode_degree(KeyId a, const Rational& m) const;
  // Matrix of a_m from the retained basis at degree `from` to the degree it lands in.
  Matrix mode_matrix(const Vec& a, const Rational& m, int from) const;

  const std::vector<PairingRank>& pairing_ranks() const { return pairing_; }

  // Stage transitions.
  InducedModule with_relations(Stage stage, std::vector<Echelon<PbwMonomial>> rel) const;
  void set_pairing(std::vector<PairingRank> p) { pairing_ = std::move(p); }

 private:
  void rebuild_basis();
  std::shared_ptr<detail::ModuleEngine> engine_;
  Stage stage_ = Stage::verma;
  int depth_index_ = 0;
  std::vector<std::vector<PbwMonomial>> verma_basis_;
  std::vector<Echelon<PbwMonomial>> relations_;
  std::vector<std::vector<PbwMonomial>> basis_;
  std::vector<PairingRank> pairing_;
};

InducedModule verma_build(const ZhuAlgebra& alg, const ZhuModule& U, const Rational& depth);

struct RelationSet {
  std::size_t coefficients = 0;  // extracted (z0, z2) coefficients
  std::vector<std::string> labels;
  std::vector<ModVec> vectors;   // nonzero differences only
};

// Coefficients of the twisted associativity defect applied to U, for
// homogeneous basis a, b with weight <= weight_bound, landing within depth.
namespace detail {
// (z0^A z2^B) coefficient of both sides of twisted associativity applied to w
// (degree wdeg), with B fixed by the landing degree q. Exact, in the Verma module.
std::pair<ModVec, ModVec> associativity_coefficient(const InducedModule& M, KeyId u, KeyId v, const ModVec& w,
                                                    int wdeg, int k, int A, int q);
}

RelationSet relations_W(const InducedModule& verma, int weight_bound = 2);
InducedModule mbar_build(const InducedModule& verma, const RelationSet& W);
// Quotient by the vectors killed by every lowering operator word, with words of
// generator modes up to length n*T + extra at degree n.
InducedModule radical_and_simple(const InducedModule& m, int extra = 2);

// --- checks on modules (module_checks.cpp) ---

struct OmegaResult {
  std::vector<std::size_t> dims;  // dimension of the lowest-weight space per degree
  ZhuModule module;               // action on the degree-0 part via o(x)
  std::size_t conditions = 0;     // annihilation conditions imposed
  CheckReport report{"omega-round-trip"};
};

// Lowest-weight vectors: common kernel of a_m with negative degree, a of weight
// <= term_weight. Throws InsufficientDepth at depth 0.
OmegaResult omega_functor(const InducedModule& M, int term_weight = 3, std::size_t max_zero_samples = 40);

CheckReport check_module_commutator(const InducedModule& M, int max_weight = 3);
struct AssociativityResult {
  CheckReport report{"twisted-associativity"};
  std::vector<std::string> k_used;  // "u, w -> k" per pair
  int a_min = 0, a_max = 0;
};
AssociativityResult check_twisted_associativity(const InducedModule& M, int max_weight = 2);
CheckReport check_l0_spectrum(const InducedModule& M);
CheckReport check_pbw_soundness(const InducedModule& M, int max_weight = 2);
CheckReport check_universality(const InducedModule& simple, const RelationSet& W);
CheckReport check_simplicity(const InducedModule& simple);

// Graded dual with adjoint modes, a g^{-1}-twisted module.
class Contragredient {
 public:
  // Matrix of a_m between degrees; rows index the target degree.
  using ModeFn = std::function<Matrix(const Vec& a, const Rational& m, int from)>;

  explicit Contragredient(const InducedModule& M);
  Contragredient(const InducedModule& M, ModeFn base, int levels);

  std::vector<std::size_t> dims() const;
  // a'_m from M'(from) to M'(from + deg), deg = T (wt a - m - 1).
  Matrix mode_matrix(const Vec& a, const Rational& m, int from) const;
  ModeFn as_fn() const;

 private:
  const InducedModule* M_;
  ModeFn base_;
};

CheckReport check_contragredient_commutator(const InducedModule& M, int max_weight = 2);
CheckReport check_double_dual(const InducedModule& M, const Rational& max_degree, int max_weight = 2);
CheckReport check_contragredient_grading(const InducedModule& M);

}  // namespace tzhu
