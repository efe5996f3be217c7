#include "tzhu_cli/report.hpp"

#include <map>

namespace tzhu::cli {

Json rational_json(const Rational& q) { return to_string(q); }

Json rationals_json(const std::vector<Rational>& xs) {
  Json a = Json::array();
  for (const auto& x : xs) a.push_back(rational_json(x));
  return a;
}

Json matrix_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json r = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(rational_json(m(i, j)));
    rows.push_back(std::move(r));
  }
  return rows;
}

std::string anchor_for(const std::string& name) {
  static const std::map<std::string, std::string> anchors = {
      {"vertex-commutator", "mode algebra: commutator formula on V"},
      {"l-1-derivative", "mode algebra: L(-1) derivative property"},
      {"creation", "mode algebra: creation property of the vacuum"},
      {"g-grading", "automorphism: eigenspace grading is multiplicative"},
      {"phi-involution", "anti-involution e^{L(1)}(-1)^{L(0)}: triangular and involutive"},
      {"gram-symmetry", "contravariant form: symmetry"},
      {"radical-null", "contravariant form: radical vectors are null"},
      {"quotient-well-defined", "simple quotient: modes preserve the radical"},
      {"zhu-identity-laws", "twisted Zhu algebra: [1] is a two-sided identity"},
      {"zhu-centrality", "twisted Zhu algebra: [omega] is central"},
      {"zhu-associativity", "twisted Zhu algebra: associativity of *_g"},
      {"zhu-ideal", "twisted Zhu algebra: O_g(V) is a two-sided ideal"},
      {"zhu-phi", "twisted Zhu algebra: phi is an anti-isomorphism A_g -> A_{g^-1}"},
      {"zhu-odd-vanishing", "twisted Zhu algebra: V^r lies in O_g(V) for r != 0"},
      {"zhu-star-residue", "twisted Zhu algebra: residue forms of u*v and u*v - v*u"},
      {"margin-monotonicity", "twisted Zhu algebra: quotient dimension is monotone in the margin"},
      {"zhu-negative-control", "untwisted free boson: A(V) is not finite-dimensional"},
      {"lie-antisymmetry", "mode Lie algebra V[g]: antisymmetry"},
      {"lie-jacobi", "mode Lie algebra V[g]: Jacobi identity"},
      {"lie-grading", "mode Lie algebra V[g]: bracket respects the degree"},
      {"lie-centrality", "mode Lie algebra V[g]: omega(0) acts as -d/dt and 1(-1) is central"},
      {"lie-degree-zero", "mode Lie algebra V[g]: degree-zero bracket formula"},
      {"lie-epimorphism", "mode Lie algebra V[g]: o-map onto the Lie algebra of A_g(V)"},
      {"zhu-module", "A_g(V)-module: rho is a unital representation"},
      {"omega-round-trip", "lowest-weight functor: Omega(L(U)) is isomorphic to U"},
      {"simplicity-witness", "L(U): the pairing with U is nondegenerate on every degree"},
      {"universality", "L(U): the associativity relations W vanish"},
      {"module-commutator", "twisted module: commutator formula"},
      {"twisted-associativity", "twisted module: weak associativity with fractional exponent"},
      {"l0-spectrum", "twisted module: L(0) acts on degree n by n + h"},
      {"pbw-soundness", "induced module: V[g] acts as a Lie algebra representation"},
      {"contragredient-grading", "contragredient module: grading and L(0) spectrum"},
      {"contragredient-commutator", "contragredient module: commutator formula"},
      {"double-dual", "contragredient module: M'' agrees with M"},
  };
  auto it = anchors.find(name);
  return it == anchors.end() ? name : it->second;
}

void CheckLog::add(const CheckReport& r, const std::string& scope) {
  Json rec;
  rec["name"] = r.name;
  if (!scope.empty()) rec["scope"] = scope;
  rec["anchor"] = anchor_for(r.name);
  std::string status;
  if (!r.passed()) {
    status = "fail";
    ++failed_;
  } else if (r.checked == 0 && r.skipped > 0) {
    status = "skipped";
    ++skipped_;
  } else {
    status = "pass";
    ++passed_;
  }
  rec["status"] = status;
  rec["checked"] = r.checked;
  rec["skipped"] = r.skipped;
  rec["failure_count"] = r.failure_count;
  rec["failures"] = r.failures;
  rec["note"] = r.note;
  records_.push_back(std::move(rec));
}

void CheckLog::skip(const std::string& name, const std::string& scope, const std::string& why) {
  Json rec;
  rec["name"] = name;
  if (!scope.empty()) rec["scope"] = scope;
  rec["anchor"] = anchor_for(name);
  rec["status"] = "skipped";
  rec["checked"] = 0;
  rec["skipped"] = 0;
  rec["failure_count"] = 0;
  rec["failures"] = Json::array();
  rec["note"] = why;
  ++skipped_;
  records_.push_back(std::move(rec));
}

}  // namespace tzhu::cli
