#pragma once

#include "tzhu/rational.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace tzhu {

// Sparse exact vector; zero coefficients are never stored.
template <class K>
using SparseVec = std::map<K, Rational>;

template <class K>
void add_term(SparseVec<K>& v, const K& key, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, fresh] = v.try_emplace(key, c);
  if (!fresh) {
    it->second += c;
    if (sgn(it->second) == 0) v.erase(it);
  }
}

template <class K>
void axpy(SparseVec<K>& dst, const Rational& c, const SparseVec<K>& src) {
  if (sgn(c) == 0) return;
  for (const auto& [k, x] : src) add_term(dst, k, c * x);
}

template <class K>
SparseVec<K> scaled(const SparseVec<K>& v, const Rational& c) {
  SparseVec<K> out;
  if (sgn(c) == 0) return out;
  for (const auto& [k, x] : v) out.emplace(k, c * x);
  return out;
}

template <class K>
SparseVec<K> difference(const SparseVec<K>& a, const SparseVec<K>& b) {
  SparseVec<K> out = a;
  axpy(out, Rational(-1), b);
  return out;
}

// Row echelon basis of a subspace. Each row has leading coefficient 1 at its
// pivot (the largest key), and no pivot appears in any other row.
template <class K>
class Echelon {
 public:
  SparseVec<K> reduce(SparseVec<K> v) const {
    auto it = v.end();
    while (it != v.begin()) {
      --it;
      auto row = rows_.find(it->first);
      if (row == rows_.end()) continue;
      K key = it->first;
      Rational c = it->second;
      for (const auto& [k, x] : row->second) add_term(v, k, -c * x);
      it = v.lower_bound(key);
    }
    return v;
  }

  bool contains(const SparseVec<K>& v) const { return reduce(v).empty(); }

  // Returns the new pivot, if the vector was independent.
  std::optional<K> insert(const SparseVec<K>& v) {
    SparseVec<K> r = reduce(v);
    if (r.empty()) return std::nullopt;
    K pivot = r.rbegin()->first;
    Rational inv = 1 / r.rbegin()->second;
    for (auto& [k, x] : r) x *= inv;
    for (auto& [p, row] : rows_) {
      auto hit = row.find(pivot);
      if (hit == row.end()) continue;
      Rational c = hit->second;
      for (const auto& [k, x] : r) add_term(row, k, -c * x);
    }
    rows_.emplace(pivot, std::move(r));
    return pivot;
  }

  std::size_t rank() const { return rows_.size(); }
  bool is_pivot(const K& k) const { return rows_.count(k) != 0; }
  const std::map<K, SparseVec<K>>& rows() const { return rows_; }

 private:
  std::map<K, SparseVec<K>> rows_;
};

// Echelon basis that remembers, for each row, a preimage under some map:
// row = f(preimage). reduce() returns the remainder and the preimage of the
// part that was removed.
template <class K, class P>
class TrackedEchelon {
 public:
  std::pair<SparseVec<K>, SparseVec<P>> reduce(SparseVec<K> v) const {
    SparseVec<P> pre;
    auto it = v.end();
    while (it != v.begin()) {
      --it;
      auto row = rows_.find(it->first);
      if (row == rows_.end()) continue;
      K key = it->first;
      Rational c = it->second;
      for (const auto& [k, x] : row->second.first) add_term(v, k, -c * x);
      axpy(pre, c, row->second.second);
      it = v.lower_bound(key);
    }
    return {std::move(v), std::move(pre)};
  }

  bool insert(const SparseVec<K>& image, const SparseVec<P>& preimage) {
    auto [r, pre] = reduce(image);
    if (r.empty()) return false;
    SparseVec<P> p = preimage;
    axpy(p, Rational(-1), pre);
    Rational inv = 1 / r.rbegin()->second;
    K pivot = r.rbegin()->first;
    rows_.emplace(pivot, std::make_pair(scaled(r, inv), scaled(p, inv)));
    return true;
  }

  std::size_t rank() const { return rows_.size(); }
  bool is_pivot(const K& k) const { return rows_.count(k) != 0; }

 private:
  std::map<K, std::pair<SparseVec<K>, SparseVec<P>>> rows_;
};

// Dense exact matrix, row-major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  Matrix transpose() const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(const Rational& c) const;
  std::vector<Rational> apply(const std::vector<Rational>& x) const;
  bool operator==(const Matrix& o) const = default;
  bool is_zero() const;
  Rational trace() const;

  // Reduced row echelon form in place; returns pivot columns.
  std::vector<std::size_t> rref();
  std::size_t rank() const;
  // Basis of { x : A x = 0 }.
  std::vector<std::vector<Rational>> nullspace() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> a_;
};

// Polynomials over Q, coefficients listed from the constant term upward.
using Poly = std::vector<Rational>;

void poly_trim(Poly& p);
Poly poly_mul(const Poly& a, const Poly& b);
Rational poly_eval(const Poly& p, const Rational& x);

// Monic minimal polynomial of a square matrix.
Poly minimal_polynomial(const Matrix& m);

struct RootSplit {
  std::vector<Rational> roots;  // distinct, ascending
  Poly residual;                // monic factor without rational roots
};
RootSplit rational_roots(const Poly& p);

}  // namespace tzhu
