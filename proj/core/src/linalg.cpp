#include "tzhu/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace tzhu {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch");
  Matrix p(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& x = (*this)(i, k);
      if (sgn(x) == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j)
        if (sgn(o(k, j)) != 0) p(i, j) += x * o(k, j);
    }
  return p;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
  Matrix s = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) s.a_[i] += o.a_[i];
  return s;
}

Matrix Matrix::operator-(const Matrix& o) const { return *this + o.scaled(Rational(-1)); }

Matrix Matrix::scaled(const Rational& c) const {
  Matrix s = *this;
  for (auto& x : s.a_) x *= c;
  return s;
}

std::vector<Rational> Matrix::apply(const std::vector<Rational>& x) const {
  if (x.size() != cols_) throw std::invalid_argument("vector length mismatch");
  std::vector<Rational> y(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (sgn(x[j]) != 0) y[i] += (*this)(i, j) * x[j];
  return y;
}

bool Matrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const Rational& x) { return sgn(x) == 0; });
}

Rational Matrix::trace() const {
  Rational t;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

std::vector<std::size_t> Matrix::rref() {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
    std::size_t p = r;
    while (p < rows_ && sgn((*this)(p, c)) == 0) ++p;
    if (p == rows_) continue;
    if (p != r)
      for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(p, j), (*this)(r, j));
    Rational inv = 1 / (*this)(r, c);
    for (std::size_t j = c; j < cols_; ++j) (*this)(r, j) *= inv;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r || sgn((*this)(i, c)) == 0) continue;
      Rational f = (*this)(i, c);
      for (std::size_t j = c; j < cols_; ++j)
        if (sgn((*this)(r, j)) != 0) (*this)(i, j) -= f * (*this)(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t Matrix::rank() const {
  Matrix m = *this;
  return m.rref().size();
}

std::vector<std::vector<Rational>> Matrix::nullspace() const {
  Matrix m = *this;
  auto pivots = m.rref();
  std::vector<bool> is_pivot(cols_, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t f = 0; f < cols_; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> x(cols_);
    x[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = -m(i, f);
    basis.push_back(std::move(x));
  }
  return basis;
}

void poly_trim(Poly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  poly_trim(c);
  return c;
}

Rational poly_eval(const Poly& p, const Rational& x) {
  Rational y;
  for (auto it = p.rbegin(); it != p.rend(); ++it) y = y * x + *it;
  return y;
}

Poly minimal_polynomial(const Matrix& m) {
  std::size_t n = m.rows();
  if (n != m.cols()) throw std::invalid_argument("minimal polynomial of non-square matrix");
  std::vector<Matrix> powers{Matrix::identity(n)};
  for (std::size_t k = 1; k <= n; ++k) {
    powers.push_back(powers.back() * m);
    Matrix cols(n * n, k + 1);
    for (std::size_t p = 0; p <= k; ++p)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) cols(i * n + j, p) = powers[p](i, j);
    auto ker = cols.nullspace();
    if (ker.empty()) continue;
    Poly p = ker.front();
    poly_trim(p);
    Rational lead = p.back();
    for (auto& c : p) c /= lead;
    return p;
  }
  Poly one{Rational(1)};
  return n == 0 ? one : Poly{};
}

namespace {

std::vector<mpz_class> divisors(mpz_class v) {
  v = abs(v);
  std::vector<mpz_class> out;
  if (v == 0) return out;
  if (v > mpz_class("1000000000000")) throw std::runtime_error("coefficient too large for root search");
  for (mpz_class d = 1; d * d <= v; ++d) {
    if (v % d != 0) continue;
    out.push_back(d);
    if (d * d != v) out.push_back(v / d);
  }
  return out;
}

// Divide p by (x - r), assuming r is a root.
Poly deflate(const Poly& p, const Rational& r) {
  std::size_t n = p.size() - 1;
  Poly q(n);
  Rational carry;
  for (std::size_t i = n; i-- > 0;) {
    carry = p[i + 1] + carry * r;
    q[i] = carry;
  }
  return q;
}

}  // namespace

RootSplit rational_roots(const Poly& input) {
  Poly p = input;
  poly_trim(p);
  RootSplit out;
  if (p.empty()) return out;
  auto add_root = [&](const Rational& r) {
    if (std::find(out.roots.begin(), out.roots.end(), r) == out.roots.end()) out.roots.push_back(r);
  };
  while (p.size() > 1 && sgn(p.front()) == 0) {
    p.erase(p.begin());
    add_root(Rational(0));
  }
  bool progress = true;
  while (p.size() > 1 && progress) {
    progress = false;
    mpz_class l = 1;
    for (auto& c : p) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    mpz_class a0 = Rational(p.front() * l).get_num();
    mpz_class an = Rational(p.back() * l).get_num();
    for (const auto& num : divisors(a0)) {
      for (const auto& den : divisors(an)) {
        for (int s : {1, -1}) {
          Rational r(num * s, den);
          r.canonicalize();
          if (sgn(poly_eval(p, r)) == 0) {
            add_root(r);
            p = deflate(p, r);
            progress = true;
            break;
          }
        }
        if (progress) break;
      }
      if (progress) break;
    }
  }
  std::sort(out.roots.begin(), out.roots.end());
  Rational lead = p.back();
  for (auto& c : p) c /= lead;
  out.residual = p;
  return out;
}

}  // namespace tzhu
