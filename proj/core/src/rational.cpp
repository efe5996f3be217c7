#include "tzhu/rational.hpp"

#include <stdexcept>

namespace tzhu {

Rational make_rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto slash = s.find('/');
  auto valid_int = [](const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!num.empty() && num[0] == '+') num.erase(0, 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
    throw std::invalid_argument("not a rational: " + s);
  mpz_class n(num), d(den);
  if (d == 0) throw std::invalid_argument("zero denominator: " + s);
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

bool is_integer(const Rational& q) { return q.get_den() == 1; }

long to_long(const Rational& q) {
  if (!is_integer(q)) throw std::domain_error("not an integer: " + q.get_str());
  return q.get_num().get_si();
}

long floor_long(const Rational& q) {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return f.get_si();
}

Rational rat_binomial(const Rational& q, unsigned k) {
  Rational r(1);
  for (unsigned i = 0; i < k; ++i) {
    r *= q - i;
    r /= i + 1;
  }
  return r;
}

std::vector<Rational> binomial_series(const Rational& q, unsigned max_k) {
  std::vector<Rational> out;
  out.reserve(max_k + 1);
  Rational r(1);
  for (unsigned i = 0; i <= max_k; ++i) {
    out.push_back(r);
    r *= q - i;
    r /= i + 1;
  }
  return out;
}

}  // namespace tzhu
