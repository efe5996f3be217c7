#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace tzhu {

// mpq_class keeps values canonical after every arithmetic operation.
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);

// Accepts "p", "p/q", with optional sign. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);

bool is_integer(const Rational& q);
long to_long(const Rational& q);  // requires is_integer
long floor_long(const Rational& q);

// q(q-1)...(q-k+1)/k!
Rational rat_binomial(const Rational& q, unsigned k);

// Coefficients of z^0..z^max_k in (1+z)^q.
std::vector<Rational> binomial_series(const Rational& q, unsigned max_k);

inline Rational sign_power(long e) { return (e % 2 == 0) ? Rational(1) : Rational(-1); }

}  // namespace tzhu
