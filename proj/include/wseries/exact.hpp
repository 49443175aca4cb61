#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace wseries {

// Arbitrary-precision integers and exact ratios. All combinatorial tables and
// the exact coefficient formulas run on these so that identity checks are
// genuine equalities, not tolerance comparisons.
using ExactInt = mpz_class;
using Rational = mpq_class;

inline ExactInt factorial(long n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  ExactInt r = 1;
  for (long i = 2; i <= n; ++i) r *= i;
  return r;
}

// (2n-1)!! = 1*3*5*...*(2n-1); the n=0 empty product is 1.
inline ExactInt double_factorial_odd(long n) {
  if (n < 0) throw std::invalid_argument("double_factorial_odd: negative argument");
  ExactInt r = 1;
  for (long i = 3; i <= 2 * n - 1; i += 2) r *= i;
  return r;
}

// Binomial coefficient with integer (possibly negative) upper argument, the
// generalized form r*(r-1)*...*(r-j+1)/j!. Zero for j < 0. The product of j
// consecutive integers is divisible by j!, so the result is an exact integer.
inline ExactInt binomial_general(long r, long j) {
  if (j < 0) return 0;
  if (j == 0) return 1;
  ExactInt num = 1;
  for (long i = 0; i < j; ++i) num *= ExactInt(r - i);
  ExactInt den = factorial(j);
  ExactInt q = num / den;
  return q;
}

inline Rational rational_pow(const Rational& base, long e) {
  if (e == 0) return Rational(1);
  Rational b = base;
  bool inv = e < 0;
  if (inv) {
    if (b == 0) throw std::domain_error("rational_pow: zero base with negative exponent");
    e = -e;
  }
  Rational r = 1;
  while (e > 0) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  if (inv) return Rational(1) / r;
  return r;
}

inline Rational make_rational(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline double to_double(const Rational& q) { return q.get_d(); }
inline double to_double(const ExactInt& z) { return z.get_d(); }

}  // namespace wseries
