#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace qmzv {

// Exact arithmetic over Q via GMP. mpq_class keeps values canonical
// (reduced, positive denominator) as long as they are built through the
// helpers below; raw two-argument mpq_class construction is avoided.
using Integer = mpz_class;
using Rational = mpq_class;

// Thrown when an operation is applied outside its mathematical domain
// (e.g. a stuffle product on a word with an upper index > 0).
class domain_error : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// num/den, reduced, denominator > 0. den == 0 is rejected.
Rational rat(long num, long den = 1);
Rational rat(const Integer& num, const Integer& den);

// Accepts "p", "-p" and "p/q" with arbitrary-precision digits.
Rational rational_from_string(std::string_view text);

// "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& x);

// n!, memoized. Safe for concurrent callers.
Integer factorial(int n);

// Binomial coefficient; 0 when k < 0 or k > n. Requires n >= 0.
Integer binomial(long n, long k);

// base^exp for exp >= 0 (arbitrary precision result).
Integer int_pow(long base, int exp);

}  // namespace qmzv
