#pragma once

#include <boost/multiprecision/gmp.hpp>

namespace flawpark {

using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

// n! for n >= 0; throws std::domain_error on negative n.
BigInt factorial(int n);

// Binomial coefficient; 0 whenever k < 0 or k > n (including negative n).
BigInt binomial(int n, int k);

// base^exp for exp >= 0.
BigInt int_pow(const BigInt& base, int exp);

}  // namespace flawpark
