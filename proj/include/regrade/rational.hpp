#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>

namespace regrade {

// Exact rationals. GMP keeps the canonical form the code relies on:
// denominator > 0 and gcd(|num|, den) = 1 after every operation.
using Rational = mpq_class;
using BigInt = mpz_class;

Rational make_rational(const std::string& num, const std::string& den);

// ("num", "den") as decimal strings, den always positive.
std::pair<std::string, std::string> rational_parts(const Rational& q);

// "num" when integral, otherwise "num/den".
std::string rational_str(const Rational& q);

}  // namespace regrade
