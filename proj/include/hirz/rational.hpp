#pragma once

#include <gmpxx.h>

#include <string>

namespace hirz {

using Rational = mpq_class;
using Integer = mpz_class;

// "p/q" or "p"; always canonical.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

// num/den in lowest terms; den must be nonzero.
Rational frac(const Integer& num, const Integer& den);

// Accepts "p", "-p", "p/q". Throws ValidationError on garbage or zero denominator.
Rational parse_rational(const std::string& s);

}  // namespace hirz
