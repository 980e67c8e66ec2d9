#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <string_view>

namespace dessinalg {

// Arbitrary-precision integers and rationals. mpq_class values are kept in
// lowest terms with a positive denominator by every helper below.
using Integer = mpz_class;
using Rational = mpq_class;

// Accepts "p", "-p", "p/q" (q != 0), with optional surrounding parentheses
// and whitespace. The result is canonical.
Rational parse_rational(std::string_view text);
std::string format_rational(const Rational& r);

Integer parse_integer(std::string_view text);

// Prime factorization of |n| (n != 0). Trial division for small primes, then
// Pollard-Brent rho for whatever remains.
std::map<Integer, unsigned> factor_integer(const Integer& n);
// All positive divisors of |n| (n != 0), ascending.
std::vector<Integer> positive_divisors(const Integer& n);

} // namespace dessinalg
