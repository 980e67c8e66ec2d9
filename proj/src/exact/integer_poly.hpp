#pragma once

// Integer polynomial helpers shared by root finding and factorization.

#include "dessinalg/polynomial.hpp"

#include <vector>

namespace dessinalg::detail {

using ZPoly = std::vector<Integer>; // coefficient i multiplies x^i, trimmed

inline void trim(ZPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

inline int degree(const ZPoly& f) { return static_cast<int>(f.size()) - 1; }

inline Integer content(const ZPoly& f) {
  Integer g = 0;
  for (const auto& c : f) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

// Divides out the content and makes the leading coefficient positive.
inline ZPoly primitive_part(ZPoly f) {
  trim(f);
  if (f.empty()) return f;
  Integer g = content(f);
  if (f.back() < 0) g = -g;
  for (auto& c : f) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return f;
}

// Primitive integer polynomial with the same roots as p (positive leading
// coefficient).
inline ZPoly to_primitive_integer(const RationalPolynomial& p) {
  Integer lcm = 1;
  for (const auto& c : p.coefficients()) {
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
  }
  ZPoly f;
  f.reserve(p.coefficients().size());
  for (const auto& c : p.coefficients()) f.push_back(Integer(c * lcm));
  return primitive_part(std::move(f));
}

inline RationalPolynomial to_rational(const ZPoly& f) {
  std::vector<Rational> coeffs(f.begin(), f.end());
  return RationalPolynomial(std::move(coeffs));
}

inline ZPoly multiply(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

// Exact division in Z[x]; returns false if `divisor` does not divide
// `dividend` over Z.
inline bool divide_exact(const ZPoly& dividend, const ZPoly& divisor, ZPoly& quotient) {
  if (divisor.empty()) return false;
  ZPoly rem = dividend;
  trim(rem);
  const int dd = degree(divisor);
  if (degree(rem) < dd) {
    quotient.clear();
    return rem.empty();
  }
  quotient.assign(rem.size() - divisor.size() + 1, 0);
  const Integer& lead = divisor.back();
  for (int k = degree(rem) - dd; k >= 0; --k) {
    Integer& top = rem[k + dd];
    if (top == 0) continue;
    if (mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t()) == 0) return false;
    Integer q = top / lead;
    quotient[k] = q;
    for (int j = 0; j <= dd; ++j) rem[k + j] -= q * divisor[j];
  }
  trim(rem);
  trim(quotient);
  return rem.empty();
}

} // namespace dessinalg::detail
