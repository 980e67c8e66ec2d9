#include "dessinalg/rational.hpp"

#include <algorithm>
#include <stdexcept>

namespace dessinalg {

namespace {

// Pollard-Brent rho; n is odd, composite and has no small factors.
Integer rho_split(const Integer& n) {
  for (unsigned long c = 1;; ++c) {
    Integer y = 2, x, g = 1, q = 1, ys;
    const unsigned long m = 64;
    unsigned long r = 1;
    auto f = [&](const Integer& v) {
      Integer out = v * v + c;
      mpz_mod(out.get_mpz_t(), out.get_mpz_t(), n.get_mpz_t());
      return out;
    };
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = f(y);
      unsigned long k = 0;
      do {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          Integer diff = abs(x - y);
          q = (q * diff) % n;
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += m;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        Integer diff = abs(x - ys);
        mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_into(const Integer& n, std::map<Integer, unsigned>& out) {
  if (n == 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 30) != 0) {
    ++out[n];
    return;
  }
  const Integer d = rho_split(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

} // namespace

std::map<Integer, unsigned> factor_integer(const Integer& value) {
  if (value == 0) throw std::invalid_argument("cannot factor zero");
  Integer n = abs(value);
  std::map<Integer, unsigned> out;
  for (unsigned long p = 2; p < 10000 && p * p <= n; p += (p == 2 ? 1 : 2)) {
    while (mpz_divisible_ui_p(n.get_mpz_t(), p) != 0) {
      ++out[Integer(p)];
      n /= p;
    }
  }
  factor_into(n, out);
  return out;
}

std::vector<Integer> positive_divisors(const Integer& n) {
  std::vector<Integer> divisors{1};
  for (const auto& [prime, exponent] : factor_integer(n)) {
    const std::size_t existing = divisors.size();
    Integer power = 1;
    for (unsigned e = 1; e <= exponent; ++e) {
      power *= prime;
      for (std::size_t i = 0; i < existing; ++i) divisors.push_back(divisors[i] * power);
    }
  }
  std::sort(divisors.begin(), divisors.end());
  return divisors;
}

} // namespace dessinalg
