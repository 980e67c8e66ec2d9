#include "dessinalg/polynomial.hpp"

#include "integer_poly.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace dessinalg {

namespace {

using detail::ZPoly;

// ------------------------------------------------------ polynomials over F_p

using ModPoly = std::vector<std::int64_t>;

struct Field {
  std::int64_t p;

  std::int64_t reduce(std::int64_t a) const {
    a %= p;
    return a < 0 ? a + p : a;
  }
  std::int64_t mul(std::int64_t a, std::int64_t b) const { return (a * b) % p; }
  std::int64_t inv(std::int64_t a) const {
    std::int64_t result = 1, base = reduce(a), e = p - 2;
    while (e > 0) {
      if (e & 1) result = mul(result, base);
      base = mul(base, base);
      e >>= 1;
    }
    return result;
  }
};

void trim(ModPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int degree(const ModPoly& f) { return static_cast<int>(f.size()) - 1; }

ModPoly reduce(const ZPoly& f, const Field& F) {
  ModPoly out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    out[i] = static_cast<std::int64_t>(mpz_fdiv_ui(f[i].get_mpz_t(), static_cast<unsigned long>(F.p)));
  }
  trim(out);
  return out;
}

ModPoly sub(const ModPoly& a, const ModPoly& b, const Field& F) {
  ModPoly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = F.reduce(out[i] - b[i]);
  trim(out);
  return out;
}

ModPoly add(const ModPoly& a, const ModPoly& b, const Field& F) {
  ModPoly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = F.reduce(out[i] + b[i]);
  trim(out);
  return out;
}

ModPoly mul(const ModPoly& a, const ModPoly& b, const Field& F) {
  if (a.empty() || b.empty()) return {};
  ModPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + F.mul(a[i], b[j])) % F.p;
  }
  trim(out);
  return out;
}

void divmod(const ModPoly& a, const ModPoly& b, const Field& F, ModPoly& q, ModPoly& r) {
  r = a;
  trim(r);
  q.clear();
  const int db = degree(b);
  if (degree(r) < db) return;
  q.assign(r.size() - b.size() + 1, 0);
  const std::int64_t lead_inv = F.inv(b.back());
  for (int k = degree(r) - db; k >= 0; --k) {
    const std::int64_t c = F.mul(r[k + db], lead_inv);
    if (c == 0) continue;
    q[k] = c;
    for (int j = 0; j <= db; ++j) r[k + j] = F.reduce(r[k + j] - F.mul(c, b[j]));
  }
  trim(r);
  trim(q);
}

ModPoly rem(const ModPoly& a, const ModPoly& b, const Field& F) {
  ModPoly q, r;
  divmod(a, b, F, q, r);
  return r;
}

ModPoly monic(ModPoly f, const Field& F) {
  if (f.empty()) return f;
  const std::int64_t inv = F.inv(f.back());
  for (auto& c : f) c = F.mul(c, inv);
  return f;
}

ModPoly gcd(ModPoly a, ModPoly b, const Field& F) {
  while (!b.empty()) {
    ModPoly r = rem(a, b, F);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(std::move(a), F);
}

// s*a + t*b = 1 for coprime a, b.
void extended_gcd(const ModPoly& a, const ModPoly& b, const Field& F, ModPoly& s, ModPoly& t) {
  ModPoly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    ModPoly q, r;
    divmod(r0, r1, F, q, r);
    ModPoly s2 = sub(s0, mul(q, s1, F), F);
    ModPoly t2 = sub(t0, mul(q, t1, F), F);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (degree(r0) != 0) throw std::logic_error("extended_gcd: inputs not coprime mod p");
  const std::int64_t inv = F.inv(r0[0]);
  for (auto& c : s0) c = F.mul(c, inv);
  for (auto& c : t0) c = F.mul(c, inv);
  s = std::move(s0);
  t = std::move(t0);
}

ModPoly derivative(const ModPoly& f, const Field& F) {
  if (f.size() <= 1) return {};
  ModPoly d(f.size() - 1);
  for (std::size_t i = 1; i < f.size(); ++i) d[i - 1] = F.mul(f[i], F.reduce(static_cast<std::int64_t>(i)));
  trim(d);
  return d;
}

ModPoly powmod(ModPoly base, std::int64_t e, const ModPoly& modulus, const Field& F) {
  ModPoly result{1};
  base = rem(base, modulus, F);
  while (e > 0) {
    if (e & 1) result = rem(mul(result, base, F), modulus, F);
    base = rem(mul(base, base, F), modulus, F);
    e >>= 1;
  }
  return result;
}

// Null space of the d x d matrix A (row-major) over F_p.
std::vector<std::vector<std::int64_t>> null_space(std::vector<std::vector<std::int64_t>> a,
                                                  const Field& F) {
  const std::size_t n = a.size();
  std::vector<int> pivot_of_col(n, -1);
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < n; ++col) {
    std::size_t sel = row;
    while (sel < n && a[sel][col] == 0) ++sel;
    if (sel == n) continue;
    std::swap(a[sel], a[row]);
    const std::int64_t inv = F.inv(a[row][col]);
    for (auto& v : a[row]) v = F.mul(v, inv);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == row || a[r][col] == 0) continue;
      const std::int64_t factor = a[r][col];
      for (std::size_t c = 0; c < n; ++c) a[r][c] = F.reduce(a[r][c] - F.mul(factor, a[row][c]));
    }
    pivot_of_col[col] = static_cast<int>(row);
    ++row;
  }
  std::vector<std::vector<std::int64_t>> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (pivot_of_col[free] >= 0) continue;
    std::vector<std::int64_t> v(n, 0);
    v[free] = 1;
    for (std::size_t col = 0; col < n; ++col) {
      if (pivot_of_col[col] >= 0) v[col] = F.reduce(-a[pivot_of_col[col]][free]);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

// Berlekamp: monic irreducible factors of a monic squarefree f over F_p.
std::vector<ModPoly> berlekamp(const ModPoly& f, const Field& F) {
  const int d = degree(f);
  if (d <= 1) return {f};
  std::vector<ModPoly> q_rows(d);
  q_rows[0] = {1};
  const ModPoly xp = powmod(ModPoly{0, 1}, F.p, f, F);
  for (int i = 1; i < d; ++i) q_rows[i] = rem(mul(q_rows[i - 1], xp, F), f, F);

  // v(x)^p = v(x) mod f  <=>  (Q - I)^T v = 0.
  std::vector<std::vector<std::int64_t>> m(d, std::vector<std::int64_t>(d, 0));
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      const std::int64_t qij = j < static_cast<int>(q_rows[i].size()) ? q_rows[i][j] : 0;
      m[j][i] = F.reduce(qij - (i == j ? 1 : 0));
    }
  }
  const auto basis = null_space(std::move(m), F);
  const std::size_t r = basis.size();

  std::vector<ModPoly> factors{f};
  for (const auto& vec : basis) {
    if (factors.size() == r) break;
    ModPoly v(vec.begin(), vec.end());
    trim(v);
    if (degree(v) <= 0) continue;
    std::vector<ModPoly> next;
    for (const auto& g : factors) {
      if (degree(g) <= 1) {
        next.push_back(g);
        continue;
      }
      for (std::int64_t s = 0; s < F.p; ++s) {
        ModPoly h = gcd(g, sub(v, ModPoly{s}, F), F);
        if (degree(h) > 0) next.push_back(std::move(h));
      }
    }
    factors = std::move(next);
  }
  return factors;
}

// --------------------------------------------------- integer polys mod m

void reduce_mod(ZPoly& f, const Integer& m) {
  for (auto& c : f) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
  detail::trim(f);
}

void symmetric_mod(ZPoly& f, const Integer& m) {
  const Integer half = m / 2;
  for (auto& c : f) {
    mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    if (c > half) c -= m;
  }
  detail::trim(f);
}

ZPoly lift_from(const ModPoly& f) { return ZPoly(f.begin(), f.end()); }

ZPoly scaled_add(const ZPoly& a, const ModPoly& b, const Integer& scale) {
  ZPoly out = a;
  if (out.size() < b.size()) out.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += scale * b[i];
  detail::trim(out);
  return out;
}

// Lifts f = g*h (mod p), g monic, to f = g*h (mod p^k). h's leading
// coefficient is pinned to lc(f) so every correction has lower degree.
void hensel_lift(const ZPoly& f, ZPoly& g, ZPoly& h, const Field& F, unsigned k) {
  h.back() = f.back();
  ModPoly s, t;
  extended_gcd(reduce(g, F), reduce(h, F), F, s, t);
  Integer modulus = F.p;
  for (unsigned step = 1; step < k; ++step) {
    ZPoly diff = f;
    const ZPoly gh = detail::multiply(g, h);
    if (diff.size() < gh.size()) diff.resize(gh.size(), 0);
    for (std::size_t i = 0; i < gh.size(); ++i) diff[i] -= gh[i];
    for (auto& c : diff) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), modulus.get_mpz_t());
    detail::trim(diff);
    const ModPoly e = reduce(diff, F);
    ModPoly q, dg;
    divmod(mul(t, e, F), reduce(g, F), F, q, dg);
    const ModPoly dh = add(mul(s, e, F), mul(q, reduce(h, F), F), F);
    g = scaled_add(g, dg, modulus);
    h = scaled_add(h, dh, modulus);
    modulus *= F.p;
  }
}

bool is_prime_small(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// Irreducible factors over Z of a primitive squarefree f with positive
// leading coefficient and f(0) != 0, deg f >= 2.
std::vector<ZPoly> zassenhaus(const ZPoly& f) {
  const int n = detail::degree(f);
  const Integer& lc = f.back();

  // Smallest prime not dividing lc with f mod p squarefree.
  Field F{2};
  ModPoly fbar;
  for (std::int64_t p = 2;; ++p) {
    if (!is_prime_small(p)) continue;
    if (mpz_divisible_ui_p(lc.get_mpz_t(), static_cast<unsigned long>(p)) != 0) continue;
    F = Field{p};
    fbar = reduce(f, F);
    if (degree(gcd(fbar, derivative(fbar, F), F)) == 0) break;
  }
  std::vector<ModPoly> modular = berlekamp(monic(fbar, F), F);
  if (modular.size() == 1) return {f};
  std::sort(modular.begin(), modular.end());

  // Mignotte: any factor g of f has |g_j| <= 2^deg(g) ||f||_2. The
  // recombination reconstructs lc(f) * g / lc(g), whose coefficients are at
  // most |lc(f)| times that.
  Integer norm_sq = 0;
  for (const auto& c : f) norm_sq += c * c;
  Integer norm;
  mpz_sqrt(norm.get_mpz_t(), norm_sq.get_mpz_t());
  norm += 1;
  Integer bound = abs(lc) * norm;
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), static_cast<mp_bitcnt_t>(n));
  Integer modulus = F.p;
  unsigned k = 1;
  while (modulus <= 2 * bound) {
    modulus *= F.p;
    ++k;
  }

  // Peel factors off one at a time; `rest` tracks the unlifted cofactor.
  std::vector<ZPoly> lifted;
  ZPoly rest = f;
  for (std::size_t i = 0; i + 1 < modular.size(); ++i) {
    ModPoly cofactor{F.reduce(static_cast<std::int64_t>(
        mpz_fdiv_ui(rest.back().get_mpz_t(), static_cast<unsigned long>(F.p))))};
    for (std::size_t j = i + 1; j < modular.size(); ++j) cofactor = mul(cofactor, modular[j], F);
    ZPoly g = lift_from(modular[i]);
    ZPoly h = lift_from(cofactor);
    hensel_lift(rest, g, h, F, k);
    reduce_mod(g, modulus);
    reduce_mod(h, modulus);
    lifted.push_back(std::move(g));
    rest = std::move(h);
  }
  {
    Integer inv;
    mpz_invert(inv.get_mpz_t(), rest.back().get_mpz_t(), modulus.get_mpz_t());
    for (auto& c : rest) c *= inv;
    reduce_mod(rest, modulus);
    lifted.push_back(std::move(rest));
  }

  // Recombination by subsets of increasing size.
  std::vector<ZPoly> result;
  ZPoly remaining = f;
  std::size_t size = 1;
  while (2 * size <= lifted.size()) {
    bool found = false;
    std::vector<std::size_t> idx(size);
    for (std::size_t i = 0; i < size; ++i) idx[i] = i;
    while (true) {
      ZPoly candidate{remaining.back()};
      for (std::size_t i : idx) {
        candidate = detail::multiply(candidate, lifted[i]);
        reduce_mod(candidate, modulus);
      }
      symmetric_mod(candidate, modulus);
      candidate = detail::primitive_part(std::move(candidate));
      ZPoly quotient;
      if (detail::degree(candidate) > 0 && detail::divide_exact(remaining, candidate, quotient)) {
        result.push_back(candidate);
        remaining = detail::primitive_part(std::move(quotient));
        for (auto it = idx.rbegin(); it != idx.rend(); ++it) {
          lifted.erase(lifted.begin() + static_cast<std::ptrdiff_t>(*it));
        }
        found = true;
        break;
      }
      // Next combination in lexicographic order.
      std::size_t pos = size;
      while (pos > 0 && idx[pos - 1] == lifted.size() - size + pos - 1) --pos;
      if (pos == 0) break;
      ++idx[pos - 1];
      for (std::size_t j = pos; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!found) ++size;
  }
  if (detail::degree(remaining) > 0) result.push_back(std::move(remaining));
  return result;
}

std::vector<ZPoly> factor_squarefree_primitive(ZPoly f) {
  std::vector<ZPoly> out;
  if (f[0] == 0) {
    out.push_back(ZPoly{0, 1});
    f.erase(f.begin());
  }
  if (detail::degree(f) == 1) {
    out.push_back(std::move(f));
  } else if (detail::degree(f) > 1) {
    for (auto& g : zassenhaus(f)) out.push_back(std::move(g));
  }
  return out;
}

} // namespace

Factorization factor_over_q(const RationalPolynomial& p) {
  if (p.is_zero()) throw std::domain_error("factor_over_q of the zero polynomial");
  Factorization result;
  result.content = p.leading();
  for (const auto& [part, multiplicity] : squarefree_decomposition(p)) {
    for (const auto& g : factor_squarefree_primitive(detail::to_primitive_integer(part))) {
      result.factors.push_back({detail::to_rational(g).monic(), multiplicity});
    }
  }
  std::sort(result.factors.begin(), result.factors.end(), [](const Factor& a, const Factor& b) {
    return factor_order_less(a.polynomial, b.polynomial);
  });
  return result;
}

} // namespace dessinalg
