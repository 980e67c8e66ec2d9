#include "dessinalg/polynomial.hpp"

#include "dessinalg/errors.hpp"
#include "integer_poly.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <stdexcept>

namespace dessinalg {

RationalPolynomial::RationalPolynomial(std::vector<Rational> coefficients)
    : coeffs_(std::move(coefficients)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

RationalPolynomial RationalPolynomial::constant(const Rational& c) { return RationalPolynomial({c}); }

RationalPolynomial RationalPolynomial::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> coeffs(degree + 1, 0);
  coeffs[degree] = c;
  return RationalPolynomial(std::move(coeffs));
}

void RationalPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational RationalPolynomial::coefficient(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Rational(0);
}

const Rational& RationalPolynomial::leading() const {
  if (coeffs_.empty()) throw std::domain_error("zero polynomial has no leading coefficient");
  return coeffs_.back();
}

RationalPolynomial RationalPolynomial::monic() const {
  if (is_zero()) return *this;
  RationalPolynomial out = *this;
  const Rational lead = leading();
  for (auto& c : out.coeffs_) c /= lead;
  return out;
}

RationalPolynomial RationalPolynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return RationalPolynomial(std::move(d));
}

Rational RationalPolynomial::operator()(const Rational& at) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

RationalPolynomial& RationalPolynomial::operator+=(const RationalPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0);
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

RationalPolynomial& RationalPolynomial::operator-=(const RationalPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0);
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

RationalPolynomial& RationalPolynomial::operator*=(const RationalPolynomial& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + rhs.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

RationalPolynomial& RationalPolynomial::operator*=(const Rational& rhs) {
  if (rhs == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= rhs;
  return *this;
}

RationalPolynomial RationalPolynomial::operator-() const {
  RationalPolynomial out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

DivMod divide(const RationalPolynomial& dividend, const RationalPolynomial& divisor) {
  if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> rem = dividend.coefficients();
  const int dd = divisor.degree();
  if (dividend.degree() < dd) return {RationalPolynomial(), dividend};
  std::vector<Rational> quot(rem.size() - divisor.coefficients().size() + 1, 0);
  const Rational& lead = divisor.leading();
  const auto& dc = divisor.coefficients();
  for (int k = dividend.degree() - dd; k >= 0; --k) {
    const Rational q = rem[k + dd] / lead;
    if (q == 0) continue;
    quot[k] = q;
    for (int j = 0; j <= dd; ++j) rem[k + j] -= q * dc[j];
  }
  return {RationalPolynomial(std::move(quot)), RationalPolynomial(std::move(rem))};
}

RationalPolynomial gcd(const RationalPolynomial& a, const RationalPolynomial& b) {
  RationalPolynomial x = a.monic();
  RationalPolynomial y = b.monic();
  while (!y.is_zero()) {
    RationalPolynomial r = divide(x, y).remainder.monic();
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

RationalPolynomial power(const RationalPolynomial& p, unsigned exponent) {
  RationalPolynomial out = RationalPolynomial::constant(1);
  for (unsigned i = 0; i < exponent; ++i) out *= p;
  return out;
}

std::vector<Rational> rational_roots(const RationalPolynomial& p) {
  if (p.is_zero()) throw std::domain_error("rational_roots of the zero polynomial");
  std::vector<Rational> roots;
  detail::ZPoly f = detail::to_primitive_integer(p);
  std::size_t zeros = 0;
  while (zeros < f.size() && f[zeros] == 0) ++zeros;
  roots.assign(zeros, Rational(0));
  f.erase(f.begin(), f.begin() + static_cast<std::ptrdiff_t>(zeros));
  if (detail::degree(f) < 1) return roots;

  // Every rational root a/b in lowest terms has a | f(0) and b | lc(f), and
  // lies within the Cauchy bound 1 + max|f_i / lc|.
  Rational bound = 0;
  for (std::size_t i = 0; i + 1 < f.size(); ++i) {
    Rational ratio(abs(f[i]), abs(f.back()));
    ratio.canonicalize();
    if (ratio > bound) bound = ratio;
  }
  bound += 1;

  std::vector<Rational> candidates;
  const auto numerators = positive_divisors(f.front());
  const auto denominators = positive_divisors(f.back());
  for (const auto& b : denominators) {
    for (const auto& a : numerators) {
      Integer g;
      mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      if (g != 1) continue;
      Rational r(a, b);
      if (r > bound) continue;
      candidates.push_back(r);
      candidates.push_back(-r);
    }
  }
  std::sort(candidates.begin(), candidates.end());

  RationalPolynomial rest = detail::to_rational(f);
  const RationalPolynomial x = RationalPolynomial::x();
  for (const auto& r : candidates) {
    while (rest.degree() >= 1 && rest(r) == 0) {
      roots.push_back(r);
      rest = divide(rest, x - RationalPolynomial::constant(r)).quotient;
    }
    if (rest.degree() < 1) break;
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::vector<std::pair<RationalPolynomial, unsigned>>
squarefree_decomposition(const RationalPolynomial& p) {
  if (p.is_zero()) throw std::domain_error("squarefree decomposition of the zero polynomial");
  std::vector<std::pair<RationalPolynomial, unsigned>> parts;
  const RationalPolynomial f = p.monic();
  if (f.degree() == 0) return parts;
  // Yun's algorithm.
  const RationalPolynomial df = f.derivative();
  const RationalPolynomial a0 = gcd(f, df);
  RationalPolynomial b = divide(f, a0).quotient;
  RationalPolynomial c = divide(df, a0).quotient;
  RationalPolynomial d = c - b.derivative();
  for (unsigned i = 1; b.degree() > 0; ++i) {
    RationalPolynomial a = gcd(b, d);
    if (a.degree() > 0) parts.emplace_back(a, i);
    b = divide(b, a).quotient;
    c = divide(d, a).quotient;
    d = c - b.derivative();
  }
  return parts;
}

bool factor_order_less(const RationalPolynomial& a, const RationalPolynomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  const auto& ac = a.coefficients();
  const auto& bc = b.coefficients();
  for (std::size_t i = 0; i < ac.size(); ++i) {
    const Rational abs_a = abs(ac[i]);
    const Rational abs_b = abs(bc[i]);
    const int cmp_abs = cmp(abs_a, abs_b);
    if (cmp_abs != 0) return cmp_abs < 0;
  }
  return ac < bc;
}

RationalPolynomial Factorization::expand() const {
  RationalPolynomial out = RationalPolynomial::constant(content);
  for (const auto& f : factors) out *= power(f.polynomial, f.multiplicity);
  return out;
}

// ---------------------------------------------------------------- text forms

namespace {

std::string strip_spaces(std::string_view text) {
  std::string out;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  }
  return out;
}

RationalPolynomial parse_terms(const std::string& s) {
  std::vector<Rational> coeffs;
  std::size_t pos = 0;
  auto fail = [&](const std::string& why) -> ParseError {
    return ParseError("bad polynomial '" + s + "': " + why);
  };
  bool first = true;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (!first) {
      throw fail("expected '+' or '-'");
    }
    first = false;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
      if (s[pos] == '-') sign = -sign;
      ++pos;
    }

    std::optional<Rational> coeff;
    if (pos < s.size() && s[pos] == '(') {
      const auto close = s.find(')', pos);
      if (close == std::string::npos) throw fail("unbalanced parenthesis");
      coeff = parse_rational(std::string_view(s).substr(pos + 1, close - pos - 1));
      pos = close + 1;
    } else if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      std::size_t end = pos;
      while (end < s.size() && (std::isdigit(static_cast<unsigned char>(s[end])) || s[end] == '/')) ++end;
      coeff = parse_rational(std::string_view(s).substr(pos, end - pos));
      pos = end;
    }
    if (coeff && pos < s.size() && s[pos] == '*') ++pos;

    std::size_t exponent = 0;
    if (pos < s.size() && s[pos] == 'x') {
      ++pos;
      exponent = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        std::size_t end = pos;
        while (end < s.size() && std::isdigit(static_cast<unsigned char>(s[end]))) ++end;
        if (end == pos) throw fail("missing exponent");
        exponent = std::stoul(s.substr(pos, end - pos));
        pos = end;
      }
    } else if (!coeff) {
      throw fail("empty term");
    }
    if (coeffs.size() <= exponent) coeffs.resize(exponent + 1, 0);
    coeffs[exponent] += Rational(sign) * coeff.value_or(Rational(1));
  }
  return RationalPolynomial(std::move(coeffs));
}

} // namespace

RationalPolynomial parse_polynomial(std::string_view text) {
  const std::string s = strip_spaces(text);
  if (s.empty()) throw ParseError("empty polynomial");
  if (s.find('x') == std::string::npos && s.find(',') != std::string::npos) {
    std::vector<Rational> coeffs;
    std::size_t pos = 0;
    while (true) {
      const auto comma = s.find(',', pos);
      coeffs.push_back(parse_rational(std::string_view(s).substr(
          pos, comma == std::string::npos ? std::string::npos : comma - pos)));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    return RationalPolynomial(std::move(coeffs));
  }
  return parse_terms(s);
}

std::string format_coefficients(const RationalPolynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < p.coefficients().size(); ++i) {
    if (i) out += ',';
    out += format_rational(p.coefficients()[i]);
  }
  return out;
}

std::string format_polynomial(const RationalPolynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto& c = p.coefficients();
  for (std::size_t k = c.size(); k-- > 0;) {
    if (c[k] == 0) continue;
    const bool negative = c[k] < 0;
    if (out.empty()) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    const Rational a = abs(c[k]);
    if (k == 0) {
      out += format_rational(a);
      continue;
    }
    if (a != 1) {
      out += format_rational(a);
      if (a.get_den() != 1) out += '*';
    }
    out += 'x';
    if (k > 1) out += '^' + std::to_string(k);
  }
  return out;
}

std::string format_factorization(const Factorization& f) {
  std::vector<std::string> parts;
  if (f.factors.empty() || f.content != 1) {
    if (f.content == -1 && !f.factors.empty()) {
      parts.emplace_back("-1");
    } else {
      parts.push_back(format_rational(f.content));
    }
  }
  for (const auto& factor : f.factors) {
    std::string text = format_polynomial(factor.polynomial);
    const bool bare = factor.polynomial == RationalPolynomial::x();
    if (!bare) text = "(" + text + ")";
    if (factor.multiplicity > 1) text += "^" + std::to_string(factor.multiplicity);
    parts.push_back(std::move(text));
  }
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += " * ";
    out += parts[i];
  }
  return out;
}

} // namespace dessinalg
