#pragma once

#include "dessinalg/rational.hpp"

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dessinalg {

// Dense univariate polynomial over Q; coefficient i multiplies x^i. The zero
// polynomial has no coefficients, otherwise the leading coefficient is
// nonzero.
class RationalPolynomial {
public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<Rational> coefficients);
  RationalPolynomial(std::initializer_list<Rational> coefficients)
      : RationalPolynomial(std::vector<Rational>(coefficients)) {}

  static RationalPolynomial constant(const Rational& c);
  static RationalPolynomial monomial(const Rational& c, std::size_t degree);
  static RationalPolynomial x() { return monomial(1, 1); }

  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  // Zero beyond the degree.
  Rational coefficient(std::size_t i) const;
  const Rational& leading() const;
  bool is_monic() const { return !is_zero() && leading() == 1; }

  RationalPolynomial monic() const;
  RationalPolynomial derivative() const;
  Rational operator()(const Rational& at) const;

  RationalPolynomial& operator+=(const RationalPolynomial& rhs);
  RationalPolynomial& operator-=(const RationalPolynomial& rhs);
  RationalPolynomial& operator*=(const RationalPolynomial& rhs);
  RationalPolynomial& operator*=(const Rational& rhs);

  friend RationalPolynomial operator+(RationalPolynomial a, const RationalPolynomial& b) { return a += b; }
  friend RationalPolynomial operator-(RationalPolynomial a, const RationalPolynomial& b) { return a -= b; }
  friend RationalPolynomial operator*(RationalPolynomial a, const RationalPolynomial& b) { return a *= b; }
  friend RationalPolynomial operator*(const Rational& c, RationalPolynomial a) { return a *= c; }
  RationalPolynomial operator-() const;

  bool operator==(const RationalPolynomial&) const = default;

private:
  void trim();

  std::vector<Rational> coeffs_;
};

struct DivMod {
  RationalPolynomial quotient;
  RationalPolynomial remainder;
};

// Throws std::domain_error when the divisor is zero.
DivMod divide(const RationalPolynomial& dividend, const RationalPolynomial& divisor);
// Monic gcd; gcd(0, 0) = 0.
RationalPolynomial gcd(const RationalPolynomial& a, const RationalPolynomial& b);
RationalPolynomial power(const RationalPolynomial& p, unsigned exponent);

// All rational roots with multiplicity, ascending. Candidates come from the
// divisors of the trailing and leading coefficients of the primitive integer
// scaling; each root is confirmed by exact evaluation and deflated.
std::vector<Rational> rational_roots(const RationalPolynomial& p);

struct Factor {
  RationalPolynomial polynomial; // monic, irreducible over Q
  unsigned multiplicity = 1;
};

struct Factorization {
  Rational content; // leading coefficient of the input
  std::vector<Factor> factors;

  RationalPolynomial expand() const;
};

// Complete factorization over Q: squarefree decomposition, then Zassenhaus
// (factor mod a small prime, Hensel lift past the Mignotte bound, recombine
// subsets). Factors are ordered by degree, then by coefficient magnitudes
// from the constant term up, then by sign.
Factorization factor_over_q(const RationalPolynomial& p);

// Squarefree decomposition of a nonzero polynomial: monic, pairwise coprime,
// squarefree parts with p = lc * prod parts[i].first^parts[i].second.
std::vector<std::pair<RationalPolynomial, unsigned>>
squarefree_decomposition(const RationalPolynomial& p);

bool factor_order_less(const RationalPolynomial& a, const RationalPolynomial& b);

// Text forms. parse_polynomial accepts either "c0 + c1*x + c2*x^2 ..." (terms
// in any order, coefficients p/q, the '*' optional) or a bare coefficient list
// "c0,c1,...,ck".
RationalPolynomial parse_polynomial(std::string_view text);
// Coefficient list, "0" for the zero polynomial.
std::string format_coefficients(const RationalPolynomial& p);
// Human-readable descending form, e.g. "x^2 - 2x".
std::string format_polynomial(const RationalPolynomial& p);
// e.g. "2 * (x - 1) * (x + 1)"; factors of degree > 1 and unit content are
// written without redundant parentheses where unambiguous.
std::string format_factorization(const Factorization& f);

} // namespace dessinalg
