#pragma once

#include "dessinalg/dessin.hpp"
#include "dessinalg/polynomial.hpp"
#include "dessinalg/rational.hpp"

#include <istream>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace dessinalg {

// A finite rational combination of irreducible dessins: an element of the
// ring D_Q. Zero coefficients are never stored, so the empty sum is zero and
// equality is exact.
class FormalSum {
public:
  using Terms = std::map<IrreducibleDessin, Rational>;

  FormalSum() = default;
  explicit FormalSum(const IrreducibleDessin& d, const Rational& c = 1);

  // 1 * [one-edge dessin].
  static FormalSum unit();

  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }
  std::size_t support_size() const { return terms_.size(); }
  // Zero for dessins outside the support.
  Rational coefficient(const IrreducibleDessin& d) const;

  void add_term(const IrreducibleDessin& d, const Rational& c);

  FormalSum& operator+=(const FormalSum& rhs);
  FormalSum& operator-=(const FormalSum& rhs);
  FormalSum& operator*=(const Rational& c);

  friend FormalSum operator+(FormalSum a, const FormalSum& b) { return a += b; }
  friend FormalSum operator-(FormalSum a, const FormalSum& b) { return a -= b; }
  friend FormalSum operator*(const Rational& c, FormalSum a) { return a *= c; }
  FormalSum operator-() const;

  bool operator==(const FormalSum&) const = default;
  auto operator<=>(const FormalSum& other) const { return terms_ <=> other.terms_; }

private:
  Terms terms_;
};

// The sum of the irreducible components of d, with multiplicity.
FormalSum from_dessin(const Dessin& d);

inline FormalSum add(const FormalSum& a, const FormalSum& b) { return a + b; }
inline FormalSum scale(const Rational& c, const FormalSum& a) { return c * a; }
inline FormalSum neg(const FormalSum& a) { return -a; }

// Basis products memoized for the lifetime of one computation. Not shared
// between threads.
class ProductMemo {
public:
  const FormalSum& product(const IrreducibleDessin& a, const IrreducibleDessin& b);
  std::size_t size() const { return table_.size(); }

private:
  std::map<std::pair<IrreducibleDessin, IrreducibleDessin>, FormalSum> table_;
};

// Bilinear extension of D * E = from_dessin(product(D, E)).
FormalSum mul(const FormalSum& a, const FormalSum& b, ProductMemo* memo = nullptr);

// Linear extension of D -> (1/6) sum over S3 of rho.D.
FormalSum pi_s3(const FormalSum& a);

// [unit, a, a^2, ..., a^k].
std::vector<FormalSum> power_sequence(const FormalSum& a, std::size_t k);

struct MinpolyCaps {
  std::size_t max_degree = 64;
  std::size_t max_basis = 100'000;
};

// Monic least-degree P with P(a) = 0, where constants act as multiples of the
// unit. Throws CapExceeded if the degree or the number of distinct dessins in
// the powers' supports passes the caps first.
RationalPolynomial minimal_polynomial(const FormalSum& a, const MinpolyCaps& caps = {});

// Horner evaluation in D_Q.
FormalSum evaluate(const RationalPolynomial& p, const FormalSum& a);

// The ring homomorphism D_Q -> Q sending each dessin to its edge count.
Rational edge_count_value(const FormalSum& a);

struct SplittingReport {
  IrreducibleDessin dessin;
  RationalPolynomial minimal_polynomial;
  std::vector<Rational> roots; // with multiplicity, ascending
  bool split = false;          // roots account for the whole degree
};

SplittingReport verify_linear_splitting(const IrreducibleDessin& d, const MinpolyCaps& caps = {});

// Text form: one "<rational> * <dessin line>" per line. Blank lines and
// lines starting with '#' are skipped; repeated dessins (after
// canonicalization and decomposition) accumulate.
FormalSum parse_formal_sum(std::istream& in);
FormalSum parse_formal_sum(const std::string& text);
std::string format_formal_sum(const FormalSum& a);

} // namespace dessinalg
