#include "dessinalg/formal_sum.hpp"

#include "dessinalg/errors.hpp"
#include "dessinalg/s3.hpp"

#include <sstream>

namespace dessinalg {

FormalSum::FormalSum(const IrreducibleDessin& d, const Rational& c) { add_term(d, c); }

FormalSum FormalSum::unit() { return FormalSum(IrreducibleDessin::one()); }

Rational FormalSum::coefficient(const IrreducibleDessin& d) const {
  const auto it = terms_.find(d);
  return it == terms_.end() ? Rational(0) : it->second;
}

void FormalSum::add_term(const IrreducibleDessin& d, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(d, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

FormalSum& FormalSum::operator+=(const FormalSum& rhs) {
  for (const auto& [d, c] : rhs.terms_) add_term(d, c);
  return *this;
}

FormalSum& FormalSum::operator-=(const FormalSum& rhs) {
  for (const auto& [d, c] : rhs.terms_) add_term(d, -c);
  return *this;
}

FormalSum& FormalSum::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [d, coeff] : terms_) coeff *= c;
  return *this;
}

FormalSum FormalSum::operator-() const {
  FormalSum out = *this;
  for (auto& [d, c] : out.terms_) c = -c;
  return out;
}

FormalSum from_dessin(const Dessin& d) {
  FormalSum out;
  for (const auto& part : decompose(d)) out.add_term(part, 1);
  return out;
}

const FormalSum& ProductMemo::product(const IrreducibleDessin& a, const IrreducibleDessin& b) {
  auto key = a < b ? std::make_pair(a, b) : std::make_pair(b, a);
  auto it = table_.find(key);
  if (it == table_.end()) {
    FormalSum value = from_dessin(dessinalg::product(a.dessin(), b.dessin()));
    it = table_.emplace(std::move(key), std::move(value)).first;
  }
  return it->second;
}

FormalSum mul(const FormalSum& a, const FormalSum& b, ProductMemo* memo) {
  ProductMemo local;
  ProductMemo& table = memo ? *memo : local;
  FormalSum out;
  for (const auto& [d, c] : a.terms()) {
    for (const auto& [e, k] : b.terms()) {
      const Rational weight = c * k;
      for (const auto& [part, m] : table.product(d, e).terms()) out.add_term(part, weight * m);
    }
  }
  return out;
}

FormalSum pi_s3(const FormalSum& a) {
  FormalSum out;
  const Rational sixth(1, 6);
  for (const auto& [d, c] : a.terms()) {
    const Rational weight = c * sixth;
    for (const auto& rho : S3Element::all()) {
      out.add_term(IrreducibleDessin::from(s3_apply(rho, d.dessin())), weight);
    }
  }
  return out;
}

std::vector<FormalSum> power_sequence(const FormalSum& a, std::size_t k) {
  std::vector<FormalSum> powers{FormalSum::unit()};
  ProductMemo memo;
  for (std::size_t i = 0; i < k; ++i) powers.push_back(mul(powers.back(), a, &memo));
  return powers;
}

FormalSum evaluate(const RationalPolynomial& p, const FormalSum& a) {
  FormalSum acc;
  ProductMemo memo;
  const auto& c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc = mul(acc, a, &memo);
    acc.add_term(IrreducibleDessin::one(), *it);
  }
  return acc;
}

Rational edge_count_value(const FormalSum& a) {
  Rational total = 0;
  for (const auto& [d, c] : a.terms()) total += c * static_cast<unsigned long>(d.edges());
  return total;
}

SplittingReport verify_linear_splitting(const IrreducibleDessin& d, const MinpolyCaps& caps) {
  SplittingReport report{d, minimal_polynomial(FormalSum(d), caps), {}, false};
  report.roots = rational_roots(report.minimal_polynomial);
  report.split = static_cast<int>(report.roots.size()) == report.minimal_polynomial.degree();
  return report;
}

FormalSum parse_formal_sum(std::istream& in) {
  FormalSum out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto star = line.find('*');
    if (star == std::string::npos) throw ParseError(line_no, "expected '<rational> * <dessin>'");
    try {
      const Rational c = parse_rational(std::string_view(line).substr(0, star));
      const Dessin d = parse_dessin(std::string_view(line).substr(star + 1));
      out += c * from_dessin(d);
    } catch (const ParseError& e) {
      throw ParseError(line_no, e.what());
    }
  }
  return out;
}

FormalSum parse_formal_sum(const std::string& text) {
  std::istringstream in(text);
  return parse_formal_sum(in);
}

std::string format_formal_sum(const FormalSum& a) {
  std::string out;
  for (const auto& [d, c] : a.terms()) {
    out += format_rational(c) + " * " + format_dessin(d.dessin()) + "\n";
  }
  return out;
}

} // namespace dessinalg
