#include "dessinalg/linear_algebra.hpp"

#include "dessinalg/errors.hpp"

#include <stdexcept>

namespace dessinalg {

namespace {

Integer denominator_lcm(std::span<const Rational> v) {
  Integer lcm = 1;
  for (const auto& x : v) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den_mpz_t());
  return lcm;
}

} // namespace

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Rational(0)) {}

RationalMatrix RationalMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  RationalMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DegreeMismatch("matrix rows of unequal length");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

std::size_t RationalMatrix::rank() const {
  std::vector<std::vector<Integer>> m(rows_, std::vector<Integer>(cols_));
  for (std::size_t r = 0; r < rows_; ++r) {
    const Integer scale = denominator_lcm(std::span(entries_).subspan(r * cols_, cols_));
    for (std::size_t c = 0; c < cols_; ++c) m[r][c] = Integer((*this)(r, c) * scale);
  }
  Integer previous = 1;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows_ && m[pivot][col] == 0) ++pivot;
    if (pivot == rows_) continue;
    std::swap(m[pivot], m[rank]);
    const Integer& p = m[rank][col];
    for (std::size_t r = rank + 1; r < rows_; ++r) {
      for (std::size_t c = col + 1; c < cols_; ++c) {
        Integer value = p * m[r][c] - m[r][col] * m[rank][c];
        if (mpz_divisible_p(value.get_mpz_t(), previous.get_mpz_t()) == 0) {
          throw std::logic_error("Bareiss step lost exactness");
        }
        mpz_divexact(value.get_mpz_t(), value.get_mpz_t(), previous.get_mpz_t());
        m[r][c] = std::move(value);
      }
      m[r][col] = 0;
    }
    previous = p;
    ++rank;
  }
  return rank;
}

std::optional<std::vector<Rational>> DependencyFinder::add(std::span<const Rational> v) {
  const Integer scale = denominator_lcm(v);
  std::vector<Integer> w(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) w[i] = Integer(v[i] * scale);
  std::vector<Integer> comb(rows_.size() + 1, 0);
  comb.back() = 1;

  for (const auto& row : rows_) {
    if (row.entries.size() > w.size()) w.resize(row.entries.size(), 0);
    if (w[row.pivot] == 0) continue;
    Integer a = row.entries[row.pivot];
    Integer b = w[row.pivot];
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    a /= g;
    b /= g;
    for (std::size_t i = 0; i < w.size(); ++i) {
      w[i] *= a;
      if (i < row.entries.size()) w[i] -= b * row.entries[i];
    }
    for (std::size_t i = 0; i < comb.size(); ++i) {
      comb[i] *= a;
      if (i < row.combination.size()) comb[i] -= b * row.combination[i];
    }
    Integer content = 0;
    for (const auto& x : w) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), x.get_mpz_t());
    for (const auto& x : comb) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), x.get_mpz_t());
    if (content > 1) {
      for (auto& x : w) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), content.get_mpz_t());
      for (auto& x : comb) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), content.get_mpz_t());
    }
  }

  std::size_t pivot = 0;
  while (pivot < w.size() && w[pivot] == 0) ++pivot;
  if (pivot == w.size()) {
    // sum_i comb[i] * scales_[i] * accepted[i] + comb.back() * scale * v = 0
    std::vector<Rational> c(comb.size());
    for (std::size_t i = 0; i + 1 < comb.size(); ++i) c[i] = Rational(comb[i] * scales_[i]);
    c.back() = Rational(comb.back() * scale);
    const Rational lead = c.back();
    for (auto& x : c) x /= lead;
    return c;
  }
  rows_.push_back(Row{std::move(w), pivot, std::move(comb)});
  scales_.push_back(scale);
  return std::nullopt;
}

std::optional<std::vector<Rational>>
first_dependency(const std::vector<std::vector<Rational>>& vectors) {
  if (vectors.empty()) throw std::invalid_argument("first_dependency of an empty sequence");
  const std::size_t length = vectors.front().size();
  for (const auto& v : vectors) {
    if (v.size() != length) throw DegreeMismatch("first_dependency: vectors of unequal length");
  }
  DependencyFinder finder;
  for (const auto& v : vectors) {
    if (auto c = finder.add(v)) return c;
  }
  return std::nullopt;
}

} // namespace dessinalg
