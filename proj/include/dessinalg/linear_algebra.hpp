#pragma once

#include "dessinalg/rational.hpp"

#include <optional>
#include <span>
#include <vector>

namespace dessinalg {

class RationalMatrix {
public:
  RationalMatrix(std::size_t rows, std::size_t cols);
  // Rows of equal length; throws DegreeMismatch otherwise.
  static RationalMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  // Bareiss fraction-free elimination on the integer scaling of each row.
  std::size_t rank() const;

private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Rational> entries_;
};

// Feeds vectors one at a time and reports the first one lying in the span of
// those accepted before it. Elimination is fraction-free: each stored row is
// a primitive integer vector together with the integer combination of the
// (integer-scaled) inputs that produces it; the first nonzero column is the
// pivot.
//
// Vectors may grow in length between calls; missing trailing entries of
// earlier vectors are zero.
class DependencyFinder {
public:
  // If v is independent of the accepted vectors it is accepted and nullopt is
  // returned. Otherwise v is not accepted and the result c (length rank()+1)
  // satisfies sum_i c[i] * accepted[i] + c.back() * v = 0 with c.back() = 1.
  std::optional<std::vector<Rational>> add(std::span<const Rational> v);

  std::size_t rank() const { return rows_.size(); }

private:
  struct Row {
    std::vector<Integer> entries;
    std::size_t pivot;
    std::vector<Integer> combination;
  };

  std::vector<Row> rows_;
  std::vector<Integer> scales_; // integer scaling applied to each accepted input
};

// Smallest k such that vectors[k] lies in the span of vectors[0..k-1], with
// the dependency coefficients c_0..c_k normalized to c_k = 1; nullopt if the
// whole sequence is independent. Throws DegreeMismatch on unequal lengths and
// std::invalid_argument on an empty sequence.
std::optional<std::vector<Rational>>
first_dependency(const std::vector<std::vector<Rational>>& vectors);

} // namespace dessinalg
