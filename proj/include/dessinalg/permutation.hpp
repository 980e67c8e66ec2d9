#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dessinalg {

using Point = std::uint32_t;

// A bijection of {0..n-1}. images()[i] is the image of point i.
//
// Composition convention, used everywhere in the library: compose(p, q) maps
// i to p(q(i)), i.e. the right operand is applied first.
class Permutation {
public:
  // Throws std::invalid_argument unless `images` is a bijection of {0..n-1}
  // with n >= 1.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t n);
  // Builds a permutation of degree n from disjoint cycles, e.g.
  // from_cycles(5, {{0, 1}, {2, 3, 4}}).
  static Permutation from_cycles(std::size_t n,
                                 const std::vector<std::vector<Point>>& cycles);

  std::size_t degree() const { return images_.size(); }
  Point operator()(Point i) const { return images_[i]; }
  std::span<const Point> images() const { return images_; }
  bool is_identity() const;

  std::vector<std::vector<Point>> cycles() const;
  std::size_t cycle_count() const;

  auto operator<=>(const Permutation&) const = default;
  bool operator==(const Permutation&) const = default;

private:
  struct Unchecked {};
  Permutation(std::vector<Point> images, Unchecked) : images_(std::move(images)) {}

  friend Permutation compose(const Permutation&, const Permutation&);
  friend Permutation inverse(const Permutation&);

  std::vector<Point> images_;
};

// Throws DegreeMismatch when degrees differ.
Permutation compose(const Permutation& p, const Permutation& q);
Permutation inverse(const Permutation& p);
// q^-1 p q, i.e. compose(inverse(q), compose(p, q)).
Permutation conjugate(const Permutation& p, const Permutation& q);

// Cycle lengths including fixed points, non-increasing.
struct CycleType {
  std::vector<std::size_t> parts;

  std::size_t total() const;
  std::size_t count() const { return parts.size(); }

  auto operator<=>(const CycleType&) const = default;
  bool operator==(const CycleType&) const = default;
};

CycleType cycle_type(const Permutation& p);
std::string format_cycle_type(const CycleType& t);

// Partition of {0..n-1} into orbits of the group generated by `generators`.
// Blocks are sorted and listed by smallest element.
std::vector<std::vector<Point>> orbits(std::span<const Permutation> generators,
                                       std::size_t n);

// Order of the group generated by `generators`, or std::nullopt if the closure
// exceeds `cap` elements.
std::optional<std::uint64_t> group_order(std::span<const Permutation> generators,
                                         std::size_t n, std::uint64_t cap);

// Text form: comma-separated image list, e.g. "1,0,2".
Permutation parse_permutation(std::string_view text);
std::string format_permutation(const Permutation& p);

} // namespace dessinalg
