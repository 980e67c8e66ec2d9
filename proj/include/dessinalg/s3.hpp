#pragma once

#include "dessinalg/dessin.hpp"

#include <array>
#include <string_view>
#include <vector>

namespace dessinalg {

// An element of S3 acting on the branch-point positions 0, 1, 2 (= infinity).
// image(i) is where position i is sent; (a * b) applies b first.
class S3Element {
public:
  static S3Element identity() { return S3Element({0, 1, 2}); }
  static S3Element swap01() { return S3Element({1, 0, 2}); }
  static S3Element swap1inf() { return S3Element({0, 2, 1}); }
  static S3Element swap0inf() { return S3Element({2, 1, 0}); }
  // 0 -> 1 -> inf -> 0
  static S3Element cycle() { return S3Element({1, 2, 0}); }
  // 0 -> inf -> 1 -> 0
  static S3Element cycle_inverse() { return S3Element({2, 0, 1}); }

  static const std::array<S3Element, 6>& all();

  // Accepts the cycle symbols "id", "(0 1)", "(1 inf)", "(0 inf)",
  // "(0 1 inf)", "(0 inf 1)" and the names "swap01", "swap1inf", "swap0inf",
  // "cycle", "cycle-inverse". Throws ParseError otherwise.
  static S3Element parse(std::string_view symbol);
  std::string_view symbol() const;

  int image(int position) const { return images_[static_cast<std::size_t>(position)]; }
  S3Element operator*(const S3Element& rhs) const;
  S3Element inverse() const;

  bool operator==(const S3Element&) const = default;

private:
  explicit S3Element(std::array<int, 3> images) : images_(images) {}

  std::array<int, 3> images_;
};

// The generators act on product-one triples (x, y, z) by
//   swap01:   (x, y, z) -> (y, y^-1 x y, z)
//   swap1inf: (x, y, z) -> (x, y z y^-1, y)
// and a general element acts through a word in them. The cycle type at
// position rho(i) of rho.d is the cycle type at position i of d. The result
// is canonical.
Dessin s3_apply(const S3Element& rho, const Dessin& d);

// Distinct canonical images of d under S3, sorted. Size divides 6.
std::vector<Dessin> s3_orbit(const Dessin& d);

} // namespace dessinalg
