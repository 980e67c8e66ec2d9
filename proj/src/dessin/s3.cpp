#include "dessinalg/s3.hpp"

#include "dessinalg/errors.hpp"

#include <algorithm>
#include <string>

namespace dessinalg {

namespace {

enum class Generator { Swap01, Swap1Inf };

BranchTriple apply_generator(Generator g, const BranchTriple& t) {
  const Permutation& x = t.sigma0;
  const Permutation& y = t.sigma1;
  const Permutation& z = t.sigma_inf;
  if (g == Generator::Swap01) return {y, conjugate(x, y), z};
  // y z y^-1 is z conjugated by y^-1.
  return {x, conjugate(z, inverse(y)), y};
}

// Words in the generators, written left to right as a composition: the last
// letter acts first.
struct Entry {
  S3Element element;
  std::vector<Generator> word;
  std::string_view symbol;
  std::string_view name;
};

const std::array<Entry, 6>& table() {
  using G = Generator;
  static const std::array<Entry, 6> entries{{
      {S3Element::identity(), {}, "id", "id"},
      {S3Element::swap01(), {G::Swap01}, "(0 1)", "swap01"},
      {S3Element::swap1inf(), {G::Swap1Inf}, "(1 inf)", "swap1inf"},
      {S3Element::swap0inf(), {G::Swap01, G::Swap1Inf, G::Swap01}, "(0 inf)", "swap0inf"},
      {S3Element::cycle(), {G::Swap01, G::Swap1Inf}, "(0 1 inf)", "cycle"},
      {S3Element::cycle_inverse(), {G::Swap1Inf, G::Swap01}, "(0 inf 1)", "cycle-inverse"},
  }};
  return entries;
}

const Entry& lookup(const S3Element& e) {
  for (const auto& entry : table()) {
    if (entry.element == e) return entry;
  }
  throw std::logic_error("S3 element missing from table");
}

} // namespace

const std::array<S3Element, 6>& S3Element::all() {
  static const std::array<S3Element, 6> elements{identity(), swap01(),  swap1inf(),
                                                 swap0inf(), cycle(), cycle_inverse()};
  return elements;
}

S3Element S3Element::parse(std::string_view symbol) {
  for (const auto& entry : table()) {
    if (entry.symbol == symbol || entry.name == symbol) return entry.element;
  }
  throw ParseError("unknown S3 element '" + std::string(symbol) + "'");
}

std::string_view S3Element::symbol() const { return lookup(*this).symbol; }

S3Element S3Element::operator*(const S3Element& rhs) const {
  std::array<int, 3> out{};
  for (std::size_t i = 0; i < 3; ++i) out[i] = images_[static_cast<std::size_t>(rhs.images_[i])];
  return S3Element(out);
}

S3Element S3Element::inverse() const {
  std::array<int, 3> out{};
  for (std::size_t i = 0; i < 3; ++i) out[static_cast<std::size_t>(images_[i])] = static_cast<int>(i);
  return S3Element(out);
}

Dessin s3_apply(const S3Element& rho, const Dessin& d) {
  const auto& word = lookup(rho).word;
  BranchTriple t = to_triple(d);
  for (auto it = word.rbegin(); it != word.rend(); ++it) t = apply_generator(*it, t);
  return canonicalize(from_triple(t));
}

std::vector<Dessin> s3_orbit(const Dessin& d) {
  std::vector<Dessin> images;
  for (const auto& rho : S3Element::all()) images.push_back(s3_apply(rho, d));
  std::sort(images.begin(), images.end());
  images.erase(std::unique(images.begin(), images.end()), images.end());
  return images;
}

} // namespace dessinalg
