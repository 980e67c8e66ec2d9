#include "dessinalg/errors.hpp"
#include "dessinalg/formal_sum.hpp"
#include "dessinalg/linear_algebra.hpp"

namespace dessinalg {

RationalPolynomial minimal_polynomial(const FormalSum& a, const MinpolyCaps& caps) {
  if (caps.max_degree == 0 || caps.max_basis == 0) {
    throw std::invalid_argument("minimal polynomial caps must be positive");
  }
  // Coordinates over the union of supports seen so far; shorter (earlier)
  // vectors are zero-padded by DependencyFinder.
  std::map<IrreducibleDessin, std::size_t> index;
  DependencyFinder finder;
  ProductMemo memo;
  FormalSum power = FormalSum::unit();
  for (std::size_t k = 0;; ++k) {
    for (const auto& [d, c] : power.terms()) index.try_emplace(d, index.size());
    if (index.size() > caps.max_basis) {
      throw CapExceeded("minimal polynomial: support basis exceeded " +
                        std::to_string(caps.max_basis) + " dessins at power " + std::to_string(k));
    }
    std::vector<Rational> coords(index.size(), Rational(0));
    for (const auto& [d, c] : power.terms()) coords[index.at(d)] = c;
    if (auto dependency = finder.add(coords)) return RationalPolynomial(std::move(*dependency));
    if (k == caps.max_degree) {
      throw CapExceeded("minimal polynomial: degree exceeds " + std::to_string(caps.max_degree));
    }
    power = mul(power, a, &memo);
  }
}

} // namespace dessinalg
