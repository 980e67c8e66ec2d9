#pragma once

#include "dessinalg/permutation.hpp"

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dessinalg {

// An ordered pair (alpha, beta) of permutations of the edge set {0..n-1}.
// Two dessins are the same object when they are simultaneously conjugate;
// canonicalize() picks one representative per class.
class Dessin {
public:
  // Throws DegreeMismatch when the degrees differ.
  Dessin(Permutation alpha, Permutation beta);

  // The dessin with a single edge; the unit of the product.
  static Dessin one();

  std::size_t edges() const { return alpha_.degree(); }
  const Permutation& alpha() const { return alpha_; }
  const Permutation& beta() const { return beta_; }

  // Ordered by edge count, then alpha images, then beta images. On canonical
  // forms this is the order of canonical encodings.
  std::strong_ordering operator<=>(const Dessin& other) const;
  bool operator==(const Dessin&) const = default;

private:
  Permutation alpha_;
  Permutation beta_;
};

bool is_irreducible(const Dessin& d);

// Canonical representative of the relabelling class of d.
//
// Connected case: for each start edge, label edges in breadth-first discovery
// order (following alpha, then beta, from each discovered edge) and keep the
// lexicographically smallest relabelled (alpha, beta). Disconnected case:
// canonicalize the components, sort them, and lay them out on consecutive
// label ranges.
Dessin canonicalize(const Dessin& d);

// Relabels d by q: edge i becomes q(i). The result is conjugate to d.
Dessin relabel(const Dessin& d, const Permutation& q);

// A connected dessin in canonical form. Only constructible through from(),
// which checks transitivity and canonicalizes.
class IrreducibleDessin {
public:
  // Throws std::invalid_argument if d is not transitive.
  static IrreducibleDessin from(const Dessin& d);
  static IrreducibleDessin one();

  const Dessin& dessin() const { return dessin_; }
  std::size_t edges() const { return dessin_.edges(); }

  auto operator<=>(const IrreducibleDessin&) const = default;
  bool operator==(const IrreducibleDessin&) const = default;

private:
  explicit IrreducibleDessin(Dessin canonical) : dessin_(std::move(canonical)) {}

  Dessin dessin_;
};

// Irreducible components of d, sorted; edge counts sum to d.edges().
std::vector<IrreducibleDessin> decompose(const Dessin& d);

// Cartesian product; edge (i, j) is labelled i * n2 + j.
Dessin product(const Dessin& d1, const Dessin& d2);

// Monodromy at the three branch points, in the order 0, 1, infinity. The
// library-wide convention is sigma0 = alpha, sigma1 = beta and
// sigmaInf = (alpha beta)^-1, so compose(sigma0, compose(sigma1, sigmaInf))
// is the identity.
struct BranchTriple {
  Permutation sigma0;
  Permutation sigma1;
  Permutation sigma_inf;
};

BranchTriple to_triple(const Dessin& d);
// Throws std::invalid_argument unless the triple has product one.
Dessin from_triple(const BranchTriple& t);

inline constexpr std::uint64_t kDefaultGroupOrderCap = 1'000'000;

struct Passport {
  CycleType type0;
  CycleType type1;
  CycleType type_inf;
  std::size_t genus = 0;
  // nullopt when the monodromy group exceeded the order cap.
  std::optional<std::uint64_t> monodromy_order;

  auto operator<=>(const Passport&) const = default;
  bool operator==(const Passport&) const = default;
};

// Genus from 2 - 2g = c(sigma0) + c(sigma1) + c(sigmaInf) - n.
Passport passport(const IrreducibleDessin& d,
                  std::uint64_t order_cap = kDefaultGroupOrderCap);
std::string format_passport(const Passport& p);

// Text form: "n=<N> a=<images> b=<images>", e.g. "n=2 a=1,0 b=0,1".
Dessin parse_dessin(std::string_view line);
std::string format_dessin(const Dessin& d);

} // namespace dessinalg
