#include "doctest.h"

#include "dessinalg/errors.hpp"
#include "dessinalg/s3.hpp"
#include "oracles.hpp"

#include <algorithm>
#include <map>
#include <set>

using namespace dessinalg;
using dessinalg::testing::Rng;

namespace {

Dessin D(std::vector<Point> a, std::vector<Point> b) {
  return Dessin(Permutation(std::move(a)), Permutation(std::move(b)));
}

const Dessin kD2 = D({1, 0}, {0, 1});

} // namespace

TEST_CASE("dessin construction") {
  CHECK_THROWS_AS(D({0}, {1, 0}), DegreeMismatch);
  CHECK(Dessin::one().edges() == 1);
  CHECK(IrreducibleDessin::one().dessin() == Dessin::one());
  CHECK_THROWS_AS(IrreducibleDessin::from(D({0, 1}, {0, 1})), std::invalid_argument);
}

TEST_CASE("canonical form examples") {
  const auto c = canonicalize(kD2);
  CHECK(canonicalize(c) == c);
  CHECK(canonicalize(D({0, 1}, {1, 0})) != c);
  // A 3-cycle and its relabelled copy.
  CHECK(canonicalize(D({1, 2, 0}, {0, 1, 2})) == canonicalize(D({2, 0, 1}, {0, 1, 2})));
  // Reducible pairs canonicalize componentwise.
  CHECK(canonicalize(D({1, 0, 2}, {0, 1, 2})) == canonicalize(D({0, 2, 1}, {0, 1, 2})));
}

TEST_CASE("canonical form is a relabelling invariant") {
  Rng rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(trial % 8);
    const auto d = testing::random_dessin(n, rng);
    const auto q = testing::random_permutation(n, rng);
    const auto c = canonicalize(d);
    CHECK(canonicalize(relabel(d, q)) == c);
    CHECK(canonicalize(c) == c);
    if (n <= 6) CHECK(testing::conjugate_by_search(d, c));
  }
}

TEST_CASE("canonical forms separate classes for n <= 3") {
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto pairs = testing::all_pairs(n);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      const auto ci = canonicalize(pairs[i]);
      for (std::size_t j = i + 1; j < pairs.size(); ++j) {
        CHECK((ci == canonicalize(pairs[j])) == testing::conjugate_by_search(pairs[i], pairs[j]));
      }
    }
  }
}

TEST_CASE("irreducibility and decomposition") {
  CHECK(is_irreducible(kD2));
  CHECK_FALSE(is_irreducible(D({0, 1}, {0, 1})));
  const auto parts = decompose(D({0, 1}, {0, 1}));
  REQUIRE(parts.size() == 2);
  CHECK(parts[0] == IrreducibleDessin::one());
  CHECK(parts[1] == IrreducibleDessin::one());

  Rng rng(32);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(trial % 8);
    const auto d = testing::random_dessin(n, rng);
    const auto sizes = testing::component_sizes_union_find(d);
    CHECK(is_irreducible(d) == (sizes.size() == 1));
    const auto comps = decompose(d);
    CHECK(std::is_sorted(comps.begin(), comps.end()));
    std::vector<std::size_t> got;
    for (const auto& c : comps) got.push_back(c.edges());
    std::sort(got.begin(), got.end());
    CHECK(got == sizes);
    // Reassembling the components gives the same class.
    const auto q = testing::random_permutation(n, rng);
    CHECK(decompose(relabel(d, q)) == comps);
  }
}

TEST_CASE("product") {
  const auto sq = decompose(product(kD2, kD2));
  REQUIRE(sq.size() == 2);
  CHECK(sq[0].dessin() == canonicalize(kD2));
  CHECK(sq[1].dessin() == canonicalize(kD2));
  CHECK(product(kD2, Dessin::one()) == kD2);

  Rng rng(33);
  for (int trial = 0; trial < 100; ++trial) {
    const auto a = testing::random_dessin(1 + static_cast<std::size_t>(trial % 4), rng);
    const auto b = testing::random_dessin(1 + static_cast<std::size_t>(trial % 3), rng);
    const auto ab = product(a, b);
    CHECK(ab.edges() == a.edges() * b.edges());
    CHECK(canonicalize(ab) == canonicalize(product(b, a)));
    CHECK(canonicalize(product(Dessin::one(), a)) == canonicalize(a));
  }
}

TEST_CASE("branch triples and passports") {
  const auto t = to_triple(kD2);
  CHECK(t.sigma_inf == Permutation({1, 0}));
  CHECK(from_triple(t) == kD2);
  CHECK_THROWS_AS(from_triple({Permutation({1, 0}), Permutation({1, 0}), Permutation({1, 0})}),
                  std::invalid_argument);

  const auto p = passport(IrreducibleDessin::from(kD2));
  CHECK(format_passport(p) == "[2]|[1,1]|[2] genus=0 order=2");
  CHECK(format_passport(passport(IrreducibleDessin::one())) == "[1]|[1]|[1] genus=0 order=1");
  // (12)(34), (23) on 4 points generates a dihedral group of order 8.
  const auto square = IrreducibleDessin::from(D({1, 0, 3, 2}, {0, 2, 1, 3}));
  CHECK(passport(square).monodromy_order == 8u);
  CHECK_FALSE(passport(square, 4).monodromy_order.has_value());
  CHECK(format_passport(passport(square, 4)).ends_with("order=overflow"));

  Rng rng(34);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(trial % 7);
    const auto d = testing::random_irreducible_dessin(n, rng);
    const auto tr = to_triple(d);
    CHECK(compose(compose(tr.sigma0, tr.sigma1), tr.sigma_inf).is_identity());
    CHECK(from_triple(tr) == d);
    const auto pp = passport(IrreducibleDessin::from(d));
    const std::size_t c = tr.sigma0.cycle_count() + tr.sigma1.cycle_count() + tr.sigma_inf.cycle_count();
    CHECK(2 * pp.genus + c == n + 2);
    CHECK(pp.type0 == cycle_type(d.alpha()));
    CHECK(pp.type1 == cycle_type(d.beta()));
    // The order is divisible by n for a transitive group.
    REQUIRE(pp.monodromy_order.has_value());
    CHECK(*pp.monodromy_order % n == 0);
    CHECK(passport(IrreducibleDessin::from(relabel(d, testing::random_permutation(n, rng)))) == pp);
  }
}

TEST_CASE("dessin text form") {
  CHECK(format_dessin(kD2) == "n=2 a=1,0 b=0,1");
  CHECK(parse_dessin("n=2 a=1,0 b=0,1") == kD2);
  CHECK(parse_dessin("b=0,1  a=1,0 n=2") == kD2);
  CHECK_THROWS_AS(parse_dessin("n=3 a=1,0 b=0,1"), ParseError);
  CHECK_THROWS_AS(parse_dessin("n=2 a=1,1 b=0,1"), ParseError);
  CHECK_THROWS_AS(parse_dessin("n=2 a=1,0"), ParseError);
  CHECK_THROWS_AS(parse_dessin("n=2 a=1,0 b=0,1 c=0"), ParseError);
  Rng rng(35);
  for (int trial = 0; trial < 50; ++trial) {
    const auto d = testing::random_dessin(1 + static_cast<std::size_t>(trial % 8), rng);
    CHECK(parse_dessin(format_dessin(d)) == d);
  }
}

TEST_CASE("S3 elements") {
  const auto& all = S3Element::all();
  std::set<std::string_view> symbols;
  for (const auto& e : all) {
    symbols.insert(e.symbol());
    CHECK(S3Element::parse(e.symbol()) == e);
    CHECK(e * e.inverse() == S3Element::identity());
    for (const auto& f : all)
      for (const auto& g : all) CHECK((e * f) * g == e * (f * g));
  }
  CHECK(symbols.size() == 6);
  CHECK(S3Element::parse("swap01") == S3Element::swap01());
  CHECK(S3Element::parse("cycle-inverse") == S3Element::cycle_inverse());
  CHECK(S3Element::swap01() * S3Element::swap1inf() == S3Element::cycle());
  CHECK(S3Element::cycle().image(0) == 1);
  CHECK_THROWS_AS(S3Element::parse("(1 2)"), ParseError);
}

TEST_CASE("S3 action examples") {
  const auto d2 = canonicalize(kD2);
  CHECK(s3_apply(S3Element::identity(), kD2) == d2);
  CHECK(s3_apply(S3Element::swap01(), kD2) == canonicalize(D({0, 1}, {1, 0})));
  // swapping 1 and infinity fixes the alpha type and exchanges the others
  CHECK(s3_apply(S3Element::swap1inf(), kD2) == canonicalize(D({1, 0}, {1, 0})));
  CHECK(s3_orbit(kD2).size() == 3);
  CHECK(s3_orbit(Dessin::one()).size() == 1);
}

TEST_CASE("S3 action laws for n <= 3") {
  const auto& all = S3Element::all();
  for (std::size_t n = 1; n <= 3; ++n) {
    for (const auto& d : testing::all_pairs(n)) {
      for (const auto& rho : all) {
        const auto image = s3_apply(rho, d);
        for (const auto& tau : all) CHECK(s3_apply(rho * tau, d) == s3_apply(rho, s3_apply(tau, d)));
        const auto before = to_triple(d);
        const auto after = to_triple(image);
        const std::array<CycleType, 3> tb{cycle_type(before.sigma0), cycle_type(before.sigma1),
                                          cycle_type(before.sigma_inf)};
        const std::array<CycleType, 3> ta{cycle_type(after.sigma0), cycle_type(after.sigma1),
                                          cycle_type(after.sigma_inf)};
        for (int i = 0; i < 3; ++i) CHECK(ta[static_cast<std::size_t>(rho.image(i))] == tb[static_cast<std::size_t>(i)]);
      }
      CHECK(6 % s3_orbit(d).size() == 0);
    }
  }
}
