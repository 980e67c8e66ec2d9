#include "doctest.h"

#include "dessinalg/errors.hpp"
#include "dessinalg/linear_algebra.hpp"
#include "dessinalg/s3.hpp"
#include "oracles.hpp"

#include <algorithm>
#include <map>

using namespace dessinalg;
using dessinalg::testing::Rng;

namespace {

IrreducibleDessin I(std::vector<Point> a, std::vector<Point> b) {
  return IrreducibleDessin::from(Dessin(Permutation(std::move(a)), Permutation(std::move(b))));
}

const IrreducibleDessin kD2 = I({1, 0}, {0, 1});

std::vector<IrreducibleDessin> small_pool(std::size_t max_edges) {
  std::vector<IrreducibleDessin> pool;
  for (std::size_t n = 1; n <= max_edges; ++n) {
    for (const auto& d : testing::irreducible_classes_by_search(n)) pool.push_back(IrreducibleDessin::from(d));
  }
  return pool;
}

// Rank of the coordinate vectors of the given sums.
std::size_t rank_of(const std::vector<FormalSum>& sums) {
  std::map<IrreducibleDessin, std::size_t> index;
  for (const auto& s : sums)
    for (const auto& [d, c] : s.terms()) index.try_emplace(d, index.size());
  std::vector<std::vector<Rational>> rows;
  for (const auto& s : sums) {
    std::vector<Rational> row(index.size(), Rational(0));
    for (const auto& [d, c] : s.terms()) row[index.at(d)] = c;
    rows.push_back(std::move(row));
  }
  if (index.empty()) return 0;
  return RationalMatrix::from_rows(rows).rank();
}

std::size_t fixed_points(const Permutation& g) {
  std::size_t count = 0;
  for (Point i = 0; i < g.degree(); ++i) count += g(i) == i;
  return count;
}

} // namespace

TEST_CASE("formal sum basics") {
  FormalSum s;
  CHECK(s.is_zero());
  s.add_term(kD2, 3);
  s.add_term(kD2, -3);
  CHECK(s.is_zero());
  CHECK(FormalSum(kD2, 0).is_zero());
  const FormalSum a(kD2, Rational(1, 2));
  CHECK(a.coefficient(kD2) == Rational(1, 2));
  CHECK(a.coefficient(IrreducibleDessin::one()) == 0);
  CHECK((a - a).is_zero());
  CHECK(a + a == FormalSum(kD2, 1));
  CHECK(-a == Rational(-1) * a);
  CHECK(from_dessin(Dessin(Permutation({0, 1}), Permutation({0, 1}))) == Rational(2) * FormalSum::unit());
}

TEST_CASE("product examples") {
  const FormalSum d2(kD2);
  CHECK(mul(d2, d2) == Rational(2) * d2);
  CHECK(mul(d2, FormalSum::unit()) == d2);
  CHECK(mul(d2, FormalSum()).is_zero());
  ProductMemo memo;
  CHECK(memo.product(kD2, kD2) == Rational(2) * d2);
  CHECK(memo.size() == 1);
}

TEST_CASE("ring axioms on random sums") {
  const auto pool = small_pool(3);
  Rng rng(41);
  ProductMemo memo;
  const FormalSum one = FormalSum::unit();
  for (int trial = 0; trial < 60; ++trial) {
    const auto a = testing::random_sum(pool, 3, rng);
    const auto b = testing::random_sum(pool, 3, rng);
    const auto c = testing::random_sum(pool, 2, rng);
    CHECK(mul(mul(a, b, &memo), c, &memo) == mul(a, mul(b, c, &memo), &memo));
    CHECK(mul(a, b, &memo) == mul(b, a, &memo));
    CHECK(mul(a, b + c, &memo) == mul(a, b, &memo) + mul(a, c, &memo));
    CHECK(mul(a, one, &memo) == a);
    CHECK(mul(a, FormalSum(), &memo).is_zero());
    CHECK((a + b) + c == a + (b + c));
    CHECK(a + b == b + a);
    CHECK((a + FormalSum()) == a);
    CHECK(edge_count_value(mul(a, b, &memo)) == edge_count_value(a) * edge_count_value(b));
  }
}

TEST_CASE("minimal polynomial examples") {
  const auto x = RationalPolynomial::x();
  CHECK(minimal_polynomial(FormalSum()) == x);
  CHECK(minimal_polynomial(FormalSum::unit()) == RationalPolynomial({-1, 1}));
  CHECK(minimal_polynomial(Rational(5, 2) * FormalSum::unit()) == RationalPolynomial({Rational(-5, 2), 1}));
  CHECK(minimal_polynomial(FormalSum(kD2)) == RationalPolynomial({0, -2, 1}));
  // D2 - 1 satisfies (y + 1)^2 = 2(y + 1), i.e. y^2 - 1.
  CHECK(minimal_polynomial(FormalSum(kD2) - FormalSum::unit()) == RationalPolynomial({-1, 0, 1}));
  CHECK_THROWS_AS(minimal_polynomial(FormalSum(kD2), MinpolyCaps{1, 100}), CapExceeded);
  CHECK_THROWS_AS(minimal_polynomial(FormalSum(kD2), MinpolyCaps{8, 1}), CapExceeded);
}

TEST_CASE("minimal polynomials annihilate and are minimal") {
  const auto pool = small_pool(3);
  Rng rng(42);
  for (int trial = 0; trial < 40; ++trial) {
    const auto a = testing::random_sum(pool, 1 + static_cast<std::size_t>(trial % 3), rng);
    const auto p = minimal_polynomial(a);
    CHECK(p.is_monic());
    CHECK(evaluate(p, a).is_zero());
    const auto powers = power_sequence(a, static_cast<std::size_t>(p.degree()) - 1);
    CHECK(rank_of(powers) == static_cast<std::size_t>(p.degree()));
    // The squarefree property of the ring: no repeated factors.
    CHECK(gcd(p, p.derivative()).degree() == 0);
  }
}

TEST_CASE("evaluate") {
  const FormalSum d2(kD2);
  CHECK(evaluate(RationalPolynomial({0, -2, 1}), d2).is_zero());
  CHECK(evaluate(RationalPolynomial({3}), d2) == Rational(3) * FormalSum::unit());
  CHECK(evaluate(RationalPolynomial(), d2).is_zero());
  CHECK(evaluate(RationalPolynomial({1, 1}), d2) == d2 + FormalSum::unit());
}

TEST_CASE("pi_s3") {
  const auto avg = pi_s3(FormalSum(kD2));
  CHECK(avg.support_size() == 3);
  for (const auto& [d, c] : avg.terms()) CHECK(c == Rational(1, 3));
  CHECK(pi_s3(avg) == avg);
  CHECK(pi_s3(FormalSum::unit()) == FormalSum::unit());
  const auto pool = small_pool(3);
  Rng rng(43);
  for (int trial = 0; trial < 30; ++trial) {
    const auto a = testing::random_sum(pool, 4, rng);
    const auto b = testing::random_sum(pool, 4, rng);
    CHECK(pi_s3(pi_s3(a)) == pi_s3(a));
    CHECK(pi_s3(a + b) == pi_s3(a) + pi_s3(b));
    CHECK(edge_count_value(pi_s3(a)) == edge_count_value(a));
  }
}

TEST_CASE("splitting examples") {
  auto r = verify_linear_splitting(IrreducibleDessin::one());
  CHECK(r.split);
  CHECK(r.roots == std::vector<Rational>{1});
  r = verify_linear_splitting(kD2);
  CHECK(r.split);
  CHECK(r.roots == std::vector<Rational>{0, 2});
}

TEST_CASE("irreducible dessins split over Q for n <= 4") {
  for (const auto& d : small_pool(4)) {
    const auto report = verify_linear_splitting(d);
    CHECK(report.split);
    CHECK(std::is_sorted(report.roots.begin(), report.roots.end()));
    // The edge count and every fixed-point count of the monodromy are roots.
    CHECK(std::find(report.roots.begin(), report.roots.end(), Rational(static_cast<long>(d.edges()))) !=
          report.roots.end());
  }
}

TEST_CASE("fixed-point counts of monodromy elements are roots") {
  Rng rng(44);
  std::uniform_int_distribution<int> letter(0, 3);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(trial % 5);
    const auto d = IrreducibleDessin::from(testing::random_irreducible_dessin(n, rng));
    const auto p = minimal_polynomial(FormalSum(d));
    const std::array<Permutation, 4> gens{d.dessin().alpha(), d.dessin().beta(),
                                          inverse(d.dessin().alpha()), inverse(d.dessin().beta())};
    for (int word = 0; word < 10; ++word) {
      Permutation g = Permutation::identity(n);
      for (int k = 0; k < word; ++k) g = compose(g, gens[static_cast<std::size_t>(letter(rng))]);
      CHECK(p(Rational(static_cast<long>(fixed_points(g)))) == 0);
    }
  }
}

TEST_CASE("formal sum text form") {
  const auto text = std::string("# comment\n\n1/2 * n=2 a=1,0 b=0,1\n-3 * n=1 a=0 b=0\n");
  const auto s = parse_formal_sum(text);
  CHECK(s == Rational(1, 2) * FormalSum(kD2) - Rational(3) * FormalSum::unit());
  CHECK(parse_formal_sum(format_formal_sum(s)) == s);
  // Reducible dessins are decomposed.
  CHECK(parse_formal_sum("2 * n=2 a=0,1 b=0,1") == Rational(4) * FormalSum::unit());
  CHECK(format_formal_sum(FormalSum()).empty());
  CHECK_THROWS_AS(parse_formal_sum("2 n=1 a=0 b=0"), ParseError);
  CHECK_THROWS_AS(parse_formal_sum("x * n=1 a=0 b=0"), ParseError);
  const auto pool = small_pool(3);
  Rng rng(45);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = testing::random_sum(pool, 5, rng);
    CHECK(parse_formal_sum(format_formal_sum(a)) == a);
  }
}
