#include "doctest.h"

#include "dessinalg/catalog.hpp"
#include "dessinalg/errors.hpp"
#include "dessinalg/s3.hpp"
#include "oracles.hpp"

#include <algorithm>
#include <set>
#include <sstream>

using namespace dessinalg;
using dessinalg::testing::Rng;

namespace {

IrreducibleDessin I(std::vector<Point> a, std::vector<Point> b) {
  return IrreducibleDessin::from(Dessin(Permutation(std::move(a)), Permutation(std::move(b))));
}

std::vector<IrreducibleDessin> irreducibles(std::size_t n) {
  std::vector<IrreducibleDessin> out;
  for (const auto& d : testing::irreducible_classes_by_search(n)) out.push_back(IrreducibleDessin::from(d));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<IrreducibleDessin> irreducibles_up_to(std::size_t n) {
  std::vector<IrreducibleDessin> out;
  for (std::size_t k = 1; k <= n; ++k) {
    const auto level = irreducibles(k);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

std::set<Violation::Kind> kinds(const std::vector<Violation>& vs) {
  std::set<Violation::Kind> out;
  for (const auto& v : vs) out.insert(v.kind);
  return out;
}

const IrreducibleDessin kD2 = I({1, 0}, {0, 1});

} // namespace

TEST_CASE("invariant partition") {
  const auto pool = irreducibles_up_to(3);
  const auto t = invariant_partition(pool);
  CHECK(t.provenance() == "invariant-refinement");
  CHECK(t.orbits().front().name == "inv-1");
  std::size_t covered = 0;
  for (const auto& orbit : t.orbits()) {
    covered += orbit.members.size();
    for (const auto& d : orbit.members) CHECK(invariant_key(d) == invariant_key(orbit.members.front()));
  }
  CHECK(covered == pool.size());
  for (const auto& d : pool) CHECK(t.covers(d));
  CHECK(validate_table(t).empty());
  // One-edge and the three two-edge dessins all have distinct passports.
  CHECK(invariant_partition(irreducibles_up_to(2)).orbits().size() == 4);
}

TEST_CASE("orbit table lookups") {
  const OrbitTable t({Orbit{"a", {kD2}}}, "test");
  CHECK(t.orbit_of(kD2) == 0u);
  CHECK_FALSE(t.orbit_of(IrreducibleDessin::one()).has_value());
  CHECK(t.orbit_containing(kD2).name == "a");
  CHECK_THROWS_AS(t.orbit_containing(IrreducibleDessin::one()), CoverageError);
}

TEST_CASE("validate_table detects each violation") {
  const auto two = irreducibles(2);
  REQUIRE(two.size() == 3);
  const auto one = IrreducibleDessin::one();
  using K = Violation::Kind;

  CHECK(validate_table(testing::singleton_table(two)).empty());

  auto vs = validate_table(OrbitTable({Orbit{"a", {one}}, Orbit{"b", {one}}}, "t"));
  CHECK(kinds(vs) == std::set<K>{K::Overlap});
  CHECK(violation_kind_name(vs.front().kind) == "overlap");

  vs = validate_table(OrbitTable({Orbit{"a", {one}}, Orbit{"e", {}}}, "t"));
  CHECK(kinds(vs) == std::set<K>{K::EmptyOrbit});

  vs = validate_table(OrbitTable({Orbit{"a", {one, kD2}}, Orbit{"b", {two[0]}}, Orbit{"c", {two[1]}},
                                  Orbit{"d", {two[2]}}},
                                 "t"),
                      false);
  CHECK(kinds(vs).count(K::EdgeCount) == 1);

  vs = validate_table(OrbitTable({Orbit{"a", {kD2}}}, "t"));
  CHECK(kinds(vs) == std::set<K>{K::S3Closure});

  // Two of the three two-edge dessins in one orbit: passports differ, and
  // some S3 element sends the pair to different orbits.
  const OrbitTable split({Orbit{"a", {two[0], two[1]}}, Orbit{"b", {two[2]}}}, "t");
  CHECK(kinds(validate_table(split)) == std::set<K>{K::Passport, K::S3Mixing});
  CHECK(kinds(validate_table(split, false)) == std::set<K>{K::S3Mixing});

  // All three together is S3-closed; only the passport check objects.
  const OrbitTable all({Orbit{"a", two}}, "t");
  CHECK(kinds(validate_table(all)) == std::set<K>{K::Passport});
  CHECK(validate_table(all, false).empty());
}

TEST_CASE("pi_g") {
  const auto two = irreducibles(2);
  const OrbitTable all({Orbit{"a", two}}, "t");
  const auto avg = pi_g(FormalSum(kD2), all);
  CHECK(avg.support_size() == 3);
  for (const auto& [d, c] : avg.terms()) CHECK(c == Rational(1, 3));
  CHECK(pi_g(avg, all) == avg);
  CHECK(pi_s3(pi_g(FormalSum(kD2), all)) == pi_g(pi_s3(FormalSum(kD2)), all));
  CHECK_THROWS_AS(pi_g(FormalSum::unit(), all), CoverageError);
  CHECK(pi_g(FormalSum(kD2), testing::singleton_table(two)) == FormalSum(kD2));
}

TEST_CASE("balanced dessins on singleton and single-orbit tables") {
  const auto pool = irreducibles_up_to(3);
  const auto singles = testing::singleton_table(pool);
  for (const auto& d : pool) {
    CHECK(balanced(d, singles).is_zero());
    CHECK(balanced_orbit_size(d, singles) == 1);
  }
  const auto two = irreducibles(2);
  const OrbitTable all({Orbit{"a", two}}, "t");
  // Every member has the same S3 average, so k = 1 and psi vanishes.
  CHECK(balanced_orbit_size(kD2, all) == 1);
  CHECK(balanced(kD2, all).is_zero());
  CHECK_THROWS_AS(balanced(kD2, OrbitTable({Orbit{"a", {kD2}}}, "t")), CoverageError);
}

TEST_CASE("balanced dessins on synthetic tables") {
  std::vector<std::pair<std::vector<IrreducibleDessin>, OrbitTable>> cases;
  for (std::size_t n = 3; n <= 4; ++n) {
    const auto pool = irreducibles(n);
    cases.emplace_back(pool, testing::merged_s3_orbit_table(pool, 2));
  }
  const auto five = enumerate(5, true).irreducible_entries();
  cases.emplace_back(five, testing::paired_s3_orbit_table(five));
  for (const auto& [pool, t] : cases) {
    CHECK(validate_table(t, false).empty());
    for (const auto& d : pool) {
      const auto psi = balanced(d, t);
      CHECK(pi_s3(psi) == psi);
      CHECK(pi_g(psi, t).is_zero());
      CHECK(psi.is_zero() == (balanced_orbit_size(d, t) == 1));
      const FormalSum base(d);
      CHECK(pi_s3(pi_g(base, t)) == pi_g(pi_s3(base), t));
    }
  }
}

TEST_CASE("paired tables pass strict validation") {
  // Passports separate all dessins with at most four edges, so the first
  // nontrivial pairs appear at five.
  CHECK(testing::paired_s3_orbit_table(irreducibles(4)).orbits().size() == 26);
  const auto t = testing::paired_s3_orbit_table(enumerate(5, true).irreducible_entries());
  CHECK(validate_table(t).empty());
  CHECK(std::any_of(t.orbits().begin(), t.orbits().end(),
                    [](const Orbit& o) { return o.members.size() == 2; }));
}

TEST_CASE("conjecture report") {
  const auto pool = irreducibles_up_to(3);
  const auto singles = testing::singleton_table(pool);
  for (const auto& d : pool) {
    const auto r = conjecture1_check(d, singles);
    CHECK(r.verdict == Verdict::Degenerate);
    CHECK(r.orbit_size == 1);
    CHECK(r.minimal_polynomial == RationalPolynomial::x());
  }
  CHECK(format_report(conjecture1_check(kD2, singles)) ==
        "n=2 a=1,0 b=0,1 | orbit-size 1 | minpoly degree 1 | factor degrees 1 | HOLDS(DEGENERATE)");
  CHECK(verdict_name(Verdict::Holds) == "HOLDS");
  CHECK(verdict_name(Verdict::Fails) == "FAILS");

  const auto three = irreducibles(3);
  const auto t = testing::merged_s3_orbit_table(three, 1);
  bool saw_nondegenerate = false;
  for (const auto& d : three) {
    const auto r = conjecture1_check(d, t);
    const auto degrees = r.factor_degrees();
    int sum = 0;
    for (int deg : degrees) sum += deg;
    CHECK(sum == r.minimal_polynomial.degree());
    CHECK(r.factorization.expand() == r.minimal_polynomial);
    CHECK(r.orbit_size == balanced_orbit_size(d, t));
    const auto matching = static_cast<std::size_t>(
        std::count(degrees.begin(), degrees.end(), static_cast<int>(r.orbit_size)));
    CHECK(r.matching_factors == matching);
    if (r.verdict != Verdict::Degenerate) {
      saw_nondegenerate = true;
      CHECK(r.orbit_size > 1);
      CHECK((r.verdict == Verdict::Holds) == (r.matching_factors == 1));
    }
  }
  CHECK(saw_nondegenerate);
}

TEST_CASE("balanced subalgebra basis") {
  CHECK(balanced_subalgebra_basis({}) == std::vector<FormalSum>{FormalSum::unit()});
  CHECK(balanced_subalgebra_basis({FormalSum(), FormalSum()}) == std::vector<FormalSum>{FormalSum::unit()});
  const FormalSum d2(kD2);
  const auto basis = balanced_subalgebra_basis({d2});
  CHECK(basis.size() == 2);
  const auto avg = pi_s3(d2);
  CHECK(balanced_subalgebra_basis({avg}).size() ==
        static_cast<std::size_t>(minimal_polynomial(avg).degree()));
  CHECK_THROWS_AS(balanced_subalgebra_basis({avg}, SubalgebraCaps{1, 4096}), CapExceeded);
  CHECK_THROWS_AS(balanced_subalgebra_basis({avg}, SubalgebraCaps{64, 1}), CapExceeded);
}

TEST_CASE("orbit table text form") {
  const auto two = irreducibles(2);
  const OrbitTable t({Orbit{"first", {two[0], two[1]}}, Orbit{"second", {two[2]}}}, "hand-made");
  std::istringstream in(write_orbit_table(t));
  const auto back = read_orbit_table(in);
  CHECK(back.provenance() == "hand-made");
  REQUIRE(back.orbits().size() == 2);
  CHECK(back.orbits()[0].name == "first");
  CHECK(back.orbits()[0].members == t.orbits()[0].members);
  CHECK(back.orbits()[1].members == t.orbits()[1].members);

  std::istringstream plain("# comment\norbit x\nn=1 a=0 b=0\n");
  const auto p = read_orbit_table(plain);
  CHECK(p.provenance() == "unspecified");
  CHECK(p.orbits().size() == 1);

  std::istringstream orphan("n=1 a=0 b=0\n");
  CHECK_THROWS_AS(read_orbit_table(orphan), ParseError);
  std::istringstream reducible("orbit x\nn=2 a=0,1 b=0,1\n");
  try {
    read_orbit_table(reducible);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2u);
  }
  std::istringstream late("orbit x\nn=1 a=0 b=0\nprovenance late\n");
  CHECK_THROWS_AS(read_orbit_table(late), ParseError);
}
