#pragma once

#include "dessinalg/dessin.hpp"
#include "dessinalg/formal_sum.hpp"
#include "dessinalg/polynomial.hpp"

#include <istream>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace dessinalg {

// Galois-invariant key: two dessins in one Galois orbit always share it.
struct InvariantKey {
  std::size_t edges = 0;
  Passport passport;

  auto operator<=>(const InvariantKey&) const = default;
  bool operator==(const InvariantKey&) const = default;
};

InvariantKey invariant_key(const IrreducibleDessin& d,
                           std::uint64_t order_cap = kDefaultGroupOrderCap);

struct Orbit {
  std::string name;
  std::vector<IrreducibleDessin> members;
};

// A partition of a finite set of dessins into alleged Galois orbits. This is
// the only source of Galois information in the library; nothing here computes
// the action itself.
class OrbitTable {
public:
  OrbitTable() = default;
  OrbitTable(std::vector<Orbit> orbits, std::string provenance);

  const std::vector<Orbit>& orbits() const { return orbits_; }
  const std::string& provenance() const { return provenance_; }

  // Index of the first orbit containing d.
  std::optional<std::size_t> orbit_of(const IrreducibleDessin& d) const;
  bool covers(const IrreducibleDessin& d) const { return orbit_of(d).has_value(); }
  // Throws CoverageError naming d when it is not covered.
  const Orbit& orbit_containing(const IrreducibleDessin& d) const;

private:
  std::vector<Orbit> orbits_;
  std::string provenance_;
  std::map<IrreducibleDessin, std::size_t> where_;
};

// Groups dessins by InvariantKey; provenance "invariant-refinement". Orbits
// are ordered by their first member. Singletons certify Galois-fixed
// dessins; larger blocks only bound the true orbits from above.
OrbitTable invariant_partition(const std::vector<IrreducibleDessin>& dessins);

struct Violation {
  enum class Kind { Overlap, EmptyOrbit, EdgeCount, Passport, S3Closure, S3Mixing };
  Kind kind;
  std::string message;
};

std::string_view violation_kind_name(Violation::Kind kind);

// Disjointness, edge-count constancy, passport constancy (only when strict),
// and S3 compatibility: every S3 image of a covered dessin is covered, and
// each S3 element maps each orbit into a single orbit. Empty result means the
// table is valid.
std::vector<Violation> validate_table(const OrbitTable& t, bool strict = true);

// Linear extension of D -> average of the orbit of D. Throws CoverageError.
FormalSum pi_g(const FormalSum& a, const OrbitTable& t);

// psi_D = pi_s3(D) - pi_s3(pi_g(D)). Requires the S3 orbit of d to be covered.
FormalSum balanced(const IrreducibleDessin& d, const OrbitTable& t);

// Size of the Galois orbit of psi_D. The Galois action commutes with pi_s3
// and fixes pi_s3(pi_g(D)), so the images of psi_D are exactly
// pi_s3(D_i) - pi_s3(pi_g(D)) for D_i in the orbit of D; this counts the
// distinct ones, i.e. the distinct pi_s3(D_i).
std::size_t balanced_orbit_size(const IrreducibleDessin& d, const OrbitTable& t);

enum class Verdict { Holds, Fails, Degenerate };
std::string_view verdict_name(Verdict v);

struct ConjectureReport {
  IrreducibleDessin dessin;
  std::size_t orbit_size = 0;          // k
  RationalPolynomial minimal_polynomial;
  Factorization factorization;
  std::size_t matching_factors = 0;    // distinct prime factors of degree k
  Verdict verdict = Verdict::Fails;

  // Degrees of the prime factors, repeated by multiplicity; they sum to the
  // degree of the minimal polynomial.
  std::vector<int> factor_degrees() const;
};

// Minimal polynomial of psi_D, its factorization, and whether exactly one
// prime factor has degree equal to the orbit size. psi_D = 0 is reported as
// Degenerate (P = x, k = 1, which holds trivially).
ConjectureReport conjecture1_check(const IrreducibleDessin& d, const OrbitTable& t,
                                   const MinpolyCaps& caps = {});

// "dessin | orbit-size k | minpoly degree m | factor degrees d1,d2 | VERDICT"
std::string format_report(const ConjectureReport& r);

struct SubalgebraCaps {
  std::size_t max_degree = 64; // longest monomial in the generators
  std::size_t max_size = 4096; // basis elements
};

// Linearly independent spanning set of the unital subalgebra generated by
// `generators`: starts from the unit and repeatedly multiplies new basis
// elements by each generator, keeping products independent of the basis so
// far. Throws CapExceeded if a cap trips before closure.
std::vector<FormalSum> balanced_subalgebra_basis(const std::vector<FormalSum>& generators,
                                                 const SubalgebraCaps& caps = {});

// Orbit-table text form: optional "provenance <label>" line, then blocks of
// "orbit <name>" followed by one dessin per line; blank lines separate
// orbits and "#" lines are comments. Members are canonicalized; reducible
// members are rejected.
OrbitTable read_orbit_table(std::istream& in);
std::string write_orbit_table(const OrbitTable& t);

} // namespace dessinalg
