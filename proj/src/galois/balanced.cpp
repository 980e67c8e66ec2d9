#include "dessinalg/errors.hpp"
#include "dessinalg/galois.hpp"
#include "dessinalg/linear_algebra.hpp"
#include "dessinalg/s3.hpp"

#include <algorithm>
#include <deque>

namespace dessinalg {

FormalSum balanced(const IrreducibleDessin& d, const OrbitTable& t) {
  for (const auto& image : s3_orbit(d.dessin())) {
    const auto irreducible = IrreducibleDessin::from(image);
    if (!t.covers(irreducible)) {
      throw CoverageError("S3 image " + format_dessin(image) + " of " + format_dessin(d.dessin()) +
                          " is not covered by the orbit table");
    }
  }
  const FormalSum base(d);
  return pi_s3(base) - pi_s3(pi_g(base, t));
}

std::size_t balanced_orbit_size(const IrreducibleDessin& d, const OrbitTable& t) {
  const Orbit& orbit = t.orbit_containing(d);
  std::vector<FormalSum> images;
  for (const auto& member : orbit.members) {
    FormalSum image = pi_s3(FormalSum(member));
    if (std::find(images.begin(), images.end(), image) == images.end()) {
      images.push_back(std::move(image));
    }
  }
  return images.size();
}

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "HOLDS";
    case Verdict::Fails: return "FAILS";
    case Verdict::Degenerate: return "HOLDS(DEGENERATE)";
  }
  return "UNKNOWN";
}

std::vector<int> ConjectureReport::factor_degrees() const {
  std::vector<int> degrees;
  for (const auto& f : factorization.factors) {
    for (unsigned i = 0; i < f.multiplicity; ++i) degrees.push_back(f.polynomial.degree());
  }
  return degrees;
}

ConjectureReport conjecture1_check(const IrreducibleDessin& d, const OrbitTable& t,
                                   const MinpolyCaps& caps) {
  const FormalSum psi = balanced(d, t);
  ConjectureReport report{d, balanced_orbit_size(d, t), minimal_polynomial(psi, caps), {}, 0,
                          Verdict::Fails};
  report.factorization = factor_over_q(report.minimal_polynomial);
  for (const auto& f : report.factorization.factors) {
    if (f.polynomial.degree() == static_cast<int>(report.orbit_size)) ++report.matching_factors;
  }
  if (psi.is_zero()) {
    report.verdict = Verdict::Degenerate;
  } else if (report.matching_factors == 1) {
    report.verdict = Verdict::Holds;
  }
  return report;
}

std::string format_report(const ConjectureReport& r) {
  std::string degrees;
  for (int deg : r.factor_degrees()) {
    if (!degrees.empty()) degrees += ',';
    degrees += std::to_string(deg);
  }
  return format_dessin(r.dessin.dessin()) + " | orbit-size " + std::to_string(r.orbit_size) +
         " | minpoly degree " + std::to_string(r.minimal_polynomial.degree()) +
         " | factor degrees " + degrees + " | " + std::string(verdict_name(r.verdict));
}

std::vector<FormalSum> balanced_subalgebra_basis(const std::vector<FormalSum>& generators,
                                                 const SubalgebraCaps& caps) {
  if (caps.max_degree == 0 || caps.max_size == 0) {
    throw std::invalid_argument("subalgebra caps must be positive");
  }
  std::map<IrreducibleDessin, std::size_t> index;
  DependencyFinder finder;
  ProductMemo memo;
  auto coordinates = [&](const FormalSum& s) {
    for (const auto& [d, c] : s.terms()) index.try_emplace(d, index.size());
    std::vector<Rational> coords(index.size(), Rational(0));
    for (const auto& [d, c] : s.terms()) coords[index.at(d)] = c;
    return coords;
  };

  std::vector<FormalSum> basis{FormalSum::unit()};
  finder.add(coordinates(basis.front()));
  // Close the span under right multiplication by the generators.
  std::deque<std::pair<std::size_t, std::size_t>> pending{{0, 0}}; // (basis index, degree)
  while (!pending.empty()) {
    const auto [which, degree] = pending.front();
    pending.pop_front();
    for (const auto& g : generators) {
      FormalSum candidate = mul(basis[which], g, &memo);
      if (finder.add(coordinates(candidate))) continue;
      if (degree + 1 > caps.max_degree) {
        throw CapExceeded("subalgebra: products of degree " + std::to_string(degree + 1) +
                          " still enlarge the span");
      }
      if (basis.size() == caps.max_size) {
        throw CapExceeded("subalgebra: basis exceeded " + std::to_string(caps.max_size) + " elements");
      }
      basis.push_back(std::move(candidate));
      pending.emplace_back(basis.size() - 1, degree + 1);
    }
  }
  return basis;
}

} // namespace dessinalg
