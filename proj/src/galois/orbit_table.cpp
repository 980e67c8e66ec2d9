#include "dessinalg/errors.hpp"
#include "dessinalg/galois.hpp"
#include "dessinalg/s3.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace dessinalg {

InvariantKey invariant_key(const IrreducibleDessin& d, std::uint64_t order_cap) {
  return InvariantKey{d.edges(), passport(d, order_cap)};
}

OrbitTable::OrbitTable(std::vector<Orbit> orbits, std::string provenance)
    : orbits_(std::move(orbits)), provenance_(std::move(provenance)) {
  for (std::size_t i = 0; i < orbits_.size(); ++i) {
    for (const auto& d : orbits_[i].members) where_.try_emplace(d, i);
  }
}

std::optional<std::size_t> OrbitTable::orbit_of(const IrreducibleDessin& d) const {
  const auto it = where_.find(d);
  if (it == where_.end()) return std::nullopt;
  return it->second;
}

const Orbit& OrbitTable::orbit_containing(const IrreducibleDessin& d) const {
  const auto index = orbit_of(d);
  if (!index) throw CoverageError("dessin " + format_dessin(d.dessin()) + " is not covered by the orbit table");
  return orbits_[*index];
}

OrbitTable invariant_partition(const std::vector<IrreducibleDessin>& dessins) {
  std::vector<IrreducibleDessin> sorted = dessins;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::map<InvariantKey, std::size_t> block_of;
  std::vector<Orbit> orbits;
  for (const auto& d : sorted) {
    auto [it, inserted] = block_of.try_emplace(invariant_key(d), orbits.size());
    if (inserted) orbits.push_back(Orbit{"inv-" + std::to_string(orbits.size() + 1), {}});
    orbits[it->second].members.push_back(d);
  }
  return OrbitTable(std::move(orbits), "invariant-refinement");
}

std::string_view violation_kind_name(Violation::Kind kind) {
  switch (kind) {
    case Violation::Kind::Overlap: return "overlap";
    case Violation::Kind::EmptyOrbit: return "empty-orbit";
    case Violation::Kind::EdgeCount: return "edge-count";
    case Violation::Kind::Passport: return "passport";
    case Violation::Kind::S3Closure: return "s3-closure";
    case Violation::Kind::S3Mixing: return "s3-mixing";
  }
  return "unknown";
}

std::vector<Violation> validate_table(const OrbitTable& t, bool strict) {
  using Kind = Violation::Kind;
  std::vector<Violation> out;
  std::map<IrreducibleDessin, std::string> owner;
  for (const auto& orbit : t.orbits()) {
    if (orbit.members.empty()) {
      out.push_back({Kind::EmptyOrbit, "orbit " + orbit.name + " is empty"});
      continue;
    }
    for (const auto& d : orbit.members) {
      auto [it, inserted] = owner.try_emplace(d, orbit.name);
      if (!inserted) {
        out.push_back({Kind::Overlap, "dessin " + format_dessin(d.dessin()) + " appears in orbit " +
                                          it->second + " and in orbit " + orbit.name});
      }
    }
    const auto& first = orbit.members.front();
    std::optional<Passport> first_passport;
    if (strict) first_passport = passport(first);
    for (const auto& d : orbit.members) {
      if (d.edges() != first.edges()) {
        out.push_back({Kind::EdgeCount, "orbit " + orbit.name + " mixes edge counts " +
                                            std::to_string(first.edges()) + " and " +
                                            std::to_string(d.edges())});
      } else if (strict && passport(d) != *first_passport) {
        out.push_back({Kind::Passport, "orbit " + orbit.name + " mixes passports " +
                                           format_passport(*first_passport) + " and " +
                                           format_passport(passport(d))});
      }
    }
  }

  for (const auto& orbit : t.orbits()) {
    for (const auto& rho : S3Element::all()) {
      std::set<std::size_t> targets;
      for (const auto& d : orbit.members) {
        const auto image = IrreducibleDessin::from(s3_apply(rho, d.dessin()));
        const auto target = t.orbit_of(image);
        if (!target) {
          out.push_back({Kind::S3Closure, "image " + format_dessin(image.dessin()) + " of " +
                                              format_dessin(d.dessin()) + " under " +
                                              std::string(rho.symbol()) + " is not covered"});
        } else {
          targets.insert(*target);
        }
      }
      if (targets.size() > 1) {
        out.push_back({Kind::S3Mixing, "orbit " + orbit.name + " is split across " +
                                           std::to_string(targets.size()) + " orbits by " +
                                           std::string(rho.symbol())});
      }
    }
  }
  return out;
}

FormalSum pi_g(const FormalSum& a, const OrbitTable& t) {
  FormalSum out;
  for (const auto& [d, c] : a.terms()) {
    const Orbit& orbit = t.orbit_containing(d);
    const Rational weight = c / Rational(static_cast<unsigned long>(orbit.members.size()));
    for (const auto& e : orbit.members) out.add_term(e, weight);
  }
  return out;
}

OrbitTable read_orbit_table(std::istream& in) {
  std::vector<Orbit> orbits;
  std::string provenance = "unspecified";
  bool in_orbit = false;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) {
      in_orbit = false;
      continue;
    }
    const std::string_view body = std::string_view(line).substr(first);
    if (body.front() == '#') continue;
    if (body.starts_with("provenance")) {
      if (!orbits.empty()) throw ParseError(line_no, "provenance must precede the first orbit");
      const auto rest = body.substr(std::string_view("provenance").size());
      const auto start = rest.find_first_not_of(" \t");
      provenance = start == std::string_view::npos ? "" : std::string(rest.substr(start));
      while (!provenance.empty() && (provenance.back() == '\r' || provenance.back() == ' ')) provenance.pop_back();
      continue;
    }
    if (body.starts_with("orbit")) {
      std::string name(body.substr(std::string_view("orbit").size()));
      const auto start = name.find_first_not_of(" \t");
      name = start == std::string::npos ? std::string() : name.substr(start);
      while (!name.empty() && (name.back() == '\r' || name.back() == ' ')) name.pop_back();
      if (name.empty()) throw ParseError(line_no, "orbit header without a name");
      orbits.push_back(Orbit{std::move(name), {}});
      in_orbit = true;
      continue;
    }
    if (!in_orbit) throw ParseError(line_no, "dessin line outside an orbit block");
    try {
      const Dessin d = parse_dessin(body);
      if (!is_irreducible(d)) throw ParseError("orbit members must be irreducible");
      orbits.back().members.push_back(IrreducibleDessin::from(d));
    } catch (const ParseError& e) {
      throw ParseError(line_no, e.what());
    }
  }
  return OrbitTable(std::move(orbits), std::move(provenance));
}

std::string write_orbit_table(const OrbitTable& t) {
  std::ostringstream out;
  out << "provenance " << t.provenance() << "\n";
  for (const auto& orbit : t.orbits()) {
    out << "\norbit " << orbit.name << "\n";
    for (const auto& d : orbit.members) out << format_dessin(d.dessin()) << "\n";
  }
  return out.str();
}

} // namespace dessinalg
