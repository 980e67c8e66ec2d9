#include "dessinalg/catalog.hpp"

#include "dessinalg/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace dessinalg {

namespace {

void partitions(std::size_t remaining, std::size_t largest, std::vector<std::size_t>& current,
                std::vector<std::vector<std::size_t>>& out) {
  if (remaining == 0) {
    out.push_back(current);
    return;
  }
  for (std::size_t part = std::min(remaining, largest); part >= 1; --part) {
    current.push_back(part);
    partitions(remaining - part, part, current, out);
    current.pop_back();
  }
}

Permutation with_cycle_type(std::size_t n, const std::vector<std::size_t>& parts) {
  std::vector<std::vector<Point>> cycles;
  Point next = 0;
  for (std::size_t len : parts) {
    auto& cycle = cycles.emplace_back();
    for (std::size_t i = 0; i < len; ++i) cycle.push_back(next++);
  }
  return Permutation::from_cycles(n, cycles);
}

} // namespace

std::size_t max_edges_from_environment() {
  if (const char* value = std::getenv("DESSINALG_MAX_EDGES")) {
    char* end = nullptr;
    const unsigned long parsed = std::strtoul(value, &end, 10);
    if (end != value && *end == '\0' && parsed > 0) return parsed;
  }
  return kDefaultMaxEdges;
}

Catalog::Catalog(std::size_t n, bool irreducible_only, std::vector<Dessin> entries)
    : n_(n), irreducible_only_(irreducible_only), entries_(std::move(entries)) {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const Dessin& d = entries_[i];
    if (d.edges() != n_) throw std::invalid_argument("catalog entry with the wrong edge count");
    if (i > 0 && !(entries_[i - 1] < d)) throw std::invalid_argument("catalog entries not strictly sorted");
    if (canonicalize(d) != d) throw std::invalid_argument("catalog entry not canonical");
    const bool irreducible = is_irreducible(d);
    if (irreducible_only_ && !irreducible) throw std::invalid_argument("reducible entry in an irreducible catalog");
    if (irreducible) index_[invariant_key(IrreducibleDessin::from(d))].push_back(i);
  }
}

std::vector<IrreducibleDessin> Catalog::irreducible_entries() const {
  std::vector<IrreducibleDessin> out;
  for (const auto& d : entries_) {
    if (is_irreducible(d)) out.push_back(IrreducibleDessin::from(d));
  }
  return out;
}

std::vector<IrreducibleDessin> Catalog::query(const InvariantKey& key) const {
  std::vector<IrreducibleDessin> out;
  const auto it = index_.find(key);
  if (it == index_.end()) return out;
  for (std::size_t i : it->second) out.push_back(IrreducibleDessin::from(entries_[i]));
  return out;
}

Catalog enumerate(std::size_t n, bool irreducible_only, std::size_t max_edges) {
  if (n == 0 || n > max_edges) {
    throw std::out_of_range("edge count " + std::to_string(n) + " outside 1.." + std::to_string(max_edges));
  }
  std::vector<std::vector<std::size_t>> types;
  std::vector<std::size_t> scratch;
  partitions(n, n, scratch, types);

  // alpha: one representative per cycle type; beta: all of S_n.
  std::set<Dessin> seen;
  for (const auto& type : types) {
    const Permutation alpha = with_cycle_type(n, type);
    std::vector<Point> beta(n);
    std::iota(beta.begin(), beta.end(), Point{0});
    do {
      Dessin d(alpha, Permutation(beta));
      if (irreducible_only && !is_irreducible(d)) continue;
      seen.insert(canonicalize(d));
    } while (std::next_permutation(beta.begin(), beta.end()));
  }
  return Catalog(n, irreducible_only, std::vector<Dessin>(seen.begin(), seen.end()));
}

std::uint64_t burnside_count(std::size_t n) {
  if (n == 0 || n > 6) throw std::out_of_range("burnside_count supports 1 <= n <= 6");
  std::vector<Permutation> group;
  std::vector<Point> images(n);
  std::iota(images.begin(), images.end(), Point{0});
  do {
    group.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));

  std::uint64_t total = 0;
  for (const auto& g : group) {
    std::uint64_t centralizer = 0;
    for (const auto& h : group) {
      if (compose(g, h) == compose(h, g)) ++centralizer;
    }
    total += centralizer * centralizer;
  }
  return total / group.size();
}

void save_catalog(const Catalog& c, std::ostream& out) {
  out << "catalog n=" << c.edges() << " irreducible=" << (c.irreducible_only() ? "true" : "false")
      << " count=" << c.size() << "\n";
  for (const auto& d : c.entries()) out << format_dessin(d) << "\n";
}

Catalog load_catalog(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::optional<std::size_t> n, count;
  std::optional<bool> irreducible;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream header(line);
    std::string word;
    header >> word;
    if (word != "catalog") throw ParseError(line_no, "expected catalog header");
    while (header >> word) {
      const auto eq = word.find('=');
      const std::string key = word.substr(0, eq);
      const std::string value = eq == std::string::npos ? "" : word.substr(eq + 1);
      try {
        if (key == "n") {
          n = std::stoul(value);
        } else if (key == "count") {
          count = std::stoul(value);
        } else if (key == "irreducible" && (value == "true" || value == "false")) {
          irreducible = value == "true";
        } else {
          throw ParseError(line_no, "unknown header field '" + word + "'");
        }
      } catch (const std::logic_error&) {
        throw ParseError(line_no, "bad header field '" + word + "'");
      }
    }
    break;
  }
  if (!n || !count || !irreducible) {
    throw ParseError(line_no, "catalog header needs n=, irreducible= and count=");
  }

  std::set<Dessin> entries;
  std::size_t body_lines = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    ++body_lines;
    Dessin d = [&] {
      try {
        return parse_dessin(line);
      } catch (const ParseError& e) {
        throw ParseError(line_no, e.what());
      }
    }();
    if (d.edges() != *n) throw ParseError(line_no, "dessin does not have n=" + std::to_string(*n) + " edges");
    if (*irreducible && !is_irreducible(d)) throw ParseError(line_no, "reducible dessin in an irreducible catalog");
    if (!entries.insert(canonicalize(d)).second) {
      throw ParseError(line_no, "dessin is a relabelling of an earlier entry");
    }
  }
  if (body_lines != *count) {
    throw ParseError("catalog header says count=" + std::to_string(*count) + " but the body has " +
                     std::to_string(body_lines) + " dessins");
  }
  return Catalog(*n, *irreducible, std::vector<Dessin>(entries.begin(), entries.end()));
}

} // namespace dessinalg
