#pragma once

#include "dessinalg/dessin.hpp"
#include "dessinalg/galois.hpp"

#include <cstdint>
#include <istream>
#include <map>
#include <ostream>
#include <vector>

namespace dessinalg {

inline constexpr std::size_t kDefaultMaxEdges = 7;

// DESSINALG_MAX_EDGES if set to a positive integer, else kDefaultMaxEdges.
std::size_t max_edges_from_environment();

// All dessins (or only the irreducible ones) with n edges, one canonical
// representative per relabelling class, sorted.
class Catalog {
public:
  // Entries must be canonical, strictly increasing and of n edges; throws
  // std::invalid_argument otherwise.
  Catalog(std::size_t n, bool irreducible_only, std::vector<Dessin> entries);

  std::size_t edges() const { return n_; }
  bool irreducible_only() const { return irreducible_only_; }
  const std::vector<Dessin>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

  // Irreducible entries in catalog order.
  std::vector<IrreducibleDessin> irreducible_entries() const;

  // Irreducible entries with the given key, in catalog order. Reducible
  // entries of an "all dessins" catalog carry no passport and are not
  // indexed.
  std::vector<IrreducibleDessin> query(const InvariantKey& key) const;
  const std::map<InvariantKey, std::vector<std::size_t>>& index() const { return index_; }

private:
  std::size_t n_;
  bool irreducible_only_;
  std::vector<Dessin> entries_;
  std::map<InvariantKey, std::vector<std::size_t>> index_;
};

// alpha runs over one permutation per cycle type, beta over all of S_n.
// Throws std::out_of_range unless 1 <= n <= max_edges.
Catalog enumerate(std::size_t n, bool irreducible_only,
                  std::size_t max_edges = kDefaultMaxEdges);

// Number of pairs of permutations of degree n up to simultaneous conjugation,
// by Burnside's lemma: (1/n!) sum over g of |C(g)|^2, with each centralizer
// counted by direct search. Throws std::out_of_range for n = 0 or n > 6.
std::uint64_t burnside_count(std::size_t n);

// File form: "catalog n=<N> irreducible=<true|false> count=<K>" followed by
// the K dessin lines in order.
void save_catalog(const Catalog& c, std::ostream& out);
// Accepts non-canonical dessin lines and canonicalizes them; fails if that
// merges two lines, if the count disagrees with the header, or if a line has
// the wrong edge count (or is reducible in an irreducible catalog). Parse
// errors carry line numbers.
Catalog load_catalog(std::istream& in);

} // namespace dessinalg
