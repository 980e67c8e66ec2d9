#include "dessinalg/dessin.hpp"

#include "dessinalg/errors.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <stdexcept>

namespace dessinalg {

namespace {

// Canonical (alpha, beta) images of a transitive pair, as one 2n vector.
std::vector<Point> canonical_encoding(const Permutation& alpha, const Permutation& beta) {
  const std::size_t n = alpha.degree();
  constexpr Point kUnset = static_cast<Point>(-1);
  std::vector<Point> best;
  std::vector<Point> label(n);
  std::vector<Point> order(n);
  std::vector<Point> encoding(2 * n);
  for (Point start = 0; start < n; ++start) {
    std::fill(label.begin(), label.end(), kUnset);
    Point next = 0;
    label[start] = next;
    order[next++] = start;
    bool worse = false;
    for (std::size_t head = 0; head < n; ++head) {
      const Point x = order[head];
      for (const Permutation* g : {&alpha, &beta}) {
        const Point y = (*g)(x);
        if (label[y] == kUnset) {
          label[y] = next;
          order[next++] = y;
        }
      }
      encoding[head] = label[alpha(x)];
      // Drop a start as soon as its alpha half compares worse.
      if (!best.empty() && !worse) {
        if (encoding[head] > best[head]) {
          worse = true;
          break;
        }
        if (encoding[head] < best[head]) best.clear();
      }
    }
    if (worse) continue;
    for (std::size_t i = 0; i < n; ++i) encoding[n + i] = label[beta(order[i])];
    if (best.empty() || encoding < best) best = encoding;
  }
  return best;
}

Dessin from_encoding(const std::vector<Point>& encoding) {
  const std::size_t n = encoding.size() / 2;
  return Dessin(Permutation(std::vector<Point>(encoding.begin(), encoding.begin() + n)),
                Permutation(std::vector<Point>(encoding.begin() + n, encoding.end())));
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

} // namespace

Dessin::Dessin(Permutation alpha, Permutation beta)
    : alpha_(std::move(alpha)), beta_(std::move(beta)) {
  if (alpha_.degree() != beta_.degree()) {
    throw DegreeMismatch("dessin permutations have degrees " + std::to_string(alpha_.degree()) +
                         " and " + std::to_string(beta_.degree()));
  }
}

Dessin Dessin::one() { return Dessin(Permutation::identity(1), Permutation::identity(1)); }

std::strong_ordering Dessin::operator<=>(const Dessin& other) const {
  if (auto c = edges() <=> other.edges(); c != 0) return c;
  if (auto c = alpha_ <=> other.alpha_; c != 0) return c;
  return beta_ <=> other.beta_;
}

bool is_irreducible(const Dessin& d) {
  const std::array<Permutation, 2> gens{d.alpha(), d.beta()};
  return orbits(gens, d.edges()).size() == 1;
}

std::vector<IrreducibleDessin> decompose(const Dessin& d) {
  const std::array<Permutation, 2> gens{d.alpha(), d.beta()};
  const auto blocks = orbits(gens, d.edges());
  std::vector<IrreducibleDessin> parts;
  parts.reserve(blocks.size());
  std::vector<Point> local(d.edges());
  for (const auto& block : blocks) {
    for (std::size_t i = 0; i < block.size(); ++i) local[block[i]] = static_cast<Point>(i);
    std::vector<Point> a(block.size()), b(block.size());
    for (std::size_t i = 0; i < block.size(); ++i) {
      a[i] = local[d.alpha()(block[i])];
      b[i] = local[d.beta()(block[i])];
    }
    const auto enc = canonical_encoding(Permutation(std::move(a)), Permutation(std::move(b)));
    parts.push_back(IrreducibleDessin::from(from_encoding(enc)));
  }
  std::sort(parts.begin(), parts.end());
  return parts;
}

Dessin canonicalize(const Dessin& d) {
  if (is_irreducible(d)) return from_encoding(canonical_encoding(d.alpha(), d.beta()));
  std::vector<Point> a, b;
  a.reserve(d.edges());
  b.reserve(d.edges());
  for (const auto& part : decompose(d)) {
    const auto offset = static_cast<Point>(a.size());
    for (Point x : part.dessin().alpha().images()) a.push_back(x + offset);
    for (Point x : part.dessin().beta().images()) b.push_back(x + offset);
  }
  return Dessin(Permutation(std::move(a)), Permutation(std::move(b)));
}

Dessin relabel(const Dessin& d, const Permutation& q) {
  const std::size_t n = d.edges();
  if (q.degree() != n) throw DegreeMismatch("relabelling has the wrong degree");
  std::vector<Point> a(n), b(n);
  for (Point i = 0; i < n; ++i) {
    a[q(i)] = q(d.alpha()(i));
    b[q(i)] = q(d.beta()(i));
  }
  return Dessin(Permutation(std::move(a)), Permutation(std::move(b)));
}

IrreducibleDessin IrreducibleDessin::from(const Dessin& d) {
  if (!is_irreducible(d)) {
    throw std::invalid_argument("dessin " + format_dessin(d) + " is not irreducible");
  }
  return IrreducibleDessin(from_encoding(canonical_encoding(d.alpha(), d.beta())));
}

IrreducibleDessin IrreducibleDessin::one() { return IrreducibleDessin(Dessin::one()); }

Dessin product(const Dessin& d1, const Dessin& d2) {
  const std::size_t n1 = d1.edges(), n2 = d2.edges();
  std::vector<Point> a(n1 * n2), b(n1 * n2);
  for (Point i = 0; i < n1; ++i) {
    for (Point j = 0; j < n2; ++j) {
      const std::size_t e = i * n2 + j;
      a[e] = static_cast<Point>(d1.alpha()(i) * n2 + d2.alpha()(j));
      b[e] = static_cast<Point>(d1.beta()(i) * n2 + d2.beta()(j));
    }
  }
  return Dessin(Permutation(std::move(a)), Permutation(std::move(b)));
}

BranchTriple to_triple(const Dessin& d) {
  return BranchTriple{d.alpha(), d.beta(), inverse(compose(d.alpha(), d.beta()))};
}

Dessin from_triple(const BranchTriple& t) {
  if (!compose(t.sigma0, compose(t.sigma1, t.sigma_inf)).is_identity()) {
    throw std::invalid_argument("branch triple does not have product one");
  }
  return Dessin(t.sigma0, t.sigma1);
}

Passport passport(const IrreducibleDessin& d, std::uint64_t order_cap) {
  const BranchTriple t = to_triple(d.dessin());
  Passport p;
  p.type0 = cycle_type(t.sigma0);
  p.type1 = cycle_type(t.sigma1);
  p.type_inf = cycle_type(t.sigma_inf);
  const std::size_t n = d.edges();
  const std::size_t cycles = p.type0.count() + p.type1.count() + p.type_inf.count();
  // Transitivity guarantees n + 2 - cycles is even and non-negative.
  p.genus = (n + 2 - cycles) / 2;
  const std::array<Permutation, 2> gens{t.sigma0, t.sigma1};
  p.monodromy_order = group_order(gens, n, order_cap);
  return p;
}

std::string format_passport(const Passport& p) {
  std::string out = format_cycle_type(p.type0) + "|" + format_cycle_type(p.type1) + "|" +
                    format_cycle_type(p.type_inf) + " genus=" + std::to_string(p.genus) +
                    " order=";
  out += p.monodromy_order ? std::to_string(*p.monodromy_order) : std::string("overflow");
  return out;
}

Dessin parse_dessin(std::string_view line) {
  std::istringstream in{std::string(trim(line))};
  std::optional<std::size_t> n;
  std::optional<Permutation> a, b;
  std::string token;
  while (in >> token) {
    const auto eq = token.find('=');
    if (eq == std::string::npos) throw ParseError("bad dessin token '" + token + "'");
    const std::string key = token.substr(0, eq);
    const std::string value = token.substr(eq + 1);
    if (key == "n" && !n) {
      try {
        std::size_t used = 0;
        n = std::stoul(value, &used);
        if (used != value.size()) throw std::invalid_argument("trailing characters");
      } catch (const std::exception&) {
        throw ParseError("bad edge count '" + value + "'");
      }
    } else if (key == "a" && !a) {
      a = parse_permutation(value);
    } else if (key == "b" && !b) {
      b = parse_permutation(value);
    } else {
      throw ParseError("unexpected dessin field '" + token + "'");
    }
  }
  if (!n || !a || !b) throw ParseError("dessin needs n=, a= and b= fields: '" + std::string(line) + "'");
  if (*n == 0) throw ParseError("dessin with zero edges");
  if (a->degree() != *n || b->degree() != *n) {
    throw ParseError("dessin permutations do not have degree n=" + std::to_string(*n));
  }
  return Dessin(std::move(*a), std::move(*b));
}

std::string format_dessin(const Dessin& d) {
  return "n=" + std::to_string(d.edges()) + " a=" + format_permutation(d.alpha()) +
         " b=" + format_permutation(d.beta());
}

} // namespace dessinalg
