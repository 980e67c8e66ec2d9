#include "dessinalg/permutation.hpp"

#include "dessinalg/errors.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace dessinalg {

namespace {

struct ImageHash {
  std::size_t operator()(const std::vector<Point>& v) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (Point x : v) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

} // namespace

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  if (images_.empty()) throw std::invalid_argument("permutation of degree 0");
  std::vector<bool> seen(images_.size(), false);
  for (Point x : images_) {
    if (x >= images_.size()) {
      throw std::invalid_argument("permutation image " + std::to_string(x) +
                                  " out of range for degree " +
                                  std::to_string(images_.size()));
    }
    if (seen[x]) {
      throw std::invalid_argument("permutation repeats image " + std::to_string(x));
    }
    seen[x] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  if (n == 0) throw std::invalid_argument("permutation of degree 0");
  std::vector<Point> images(n);
  std::iota(images.begin(), images.end(), Point{0});
  return Permutation(std::move(images), Unchecked{});
}

Permutation Permutation::from_cycles(std::size_t n,
                                     const std::vector<std::vector<Point>>& cycles) {
  if (n == 0) throw std::invalid_argument("permutation of degree 0");
  std::vector<Point> images(n);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<bool> used(n, false);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const Point from = cycle[i];
      if (from >= n || used[from]) {
        throw std::invalid_argument("cycles are not disjoint points of {0..n-1}");
      }
      used[from] = true;
      images[from] = cycle[(i + 1) % cycle.size()];
    }
  }
  return Permutation(std::move(images), Unchecked{});
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

std::vector<std::vector<Point>> Permutation::cycles() const {
  std::vector<std::vector<Point>> result;
  std::vector<bool> seen(images_.size(), false);
  for (Point start = 0; start < images_.size(); ++start) {
    if (seen[start]) continue;
    auto& cycle = result.emplace_back();
    for (Point x = start; !seen[x]; x = images_[x]) {
      seen[x] = true;
      cycle.push_back(x);
    }
  }
  return result;
}

std::size_t Permutation::cycle_count() const {
  std::size_t count = 0;
  std::vector<bool> seen(images_.size(), false);
  for (Point start = 0; start < images_.size(); ++start) {
    if (seen[start]) continue;
    ++count;
    for (Point x = start; !seen[x]; x = images_[x]) seen[x] = true;
  }
  return count;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) {
    throw DegreeMismatch("cannot compose permutations of degree " +
                         std::to_string(p.degree()) + " and " +
                         std::to_string(q.degree()));
  }
  std::vector<Point> images(p.degree());
  for (std::size_t i = 0; i < images.size(); ++i) images[i] = p.images_[q.images_[i]];
  return Permutation(std::move(images), Permutation::Unchecked{});
}

Permutation inverse(const Permutation& p) {
  std::vector<Point> images(p.degree());
  for (std::size_t i = 0; i < images.size(); ++i) images[p.images_[i]] = static_cast<Point>(i);
  return Permutation(std::move(images), Permutation::Unchecked{});
}

Permutation conjugate(const Permutation& p, const Permutation& q) {
  return compose(inverse(q), compose(p, q));
}

std::size_t CycleType::total() const {
  return std::accumulate(parts.begin(), parts.end(), std::size_t{0});
}

CycleType cycle_type(const Permutation& p) {
  CycleType t;
  for (const auto& c : p.cycles()) t.parts.push_back(c.size());
  std::sort(t.parts.begin(), t.parts.end(), std::greater<>());
  return t;
}

std::string format_cycle_type(const CycleType& t) {
  std::string out = "[";
  for (std::size_t i = 0; i < t.parts.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(t.parts[i]);
  }
  out += ']';
  return out;
}

std::vector<std::vector<Point>> orbits(std::span<const Permutation> generators,
                                       std::size_t n) {
  for (const auto& g : generators) {
    if (g.degree() != n) throw DegreeMismatch("generator degree differs from n");
  }
  // Forward closure under the generators.
  std::vector<std::vector<Point>> blocks;
  std::vector<bool> seen(n, false);
  std::vector<Point> stack;
  for (Point start = 0; start < n; ++start) {
    if (seen[start]) continue;
    auto& block = blocks.emplace_back();
    seen[start] = true;
    stack.push_back(start);
    while (!stack.empty()) {
      const Point x = stack.back();
      stack.pop_back();
      block.push_back(x);
      for (const auto& g : generators) {
        const Point y = g(x);
        if (!seen[y]) {
          seen[y] = true;
          stack.push_back(y);
        }
      }
    }
    std::sort(block.begin(), block.end());
  }
  return blocks;
}

std::optional<std::uint64_t> group_order(std::span<const Permutation> generators,
                                         std::size_t n, std::uint64_t cap) {
  if (cap == 0) throw std::invalid_argument("group order cap must be positive");
  for (const auto& g : generators) {
    if (g.degree() != n) throw DegreeMismatch("generator degree differs from n");
  }
  const Permutation id = Permutation::identity(n);
  std::unordered_set<std::vector<Point>, ImageHash> seen;
  std::vector<Permutation> frontier{id};
  seen.insert(std::vector<Point>(id.images().begin(), id.images().end()));
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& element : frontier) {
      for (const auto& g : generators) {
        Permutation product = compose(g, element);
        std::vector<Point> key(product.images().begin(), product.images().end());
        if (seen.insert(std::move(key)).second) {
          if (seen.size() > cap) return std::nullopt;
          next.push_back(std::move(product));
        }
      }
    }
    frontier = std::move(next);
  }
  return seen.size();
}

Permutation parse_permutation(std::string_view text) {
  text = trim(text);
  if (text.empty()) throw ParseError("empty permutation");
  std::vector<Point> images;
  std::size_t pos = 0;
  while (true) {
    const auto comma = text.find(',', pos);
    const auto field = trim(text.substr(pos, comma == std::string_view::npos
                                                 ? std::string_view::npos
                                                 : comma - pos));
    Point value = 0;
    const auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc{} || end != field.data() + field.size()) {
      throw ParseError("bad permutation entry '" + std::string(field) + "'");
    }
    images.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  try {
    return Permutation(std::move(images));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("not a permutation: ") + e.what());
  }
}

std::string format_permutation(const Permutation& p) {
  std::string out;
  for (std::size_t i = 0; i < p.degree(); ++i) {
    if (i) out += ',';
    out += std::to_string(p(static_cast<Point>(i)));
  }
  return out;
}

} // namespace dessinalg
