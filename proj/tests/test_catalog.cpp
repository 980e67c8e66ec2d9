#include "doctest.h"

#include "dessinalg/catalog.hpp"
#include "dessinalg/errors.hpp"
#include "dessinalg/s3.hpp"
#include "oracles.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <sstream>

using namespace dessinalg;

TEST_CASE("small catalogs") {
  CHECK(enumerate(1, false).size() == 1);
  CHECK(enumerate(1, true).size() == 1);
  CHECK(enumerate(2, false).size() == 4);
  CHECK(enumerate(2, true).size() == 3);
  CHECK(enumerate(3, true).size() == 7);
  CHECK(enumerate(1, true).entries().front() == Dessin::one());
  CHECK_THROWS_AS(enumerate(0, true), std::out_of_range);
  CHECK_THROWS_AS(enumerate(8, true), std::out_of_range);
  CHECK_THROWS_AS(enumerate(3, true, 2), std::out_of_range);
}

TEST_CASE("burnside counts") {
  CHECK(burnside_count(1) == 1);
  CHECK(burnside_count(2) == 4);
  CHECK(burnside_count(3) == 11);
  CHECK(burnside_count(4) == 43);
  CHECK_THROWS_AS(burnside_count(0), std::out_of_range);
  CHECK_THROWS_AS(burnside_count(7), std::out_of_range);
  for (std::size_t n = 1; n <= 4; ++n) CHECK(enumerate(n, false).size() == burnside_count(n));
}

TEST_CASE("catalog entries against brute-force classes") {
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto c = enumerate(n, true);
    auto expected = testing::irreducible_classes_by_search(n);
    for (auto& d : expected) d = canonicalize(d);
    std::sort(expected.begin(), expected.end());
    CHECK(c.entries() == expected);
  }
}

TEST_CASE("catalog structure") {
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto all = enumerate(n, false);
    const auto irr = enumerate(n, true);
    CHECK(std::is_sorted(all.entries().begin(), all.entries().end()));
    for (const auto& d : all.entries()) CHECK(canonicalize(d) == d);
    std::set<Dessin> full(all.entries().begin(), all.entries().end());
    for (const auto& d : irr.entries()) CHECK(full.count(d) == 1);
    for (const auto& d : all.entries()) {
      if (!std::binary_search(irr.entries().begin(), irr.entries().end(), d)) {
        CHECK(testing::component_sizes_union_find(d).size() >= 2);
      }
    }
    CHECK(all.irreducible_entries().size() == irr.size());
  }
}

TEST_CASE("S3 closure of irreducible catalogs") {
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto c = enumerate(n, true);
    for (const auto& d : c.entries()) {
      for (const auto& rho : S3Element::all()) {
        CHECK(std::binary_search(c.entries().begin(), c.entries().end(), s3_apply(rho, d)));
      }
    }
  }
}

TEST_CASE("query and index") {
  const auto c = enumerate(3, true);
  std::size_t total = 0;
  for (const auto& [key, positions] : c.index()) {
    const auto hits = c.query(key);
    CHECK(hits.size() == positions.size());
    for (const auto& d : hits) CHECK(invariant_key(d) == key);
    total += hits.size();
  }
  CHECK(total == c.size());
  CHECK(c.query(invariant_key(IrreducibleDessin::one())).empty());
  const auto one = enumerate(1, true);
  CHECK(one.query(invariant_key(IrreducibleDessin::one())) ==
        std::vector<IrreducibleDessin>{IrreducibleDessin::one()});
}

TEST_CASE("catalog text form") {
  const auto c = enumerate(3, false);
  std::ostringstream out;
  save_catalog(c, out);
  CHECK(out.str().starts_with("catalog n=3 irreducible=false count=11\n"));
  std::istringstream in(out.str());
  const auto back = load_catalog(in);
  CHECK(back.entries() == c.entries());
  CHECK_FALSE(back.irreducible_only());

  // Non-canonical lines are accepted and canonicalized.
  std::istringstream relabelled("catalog n=2 irreducible=true count=1\nn=2 a=0,1 b=1,0\n");
  CHECK(load_catalog(relabelled).entries() == std::vector<Dessin>{canonicalize(parse_dessin("n=2 a=0,1 b=1,0"))});

  auto expect_line = [](const std::string& text, std::size_t line) {
    std::istringstream s(text);
    try {
      load_catalog(s);
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() == line);
    }
  };
  expect_line("catalog n=2 irreducible=true count=2\nn=2 a=1,0 b=0,1\nn=2 a=0,1 b=1,0\nn=2 a=1,0 b=0,1\n", 4);
  expect_line("catalog n=2 irreducible=true count=1\nn=2 a=0,1 b=0,1\n", 2);
  expect_line("catalog n=2 irreducible=true count=1\nn=1 a=0 b=0\n", 2);
  expect_line("catalog n=2 irreducible=true count=1\nn=2 a=0,0 b=0,1\n", 2);
  expect_line("catalog n=2 irreducible=maybe count=1\n", 1);
  expect_line("dessins n=2\n", 1);
  std::istringstream short_body("catalog n=2 irreducible=true count=2\nn=2 a=1,0 b=0,1\n");
  CHECK_THROWS_AS(load_catalog(short_body), ParseError);
  std::istringstream empty("");
  CHECK_THROWS_AS(load_catalog(empty), ParseError);
}

TEST_CASE("maximum edge count from the environment") {
  ::unsetenv("DESSINALG_MAX_EDGES");
  CHECK(max_edges_from_environment() == kDefaultMaxEdges);
  ::setenv("DESSINALG_MAX_EDGES", "9", 1);
  CHECK(max_edges_from_environment() == 9);
  ::setenv("DESSINALG_MAX_EDGES", "junk", 1);
  CHECK(max_edges_from_environment() == kDefaultMaxEdges);
  ::unsetenv("DESSINALG_MAX_EDGES");
}
