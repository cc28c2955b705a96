#include <doctest.h>

#include <algorithm>
#include <random>

#include "cpgroups/errors.hpp"
#include "cpgroups/permutation.hpp"
#include "oracles.hpp"

using namespace cpg;

namespace {

std::vector<std::uint32_t> images_of(const Permutation& p) {
  return {p.images().begin(), p.images().end()};
}

Permutation random_perm(std::mt19937& rng, std::size_t degree) {
  std::vector<std::uint32_t> v(degree);
  for (std::uint32_t i = 0; i < degree; ++i) v[i] = i;
  std::shuffle(v.begin(), v.end(), rng);
  return Permutation(v);
}

}  // namespace

TEST_CASE("parse_cycles reads 1-based cycle words") {
  CHECK(images_of(parse_cycles("(1 2)(3 4)", 4)) == std::vector<std::uint32_t>{1, 0, 3, 2});
  CHECK(images_of(parse_cycles("", 3)) == std::vector<std::uint32_t>{0, 1, 2});
  CHECK(images_of(parse_cycles("(1 2 3)", 3)) == std::vector<std::uint32_t>{1, 2, 0});
  CHECK(parse_cycles("(1,2,3)", 3) == parse_cycles("(1 2 3)", 3));
  CHECK(parse_cycles("  (1 2) ( 3 4 ) ", 4) == parse_cycles("(1 2)(3 4)", 4));
  CHECK(parse_cycles("()", 2).is_identity());
}

TEST_CASE("parse_cycles composes non-disjoint cycles left to right") {
  // (1 2) then (1 3): 1->2, 2->1->3, 3->1
  CHECK(images_of(parse_cycles("(1 2)(1 3)", 3)) == std::vector<std::uint32_t>{1, 2, 0});
}

TEST_CASE("parse_cycles rejects malformed words") {
  CHECK_THROWS_AS(parse_cycles("(1 5)", 4), GroupError);
  CHECK_THROWS_AS(parse_cycles("(0 1)", 4), GroupError);
  CHECK_THROWS_AS(parse_cycles("(1 2", 4), GroupError);
  CHECK_THROWS_AS(parse_cycles("1 2)", 4), GroupError);
  CHECK_THROWS_AS(parse_cycles("((1 2))", 4), GroupError);
  CHECK_THROWS_AS(parse_cycles("(1 2 1)", 4), GroupError);
  CHECK_THROWS_AS(parse_cycles("(1 x)", 4), GroupError);
}

TEST_CASE("Permutation rejects non-bijections") {
  CHECK_THROWS_AS(Permutation(std::vector<std::uint32_t>{0, 0}), GroupError);
  CHECK_THROWS_AS(Permutation(std::vector<std::uint32_t>{0, 2}), GroupError);
  CHECK_THROWS_AS(Permutation(std::vector<std::uint32_t>{}), GroupError);
}

TEST_CASE("compose applies the left factor first") {
  const auto t12 = parse_cycles("(1 2)", 3);
  const auto t13 = parse_cycles("(1 3)", 3);
  // by hand: 1->2->2, 2->1->3, 3->3->1
  CHECK(compose(t12, t13) == parse_cycles("(1 2 3)", 3));
  CHECK(compose(t13, t12) == parse_cycles("(1 3 2)", 3));

  const auto p = parse_cycles("(1 4 2)(3 5)", 5);
  CHECK(compose(p, Permutation::identity(5)) == p);
  CHECK(compose(p, p.inverse()).is_identity());
  CHECK_THROWS_AS(compose(t12, Permutation::identity(4)), GroupError);
}

TEST_CASE("perm_order is the lcm of cycle lengths") {
  CHECK(perm_order(parse_cycles("(1 2)(3 4)", 4)) == 2);
  CHECK(perm_order(Permutation::identity(3)) == 1);
  const auto p = parse_cycles("(1 2 3 4 5 6)(7 8)", 8);
  CHECK(oracle::perm_order_by_composition(p) == 6);
  CHECK(perm_order(p) == 6);
}

TEST_CASE("the involution pair of S4 multiplies to a 4-cycle") {
  const auto a = parse_cycles("(1 2)(3 4)", 4);
  const auto b = parse_cycles("(1 3)", 4);
  CHECK(perm_order(a) == 2);
  CHECK(perm_order(b) == 2);
  CHECK(perm_order(compose(a, b)) == 4);
}

TEST_CASE("property: cycle notation round-trips and orders match repeated composition") {
  std::mt19937 rng(20261016);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t degree = 1 + rng() % 10;
    const auto p = random_perm(rng, degree);
    CHECK(parse_cycles(p.to_cycles() == "()" ? "" : p.to_cycles(), degree) == p);
    CHECK(perm_order(p) == oracle::perm_order_by_composition(p));
    CHECK(compose(p.inverse(), p).is_identity());
  }
}
