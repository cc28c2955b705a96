#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "cpgroups/catalog.hpp"
#include "cpgroups/errors.hpp"
#include "cpgroups/metric.hpp"

using namespace cpg;

namespace {

Index find(const FiniteGroup& g, const char* cycles) {
  return *g.find(parse_cycles(cycles, g.permutations().front().degree()));
}

std::vector<FiniteGroup> catalog_upto(std::size_t n) {
  std::vector<FiniteGroup> out;
  for (const auto& e : catalog_iter(n)) out.push_back(e.build({}));
  return out;
}

// Same group with element indices shuffled (identity stays at 0).
FiniteGroup relabeled(const FiniteGroup& g, std::mt19937& rng) {
  const std::size_t n = g.order();
  std::vector<Index> perm(n);
  std::iota(perm.begin(), perm.end(), 0u);
  std::shuffle(perm.begin() + 1, perm.end(), rng);
  std::vector<std::vector<Index>> table(n, std::vector<Index>(n));
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b) table[perm[a]][perm[b]] = perm[g.mul(a, b)];
  return from_cayley(table);
}

}  // namespace

TEST_CASE("distance") {
  auto s3 = symmetric(3);
  const auto t = order_table(s3);
  CHECK(distance(s3, t, 4, 4) == 0);
  CHECK(distance(s3, t, find(s3, "(1 2)"), 0) == 1);

  auto z6 = cyclic(6);
  CHECK(distance(z6, order_table(z6), 1, 0) == 5);
}

TEST_CASE("distance matrices") {
  auto trivial = cyclic(1);
  CHECK(distance_matrix(trivial, order_table(trivial)) == std::vector<std::uint32_t>{0});
  auto z2 = cyclic(2);
  CHECK(distance_matrix(z2, order_table(z2)) == std::vector<std::uint32_t>{0, 1, 1, 0});

  // Each row of S3 runs over x y^-1 for all y, i.e. over all elements once:
  // orders {1,2,2,2,3,3} give six 0s, eighteen 1s, twelve 2s overall.
  auto s3 = symmetric(3);
  const auto d = distance_matrix(s3, order_table(s3));
  std::map<std::uint32_t, int> counts;
  for (auto v : d) ++counts[v];
  CHECK(counts == std::map<std::uint32_t, int>{{0, 6}, {1, 18}, {2, 12}});
  for (Index x = 0; x < 6; ++x)
    for (Index y = 0; y < 6; ++y) CHECK(d[x * 6 + y] == d[y * 6 + x]);

  Limits small;
  small.table_threshold = 4;
  CHECK_THROWS_AS(distance_matrix(s3, order_table(s3), small), GroupError);
}

TEST_CASE("metric axioms") {
  auto s3 = symmetric(3);
  auto m = check_metric_axioms(s3, order_table(s3));
  CHECK(m.identity);
  CHECK(m.symmetry);
  CHECK(m.triangle);
  CHECK_FALSE(m.ultrametric);

  auto z6 = cyclic(6);
  const auto tz = order_table(z6);
  m = check_metric_axioms(z6, tz);
  CHECK_FALSE(m.triangle);
  REQUIRE(m.triangle_triple);
  const auto [x, y, z] = *m.triangle_triple;
  CHECK(distance(z6, tz, x, z) > distance(z6, tz, x, y) + distance(z6, tz, y, z));

  auto q8 = dicyclic_4n(2);
  m = check_metric_axioms(q8, order_table(q8), true);
  CHECK(m.triangle);
  CHECK(m.ultrametric);
  CHECK(m.audited);
  CHECK(m.raw_triangle);

  auto big = symmetric(5);
  CHECK_THROWS_AS(check_metric_axioms(big, order_table(big), true), GroupError);
}

TEST_CASE("is_cp") {
  auto z6 = cyclic(6);
  const auto r = is_cp(z6, order_table(z6));
  CHECK_FALSE(r.member);
  REQUIRE(r.witness);
  CHECK(r.witness->a_order == 6);
  REQUIRE(r.witness->split);
  CHECK(r.witness->split->p == 2);
  CHECK(r.witness->split->q == 3);
  CHECK(r.witness->split->product_order == 6);
  CHECK(z6.mul(r.witness->split->p_part, r.witness->split->q_part) ==
        z6.mul(r.witness->split->q_part, r.witness->split->p_part));

  auto s4 = symmetric(4);
  CHECK(is_cp(s4, order_table(s4)).member);
  auto d16 = dihedral_2n(8);
  CHECK(is_cp(d16, order_table(d16)).member);
}

TEST_CASE("is_cp2") {
  auto s3 = symmetric(3);
  const auto r = is_cp2(s3, order_table(s3));
  CHECK_FALSE(r.member);
  REQUIRE(r.witness);
  CHECK(r.witness->a_order == 2);
  CHECK(r.witness->b_order == 2);
  CHECK(r.witness->ab_order == 3);
  auto q8 = dicyclic_4n(2);
  CHECK(is_cp2(q8, order_table(q8)).member);
  auto z4 = cyclic(4);
  CHECK(is_cp2(z4, order_table(z4)).member);
}

TEST_CASE("is_cp3") {
  auto s4 = symmetric(4);
  const auto t = order_table(s4);
  const auto r = is_cp3(s4, t);
  CHECK_FALSE(r.member);
  REQUIRE(r.witness);
  CHECK(r.witness->a_order == 2);
  CHECK(r.witness->b_order == 2);
  CHECK(r.witness->ab_order == 4);
  // lexicographically smallest: no earlier pair violates
  for (Index a = 0; a <= r.witness->a; ++a)
    for (Index b = 0; b < (a == r.witness->a ? r.witness->b : s4.order()); ++b)
      CHECK(t.orders[s4.mul(a, b)] < t.orders[a] + t.orders[b]);

  // the literal pair a=(12)(34), b=(13)
  const Index a = find(s4, "(1 2)(3 4)"), b = find(s4, "(1 3)");
  CHECK(t.orders[s4.mul(a, b)] == 4);

  auto a4 = alternating(4);
  CHECK(is_cp3(a4, order_table(a4)).member);
  auto d8 = dihedral_2n(4);
  CHECK_FALSE(is_cp3(d8, order_table(d8)).member);
  CHECK(is_cp3(s4, t, Execution::Serial).witness->b == r.witness->b);
}

TEST_CASE("pluggable order condition") {
  for (const auto& g : catalog_upto(30)) {
    const auto t = order_table(g);
    const OrderCondition sum = [](std::uint32_t a, std::uint32_t b, std::uint32_t ab) {
      return ab < a + b;
    };
    const auto via_hook = check_order_condition(g, t, sum);
    const auto direct = is_cp3(g, t);
    CHECK(via_hook.member == direct.member);
    if (direct.witness) {
      CHECK(via_hook.witness->a == direct.witness->a);
      CHECK(via_hook.witness->b == direct.witness->b);
      CHECK(via_hook.witness->violated == Condition::Custom);
    }
  }
  auto z6 = cyclic(6);
  const OrderCondition no_six = [](std::uint32_t, std::uint32_t, std::uint32_t ab) { return ab != 6; };
  CHECK_FALSE(check_order_condition(z6, order_table(z6), no_six).member);
}

TEST_CASE("layer check") {
  auto q8 = dicyclic_4n(2);
  auto r = layer_check(q8, order_table(q8));
  REQUIRE(r.layers.size() == 4);
  CHECK(r.layers[0].size == 1);
  CHECK(r.layers[1].size == 2);
  CHECK(r.layers[2].size == 8);
  CHECK(r.layers[3].size == 8);
  CHECK(r.all_normal_subgroups());

  auto z4 = cyclic(4);
  r = layer_check(z4, order_table(z4));
  REQUIRE(r.layers.size() == 3);
  CHECK(r.layers[0].size == 1);
  CHECK(r.layers[1].size == 2);
  CHECK(r.layers[2].size == 4);
  CHECK(r.all_normal_subgroups());

  auto d8 = dihedral_2n(4);
  r = layer_check(d8, order_table(d8));
  CHECK(r.layers[1].size == 6);  // identity and five involutions
  CHECK_FALSE(r.layers[1].is_subgroup);
  CHECK_FALSE(r.all_normal_subgroups());

  auto trivial = cyclic(1);
  r = layer_check(trivial, order_table(trivial));
  CHECK(r.layers.size() == 1);
  CHECK(r.group.trivial());

  auto z6 = cyclic(6);
  CHECK_THROWS_AS(layer_check(z6, order_table(z6)), GroupError);
}

TEST_CASE("classify") {
  auto r = classify(symmetric(3));
  CHECK(r.in_cp3);
  CHECK_FALSE(r.in_cp2);
  CHECK(r.in_cp);

  r = classify(cyclic(6));
  CHECK_FALSE(r.in_cp3);
  CHECK_FALSE(r.in_cp);
  REQUIRE(r.cp3_witness);
  CHECK(std::multiset<std::uint32_t>{r.cp3_witness->a_order, r.cp3_witness->b_order} ==
        std::multiset<std::uint32_t>{2, 3});
  CHECK(r.cp3_witness->ab_order == 6);

  CHECK(classify(alternating(4)).in_cp3);
  r = classify(cyclic(1));
  CHECK(r.in_cp);
  CHECK(r.in_cp2);
  CHECK(r.in_cp3);
}

TEST_CASE("property: hierarchy and metric equivalence over the catalog") {
  for (const auto& g : catalog_upto(60)) {
    const auto r = classify(g, true);
    CHECK((!r.in_cp2 || r.in_cp3));
    CHECK((!r.in_cp3 || r.in_cp));
    CHECK(r.axioms.triangle == r.in_cp3);
    CHECK(r.axioms.ultrametric == r.in_cp2);
    CHECK_MESSAGE(r.axioms.raw_triangle == r.in_cp3, g.name());
    CHECK_MESSAGE(r.axioms.raw_ultrametric == r.in_cp2, g.name());
  }
}

TEST_CASE("property: classification is invariant under relabeling") {
  std::mt19937 rng(99);
  for (const char* spec : {"symmetric:3", "symmetric:4", "dicyclic:8", "dihedral:8", "alternating:4",
                           "cyclic:6", "psl2:3"}) {
    auto g = resolve_group(spec);
    const auto base = classify(g);
    for (int trial = 0; trial < 3; ++trial) {
      auto h = relabeled(g, rng);
      const auto r = classify(h);
      CHECK(r.in_cp == base.in_cp);
      CHECK(r.in_cp2 == base.in_cp2);
      CHECK(r.in_cp3 == base.in_cp3);
      CHECK(r.order_counts == base.order_counts);
    }
  }
}
