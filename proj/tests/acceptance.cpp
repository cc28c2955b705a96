// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on failure.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cpgroups/catalog.hpp"
#include "cpgroups/metric.hpp"
#include "cpgroups/structure.hpp"
#include "cpgroups/subgroups.hpp"
#include "oracles.hpp"

using namespace cpg;

namespace {

struct Check {
  bool ok = true;
  std::vector<std::string> failures;
  std::vector<std::string> notes;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      failures.push_back(what);
    }
  }
};

bool in_cp3(const FiniteGroup& g) { return is_cp3(g, order_table(g)).member; }
bool in_cp2(const FiniteGroup& g) { return is_cp2(g, order_table(g)).member; }

Check known_facts() {
  Check c;
  auto s3 = symmetric(3);
  c.expect(in_cp3(s3) && !in_cp2(s3), "S3 in CP3 minus CP2");

  auto z6 = cyclic(6);
  const auto w = is_cp3(z6, order_table(z6));
  c.expect(!w.member && w.witness &&
               std::min(w.witness->a_order, w.witness->b_order) == 2 &&
               std::max(w.witness->a_order, w.witness->b_order) == 3 && w.witness->ab_order == 6,
           "Z6 witness orders (2,3,6)");

  c.expect(in_cp3(dicyclic_4n(2)), "Q8 in CP3");
  c.expect(!in_cp3(dihedral_2n(4)), "D8 not in CP3");
  c.expect(!in_cp3(dicyclic_4n(4)), "Q16 not in CP3");
  c.expect(!in_cp3(dicyclic_4n(8)), "Q32 not in CP3");
  for (std::size_t n = 4; n <= 12; ++n) c.expect(!in_cp3(dihedral_2n(n)), "D" + std::to_string(2 * n) + " not in CP3");

  auto s4 = symmetric(4);
  const auto t4 = order_table(s4);
  const auto w4 = is_cp3(s4, t4);
  c.expect(!w4.member && w4.witness && w4.witness->a_order == 2 && w4.witness->b_order == 2 &&
               w4.witness->ab_order == 4,
           "S4 involution-pair witness of product order 4");
  const Index a = *s4.find(parse_cycles("(1 2)(3 4)", 4)), b = *s4.find(parse_cycles("(1 3)", 4));
  c.expect(t4.orders[s4.mul(a, b)] == 4, "(12)(34)*(13) has order 4");
  if (w4.witness) c.notes.push_back("S4 witness " + s4.label(w4.witness->a) + " * " + s4.label(w4.witness->b));

  for (std::size_t n = 4; n <= 6; ++n) c.expect(!in_cp3(symmetric(n)), "S" + std::to_string(n) + " not in CP3");
  for (std::size_t n = 5; n <= 6; ++n) c.expect(!in_cp3(alternating(n)), "A" + std::to_string(n) + " not in CP3");
  c.expect(in_cp3(alternating(4)), "A4 in CP3");
  return c;
}

Check theorem1() {
  Check c;
  std::size_t cp3 = 0;
  const auto entries = catalog_iter(200);
  for (const auto& e : entries) {
    auto g = e.build({});
    const auto t = order_table(g);
    if (!is_cp3(g, t).member) continue;
    ++cp3;
    c.expect(is_cp(g, t).member, e.name + " in CP3 but not CP");
  }
  auto s4 = symmetric(4);
  const auto t = order_table(s4);
  c.expect(is_cp(s4, t).member && !is_cp3(s4, t).member, "S4 separates CP from CP3");
  c.notes.push_back(std::to_string(entries.size()) + " groups, " + std::to_string(cp3) + " in CP3");
  return c;
}

Check theorem2() {
  Check c;
  std::size_t checked = 0, abelian = 0;
  for (const auto& e : catalog_iter(200)) {
    auto g = e.build({});
    if (!in_cp3(g)) continue;
    ++checked;
    const auto r = abelian_subgroup_scan(g);
    abelian += r.abelian.size();
    c.expect(r.verdict, e.name + " has a non-p abelian subgroup");
  }
  c.notes.push_back(std::to_string(checked) + " CP3 groups, " + std::to_string(abelian) + " abelian subgroups");
  return c;
}

bool pgroup_family(Family f) {
  return f == Family::Cyclic || f == Family::Dihedral || f == Family::Dicyclic ||
         f == Family::ElementaryAbelian || f == Family::Product;
}

Check theorem3() {
  Check c;
  std::size_t pgroups = 0, layered = 0;
  for (const auto& e : catalog_iter(256)) {
    if (!pgroup_family(e.family)) continue;
    auto g = e.build({});
    const auto t = order_table(g);
    const auto info = p_group_of_order(g.order());
    if (!info || info->trivial()) continue;
    ++pgroups;
    const bool cp3 = is_cp3(g, t).member;
    c.expect(cp3 == is_cp2(g, t).member, e.name + " cp3 != cp2");
    if (cp3) {
      ++layered;
      c.expect(layer_check(g, t).all_normal_subgroups(), e.name + " has a non-normal layer");
    }
  }
  c.notes.push_back(std::to_string(pgroups) + " p-groups, " + std::to_string(layered) + " layer checks");
  return c;
}

Check theorem4() {
  Check c;
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 11u, 13u, 17u}) {
    auto g = psl2(q);
    const auto t = order_table(g);
    const std::size_t formula = std::size_t(q) * (q * q - 1) / (q % 2 ? 2 : 1);
    const std::string name = "psl2(" + std::to_string(q) + ")";
    c.expect(g.order() == formula, name + " order");
    if (q < 4) {
      c.expect(is_cp3(g, t).member, name + " in CP3");
      continue;
    }
    c.expect(!is_cp3(g, t).member, name + " not in CP3");
    const auto w = involution_witness(g, t);
    c.expect(w && w->ab_order > 3, name + " involution witness");
    c.expect(normal_subgroups(g).size() == 2, name + " simple");
    if (w) c.notes.push_back(name + ": " + std::to_string(g.order()) + " elements, involution product order " +
                             std::to_string(w->ab_order));
  }
  c.expect(normal_subgroups(alternating(5)).size() == 2, "A5 simple");
  return c;
}

Check conjecture5() {
  Check c;
  std::map<std::size_t, std::size_t> lengths;
  std::size_t checked = 0, counterexamples = 0;
  for (const auto& e : catalog_iter(200)) {
    auto g = e.build({});
    if (!in_cp3(g)) continue;
    ++checked;
    const bool solvable = is_solvable(g);
    c.expect(solvable, e.name + " is a CP3 counterexample");
    if (solvable)
      ++lengths[derived_series(g).size() - 1];
    else
      ++counterexamples;
  }
  std::string dist = std::to_string(checked) + " CP3 groups, " + std::to_string(counterexamples) + " counterexamples; derived lengths";
  for (auto [len, count] : lengths) dist += " " + std::to_string(len) + ":" + std::to_string(count);
  c.notes.push_back(dist);
  return c;
}

Check metric_equivalence() {
  Check c;
  std::size_t audited = 0;
  const auto entries = catalog_iter(200);
  for (const auto& e : entries) {
    auto g = e.build({});
    const auto t = order_table(g);
    const bool audit = g.order() <= kAuditMaxOrder;
    const auto m = check_metric_axioms(g, t, audit);
    const bool cp3 = is_cp3(g, t).member, cp2 = is_cp2(g, t).member;
    c.expect(m.identity && m.symmetry, e.name + " identity/symmetry");
    c.expect(m.triangle == cp3, e.name + " triangle != cp3");
    c.expect(m.ultrametric == cp2, e.name + " ultrametric != cp2");
    if (audit) {
      ++audited;
      c.expect(m.raw_triangle == cp3, e.name + " raw triangle audit != cp3");
      c.expect(m.raw_ultrametric == cp2, e.name + " raw ultrametric audit != cp2");
    }
  }
  c.notes.push_back(std::to_string(entries.size()) + " groups, " + std::to_string(audited) + " raw audits");
  return c;
}

Check oracle_equivalence() {
  Check c;
  std::size_t groups = 0;
  for (const auto& e : catalog_iter(24)) {
    auto g = e.build({});
    ++groups;
    c.expect(all_subgroups(g).size() == oracle::closed_subsets(g).size(), e.name + " subgroup count");
  }
  const auto entries = catalog_iter(200);
  std::mt19937 rng(20261016);
  std::uniform_int_distribution<std::size_t> pick_group(0, entries.size() - 1);
  std::map<std::string, FiniteGroup> built;
  std::map<std::string, OrderTable> tables;
  for (int i = 0; i < 1000; ++i) {
    const auto& e = entries[pick_group(rng)];
    auto it = built.find(e.name);
    if (it == built.end()) {
      it = built.emplace(e.name, e.build({})).first;
      tables.emplace(e.name, order_table(it->second));
    }
    const auto& g = it->second;
    const Index x = std::uniform_int_distribution<Index>(0, static_cast<Index>(g.order() - 1))(rng);
    c.expect(tables.at(e.name).orders[x] == oracle::order_by_repetition(g, x),
             e.name + " order of element " + std::to_string(x));
  }
  c.notes.push_back(std::to_string(groups) + " lattices, 1000 random element orders over " +
                    std::to_string(built.size()) + " groups");
  return c;
}

std::string capture(const std::string& cmd, int& status) {
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    status = -1;
    return out;
  }
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  status = pclose(pipe);
  return out;
}

Check determinism() {
  Check c;
  const std::string cmd = std::string("\"") + CPGROUPS_CLI + "\" classify --max-order 100";
  int s1 = 0, s2 = 0;
  const auto a = capture(cmd, s1);
  const auto b = capture(cmd, s2);
  c.expect(s1 == 0 && s2 == 0, "classify exit status");
  c.expect(!a.empty(), "classify produced output");
  c.expect(a == b, "outputs differ");
  c.notes.push_back(std::to_string(a.size()) + " bytes, identical=" + (a == b ? "yes" : "no"));
  return c;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Check()>>> criteria = {
      {"1 known facts", known_facts},
      {"2 CP3 implies CP", theorem1},
      {"3 abelian subgroups are p-groups", theorem2},
      {"4 p-groups: CP3 iff CP2", theorem3},
      {"5 psl2 and simple groups", theorem4},
      {"6 CP3 catalog groups solvable", conjecture5},
      {"7 metric equivalence", metric_equivalence},
      {"8 oracle equivalence", oracle_equivalence},
      {"9 determinism", determinism},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Check c;
    try {
      c = run();
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream line;
    line.precision(2);
    line << std::fixed << (c.ok ? "PASS " : "FAIL ") << name << " (" << secs << " s)";
    std::cout << line.str() << "\n";
    for (const auto& n : c.notes) std::cout << "    " << n << "\n";
    for (std::size_t i = 0; i < c.failures.size() && i < 10; ++i) std::cout << "    failed: " << c.failures[i] << "\n";
    failed += !c.ok;
  }
  std::cout << (failed ? std::to_string(failed) + " criteria failed" : std::string("all criteria passed")) << "\n";
  return failed ? 1 : 0;
}
