#include "cpgroups/subgroups.hpp"

#include <algorithm>
#include <unordered_set>

#include "cpgroups/errors.hpp"
#include "cpgroups/metric.hpp"

namespace cpg {

std::vector<SubgroupSet> all_subgroups(const FiniteGroup& g, const Limits& limits) {
  if (g.order() > limits.max_subgroup_order)
    fail(ErrorKind::CapExceeded, "subgroup enumeration limited to groups of order " +
                                     std::to_string(limits.max_subgroup_order));

  struct Known {
    SubgroupSet set;
    std::vector<Index> generators;
  };
  std::unordered_set<SubgroupSet, ElementSetHash> seen;
  std::vector<Known> known;
  auto remember = [&](Known k) {
    if (seen.insert(k.set).second) known.push_back(std::move(k));
  };

  remember({trivial_subgroup(g), {}});
  std::vector<Index> cyclic_generators;
  for (Index x = 1; x < g.order(); ++x) {
    const Index gen[] = {x};
    auto c = closure(g, gen);
    if (!seen.contains(c)) cyclic_generators.push_back(x);
    remember({std::move(c), {x}});
  }

  for (std::size_t pos = 0; pos < known.size(); ++pos) {
    const auto members = known[pos].set.members();
    for (auto x : cyclic_generators) {
      if (known[pos].set.contains(x)) continue;
      Known next{extend_subgroup(g, known[pos].set, members, known[pos].generators, x),
                 known[pos].generators};
      if (seen.contains(next.set)) continue;
      next.generators.push_back(x);
      remember(std::move(next));
    }
  }

  std::vector<SubgroupSet> out;
  out.reserve(known.size());
  for (auto& k : known) out.push_back(std::move(k.set));
  std::sort(out.begin(), out.end(),
            [](const SubgroupSet& a, const SubgroupSet& b) { return size_then_bits_less(a, b); });
  return out;
}

namespace {

NamedPredicate order_predicate(std::string name, Membership (*test)(const FiniteGroup&,
                                                                    const OrderTable&, Execution)) {
  return {std::move(name), [test](const FiniteGroup& g) {
            return test(g, order_table(g), Execution::Serial).member;
          }};
}

}  // namespace

NamedPredicate cp_predicate() {
  return {"cp", [](const FiniteGroup& g) { return is_cp(g, order_table(g)).member; }};
}
NamedPredicate cp2_predicate() { return order_predicate("cp2", &is_cp2); }
NamedPredicate cp3_predicate() { return order_predicate("cp3", &is_cp3); }

NamedPredicate predicate_by_name(const std::string& name) {
  if (name == "cp") return cp_predicate();
  if (name == "cp2") return cp2_predicate();
  if (name == "cp3") return cp3_predicate();
  fail(ErrorKind::InvalidInput, "unknown predicate '" + name + "'");
}

HereditaryReport hereditary_check(const FiniteGroup& g, const NamedPredicate& predicate,
                                  const Limits& limits) {
  HereditaryReport report;
  report.group_satisfies = predicate.test(g);
  if (!report.group_satisfies) return report;

  const auto subgroups = all_subgroups(g, limits);
  report.subgroups_checked = subgroups.size();
  std::vector<char> holds(subgroups.size(), 1);
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(subgroups.size()); ++i)
    holds[i] = predicate.test(subgroup_as_group(g, subgroups[i])) ? 1 : 0;
  for (std::size_t i = 0; i < subgroups.size(); ++i)
    if (!holds[i]) report.violations.push_back(subgroups[i]);
  return report;
}

AbelianScanReport abelian_subgroup_scan(const FiniteGroup& g, const Limits& limits) {
  AbelianScanReport report;
  for (auto& h : all_subgroups(g, limits)) {
    if (!is_abelian(g, h)) continue;
    auto info = p_group_of_order(h.count());
    if (!info) report.verdict = false;
    report.abelian.push_back({std::move(h), info});
  }
  return report;
}

QuotientScanReport quotient_scan(const FiniteGroup& g, const NamedPredicate& predicate) {
  QuotientScanReport report;
  report.group_verdict = predicate.test(g);
  const auto normals = normal_subgroups(g);
  report.observations.resize(normals.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(normals.size()); ++i) {
    auto q = quotient(g, normals[i]);
    report.observations[i] = {normals[i], q.order(), predicate.test(q)};
  }
  return report;
}

}  // namespace cpg
