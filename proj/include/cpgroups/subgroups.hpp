#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cpgroups/finite_group.hpp"
#include "cpgroups/structure.hpp"

namespace cpg {

/// Every subgroup of g, sorted by (size, bitset). Seeds with the cyclic
/// subgroups and joins each known subgroup with each cyclic one until no new
/// subgroup appears. Throws CapExceeded past limits.max_subgroup_order.
std::vector<SubgroupSet> all_subgroups(const FiniteGroup& g, const Limits& limits = {});

using GroupPredicate = std::function<bool(const FiniteGroup&)>;

struct NamedPredicate {
  std::string name;
  GroupPredicate test;
};
NamedPredicate cp_predicate();
NamedPredicate cp2_predicate();
NamedPredicate cp3_predicate();
/// "cp", "cp2" or "cp3"; throws InvalidInput otherwise.
NamedPredicate predicate_by_name(const std::string& name);

struct HereditaryReport {
  bool group_satisfies = false;  // false means the check is vacuous
  std::size_t subgroups_checked = 0;
  std::vector<SubgroupSet> violations;
  bool holds() const noexcept { return violations.empty(); }
};

HereditaryReport hereditary_check(const FiniteGroup& g, const NamedPredicate& predicate,
                                  const Limits& limits = {});

struct AbelianSubgroup {
  SubgroupSet members;
  std::optional<PGroupInfo> p_group;
};

struct AbelianScanReport {
  std::vector<AbelianSubgroup> abelian;
  bool verdict = true;  // every abelian subgroup is a p-group
};

AbelianScanReport abelian_subgroup_scan(const FiniteGroup& g, const Limits& limits = {});

struct QuotientObservation {
  SubgroupSet normal;
  std::size_t quotient_order = 0;
  bool verdict = false;
};

/// Evaluates the predicate on g/N for every normal N. Observations only.
struct QuotientScanReport {
  bool group_verdict = false;
  std::vector<QuotientObservation> observations;
};

QuotientScanReport quotient_scan(const FiniteGroup& g, const NamedPredicate& predicate);

}  // namespace cpg
