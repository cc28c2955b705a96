#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cpgroups/finite_group.hpp"
#include "cpgroups/report.hpp"

namespace cpg {

enum class VerifyTarget {
  Theorem1,         // CP3 implies CP; S4 separates
  Theorem2,         // abelian subgroups of CP3 groups are p-groups
  Theorem3,         // for p-groups CP3 iff CP2, layers normal
  Theorem4,         // PSL(2,q), q >= 4, and simple catalog groups lie outside CP3
  Conjecture5,      // CP3 catalog groups are solvable
  SubgroupClosure,  // CP3 is inherited by subgroups
  Problem1,         // quotient observations, never conclusive
};

std::optional<VerifyTarget> parse_verify_target(std::string_view name);
const char* to_string(VerifyTarget target);
std::size_t default_max_order(VerifyTarget target);

struct VerifyOptions {
  std::optional<std::size_t> max_order;
  Limits limits;
};

struct VerifyResult {
  bool pass = true;
  bool conclusive = true;
  std::vector<std::string> lines;
  std::string render() const;
};

VerifyResult verify(VerifyTarget target, const VerifyOptions& options = {});

/// Classification rows for every catalog group up to max_order, in catalog
/// order. Groups are analyzed concurrently.
std::vector<ClassifyRow> classify_catalog(std::size_t max_order, const Limits& limits = {});

}  // namespace cpg
