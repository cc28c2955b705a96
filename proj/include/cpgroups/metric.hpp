#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cpgroups/finite_group.hpp"
#include "cpgroups/kernels.hpp"
#include "cpgroups/structure.hpp"

namespace cpg {

enum class Condition { CP, CP2, CP3, Triangle, Custom };
const char* to_string(Condition c);

/// Certificate for an element whose order is not a prime
/// power: commuting powers of orders p and q whose product has order pq.
struct PrimeSplit {
  std::uint32_t p = 0;
  std::uint32_t q = 0;
  Index p_part = 0;
  Index q_part = 0;
  std::uint32_t product_order = 0;
};

/// For CP witnesses b duplicates a and ab_order is o(p_part * q_part).
struct Witness {
  Index a = 0;
  Index b = 0;
  std::uint32_t a_order = 0;
  std::uint32_t b_order = 0;
  std::uint32_t ab_order = 0;
  Condition violated = Condition::CP3;
  std::optional<PrimeSplit> split;  // CP witnesses only
};

struct Membership {
  bool member = true;
  std::optional<Witness> witness;
};

/// d(x, y) = o(x y^-1) - 1
std::uint32_t distance(const FiniteGroup& g, const OrderTable& t, Index x, Index y);

/// Row-major n x n; throws CapExceeded past limits.table_threshold.
std::vector<std::uint32_t> distance_matrix(const FiniteGroup& g, const OrderTable& t,
                                           const Limits& limits = {},
                                           Execution exec = Execution::Parallel);

Membership is_cp(const FiniteGroup& g, const OrderTable& t);
Membership is_cp2(const FiniteGroup& g, const OrderTable& t, Execution exec = Execution::Parallel);
Membership is_cp3(const FiniteGroup& g, const OrderTable& t, Execution exec = Execution::Parallel);

/// First pair of involutions (lexicographic) whose product has order > 3.
/// Such a pair rules out CP3.
std::optional<Witness> involution_witness(const FiniteGroup& g, const OrderTable& t);

/// Pluggable pairwise order condition: ok(o(a), o(b), o(ab)). Any class
/// defined by such a condition (CP1 from the literature, for instance) can be
/// tested through this hook.
using OrderCondition = std::function<bool(std::uint32_t, std::uint32_t, std::uint32_t)>;
Membership check_order_condition(const FiniteGroup& g, const OrderTable& t,
                                 const OrderCondition& ok, Condition tag = Condition::Custom,
                                 Execution exec = Execution::Parallel);

struct MetricAxioms {
  bool identity = true;   // d(x,x) = 0 and d(x,y) = 0 only for x = y
  bool symmetry = true;
  bool triangle = true;   // via the pair reduction a = x y^-1, b = y z^-1
  bool ultrametric = true;
  std::optional<Witness> triangle_witness;    // CP3 pair witness
  std::optional<TripleHit> triangle_triple;   // x, y, z realizing it
  std::optional<Witness> ultrametric_witness; // CP2 pair witness

  bool audited = false;   // raw O(n^3) triple check ran
  bool raw_triangle = true;
  bool raw_ultrametric = true;
  std::optional<TripleHit> raw_violation;
};

/// Audit mode runs the raw triple scans; it is refused above 60 elements.
inline constexpr std::size_t kAuditMaxOrder = 60;
MetricAxioms check_metric_axioms(const FiniteGroup& g, const OrderTable& t, bool audit = false,
                                 const Limits& limits = {});

struct Layer {
  std::uint64_t bound = 1;  // p^i
  std::size_t size = 0;
  bool is_subgroup = false;
  bool is_normal = false;
};

struct LayerReport {
  PGroupInfo group;
  std::vector<Layer> layers;  // i = 0..n
  bool all_normal_subgroups() const;
};

/// Layers G_i = {x : o(x) <= p^i} of a p-group. Throws GroupError(NotPGroup).
LayerReport layer_check(const FiniteGroup& g, const OrderTable& t);

struct ClassReport {
  std::string name;
  std::size_t order = 0;
  std::map<std::uint32_t, std::size_t> order_counts;
  bool in_cp = true;
  bool in_cp2 = true;
  bool in_cp3 = true;
  std::optional<Witness> cp_witness;
  std::optional<Witness> cp2_witness;
  std::optional<Witness> cp3_witness;
  MetricAxioms axioms;
};

ClassReport classify(const FiniteGroup& g, bool audit = false, const Limits& limits = {});

}  // namespace cpg
