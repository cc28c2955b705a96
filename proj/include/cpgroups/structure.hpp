#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cpgroups/element_set.hpp"
#include "cpgroups/finite_group.hpp"

namespace cpg {

/// A subgroup as a bitset over the parent's element indices.
using SubgroupSet = ElementSet;

struct OrderTable {
  std::vector<std::uint32_t> orders;  // orders[i] = o(element i)
  std::uint32_t max_order = 1;
  std::vector<std::uint32_t> primes;  // primes dividing some element order, ascending
};

std::uint32_t element_order(const FiniteGroup& g, Index a);
OrderTable order_table(const FiniteGroup& g);

/// Orbits under conjugation, each sorted, listed by smallest member.
std::vector<std::vector<Index>> conjugacy_classes(const FiniteGroup& g);

bool is_abelian(const FiniteGroup& g);
bool is_abelian(const FiniteGroup& g, const SubgroupSet& h);
SubgroupSet center(const FiniteGroup& g);

/// prime == 0 marks the trivial group, which counts as a p-group for every p.
struct PGroupInfo {
  std::uint32_t prime = 0;
  std::uint32_t exponent = 0;  // |G| = prime^exponent
  bool trivial() const noexcept { return prime == 0; }
};
std::optional<PGroupInfo> p_group_of_order(std::size_t order);
std::optional<PGroupInfo> is_p_group(const FiniteGroup& g);

bool is_subgroup(const FiniteGroup& g, const ElementSet& s);
bool is_normal(const FiniteGroup& g, const SubgroupSet& h);

/// Subgroup generated by `generators` (Dimino's coset enumeration).
SubgroupSet closure(const FiniteGroup& g, std::span<const Index> generators);

/// <h, x> given h = <h_generators>; h_members must list h's elements.
SubgroupSet extend_subgroup(const FiniteGroup& g, const SubgroupSet& h,
                            std::span<const Index> h_members,
                            std::span<const Index> h_generators, Index x);

SubgroupSet whole_group(const FiniteGroup& g);
SubgroupSet trivial_subgroup(const FiniteGroup& g);

/// Smallest normal subgroup containing the conjugacy class of x.
SubgroupSet normal_closure(const FiniteGroup& g, Index x);

/// [h, h] as a subgroup of g.
SubgroupSet derived_subgroup(const FiniteGroup& g, const SubgroupSet& h);

/// G, G', G'', ... ending at the first term equal to its own derived subgroup.
std::vector<SubgroupSet> derived_series(const FiniteGroup& g);
bool is_solvable(const FiniteGroup& g);

enum class NormalSubgroupMethod {
  Auto,              // class unions when the class count is small, else closure joins
  ClassUnion,        // unions of conjugacy classes with size dividing |G|, closure tested
  NormalClosureJoin, // fixed point of joins of normal closures of single classes
};

/// Every normal subgroup, sorted by (size, bitset).
std::vector<SubgroupSet> normal_subgroups(const FiniteGroup& g,
                                          NormalSubgroupMethod method = NormalSubgroupMethod::Auto);
bool is_simple(const FiniteGroup& g);

/// Coset group g/n; the identity coset has index 0 and cosets are numbered by
/// their smallest member. Throws GroupError(NotNormal).
FiniteGroup quotient(const FiniteGroup& g, const SubgroupSet& n);

}  // namespace cpg
