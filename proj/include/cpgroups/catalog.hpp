#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "cpgroups/finite_group.hpp"

namespace cpg {

// Table-built families use normal forms a^i b^j (index i + m*j, with m the
// order of a) and satisfy b a = a^-1 b.

FiniteGroup cyclic(std::size_t n, const Limits& limits = {});
/// Dihedral group of order 2n.
FiniteGroup dihedral_2n(std::size_t n, const Limits& limits = {});
/// Dicyclic group of order 4n: a^(2n) = 1, b^2 = a^n. Generalized quaternion
/// when n is a power of two; dicyclic_4n(2) is Q8.
FiniteGroup dicyclic_4n(std::size_t n, const Limits& limits = {});
FiniteGroup elementary_abelian(std::uint32_t p, std::uint32_t k, const Limits& limits = {});
FiniteGroup symmetric(std::size_t n, const Limits& limits = {});
FiniteGroup alternating(std::size_t n, const Limits& limits = {});

/// PSL(2, q) as the Moebius permutations of the q+1 projective points.
/// Points 0..q-1 are field elements, q is infinity.
FiniteGroup psl2(std::uint32_t q, const Limits& limits = {});
bool psl2_supported(std::uint32_t q);
std::size_t psl2_order(std::uint32_t q);

enum class Family { Cyclic, Dihedral, Dicyclic, ElementaryAbelian, Product, Symmetric, Alternating, Psl2 };

struct CatalogEntry {
  std::string name;  // CLI identifier, e.g. "dihedral:8"
  std::size_t order = 0;
  Family family = Family::Cyclic;
  std::function<FiniteGroup(const Limits&)> build;
};

/// Every catalog group of order <= max_order, sorted by (order, name).
/// Groups are built lazily through CatalogEntry::build.
std::vector<CatalogEntry> catalog_iter(std::size_t max_order);

/// Builds a group from an identifier such as "cyclic:6", "dihedral:8",
/// "dicyclic:8", "symmetric:4", "alternating:5", "elemab:2^3",
/// "product:cyclic:2,cyclic:3" or "psl2:7". Throws InvalidInput.
FiniteGroup resolve_group(const std::string& spec, const Limits& limits = {});

/// Reads a Cayley-table file or a generator file (first line "degree: k"),
/// detected from content.
FiniteGroup load_group_file(const std::string& path, const Limits& limits = {});

/// Parses generator-file text: "degree: k" then one cycle word per line.
FiniteGroup parse_generator_text(const std::string& text, const Limits& limits = {});
/// Parses Cayley-table text: n, then n rows of n indices.
FiniteGroup parse_cayley_text(const std::string& text, const Limits& limits = {});

}  // namespace cpg
