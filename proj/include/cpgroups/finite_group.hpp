#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "cpgroups/element_set.hpp"
#include "cpgroups/permutation.hpp"

namespace cpg {

using Index = std::uint32_t;

enum class GroupSource { GeneratedPermutation, CayleyTable, Product, Quotient, Subgroup };

const char* to_string(GroupSource source);

/// Size limits shared by constructors and analyses.
struct Limits {
  std::size_t max_elements = 10000;      // closure cap for generated groups
  std::size_t max_cayley_check = 512;    // full O(n^3) associativity check in from_cayley
  std::size_t table_threshold = 4096;    // materialize the Cayley table up to this order
  std::size_t max_subgroup_order = 400;  // all_subgroups refuses larger groups
};

/// An indexed finite group. Element 0 is the identity. Immutable once built.
///
/// Groups up to Limits::table_threshold elements carry a full Cayley table;
/// larger permutation groups multiply on demand through an image-array index.
class FiniteGroup {
 public:
  std::size_t order() const noexcept { return n_; }
  static constexpr Index identity() noexcept { return 0; }

  Index mul(Index a, Index b) const {
    if (!table_.empty()) return table_[static_cast<std::size_t>(a) * n_ + b];
    return mul_by_composition(a, b);
  }
  Index inv(Index a) const noexcept { return inv_[a]; }
  Index power(Index a, std::uint64_t k) const;

  bool has_table() const noexcept { return !table_.empty(); }
  /// Row a of the Cayley table; requires has_table().
  std::span<const Index> row(Index a) const noexcept {
    return {table_.data() + static_cast<std::size_t>(a) * n_, n_};
  }

  const std::string& label(Index a) const { return labels_[a]; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  GroupSource source() const noexcept { return source_; }
  const std::string& name() const noexcept { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  /// Element permutations for GeneratedPermutation sources, else empty.
  const std::vector<Permutation>& permutations() const noexcept { return perms_; }
  std::optional<Index> find(const Permutation& p) const;

  /// Trusted table constructor for internally generated normal forms. Inverses
  /// are derived from the table; labels default to indices.
  static FiniteGroup from_table(std::size_t n, std::vector<Index> table,
                                std::vector<std::string> labels, GroupSource source);

  /// `elements` must be closed under composition, duplicate free, and start
  /// with the identity. Index order follows the given order.
  static FiniteGroup from_permutations(std::vector<Permutation> elements, const Limits& limits);

 private:
  FiniteGroup() = default;
  Index mul_by_composition(Index a, Index b) const;
  void derive_inverses();

  std::size_t n_ = 0;
  std::vector<Index> table_;
  std::vector<Index> inv_;
  std::vector<std::string> labels_;
  GroupSource source_ = GroupSource::CayleyTable;
  std::string name_;
  std::vector<Permutation> perms_;
  std::shared_ptr<const std::unordered_map<std::u32string, Index>> lookup_;
};

/// Validates an n x n table of 0-based indices: identity at row/column 0,
/// entries in range, inverses present, and full associativity.
FiniteGroup from_cayley(const std::vector<std::vector<Index>>& table, const Limits& limits = {});

/// Breadth-first closure of the generators under composition. Identity gets
/// index 0; within each BFS level elements are ordered by image array.
FiniteGroup generate_group(std::span<const Permutation> generators, const Limits& limits = {});

/// Componentwise product; (i, j) has index i * |h| + j.
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h, const Limits& limits = {});

/// Re-compacts a subgroup into a standalone group, keeping parent labels and
/// the parent's relative element order.
FiniteGroup subgroup_as_group(const FiniteGroup& g, const ElementSet& members);

/// Full O(n^3) associativity check plus identity and inverse laws.
bool verify_group_axioms(const FiniteGroup& g);

}  // namespace cpg
