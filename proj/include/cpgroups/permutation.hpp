#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cpg {

/// A bijection on {0, ..., degree-1}, stored as its image array.
///
/// Products use the "apply left factor first" convention throughout:
/// compose(p, q) maps i to q[p[i]].
class Permutation {
 public:
  /// Throws GroupError(InvalidInput) unless `images` is a bijection on
  /// {0..size-1} with size >= 1.
  explicit Permutation(std::vector<std::uint32_t> images);

  static Permutation identity(std::size_t degree);

  std::size_t degree() const noexcept { return images_.size(); }
  std::uint32_t operator[](std::size_t point) const noexcept { return images_[point]; }
  std::span<const std::uint32_t> images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  Permutation inverse() const;

  /// Disjoint cycle notation with 1-based points, e.g. "(1 2)(3 4)"; "()" for
  /// the identity.
  std::string to_cycles() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  struct Unchecked {};
  Permutation(Unchecked, std::vector<std::uint32_t> images) : images_(std::move(images)) {}

  std::vector<std::uint32_t> images_;

  friend Permutation compose(const Permutation& p, const Permutation& q);
};

/// p first, then q. Throws on degree mismatch.
Permutation compose(const Permutation& p, const Permutation& q);

/// lcm of the cycle lengths.
std::uint64_t perm_order(const Permutation& p);

/// Parses a word of cycles such as "(1 2)(3 4)" or "(1,2,3)" on `degree`
/// points. Cycles are applied left to right; the empty word is the identity.
Permutation parse_cycles(std::string_view text, std::size_t degree);

}  // namespace cpg
