#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace cpg {

/// Fixed-universe bitset over element indices.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}

  std::size_t universe() const noexcept { return universe_; }

  bool contains(std::size_t i) const noexcept {
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }
  void insert(std::size_t i) noexcept { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void erase(std::size_t i) noexcept { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool is_subset_of(const ElementSet& other) const noexcept {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & ~other.words_[k]) return false;
    return true;
  }

  ElementSet& operator&=(const ElementSet& other) noexcept {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= other.words_[k];
    return *this;
  }
  ElementSet& operator|=(const ElementSet& other) noexcept {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= other.words_[k];
    return *this;
  }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }

  /// Calls f(i) for each member in increasing order.
  template <class F>
  void for_each(F&& f) const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      std::uint64_t w = words_[k];
      while (w) {
        f(k * 64 + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  std::vector<std::uint32_t> members() const {
    std::vector<std::uint32_t> out;
    out.reserve(count());
    for_each([&](std::size_t i) { out.push_back(static_cast<std::uint32_t>(i)); });
    return out;
  }

  const std::vector<std::uint64_t>& words() const noexcept { return words_; }

  /// Lowercase hex, most significant nibble first; bit i is element i.
  std::string to_hex() const {
    static constexpr char digits[] = "0123456789abcdef";
    std::size_t nibbles = universe_ == 0 ? 1 : (universe_ + 3) / 4;
    std::string out(nibbles, '0');
    for (std::size_t n = 0; n < nibbles; ++n) {
      unsigned v = 0;
      for (std::size_t b = 0; b < 4; ++b) {
        std::size_t i = n * 4 + b;
        if (i < universe_ && contains(i)) v |= 1u << b;
      }
      out[nibbles - 1 - n] = digits[v];
    }
    return out;
  }

  friend bool operator==(const ElementSet&, const ElementSet&) = default;

  /// Orders by size first, then by bit pattern (lowest differing element
  /// present sorts first).
  friend bool size_then_bits_less(const ElementSet& a, const ElementSet& b) {
    auto ca = a.count(), cb = b.count();
    if (ca != cb) return ca < cb;
    for (std::size_t k = 0; k < a.words_.size(); ++k) {
      if (a.words_[k] == b.words_[k]) continue;
      std::uint64_t diff = a.words_[k] ^ b.words_[k];
      return (a.words_[k] >> std::countr_zero(diff)) & 1u;
    }
    return false;
  }

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (auto w : s.words()) {
      h ^= std::hash<std::uint64_t>{}(w);
      h *= 0x100000001b3ull;
    }
    return h;
  }
};

}  // namespace cpg
