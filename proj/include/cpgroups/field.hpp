#pragma once

#include <cstdint>
#include <vector>

namespace cpg {

/// GF(p^k) with lookup tables. Element e encodes the polynomial
/// sum c_i x^i with e = sum c_i p^i; 0 is zero and 1 is one.
class FieldTable {
 public:
  std::uint32_t p() const noexcept { return p_; }
  std::uint32_t k() const noexcept { return k_; }
  std::uint32_t q() const noexcept { return q_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept { return add_[a * q_ + b]; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept { return mul_[a * q_ + b]; }
  std::uint32_t neg(std::uint32_t a) const noexcept { return neg_[a]; }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const noexcept { return add(a, neg(b)); }
  /// Multiplicative inverse; a must be nonzero.
  std::uint32_t inv(std::uint32_t a) const noexcept { return inv_[a]; }

  /// Monic reduction polynomial, constant term first (empty for prime fields).
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

  /// Commutativity, associativity, distributivity, identities, inverses and
  /// characteristic, all checked exhaustively.
  bool verify_axioms() const;

 private:
  friend FieldTable make_field(std::uint32_t p, std::uint32_t k);

  std::uint32_t p_ = 0, k_ = 0, q_ = 0;
  std::vector<std::uint32_t> add_, mul_, neg_, inv_;
  std::vector<std::uint32_t> modulus_;
};

/// Prime fields for p <= 31, plus GF(4), GF(8), GF(9), GF(16), GF(25),
/// GF(27), GF(32) with fixed reduction polynomials. Throws InvalidInput for
/// anything else, Internal if the self-check fails.
FieldTable make_field(std::uint32_t p, std::uint32_t k);

}  // namespace cpg
