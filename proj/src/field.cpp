#include "cpgroups/field.hpp"

#include <map>
#include <utility>

#include "cpgroups/errors.hpp"

namespace cpg {

namespace {

bool is_small_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Monic reduction polynomials, constant term first.
const std::map<std::pair<std::uint32_t, std::uint32_t>, std::vector<std::uint32_t>>& moduli() {
  static const std::map<std::pair<std::uint32_t, std::uint32_t>, std::vector<std::uint32_t>> m{
      {{2, 2}, {1, 1, 1}},           // x^2 + x + 1
      {{2, 3}, {1, 1, 0, 1}},        // x^3 + x + 1
      {{3, 2}, {1, 0, 1}},           // x^2 + 1
      {{2, 4}, {1, 1, 0, 0, 1}},     // x^4 + x + 1
      {{5, 2}, {1, 1, 1}},           // x^2 + x + 1
      {{3, 3}, {1, 2, 0, 1}},        // x^3 + 2x + 1
      {{2, 5}, {1, 0, 1, 0, 0, 1}},  // x^5 + x^2 + 1
  };
  return m;
}

std::vector<std::uint32_t> digits(std::uint32_t e, std::uint32_t p, std::uint32_t k) {
  std::vector<std::uint32_t> d(k);
  for (auto& c : d) {
    c = e % p;
    e /= p;
  }
  return d;
}

std::uint32_t encode(const std::vector<std::uint32_t>& d, std::uint32_t p, std::uint32_t k) {
  std::uint32_t e = 0;
  for (std::uint32_t i = k; i-- > 0;) e = e * p + d[i];
  return e;
}

}  // namespace

FieldTable make_field(std::uint32_t p, std::uint32_t k) {
  if (!is_small_prime(p) || p > 31 || k == 0)
    fail(ErrorKind::InvalidInput, "unsupported field GF(" + std::to_string(p) + "^" +
                                      std::to_string(k) + ")");
  std::vector<std::uint32_t> modulus;
  if (k > 1) {
    auto it = moduli().find({p, k});
    if (it == moduli().end())
      fail(ErrorKind::InvalidInput, "unsupported field GF(" + std::to_string(p) + "^" +
                                        std::to_string(k) + ")");
    modulus = it->second;
  }

  FieldTable f;
  f.p_ = p;
  f.k_ = k;
  f.q_ = 1;
  for (std::uint32_t i = 0; i < k; ++i) f.q_ *= p;
  f.modulus_ = modulus;
  const std::uint32_t q = f.q_;

  f.add_.resize(q * q);
  f.mul_.resize(q * q);
  for (std::uint32_t a = 0; a < q; ++a) {
    const auto da = digits(a, p, k);
    for (std::uint32_t b = 0; b < q; ++b) {
      const auto db = digits(b, p, k);
      std::vector<std::uint32_t> sum(k);
      for (std::uint32_t i = 0; i < k; ++i) sum[i] = (da[i] + db[i]) % p;
      f.add_[a * q + b] = encode(sum, p, k);

      std::vector<std::uint32_t> prod(2 * k - 1, 0);
      for (std::uint32_t i = 0; i < k; ++i)
        for (std::uint32_t j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
      // x^d = -(lower terms of the modulus) for d >= k
      for (std::uint32_t d = 2 * k - 1; d-- > k;) {
        const std::uint32_t c = prod[d];
        if (!c) continue;
        prod[d] = 0;
        for (std::uint32_t i = 0; i < k; ++i)
          prod[d - k + i] = (prod[d - k + i] + (p - modulus[i]) * c) % p;
      }
      prod.resize(k);
      f.mul_[a * q + b] = encode(prod, p, k);
    }
  }

  f.neg_.assign(q, 0);
  f.inv_.assign(q, 0);
  for (std::uint32_t a = 0; a < q; ++a)
    for (std::uint32_t b = 0; b < q; ++b) {
      if (f.add(a, b) == 0) f.neg_[a] = b;
      if (f.mul(a, b) == 1) f.inv_[a] = b;
    }

  if (!f.verify_axioms())
    fail(ErrorKind::Internal, "field self-check failed for GF(" + std::to_string(q) + ")");
  return f;
}

bool FieldTable::verify_axioms() const {
  const std::uint32_t n = q_;
  for (std::uint32_t a = 0; a < n; ++a) {
    if (add(a, 0) != a || mul(a, 1) != a || mul(a, 0) != 0) return false;
    if (add(a, neg(a)) != 0) return false;
    if (a != 0 && mul(a, inv(a)) != 1) return false;
    for (std::uint32_t b = 0; b < n; ++b) {
      if (add(a, b) != add(b, a) || mul(a, b) != mul(b, a)) return false;
      for (std::uint32_t c = 0; c < n; ++c) {
        if (add(add(a, b), c) != add(a, add(b, c))) return false;
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) return false;
        if (mul(a, add(b, c)) != add(mul(a, b), mul(a, c))) return false;
      }
    }
  }
  std::uint32_t acc = 0;
  for (std::uint32_t i = 0; i < p_; ++i) acc = add(acc, 1);
  return acc == 0;
}

}  // namespace cpg
