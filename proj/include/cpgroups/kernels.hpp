#pragma once

// Pair and triple scans over a group's multiplication. Each scan has a serial
// reference version and an OpenMP version that must agree exactly, including
// on which violation is reported (the lexicographically smallest).

#include <atomic>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "cpgroups/finite_group.hpp"

namespace cpg {

enum class Execution { Serial, Parallel };

struct PairHit {
  Index a;
  Index b;
  friend bool operator==(const PairHit&, const PairHit&) = default;
};

struct TripleHit {
  Index x;
  Index y;
  Index z;
  friend bool operator==(const TripleHit&, const TripleHit&) = default;
};

/// o(ab) < o(a) + o(b)
struct SumCondition {
  bool operator()(std::uint32_t oa, std::uint32_t ob, std::uint32_t oab) const noexcept {
    return oab < oa + ob;
  }
};

/// o(ab) <= max(o(a), o(b))
struct MaxCondition {
  bool operator()(std::uint32_t oa, std::uint32_t ob, std::uint32_t oab) const noexcept {
    return oab <= (oa > ob ? oa : ob);
  }
};

namespace kernels {

template <class Cond>
std::optional<Index> first_bad_column(const FiniteGroup& g, std::span<const std::uint32_t> orders,
                                      Index a, const Cond& ok) {
  const auto n = static_cast<Index>(g.order());
  const std::uint32_t oa = orders[a];
  if (g.has_table()) {
    auto row = g.row(a);
    for (Index b = 0; b < n; ++b)
      if (!ok(oa, orders[b], orders[row[b]])) return b;
  } else {
    for (Index b = 0; b < n; ++b)
      if (!ok(oa, orders[b], orders[g.mul(a, b)])) return b;
  }
  return std::nullopt;
}

/// First (a, b) in lexicographic order with !ok(o(a), o(b), o(ab)).
template <class Cond>
std::optional<PairHit> first_pair_violation_serial(const FiniteGroup& g,
                                                   std::span<const std::uint32_t> orders,
                                                   const Cond& ok) {
  const auto n = static_cast<Index>(g.order());
  for (Index a = 0; a < n; ++a)
    if (auto b = first_bad_column(g, orders, a, ok)) return PairHit{a, *b};
  return std::nullopt;
}

template <class Cond>
std::optional<PairHit> first_pair_violation_parallel(const FiniteGroup& g,
                                                     std::span<const std::uint32_t> orders,
                                                     const Cond& ok) {
  const auto n = static_cast<std::int64_t>(g.order());
  constexpr auto none = std::numeric_limits<Index>::max();
  std::atomic<Index> best_row{none};

#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t a = 0; a < n; ++a) {
    const auto row = static_cast<Index>(a);
    if (row >= best_row.load(std::memory_order_relaxed)) continue;
    if (first_bad_column(g, orders, row, ok)) {
      Index cur = best_row.load(std::memory_order_relaxed);
      while (row < cur && !best_row.compare_exchange_weak(cur, row)) {
      }
    }
  }

  const Index a = best_row.load();
  if (a == none) return std::nullopt;
  return PairHit{a, *first_bad_column(g, orders, a, ok)};
}

template <class Cond>
std::optional<PairHit> first_pair_violation(const FiniteGroup& g,
                                            std::span<const std::uint32_t> orders,
                                            const Cond& ok, Execution exec = Execution::Parallel) {
  return exec == Execution::Serial ? first_pair_violation_serial(g, orders, ok)
                                   : first_pair_violation_parallel(g, orders, ok);
}

/// Row-major n x n matrix of o(x y^-1) - 1.
std::vector<std::uint32_t> distance_matrix_serial(const FiniteGroup& g,
                                                  std::span<const std::uint32_t> orders);
std::vector<std::uint32_t> distance_matrix_parallel(const FiniteGroup& g,
                                                    std::span<const std::uint32_t> orders);

/// Raw triangle check d(x,z) <= d(x,y) + d(y,z) (or <= max for the ultrametric
/// form) over all triples; returns the lexicographically first failing triple.
std::optional<TripleHit> first_triangle_violation_serial(const FiniteGroup& g,
                                                         std::span<const std::uint32_t> orders,
                                                         bool ultrametric);
std::optional<TripleHit> first_triangle_violation_parallel(const FiniteGroup& g,
                                                           std::span<const std::uint32_t> orders,
                                                           bool ultrametric);

}  // namespace kernels
}  // namespace cpg
