#include "cpgroups/kernels.hpp"

#include <algorithm>

namespace cpg::kernels {

namespace {

inline std::uint32_t dist(const FiniteGroup& g, std::span<const std::uint32_t> orders, Index x,
                          Index y) {
  return orders[g.mul(x, g.inv(y))] - 1;
}

// First (y, z) for fixed x violating the raw inequality, given a precomputed
// distance matrix.
std::optional<std::pair<Index, Index>> first_bad_triple_row(const std::vector<std::uint32_t>& d,
                                                            std::size_t n, Index x,
                                                            bool ultrametric) {
  for (Index y = 0; y < n; ++y) {
    const std::uint32_t dxy = d[x * n + y];
    for (Index z = 0; z < n; ++z) {
      const std::uint32_t dxz = d[x * n + z];
      const std::uint32_t dyz = d[y * n + z];
      const bool ok = ultrametric ? dxz <= std::max(dxy, dyz) : dxz <= dxy + dyz;
      if (!ok) return std::pair{y, z};
    }
  }
  return std::nullopt;
}

}  // namespace

std::vector<std::uint32_t> distance_matrix_serial(const FiniteGroup& g,
                                                  std::span<const std::uint32_t> orders) {
  const std::size_t n = g.order();
  std::vector<std::uint32_t> d(n * n);
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y) d[x * n + y] = dist(g, orders, x, y);
  return d;
}

std::vector<std::uint32_t> distance_matrix_parallel(const FiniteGroup& g,
                                                    std::span<const std::uint32_t> orders) {
  const std::size_t n = g.order();
  std::vector<std::uint32_t> d(n * n);
#pragma omp parallel for schedule(static)
  for (std::int64_t x = 0; x < static_cast<std::int64_t>(n); ++x)
    for (Index y = 0; y < n; ++y)
      d[static_cast<std::size_t>(x) * n + y] = dist(g, orders, static_cast<Index>(x), y);
  return d;
}

std::optional<TripleHit> first_triangle_violation_serial(const FiniteGroup& g,
                                                         std::span<const std::uint32_t> orders,
                                                         bool ultrametric) {
  const std::size_t n = g.order();
  const auto d = distance_matrix_serial(g, orders);
  for (Index x = 0; x < n; ++x)
    if (auto yz = first_bad_triple_row(d, n, x, ultrametric))
      return TripleHit{x, yz->first, yz->second};
  return std::nullopt;
}

std::optional<TripleHit> first_triangle_violation_parallel(const FiniteGroup& g,
                                                           std::span<const std::uint32_t> orders,
                                                           bool ultrametric) {
  const std::size_t n = g.order();
  const auto d = distance_matrix_parallel(g, orders);
  constexpr auto none = std::numeric_limits<Index>::max();
  std::atomic<Index> best_row{none};

#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t xi = 0; xi < static_cast<std::int64_t>(n); ++xi) {
    const auto x = static_cast<Index>(xi);
    if (x >= best_row.load(std::memory_order_relaxed)) continue;
    if (first_bad_triple_row(d, n, x, ultrametric)) {
      Index cur = best_row.load(std::memory_order_relaxed);
      while (x < cur && !best_row.compare_exchange_weak(cur, x)) {
      }
    }
  }

  const Index x = best_row.load();
  if (x == none) return std::nullopt;
  auto yz = *first_bad_triple_row(d, n, x, ultrametric);
  return TripleHit{x, yz.first, yz.second};
}

}  // namespace cpg::kernels
