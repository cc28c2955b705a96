// Serial vs OpenMP timings for the pair and triple scans.
//
//   bench_kernels [group ...]   (default: psl2:17 symmetric:6 dicyclic:2048)

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include <omp.h>

#include "cpgroups/catalog.hpp"
#include "cpgroups/kernels.hpp"
#include "cpgroups/structure.hpp"

using namespace cpg;

template <class F>
double time_ms(F&& f, int reps = 3) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    auto t1 = std::chrono::steady_clock::now();
    best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
  }
  return best;
}

int main(int argc, char** argv) {
  std::vector<std::string> specs(argv + 1, argv + argc);
  if (specs.empty()) specs = {"psl2:17", "symmetric:6", "dicyclic:2048"};

  std::printf("threads: %d\n", omp_get_max_threads());
  std::printf("%-16s %6s  %-22s %10s %10s %8s\n", "group", "n", "kernel", "serial ms", "omp ms",
              "speedup");
  for (const auto& spec : specs) {
    const auto g = resolve_group(spec);
    const auto t = order_table(g);
    auto row = [&](const char* name, auto serial, auto parallel) {
      const double s = time_ms(serial), p = time_ms(parallel);
      std::printf("%-16s %6zu  %-22s %10.2f %10.2f %8.2f\n", spec.c_str(), g.order(), name, s, p,
                  s / p);
    };
    row("cp3 pair scan",
        [&] { (void)kernels::first_pair_violation_serial(g, t.orders, SumCondition{}); },
        [&] { (void)kernels::first_pair_violation_parallel(g, t.orders, SumCondition{}); });
    row("cp2 pair scan",
        [&] { (void)kernels::first_pair_violation_serial(g, t.orders, MaxCondition{}); },
        [&] { (void)kernels::first_pair_violation_parallel(g, t.orders, MaxCondition{}); });
    // A condition every pair satisfies forces a full n^2 sweep.
    auto always = [](std::uint32_t, std::uint32_t, std::uint32_t) { return true; };
    row("full pair sweep", [&] { (void)kernels::first_pair_violation_serial(g, t.orders, always); },
        [&] { (void)kernels::first_pair_violation_parallel(g, t.orders, always); });
    row("distance matrix", [&] { (void)kernels::distance_matrix_serial(g, t.orders); },
        [&] { (void)kernels::distance_matrix_parallel(g, t.orders); });
    if (g.order() <= 400) {
      row("raw triangle audit",
          [&] { (void)kernels::first_triangle_violation_serial(g, t.orders, false); },
          [&] { (void)kernels::first_triangle_violation_parallel(g, t.orders, false); });
    }
  }
  return 0;
}
