#include "cpgroups/metric.hpp"

#include "cpgroups/errors.hpp"

namespace cpg {

const char* to_string(Condition c) {
  switch (c) {
    case Condition::CP: return "CP";
    case Condition::CP2: return "CP2";
    case Condition::CP3: return "CP3";
    case Condition::Triangle: return "triangle";
    case Condition::Custom: return "custom";
  }
  return "unknown";
}

namespace {

Witness pair_witness(const FiniteGroup& g, const OrderTable& t, PairHit hit, Condition tag) {
  return Witness{hit.a,
                 hit.b,
                 t.orders[hit.a],
                 t.orders[hit.b],
                 t.orders[g.mul(hit.a, hit.b)],
                 tag,
                 std::nullopt};
}

template <class Cond>
Membership scan(const FiniteGroup& g, const OrderTable& t, const Cond& ok, Condition tag,
                Execution exec) {
  auto hit = kernels::first_pair_violation(g, t.orders, ok, exec);
  if (!hit) return {};
  return {false, pair_witness(g, t, *hit, tag)};
}

}  // namespace

std::uint32_t distance(const FiniteGroup& g, const OrderTable& t, Index x, Index y) {
  return t.orders[g.mul(x, g.inv(y))] - 1;
}

std::vector<std::uint32_t> distance_matrix(const FiniteGroup& g, const OrderTable& t,
                                           const Limits& limits, Execution exec) {
  if (g.order() > limits.table_threshold)
    fail(ErrorKind::CapExceeded, "distance matrix limited to " +
                                     std::to_string(limits.table_threshold) + " elements");
  return exec == Execution::Serial ? kernels::distance_matrix_serial(g, t.orders)
                                   : kernels::distance_matrix_parallel(g, t.orders);
}

Membership is_cp(const FiniteGroup& g, const OrderTable& t) {
  for (Index x = 0; x < g.order(); ++x) {
    const std::uint32_t o = t.orders[x];
    std::uint32_t primes[2] = {0, 0};
    std::uint32_t found = 0, rest = o;
    for (std::uint32_t p = 2; p <= rest && found < 2; ++p) {
      if (rest % p) continue;
      primes[found++] = p;
      while (rest % p == 0) rest /= p;
    }
    if (found < 2) continue;

    PrimeSplit split;
    split.p = primes[0];
    split.q = primes[1];
    split.p_part = g.power(x, o / split.p);
    split.q_part = g.power(x, o / split.q);
    split.product_order = t.orders[g.mul(split.p_part, split.q_part)];
    return {false, Witness{x, x, o, o, split.product_order, Condition::CP, split}};
  }
  return {};
}

Membership is_cp2(const FiniteGroup& g, const OrderTable& t, Execution exec) {
  return scan(g, t, MaxCondition{}, Condition::CP2, exec);
}

Membership is_cp3(const FiniteGroup& g, const OrderTable& t, Execution exec) {
  return scan(g, t, SumCondition{}, Condition::CP3, exec);
}

std::optional<Witness> involution_witness(const FiniteGroup& g, const OrderTable& t) {
  std::vector<Index> involutions;
  for (Index x = 0; x < g.order(); ++x)
    if (t.orders[x] == 2) involutions.push_back(x);
  for (auto a : involutions)
    for (auto b : involutions)
      if (t.orders[g.mul(a, b)] > 3) return pair_witness(g, t, PairHit{a, b}, Condition::CP3);
  return std::nullopt;
}

Membership check_order_condition(const FiniteGroup& g, const OrderTable& t,
                                 const OrderCondition& ok, Condition tag, Execution exec) {
  return scan(g, t, ok, tag, exec);
}

MetricAxioms check_metric_axioms(const FiniteGroup& g, const OrderTable& t, bool audit,
                                 const Limits& limits) {
  if (g.order() > limits.table_threshold)
    fail(ErrorKind::CapExceeded, "metric check limited to " +
                                     std::to_string(limits.table_threshold) + " elements");
  if (audit && g.order() > kAuditMaxOrder)
    fail(ErrorKind::CapExceeded, "triangle audit limited to " + std::to_string(kAuditMaxOrder) +
                                     " elements");

  MetricAxioms m;
  const auto n = static_cast<Index>(g.order());
  bool identity = true, symmetry = true;
#pragma omp parallel for schedule(static) reduction(&& : identity, symmetry)
  for (std::int64_t xi = 0; xi < static_cast<std::int64_t>(n); ++xi) {
    const auto x = static_cast<Index>(xi);
    for (Index y = 0; y < n; ++y) {
      const auto dxy = distance(g, t, x, y);
      if ((dxy == 0) != (x == y)) identity = false;
      if (dxy != distance(g, t, y, x)) symmetry = false;
    }
  }
  m.identity = identity;
  m.symmetry = symmetry;

  auto cp3 = is_cp3(g, t);
  m.triangle = cp3.member;
  if (cp3.witness) {
    m.triangle_witness = Witness{*cp3.witness};
    m.triangle_witness->violated = Condition::Triangle;
    // With z = e, y = b, x = ab: x y^-1 = a and y z^-1 = b.
    const Index a = cp3.witness->a, b = cp3.witness->b;
    m.triangle_triple = TripleHit{g.mul(a, b), b, FiniteGroup::identity()};
  }
  auto cp2 = is_cp2(g, t);
  m.ultrametric = cp2.member;
  m.ultrametric_witness = cp2.witness;

  if (audit) {
    m.audited = true;
    auto raw = kernels::first_triangle_violation_parallel(g, t.orders, false);
    m.raw_triangle = !raw;
    m.raw_violation = raw;
    m.raw_ultrametric = !kernels::first_triangle_violation_parallel(g, t.orders, true);
  }
  return m;
}

bool LayerReport::all_normal_subgroups() const {
  for (const auto& l : layers)
    if (!l.is_subgroup || !l.is_normal) return false;
  return true;
}

LayerReport layer_check(const FiniteGroup& g, const OrderTable& t) {
  auto info = is_p_group(g);
  if (!info) fail(ErrorKind::NotPGroup, "layer check requires a p-group");

  LayerReport report;
  report.group = *info;
  std::uint64_t bound = 1;
  for (std::uint32_t i = 0; i <= info->exponent; ++i) {
    ElementSet layer(g.order());
    for (Index x = 0; x < g.order(); ++x)
      if (t.orders[x] <= bound) layer.insert(x);
    Layer l;
    l.bound = bound;
    l.size = layer.count();
    l.is_subgroup = is_subgroup(g, layer);
    l.is_normal = l.is_subgroup && is_normal(g, layer);
    report.layers.push_back(l);
    bound *= info->prime;
  }
  return report;
}

ClassReport classify(const FiniteGroup& g, bool audit, const Limits& limits) {
  const auto t = order_table(g);
  ClassReport r;
  r.name = g.name();
  r.order = g.order();
  for (auto o : t.orders) ++r.order_counts[o];

  auto cp = is_cp(g, t);
  r.in_cp = cp.member;
  r.cp_witness = cp.witness;

  r.axioms = check_metric_axioms(g, t, audit, limits);
  r.in_cp3 = r.axioms.triangle;
  if (r.axioms.triangle_witness) {
    r.cp3_witness = r.axioms.triangle_witness;
    r.cp3_witness->violated = Condition::CP3;
  }
  r.in_cp2 = r.axioms.ultrametric;
  r.cp2_witness = r.axioms.ultrametric_witness;

  if ((r.in_cp2 && !r.in_cp3) || (r.in_cp3 && !r.in_cp))
    fail(ErrorKind::Internal, "class hierarchy CP2 => CP3 => CP violated for " + g.name());
  if (!r.axioms.identity || !r.axioms.symmetry)
    fail(ErrorKind::Internal, "distance identity or symmetry axiom failed for " + g.name());
  return r;
}

}  // namespace cpg
