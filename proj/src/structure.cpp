#include "cpgroups/structure.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include "cpgroups/errors.hpp"

namespace cpg {

std::uint32_t element_order(const FiniteGroup& g, Index a) {
  if (!g.permutations().empty()) return static_cast<std::uint32_t>(perm_order(g.permutations()[a]));
  std::uint32_t k = 1;
  for (Index x = a; x != FiniteGroup::identity(); x = g.mul(x, a)) {
    ++k;
    if (k > g.order()) fail(ErrorKind::Internal, "element order exceeds group order");
  }
  return k;
}

OrderTable order_table(const FiniteGroup& g) {
  OrderTable t;
  const auto n = static_cast<std::int64_t>(g.order());
  t.orders.resize(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(static)
  for (std::int64_t a = 0; a < n; ++a) t.orders[a] = element_order(g, static_cast<Index>(a));

  std::set<std::uint32_t> distinct(t.orders.begin(), t.orders.end());
  t.max_order = *distinct.rbegin();
  std::set<std::uint32_t> primes;
  for (auto o : distinct) {
    for (std::uint32_t p = 2; p * p <= o; ++p) {
      if (o % p) continue;
      primes.insert(p);
      while (o % p == 0) o /= p;
    }
    if (o > 1) primes.insert(o);
  }
  t.primes.assign(primes.begin(), primes.end());
  return t;
}

std::vector<std::vector<Index>> conjugacy_classes(const FiniteGroup& g) {
  const auto n = static_cast<Index>(g.order());
  std::vector<bool> assigned(n, false);
  std::vector<std::vector<Index>> classes;
  for (Index x = 0; x < n; ++x) {
    if (assigned[x]) continue;
    ElementSet orbit(n);
    for (Index y = 0; y < n; ++y) orbit.insert(g.mul(g.mul(g.inv(y), x), y));
    auto members = orbit.members();
    for (auto m : members) assigned[m] = true;
    classes.push_back(std::move(members));
  }
  return classes;
}

bool is_abelian(const FiniteGroup& g) {
  const auto n = static_cast<Index>(g.order());
  for (Index a = 0; a < n; ++a)
    for (Index b = a + 1; b < n; ++b)
      if (g.mul(a, b) != g.mul(b, a)) return false;
  return true;
}

bool is_abelian(const FiniteGroup& g, const SubgroupSet& h) {
  const auto elems = h.members();
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = i + 1; j < elems.size(); ++j)
      if (g.mul(elems[i], elems[j]) != g.mul(elems[j], elems[i])) return false;
  return true;
}

SubgroupSet center(const FiniteGroup& g) {
  const auto n = static_cast<Index>(g.order());
  SubgroupSet z(g.order());
  for (Index a = 0; a < n; ++a) {
    bool central = true;
    for (Index b = 0; b < n && central; ++b) central = g.mul(a, b) == g.mul(b, a);
    if (central) z.insert(a);
  }
  return z;
}

std::optional<PGroupInfo> p_group_of_order(std::size_t order) {
  if (order == 1) return PGroupInfo{};
  std::size_t p = 2;
  while (order % p) ++p;
  std::uint32_t e = 0;
  while (order % p == 0) {
    order /= p;
    ++e;
  }
  if (order != 1) return std::nullopt;
  return PGroupInfo{static_cast<std::uint32_t>(p), e};
}

std::optional<PGroupInfo> is_p_group(const FiniteGroup& g) { return p_group_of_order(g.order()); }

bool is_subgroup(const FiniteGroup& g, const ElementSet& s) {
  if (!s.contains(FiniteGroup::identity())) return false;
  const auto elems = s.members();
  for (auto a : elems)
    for (auto b : elems)
      if (!s.contains(g.mul(a, b))) return false;
  return true;
}

bool is_normal(const FiniteGroup& g, const SubgroupSet& h) {
  const auto n = static_cast<Index>(g.order());
  const auto elems = h.members();
  for (Index y = 1; y < n; ++y)
    for (auto x : elems)
      if (!h.contains(g.mul(g.mul(g.inv(y), x), y))) return false;
  return true;
}

SubgroupSet extend_subgroup(const FiniteGroup& g, const SubgroupSet& h,
                            std::span<const Index> h_members,
                            std::span<const Index> h_generators, Index x) {
  if (h.contains(x)) return h;
  SubgroupSet result = h;
  std::vector<Index> gens(h_generators.begin(), h_generators.end());
  gens.push_back(x);

  // Right cosets h*t; a coset times a generator is again a coset.
  std::vector<Index> reps;
  auto add_coset = [&](Index t) {
    for (auto m : h_members) result.insert(g.mul(m, t));
    reps.push_back(t);
  };
  add_coset(x);
  for (std::size_t pos = 0; pos < reps.size(); ++pos)
    for (auto s : gens) {
      const Index t = g.mul(reps[pos], s);
      if (!result.contains(t)) add_coset(t);
    }
  return result;
}

SubgroupSet closure(const FiniteGroup& g, std::span<const Index> generators) {
  SubgroupSet h = trivial_subgroup(g);
  std::vector<Index> members{FiniteGroup::identity()};
  std::vector<Index> gens;
  for (auto x : generators) {
    if (h.contains(x)) continue;
    h = extend_subgroup(g, h, members, gens, x);
    members = h.members();
    gens.push_back(x);
  }
  return h;
}

SubgroupSet whole_group(const FiniteGroup& g) {
  SubgroupSet s(g.order());
  for (Index i = 0; i < g.order(); ++i) s.insert(i);
  return s;
}

SubgroupSet trivial_subgroup(const FiniteGroup& g) {
  SubgroupSet s(g.order());
  s.insert(FiniteGroup::identity());
  return s;
}

namespace {

std::vector<Index> conjugates(const FiniteGroup& g, Index x) {
  ElementSet orbit(g.order());
  for (Index y = 0; y < g.order(); ++y) orbit.insert(g.mul(g.mul(g.inv(y), x), y));
  return orbit.members();
}

std::vector<SubgroupSet> normal_by_class_union(const FiniteGroup& g,
                                               const std::vector<std::vector<Index>>& classes) {
  const std::size_t n = g.order();
  const std::size_t k = classes.size() - 1;  // classes[0] is {e}
  if (k > 30) fail(ErrorKind::CapExceeded, "too many conjugacy classes for a class-union scan");

  std::vector<SubgroupSet> found;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    std::size_t size = 1;
    for (std::size_t c = 0; c < k; ++c)
      if (mask >> c & 1u) size += classes[c + 1].size();
    if (n % size) continue;

    SubgroupSet s = trivial_subgroup(g);
    for (std::size_t c = 0; c < k; ++c)
      if (mask >> c & 1u)
        for (auto x : classes[c + 1]) s.insert(x);

    // s is conjugation invariant, so closure only needs class representatives
    // on the left: (y r y^-1) b = y (r (y^-1 b y)) y^-1.
    const auto members = s.members();
    bool closed = true;
    for (std::size_t c = 0; c < k && closed; ++c) {
      if (!(mask >> c & 1u)) continue;
      const Index r = classes[c + 1].front();
      for (auto b : members)
        if (!s.contains(g.mul(r, b))) {
          closed = false;
          break;
        }
    }
    if (closed) found.push_back(std::move(s));
  }
  return found;
}

struct GeneratedSubgroup {
  SubgroupSet set;
  std::vector<Index> generators;
};

std::vector<SubgroupSet> normal_by_closure_join(const FiniteGroup& g,
                                                const std::vector<std::vector<Index>>& classes) {
  std::vector<std::vector<Index>> seeds;  // conjugacy classes as generating sets
  for (std::size_t c = 1; c < classes.size(); ++c) seeds.push_back(classes[c]);

  std::unordered_set<SubgroupSet, ElementSetHash> seen;
  std::vector<GeneratedSubgroup> known;
  known.push_back({trivial_subgroup(g), {}});
  seen.insert(known.front().set);

  for (std::size_t pos = 0; pos < known.size(); ++pos) {
    for (const auto& seed : seeds) {
      if (known[pos].set.contains(seed.front())) continue;
      GeneratedSubgroup next = known[pos];
      auto members = next.set.members();
      for (auto x : seed) {
        if (next.set.contains(x)) continue;
        next.set = extend_subgroup(g, next.set, members, next.generators, x);
        members = next.set.members();
        next.generators.push_back(x);
      }
      if (seen.insert(next.set).second) known.push_back(std::move(next));
    }
  }

  std::vector<SubgroupSet> out;
  out.reserve(known.size());
  for (auto& k : known) out.push_back(std::move(k.set));
  return out;
}

}  // namespace

SubgroupSet normal_closure(const FiniteGroup& g, Index x) {
  const auto conj = conjugates(g, x);
  return closure(g, conj);
}

SubgroupSet derived_subgroup(const FiniteGroup& g, const SubgroupSet& h) {
  const auto elems = h.members();
  ElementSet commutators(g.order());
  for (auto a : elems) {
    const Index ai = g.inv(a);
    for (auto b : elems) commutators.insert(g.mul(g.mul(ai, g.inv(b)), g.mul(a, b)));
  }
  return closure(g, commutators.members());
}

std::vector<SubgroupSet> derived_series(const FiniteGroup& g) {
  std::vector<SubgroupSet> series{whole_group(g)};
  while (true) {
    auto next = derived_subgroup(g, series.back());
    if (next == series.back()) break;
    series.push_back(std::move(next));
  }
  return series;
}

bool is_solvable(const FiniteGroup& g) { return derived_series(g).back().count() == 1; }

std::vector<SubgroupSet> normal_subgroups(const FiniteGroup& g, NormalSubgroupMethod method) {
  const auto classes = conjugacy_classes(g);
  if (method == NormalSubgroupMethod::Auto)
    method = classes.size() <= 21 ? NormalSubgroupMethod::ClassUnion
                                  : NormalSubgroupMethod::NormalClosureJoin;
  auto found = method == NormalSubgroupMethod::ClassUnion ? normal_by_class_union(g, classes)
                                                          : normal_by_closure_join(g, classes);
  std::sort(found.begin(), found.end(),
            [](const SubgroupSet& a, const SubgroupSet& b) { return size_then_bits_less(a, b); });
  return found;
}

bool is_simple(const FiniteGroup& g) {
  if (g.order() == 1) return false;
  for (const auto& cls : conjugacy_classes(g)) {
    if (cls.front() == FiniteGroup::identity()) continue;
    if (normal_closure(g, cls.front()).count() != g.order()) return false;
  }
  return true;
}

FiniteGroup quotient(const FiniteGroup& g, const SubgroupSet& n) {
  if (n.universe() != g.order() || !is_subgroup(g, n) || !is_normal(g, n))
    fail(ErrorKind::NotNormal, "quotient requires a normal subgroup");

  constexpr Index unassigned = ~Index{0};
  const auto members = n.members();
  std::vector<Index> coset_of(g.order(), unassigned);
  std::vector<Index> reps;
  std::vector<std::string> labels;
  for (Index x = 0; x < g.order(); ++x) {
    if (coset_of[x] != unassigned) continue;
    const auto id = static_cast<Index>(reps.size());
    reps.push_back(x);
    std::vector<Index> coset;
    for (auto m : members) {
      coset_of[g.mul(x, m)] = id;
      coset.push_back(g.mul(x, m));
    }
    std::sort(coset.begin(), coset.end());
    std::string label = "{";
    for (std::size_t i = 0; i < coset.size() && i < 8; ++i) {
      if (i) label += ", ";
      label += g.label(coset[i]);
    }
    if (coset.size() > 8) label += ", ...";
    labels.push_back(label + "}");
  }

  const std::size_t m = reps.size();
  std::vector<Index> table(m * m);
  for (Index i = 0; i < m; ++i)
    for (Index j = 0; j < m; ++j) table[i * m + j] = coset_of[g.mul(reps[i], reps[j])];

  for (Index a = 0; a < g.order(); ++a)
    for (Index b = 0; b < g.order(); ++b)
      if (coset_of[g.mul(a, b)] != table[coset_of[a] * m + coset_of[b]])
        fail(ErrorKind::Internal, "coset multiplication is not well defined");

  auto q = FiniteGroup::from_table(m, std::move(table), std::move(labels), GroupSource::Quotient);
  if (!g.name().empty()) q.set_name(g.name() + "/N" + std::to_string(n.count()));
  return q;
}

}  // namespace cpg
