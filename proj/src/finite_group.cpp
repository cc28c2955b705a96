#include "cpgroups/finite_group.hpp"

#include <algorithm>
#include <set>

#include "cpgroups/errors.hpp"

namespace cpg {

namespace {

std::u32string key_of(std::span<const std::uint32_t> images) {
  return std::u32string(images.begin(), images.end());
}

std::vector<std::string> default_labels(std::size_t n) {
  std::vector<std::string> labels(n);
  labels[0] = "e";
  for (std::size_t i = 1; i < n; ++i) labels[i] = "g" + std::to_string(i);
  return labels;
}

}  // namespace

const char* to_string(GroupSource source) {
  switch (source) {
    case GroupSource::GeneratedPermutation: return "generated-permutation";
    case GroupSource::CayleyTable: return "cayley-table";
    case GroupSource::Product: return "product";
    case GroupSource::Quotient: return "quotient";
    case GroupSource::Subgroup: return "subgroup";
  }
  return "unknown";
}

Index FiniteGroup::power(Index a, std::uint64_t k) const {
  Index result = identity();
  Index base = a;
  while (k) {
    if (k & 1u) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

std::optional<Index> FiniteGroup::find(const Permutation& p) const {
  if (!lookup_) return std::nullopt;
  auto it = lookup_->find(key_of(p.images()));
  if (it == lookup_->end()) return std::nullopt;
  return it->second;
}

Index FiniteGroup::mul_by_composition(Index a, Index b) const {
  const auto& pa = perms_[a];
  const auto& pb = perms_[b];
  std::u32string key(pa.degree(), U'\0');
  for (std::size_t i = 0; i < key.size(); ++i) key[i] = pb[pa[i]];
  return lookup_->at(key);
}

void FiniteGroup::derive_inverses() {
  inv_.assign(n_, 0);
  for (Index a = 0; a < n_; ++a) {
    bool found = false;
    for (Index b = 0; b < n_; ++b) {
      if (mul(a, b) == identity()) {
        inv_[a] = b;
        found = true;
        break;
      }
    }
    if (!found) fail(ErrorKind::InvalidInput, "element " + std::to_string(a) + " has no inverse");
  }
}

FiniteGroup FiniteGroup::from_table(std::size_t n, std::vector<Index> table,
                                    std::vector<std::string> labels, GroupSource source) {
  if (n == 0) fail(ErrorKind::InvalidInput, "a group needs at least one element");
  if (table.size() != n * n) fail(ErrorKind::Internal, "table size does not match order");
  FiniteGroup g;
  g.n_ = n;
  g.table_ = std::move(table);
  g.labels_ = labels.empty() ? default_labels(n) : std::move(labels);
  g.source_ = source;
  g.derive_inverses();
  return g;
}

FiniteGroup FiniteGroup::from_permutations(std::vector<Permutation> elements, const Limits& limits) {
  if (elements.empty() || !elements.front().is_identity())
    fail(ErrorKind::Internal, "permutation list must start with the identity");
  if (elements.size() > limits.max_elements)
    fail(ErrorKind::CapExceeded, "group order " + std::to_string(elements.size()) +
                                     " exceeds the element cap " +
                                     std::to_string(limits.max_elements));

  FiniteGroup g;
  g.n_ = elements.size();
  g.source_ = GroupSource::GeneratedPermutation;

  auto lookup = std::make_shared<std::unordered_map<std::u32string, Index>>();
  lookup->reserve(g.n_ * 2);
  for (Index i = 0; i < g.n_; ++i) {
    if (!lookup->emplace(key_of(elements[i].images()), i).second)
      fail(ErrorKind::Internal, "duplicate permutation in element list");
  }
  g.lookup_ = std::move(lookup);

  g.labels_.reserve(g.n_);
  for (const auto& p : elements) g.labels_.push_back(p.to_cycles());
  g.perms_ = std::move(elements);

  const std::size_t n = g.n_;
  const std::size_t degree = g.perms_.front().degree();
  if (n <= limits.table_threshold) {
    std::vector<Index> table(n * n);
    bool closed = true;
#pragma omp parallel for schedule(static) reduction(&& : closed)
    for (std::int64_t a = 0; a < static_cast<std::int64_t>(n); ++a) {
      std::u32string key(degree, U'\0');
      const auto& pa = g.perms_[a];
      for (std::size_t b = 0; b < n; ++b) {
        const auto& pb = g.perms_[b];
        for (std::size_t i = 0; i < degree; ++i) key[i] = pb[pa[i]];
        auto it = g.lookup_->find(key);
        if (it == g.lookup_->end()) {
          closed = false;
          continue;
        }
        table[static_cast<std::size_t>(a) * n + b] = it->second;
      }
    }
    if (!closed) fail(ErrorKind::Internal, "permutation list is not closed under composition");
    g.table_ = std::move(table);
  }

  g.inv_.resize(n);
  for (Index a = 0; a < n; ++a) g.inv_[a] = g.lookup_->at(key_of(g.perms_[a].inverse().images()));
  return g;
}

FiniteGroup from_cayley(const std::vector<std::vector<Index>>& table, const Limits& limits) {
  const std::size_t n = table.size();
  if (n == 0) fail(ErrorKind::InvalidInput, "empty Cayley table");
  if (n > limits.max_cayley_check)
    fail(ErrorKind::CapExceeded, "Cayley table of order " + std::to_string(n) +
                                     " exceeds the associativity-check cap " +
                                     std::to_string(limits.max_cayley_check));
  std::vector<Index> flat;
  flat.reserve(n * n);
  for (const auto& row : table) {
    if (row.size() != n) fail(ErrorKind::InvalidInput, "Cayley table is not square");
    for (auto v : row) {
      if (v >= n) fail(ErrorKind::InvalidInput, "Cayley table entry out of range");
      flat.push_back(v);
    }
  }
  for (Index i = 0; i < n; ++i) {
    if (flat[i] != i || flat[static_cast<std::size_t>(i) * n] != i)
      fail(ErrorKind::InvalidInput, "index 0 does not act as the identity");
  }

  auto g = FiniteGroup::from_table(n, std::move(flat), {}, GroupSource::CayleyTable);
  for (Index a = 0; a < n; ++a)
    if (g.mul(g.inv(a), a) != 0) fail(ErrorKind::InvalidInput, "missing two-sided inverse");
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b) {
      const Index ab = g.mul(a, b);
      for (Index c = 0; c < n; ++c)
        if (g.mul(ab, c) != g.mul(a, g.mul(b, c)))
          fail(ErrorKind::InvalidInput, "table is not associative at (" + std::to_string(a) + "," +
                                            std::to_string(b) + "," + std::to_string(c) + ")");
    }
  return g;
}

FiniteGroup generate_group(std::span<const Permutation> generators, const Limits& limits) {
  if (generators.empty()) fail(ErrorKind::InvalidInput, "no generators given");
  const std::size_t degree = generators.front().degree();
  for (const auto& s : generators)
    if (s.degree() != degree) fail(ErrorKind::InvalidInput, "generators have different degrees");

  std::vector<Permutation> all{Permutation::identity(degree)};
  std::set<Permutation> seen{all.front()};
  std::size_t level_begin = 0;
  while (level_begin < all.size()) {
    const std::size_t level_end = all.size();
    std::set<Permutation> next;
    for (std::size_t i = level_begin; i < level_end; ++i)
      for (const auto& s : generators) {
        Permutation y = compose(all[i], s);
        if (!seen.contains(y)) next.insert(std::move(y));
      }
    for (const auto& y : next) {
      seen.insert(y);
      all.push_back(y);
    }
    if (all.size() > limits.max_elements)
      fail(ErrorKind::CapExceeded, "closure exceeds the element cap " +
                                       std::to_string(limits.max_elements));
    level_begin = level_end;
  }
  return FiniteGroup::from_permutations(std::move(all), limits);
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h, const Limits& limits) {
  const std::size_t m = g.order(), k = h.order(), n = m * k;
  if (n > limits.max_elements || n > limits.table_threshold)
    fail(ErrorKind::CapExceeded, "direct product of order " + std::to_string(n) + " exceeds caps");
  std::vector<Index> table(n * n);
  for (Index a1 = 0; a1 < m; ++a1)
    for (Index b1 = 0; b1 < k; ++b1)
      for (Index a2 = 0; a2 < m; ++a2)
        for (Index b2 = 0; b2 < k; ++b2)
          table[(a1 * k + b1) * n + a2 * k + b2] =
              static_cast<Index>(g.mul(a1, a2) * k + h.mul(b1, b2));
  std::vector<std::string> labels;
  labels.reserve(n);
  for (Index a = 0; a < m; ++a)
    for (Index b = 0; b < k; ++b) labels.push_back("(" + g.label(a) + ", " + h.label(b) + ")");
  auto p = FiniteGroup::from_table(n, std::move(table), std::move(labels), GroupSource::Product);
  if (!g.name().empty() && !h.name().empty()) p.set_name(g.name() + " x " + h.name());
  return p;
}

FiniteGroup subgroup_as_group(const FiniteGroup& g, const ElementSet& members) {
  const auto elems = members.members();
  if (elems.empty() || elems.front() != 0)
    fail(ErrorKind::InvalidInput, "subgroup must contain the identity");
  const std::size_t n = elems.size();
  std::vector<Index> position(g.order(), 0);
  for (Index i = 0; i < n; ++i) position[elems[i]] = i;

  std::vector<Index> table(n * n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      const Index prod = g.mul(elems[i], elems[j]);
      if (!members.contains(prod)) fail(ErrorKind::InvalidInput, "subset is not closed");
      table[static_cast<std::size_t>(i) * n + j] = position[prod];
    }
  std::vector<std::string> labels;
  labels.reserve(n);
  for (auto e : elems) labels.push_back(g.label(e));
  return FiniteGroup::from_table(n, std::move(table), std::move(labels), GroupSource::Subgroup);
}

bool verify_group_axioms(const FiniteGroup& g) {
  const auto n = static_cast<Index>(g.order());
  for (Index a = 0; a < n; ++a) {
    if (g.mul(0, a) != a || g.mul(a, 0) != a) return false;
    if (g.mul(a, g.inv(a)) != 0 || g.mul(g.inv(a), a) != 0) return false;
  }
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b) {
      const Index ab = g.mul(a, b);
      for (Index c = 0; c < n; ++c)
        if (g.mul(ab, c) != g.mul(a, g.mul(b, c))) return false;
    }
  return true;
}

}  // namespace cpg
