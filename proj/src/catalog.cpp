#include "cpgroups/catalog.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include "cpgroups/errors.hpp"
#include "cpgroups/field.hpp"

namespace cpg {

namespace {

void check_table_size(std::size_t n, const Limits& limits) {
  if (n == 0) fail(ErrorKind::InvalidInput, "group order must be positive");
  if (n > limits.max_elements || n > limits.table_threshold)
    fail(ErrorKind::CapExceeded, "group of order " + std::to_string(n) + " exceeds the table cap");
}

std::string power_label(const char* base, std::size_t e) {
  if (e == 0) return "";
  if (e == 1) return base;
  return std::string(base) + "^" + std::to_string(e);
}

std::string normal_form_label(std::size_t i, std::size_t j) {
  if (i == 0 && j == 0) return "e";
  std::string a = power_label("a", i);
  std::string b = power_label("b", j);
  if (a.empty()) return b;
  if (b.empty()) return a;
  return a + " " + b;
}

// a^i b^j with a of order m, b a = a^-1 b, and b^2 = a^shift.
FiniteGroup metacyclic_table(std::size_t m, std::size_t shift) {
  const std::size_t n = 2 * m;
  std::vector<Index> table(n * n);
  for (std::size_t j = 0; j < 2; ++j)
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t l = 0; l < 2; ++l)
        for (std::size_t k = 0; k < m; ++k) {
          std::size_t e = j ? (i + m - k) % m : (i + k) % m;
          std::size_t jj = j ^ l;
          if (j && l) e = (e + shift) % m;
          table[(i + m * j) * n + k + m * l] = static_cast<Index>(e + m * jj);
        }
  std::vector<std::string> labels;
  for (std::size_t j = 0; j < 2; ++j)
    for (std::size_t i = 0; i < m; ++i) labels.push_back(normal_form_label(i, j));
  return FiniteGroup::from_table(n, std::move(table), std::move(labels), GroupSource::CayleyTable);
}

std::size_t factorial(std::size_t n) {
  std::size_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

void assert_order(const FiniteGroup& g, std::size_t expected, const std::string& what) {
  if (g.order() != expected)
    fail(ErrorKind::Internal, what + " has order " + std::to_string(g.order()) + ", expected " +
                                  std::to_string(expected));
}

bool is_prime(std::size_t p) {
  if (p < 2) return false;
  for (std::size_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::size_t parse_number(const std::string& s, const std::string& spec) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }) ||
      s.size() > 9)
    fail(ErrorKind::InvalidInput, "bad number '" + s + "' in group identifier '" + spec + "'");
  return std::stoul(s);
}

constexpr std::array<std::uint32_t, 10> kPsl2Fields = {2, 3, 4, 5, 7, 8, 9, 11, 13, 17};

}  // namespace

FiniteGroup cyclic(std::size_t n, const Limits& limits) {
  check_table_size(n, limits);
  std::vector<Index> table(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) table[i * n + j] = static_cast<Index>((i + j) % n);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(normal_form_label(i, 0));
  auto g = FiniteGroup::from_table(n, std::move(table), std::move(labels), GroupSource::CayleyTable);
  g.set_name("cyclic:" + std::to_string(n));
  return g;
}

FiniteGroup dihedral_2n(std::size_t n, const Limits& limits) {
  check_table_size(2 * n, limits);
  auto g = metacyclic_table(n, 0);
  assert_order(g, 2 * n, "dihedral group");
  g.set_name("dihedral:" + std::to_string(2 * n));
  return g;
}

FiniteGroup dicyclic_4n(std::size_t n, const Limits& limits) {
  check_table_size(4 * n, limits);
  auto g = metacyclic_table(2 * n, n);
  assert_order(g, 4 * n, "dicyclic group");
  g.set_name("dicyclic:" + std::to_string(4 * n));
  return g;
}

FiniteGroup elementary_abelian(std::uint32_t p, std::uint32_t k, const Limits& limits) {
  if (!is_prime(p) || k == 0) fail(ErrorKind::InvalidInput, "elementary abelian needs prime p, k >= 1");
  std::size_t n = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    n *= p;
    check_table_size(n, limits);
  }
  std::vector<Index> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      std::size_t x = a, y = b, r = 0, scale = 1;
      for (std::uint32_t i = 0; i < k; ++i) {
        r += ((x % p + y % p) % p) * scale;
        x /= p;
        y /= p;
        scale *= p;
      }
      table[a * n + b] = static_cast<Index>(r);
    }
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < n; ++a) {
    std::string s = "(";
    std::size_t x = a;
    for (std::uint32_t i = 0; i < k; ++i) {
      if (i) s += ",";
      s += std::to_string(x % p);
      x /= p;
    }
    labels.push_back(s + ")");
  }
  auto g = FiniteGroup::from_table(n, std::move(table), std::move(labels), GroupSource::CayleyTable);
  g.set_name("elemab:" + std::to_string(p) + "^" + std::to_string(k));
  return g;
}

FiniteGroup symmetric(std::size_t n, const Limits& limits) {
  if (n == 0) fail(ErrorKind::InvalidInput, "symmetric group needs n >= 1");
  std::vector<Permutation> gens{Permutation::identity(n)};
  if (n >= 2) gens.push_back(parse_cycles("(1 2)", n));
  if (n >= 3) {
    std::string word = "(";
    for (std::size_t i = 1; i <= n; ++i) word += std::to_string(i) + (i < n ? " " : ")");
    gens.push_back(parse_cycles(word, n));
  }
  auto g = generate_group(gens, limits);
  assert_order(g, factorial(n), "symmetric group");
  g.set_name("symmetric:" + std::to_string(n));
  return g;
}

FiniteGroup alternating(std::size_t n, const Limits& limits) {
  if (n == 0) fail(ErrorKind::InvalidInput, "alternating group needs n >= 1");
  std::vector<Permutation> gens{Permutation::identity(n)};
  for (std::size_t k = 3; k <= n; ++k)
    gens.push_back(parse_cycles("(1 2 " + std::to_string(k) + ")", n));
  auto g = generate_group(gens, limits);
  assert_order(g, n < 2 ? 1 : factorial(n) / 2, "alternating group");
  g.set_name("alternating:" + std::to_string(n));
  return g;
}

bool psl2_supported(std::uint32_t q) {
  return std::find(kPsl2Fields.begin(), kPsl2Fields.end(), q) != kPsl2Fields.end();
}

std::size_t psl2_order(std::uint32_t q) {
  const std::size_t qq = q;
  return qq * (qq * qq - 1) / std::gcd<std::size_t>(2, qq - 1);
}

FiniteGroup psl2(std::uint32_t q, const Limits& limits) {
  if (!psl2_supported(q)) fail(ErrorKind::InvalidInput, "psl2 supports q in {2,3,4,5,7,8,9,11,13,17}");
  std::uint32_t p = 2;
  while (q % p) ++p;
  std::uint32_t k = 0;
  for (std::uint32_t r = q; r > 1; r /= p) ++k;
  const FieldTable f = make_field(p, k);
  const std::uint32_t infinity = q;

  // (a x + b) / (c x + d) on the projective line.
  auto moebius = [&](std::uint32_t a, std::uint32_t b, std::uint32_t c, std::uint32_t d) {
    std::vector<std::uint32_t> images(q + 1);
    images[infinity] = c == 0 ? infinity : f.mul(a, f.inv(c));
    for (std::uint32_t x = 0; x < q; ++x) {
      const std::uint32_t den = f.add(f.mul(c, x), d);
      images[x] = den == 0 ? infinity : f.mul(f.add(f.mul(a, x), b), f.inv(den));
    }
    return Permutation(std::move(images));
  };

  std::set<Permutation> elements;
  for (std::uint32_t a = 0; a < q; ++a)
    for (std::uint32_t b = 0; b < q; ++b)
      for (std::uint32_t c = 0; c < q; ++c)
        for (std::uint32_t d = 0; d < q; ++d)
          if (f.sub(f.mul(a, d), f.mul(b, c)) == 1) elements.insert(moebius(a, b, c, d));

  if (elements.size() != psl2_order(q))
    fail(ErrorKind::Internal, "PSL(2," + std::to_string(q) + ") has " +
                                  std::to_string(elements.size()) + " elements, expected " +
                                  std::to_string(psl2_order(q)));
  // The identity is the lexicographically smallest image array.
  auto g = FiniteGroup::from_permutations({elements.begin(), elements.end()}, limits);
  g.set_name("psl2:" + std::to_string(q));
  return g;
}

std::vector<CatalogEntry> catalog_iter(std::size_t max_order) {
  std::vector<CatalogEntry> out;
  auto add = [&](std::string name, std::size_t order, Family family,
                 std::function<FiniteGroup(const Limits&)> build) {
    if (order <= max_order) out.push_back({std::move(name), order, family, std::move(build)});
  };

  for (std::size_t n = 1; n <= max_order; ++n)
    add("cyclic:" + std::to_string(n), n, Family::Cyclic,
        [n](const Limits& l) { return cyclic(n, l); });
  for (std::size_t n = 3; 2 * n <= max_order; ++n)
    add("dihedral:" + std::to_string(2 * n), 2 * n, Family::Dihedral,
        [n](const Limits& l) { return dihedral_2n(n, l); });
  for (std::size_t n = 2; 4 * n <= max_order; ++n)
    add("dicyclic:" + std::to_string(4 * n), 4 * n, Family::Dicyclic,
        [n](const Limits& l) { return dicyclic_4n(n, l); });
  for (std::uint32_t p = 2; p * p <= max_order; ++p) {
    if (!is_prime(p)) continue;
    std::size_t order = p * p;
    for (std::uint32_t k = 2; order <= max_order; ++k, order *= p)
      add("elemab:" + std::to_string(p) + "^" + std::to_string(k), order, Family::ElementaryAbelian,
          [p, k](const Limits& l) { return elementary_abelian(p, k, l); });
  }
  for (std::size_t m = 2; m * m <= max_order; ++m)
    for (std::size_t n = m; m * n <= max_order; ++n) {
      if (std::gcd(m, n) == 1) continue;  // coprime products are cyclic
      add("product:cyclic:" + std::to_string(m) + ",cyclic:" + std::to_string(n), m * n,
          Family::Product, [m, n](const Limits& l) {
            auto g = direct_product(cyclic(m, l), cyclic(n, l), l);
            g.set_name("product:cyclic:" + std::to_string(m) + ",cyclic:" + std::to_string(n));
            return g;
          });
    }
  for (std::size_t n = 3; factorial(n) <= max_order; ++n)
    add("symmetric:" + std::to_string(n), factorial(n), Family::Symmetric,
        [n](const Limits& l) { return symmetric(n, l); });
  for (std::size_t n = 4; factorial(n) / 2 <= max_order; ++n)
    add("alternating:" + std::to_string(n), factorial(n) / 2, Family::Alternating,
        [n](const Limits& l) { return alternating(n, l); });
  for (auto q : kPsl2Fields)
    add("psl2:" + std::to_string(q), psl2_order(q), Family::Psl2,
        [q](const Limits& l) { return psl2(q, l); });

  std::stable_sort(out.begin(), out.end(), [](const CatalogEntry& a, const CatalogEntry& b) {
    return a.order != b.order ? a.order < b.order : a.name < b.name;
  });
  return out;
}

FiniteGroup resolve_group(const std::string& spec, const Limits& limits) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos)
    fail(ErrorKind::InvalidInput, "group identifier '" + spec + "' lacks a family prefix");
  const std::string family = spec.substr(0, colon);
  const std::string arg = spec.substr(colon + 1);

  FiniteGroup g = [&]() -> FiniteGroup {
    if (family == "cyclic") return cyclic(parse_number(arg, spec), limits);
    if (family == "dihedral") {
      auto n = parse_number(arg, spec);
      if (n < 2 || n % 2) fail(ErrorKind::InvalidInput, "dihedral order must be even and >= 2");
      return dihedral_2n(n / 2, limits);
    }
    if (family == "dicyclic") {
      auto n = parse_number(arg, spec);
      if (n < 4 || n % 4) fail(ErrorKind::InvalidInput, "dicyclic order must be a multiple of 4");
      return dicyclic_4n(n / 4, limits);
    }
    if (family == "symmetric") return symmetric(parse_number(arg, spec), limits);
    if (family == "alternating") return alternating(parse_number(arg, spec), limits);
    if (family == "psl2") return psl2(static_cast<std::uint32_t>(parse_number(arg, spec)), limits);
    if (family == "elemab") {
      const auto caret = arg.find('^');
      if (caret == std::string::npos) fail(ErrorKind::InvalidInput, "elemab expects p^k");
      return elementary_abelian(static_cast<std::uint32_t>(parse_number(arg.substr(0, caret), spec)),
                                static_cast<std::uint32_t>(parse_number(arg.substr(caret + 1), spec)),
                                limits);
    }
    if (family == "product") {
      std::vector<std::string> parts;
      std::stringstream ss(arg);
      for (std::string part; std::getline(ss, part, ',');) parts.push_back(part);
      if (parts.size() < 2) fail(ErrorKind::InvalidInput, "product needs at least two factors");
      FiniteGroup acc = resolve_group(parts[0], limits);
      for (std::size_t i = 1; i < parts.size(); ++i)
        acc = direct_product(acc, resolve_group(parts[i], limits), limits);
      return acc;
    }
    fail(ErrorKind::InvalidInput, "unknown group family '" + family + "'");
  }();
  g.set_name(spec);
  return g;
}

FiniteGroup parse_generator_text(const std::string& text, const Limits& limits) {
  std::istringstream in(text);
  std::string line;
  std::size_t degree = 0;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos || line.substr(0, colon).find("degree") == std::string::npos)
      fail(ErrorKind::InvalidInput, "generator file must start with 'degree: k'");
    std::string value = line.substr(colon + 1);
    value.erase(0, value.find_first_not_of(" \t"));
    value.erase(value.find_last_not_of(" \t\r") + 1);
    degree = parse_number(value, line);
    break;
  }
  if (degree == 0) fail(ErrorKind::InvalidInput, "generator file has no positive degree");

  std::vector<Permutation> gens;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos || line[0] == '#') continue;
    gens.push_back(parse_cycles(line, degree));
  }
  if (gens.empty()) gens.push_back(Permutation::identity(degree));
  return generate_group(gens, limits);
}

FiniteGroup parse_cayley_text(const std::string& text, const Limits& limits) {
  std::istringstream in(text);
  long long n = 0;
  if (!(in >> n) || n <= 0) fail(ErrorKind::InvalidInput, "Cayley file must start with n >= 1");
  if (static_cast<std::size_t>(n) > limits.max_cayley_check)
    fail(ErrorKind::CapExceeded, "Cayley table exceeds the associativity-check cap");
  std::vector<std::vector<Index>> table(static_cast<std::size_t>(n),
                                        std::vector<Index>(static_cast<std::size_t>(n)));
  for (auto& row : table)
    for (auto& v : row) {
      long long x = 0;
      if (!(in >> x)) fail(ErrorKind::InvalidInput, "Cayley file has too few entries");
      if (x < 0 || x >= n) fail(ErrorKind::InvalidInput, "Cayley table entry out of range");
      v = static_cast<Index>(x);
    }
  std::string extra;
  if (in >> extra) fail(ErrorKind::InvalidInput, "Cayley file has trailing data");
  return from_cayley(table, limits);
}

FiniteGroup load_group_file(const std::string& path, const Limits& limits) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::InvalidInput, "cannot read '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  const auto first = text.find_first_not_of(" \t\r\n");
  const bool generators = first != std::string::npos && text.compare(first, 6, "degree") == 0;
  auto g = generators ? parse_generator_text(text, limits) : parse_cayley_text(text, limits);
  g.set_name(path);
  return g;
}

}  // namespace cpg
