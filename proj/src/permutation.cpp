#include "cpgroups/permutation.hpp"

#include <cctype>
#include <numeric>

#include "cpgroups/errors.hpp"

namespace cpg {

Permutation::Permutation(std::vector<std::uint32_t> images) : images_(std::move(images)) {
  if (images_.empty()) fail(ErrorKind::InvalidInput, "permutation degree must be at least 1");
  std::vector<bool> seen(images_.size(), false);
  for (auto v : images_) {
    if (v >= images_.size() || seen[v])
      fail(ErrorKind::InvalidInput, "image array is not a bijection");
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  if (degree == 0) fail(ErrorKind::InvalidInput, "permutation degree must be at least 1");
  std::vector<std::uint32_t> images(degree);
  std::iota(images.begin(), images.end(), 0u);
  return Permutation(Unchecked{}, std::move(images));
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<std::uint32_t> out(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) out[images_[i]] = static_cast<std::uint32_t>(i);
  return Permutation(Unchecked{}, std::move(out));
}

std::string Permutation::to_cycles() const {
  std::string out;
  std::vector<bool> done(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (done[start] || images_[start] == start) continue;
    out += '(';
    std::size_t i = start;
    bool first = true;
    while (!done[i]) {
      done[i] = true;
      if (!first) out += ' ';
      out += std::to_string(i + 1);
      first = false;
      i = images_[i];
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) fail(ErrorKind::InvalidInput, "degree mismatch in composition");
  std::vector<std::uint32_t> out(p.degree());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = q.images_[p.images_[i]];
  return Permutation(Permutation::Unchecked{}, std::move(out));
}

std::uint64_t perm_order(const Permutation& p) {
  std::uint64_t order = 1;
  std::vector<bool> done(p.degree(), false);
  for (std::size_t start = 0; start < p.degree(); ++start) {
    if (done[start]) continue;
    std::uint64_t len = 0;
    for (std::size_t i = start; !done[i]; i = p[i]) {
      done[i] = true;
      ++len;
    }
    order = std::lcm(order, len);
  }
  return order;
}

Permutation parse_cycles(std::string_view text, std::size_t degree) {
  if (degree == 0) fail(ErrorKind::InvalidInput, "degree must be at least 1");
  Permutation result = Permutation::identity(degree);
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };

  skip_space();
  while (pos < text.size()) {
    if (text[pos] != '(') fail(ErrorKind::InvalidInput, "expected '(' in cycle word");
    ++pos;
    std::vector<std::uint32_t> cycle;
    std::vector<bool> used(degree, false);
    bool closed = false;
    while (pos < text.size()) {
      char c = text[pos];
      if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
        ++pos;
      } else if (c == ')') {
        ++pos;
        closed = true;
        break;
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        std::size_t value = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
          value = value * 10 + static_cast<std::size_t>(text[pos] - '0');
          if (value > degree) fail(ErrorKind::InvalidInput, "cycle point out of range");
          ++pos;
        }
        if (value == 0) fail(ErrorKind::InvalidInput, "cycle point out of range");
        if (used[value - 1]) fail(ErrorKind::InvalidInput, "repeated point within a cycle");
        used[value - 1] = true;
        cycle.push_back(static_cast<std::uint32_t>(value - 1));
      } else {
        fail(ErrorKind::InvalidInput, std::string("unexpected character '") + c + "' in cycle word");
      }
    }
    if (!closed) fail(ErrorKind::InvalidInput, "unbalanced parentheses in cycle word");

    if (cycle.size() > 1) {
      std::vector<std::uint32_t> images(degree);
      std::iota(images.begin(), images.end(), 0u);
      for (std::size_t i = 0; i < cycle.size(); ++i) images[cycle[i]] = cycle[(i + 1) % cycle.size()];
      result = compose(result, Permutation(std::move(images)));
    }
    skip_space();
  }
  return result;
}

}  // namespace cpg
