#include "permstruct/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "permstruct/errors.hpp"

namespace permstruct {

Perm::Perm(std::uint32_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), 0u);
}

Perm::Perm(std::vector<std::uint32_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (std::uint32_t img : images_) {
    if (img >= images_.size() || seen[img])
      throw PreconditionError("Perm: image table is not a bijection");
    seen[img] = true;
  }
}

bool Perm::is_identity() const {
  for (std::uint32_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i)
      return false;
  return true;
}

Perm Perm::operator*(const Perm &rhs) const {
  if (degree() != rhs.degree())
    throw PreconditionError("Perm: degree mismatch in composition");
  std::vector<std::uint32_t> out(images_.size());
  for (std::uint32_t i = 0; i < images_.size(); ++i)
    out[i] = rhs.images_[images_[i]];
  Perm p(static_cast<std::uint32_t>(out.size()));
  p.images_ = std::move(out);
  return p;
}

Perm Perm::inverse() const {
  std::vector<std::uint32_t> out(images_.size());
  for (std::uint32_t i = 0; i < images_.size(); ++i)
    out[images_[i]] = i;
  Perm p(static_cast<std::uint32_t>(out.size()));
  p.images_ = std::move(out);
  return p;
}

Perm Perm::conjugated_by(const Perm &g) const {
  if (degree() != g.degree())
    throw PreconditionError("Perm: degree mismatch in conjugation");
  std::vector<std::uint32_t> out(images_.size());
  for (std::uint32_t i = 0; i < images_.size(); ++i)
    out[g.images_[i]] = g.images_[images_[i]];
  Perm p(static_cast<std::uint32_t>(out.size()));
  p.images_ = std::move(out);
  return p;
}

std::uint32_t Perm::smallest_moved_point() const {
  for (std::uint32_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i)
      return i;
  return degree();
}

std::vector<std::vector<std::uint32_t>> Perm::cycles() const {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<bool> seen(images_.size(), false);
  for (std::uint32_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i)
      continue;
    std::vector<std::uint32_t> cyc;
    std::uint32_t j = i;
    do {
      cyc.push_back(j);
      seen[j] = true;
      j = images_[j];
    } while (j != i);
    out.push_back(std::move(cyc));
  }
  return out;
}

Order Perm::order() const {
  Order out;
  for (const auto &cyc : cycles()) {
    Order len = Order::from_u64(cyc.size());
    out = out * len.divided_by(out.gcd(len)); // lcm
  }
  return out;
}

std::string Perm::cycle_string() const {
  auto cycs = cycles();
  if (cycs.empty())
    return "()";
  std::string out;
  for (const auto &cyc : cycs) {
    out += '(';
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      if (i > 0)
        out += ' ';
      out += std::to_string(cyc[i] + 1);
    }
    out += ')';
  }
  return out;
}

std::size_t Perm::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (std::uint32_t img : images_) {
    h ^= img;
    h *= 1099511628211ull;
  }
  return h;
}

Perm commutator(const Perm &a, const Perm &b) {
  return a.inverse() * b.inverse() * a * b;
}

Perm parse_permutation(const std::string &text, std::uint32_t degree) {
  std::vector<std::uint32_t> images(degree);
  std::iota(images.begin(), images.end(), 0u);
  std::vector<bool> used(degree, false);

  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() &&
           (text[pos] == ' ' || text[pos] == '\t' || text[pos] == ','))
      ++pos;
  };

  skip_ws();
  bool any_cycle = false;
  while (pos < text.size()) {
    if (text[pos] != '(')
      throw ParseError("permutation: expected '(' at position " +
                       std::to_string(pos) + " in \"" + text + "\"");
    ++pos;
    any_cycle = true;
    std::vector<std::uint32_t> cyc;
    skip_ws();
    while (pos < text.size() && text[pos] != ')') {
      if (!std::isdigit(static_cast<unsigned char>(text[pos])))
        throw ParseError("permutation: expected point in \"" + text + "\"");
      std::uint64_t v = 0;
      while (pos < text.size() &&
             std::isdigit(static_cast<unsigned char>(text[pos]))) {
        v = v * 10 + (text[pos] - '0');
        if (v > degree)
          throw ParseError("permutation: point " + std::to_string(v) +
                           " exceeds degree " + std::to_string(degree));
        ++pos;
      }
      if (v == 0)
        throw ParseError("permutation: points are 1-based in \"" + text +
                         "\"");
      std::uint32_t pt = static_cast<std::uint32_t>(v - 1);
      if (used[pt])
        throw ParseError("permutation: point " + std::to_string(v) +
                         " repeated in \"" + text + "\"");
      used[pt] = true;
      cyc.push_back(pt);
      skip_ws();
    }
    if (pos >= text.size())
      throw ParseError("permutation: unterminated cycle in \"" + text + "\"");
    ++pos; // ')'
    for (std::size_t i = 0; i < cyc.size(); ++i)
      images[cyc[i]] = cyc[(i + 1) % cyc.size()];
    skip_ws();
  }
  if (!any_cycle)
    throw ParseError("permutation: empty text");
  return Perm(std::move(images));
}

std::ostream &operator<<(std::ostream &os, const Perm &p) {
  return os << p.cycle_string();
}

} // namespace permstruct
