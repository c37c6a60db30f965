#pragma once

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "permstruct/order.hpp"

namespace permstruct {

// permutation of {0, ..., degree-1} as an image table; composition acts on
// the right: (a * b) maps x to b[a[x]], i.e. a is applied first
class Perm {
public:
  explicit Perm(std::uint32_t degree); // identity
  explicit Perm(std::vector<std::uint32_t> images);

  std::uint32_t degree() const {
    return static_cast<std::uint32_t>(images_.size());
  }
  std::uint32_t operator[](std::uint32_t point) const {
    return images_[point];
  }
  const std::vector<std::uint32_t> &images() const { return images_; }

  bool is_identity() const;
  Perm operator*(const Perm &rhs) const;
  Perm inverse() const;
  Perm conjugated_by(const Perm &g) const; // g^-1 * *this * g

  bool operator==(const Perm &rhs) const { return images_ == rhs.images_; }
  bool operator!=(const Perm &rhs) const { return images_ != rhs.images_; }
  bool operator<(const Perm &rhs) const { return images_ < rhs.images_; }

  std::uint32_t smallest_moved_point() const; // degree when identity

  std::vector<std::vector<std::uint32_t>> cycles() const; // nontrivial only
  Order order() const;
  std::string cycle_string() const; // 1-based, "()" for identity

  std::size_t hash() const;

private:
  std::vector<std::uint32_t> images_;
};

struct PermHash {
  std::size_t operator()(const Perm &p) const { return p.hash(); }
};

Perm commutator(const Perm &a, const Perm &b); // a^-1 b^-1 a b

// disjoint-cycle text with 1-based points, e.g. "(1 2 3)(4 5)"; commas or
// spaces separate points; "()" parses to the identity
Perm parse_permutation(const std::string &text, std::uint32_t degree);

std::ostream &operator<<(std::ostream &os, const Perm &p);

} // namespace permstruct
