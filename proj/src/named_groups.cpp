#include "permstruct/named_groups.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdint>

#include "permstruct/wreath.hpp"

namespace permstruct {

namespace {

constexpr std::uint32_t kMaxDegree = 1u << 20;

Perm cycle_perm(std::uint32_t degree,
                const std::vector<std::uint32_t> &points) {
  std::vector<std::uint32_t> images(degree);
  for (std::uint32_t i = 0; i < degree; ++i)
    images[i] = i;
  for (std::size_t i = 0; i < points.size(); ++i)
    images[points[i]] = points[(i + 1) % points.size()];
  return Perm(std::move(images));
}

PermGroup symmetric(std::uint32_t n) {
  if (n < 2)
    return PermGroup::trivial(std::max<std::uint32_t>(n, 1));
  std::vector<std::uint32_t> all(n);
  for (std::uint32_t i = 0; i < n; ++i)
    all[i] = i;
  std::vector<Perm> gens{cycle_perm(n, {0, 1})};
  if (n > 2)
    gens.push_back(cycle_perm(n, all));
  return PermGroup(n, std::move(gens));
}

PermGroup alternating(std::uint32_t n) {
  if (n < 3)
    return PermGroup::trivial(std::max<std::uint32_t>(n, 1));
  std::vector<Perm> gens{cycle_perm(n, {0, 1, 2})};
  if (n > 3) {
    std::vector<std::uint32_t> longc;
    for (std::uint32_t i = n % 2 == 0 ? 1 : 0; i < n; ++i)
      longc.push_back(i);
    gens.push_back(cycle_perm(n, longc));
  }
  return PermGroup(n, std::move(gens));
}

PermGroup cyclic(std::uint32_t n) {
  if (n < 2)
    return PermGroup::trivial(std::max<std::uint32_t>(n, 1));
  std::vector<std::uint32_t> all(n);
  for (std::uint32_t i = 0; i < n; ++i)
    all[i] = i;
  return PermGroup(n, {cycle_perm(n, all)});
}

PermGroup dihedral(std::uint32_t order) {
  std::uint32_t n = order / 2;
  std::vector<std::uint32_t> all(n);
  for (std::uint32_t i = 0; i < n; ++i)
    all[i] = i;
  std::vector<std::uint32_t> flip(n);
  flip[0] = 0;
  for (std::uint32_t k = 1; k < n; ++k)
    flip[k] = n - k;
  return PermGroup(n, {cycle_perm(n, all), Perm(std::move(flip))});
}

// permutation action of a matrix list on the nonzero vectors of F_p^d;
// vector (v_0..v_{d-1}) is point v_0 + v_1 p + ... - 1
PermGroup matrix_group(std::uint32_t p, std::uint32_t d,
                       const std::vector<std::vector<std::uint32_t>> &mats) {
  std::uint32_t count = 1;
  for (std::uint32_t i = 0; i < d; ++i)
    count *= p;
  std::uint32_t degree = count - 1;
  std::vector<Perm> gens;
  for (const auto &m : mats) {
    std::vector<std::uint32_t> images(degree);
    for (std::uint32_t e = 1; e < count; ++e) {
      std::uint32_t v = e, w = 0, scale = 1;
      std::vector<std::uint32_t> coords(d);
      for (std::uint32_t i = 0; i < d; ++i) {
        coords[i] = v % p;
        v /= p;
      }
      for (std::uint32_t row = 0; row < d; ++row) {
        std::uint32_t s = 0;
        for (std::uint32_t col = 0; col < d; ++col)
          s += m[row * d + col] * coords[col];
        w += (s % p) * scale;
        scale *= p;
      }
      images[e - 1] = w - 1;
    }
    gens.push_back(Perm(std::move(images)));
  }
  return PermGroup(degree, std::move(gens));
}

PermGroup special_linear_2_5() {
  return matrix_group(5, 2, {{1, 1, 0, 1}, {1, 0, 1, 1}});
}

PermGroup general_linear_2_3() {
  return matrix_group(3, 2, {{1, 1, 0, 1}, {1, 0, 1, 1}, {1, 0, 0, 2}});
}

PermGroup simple_168() {
  return matrix_group(2, 3,
                      {{1, 1, 0, 0, 1, 0, 0, 0, 1},
                       {0, 0, 1, 1, 0, 0, 0, 1, 0}});
}

PermGroup two_alternating5() {
  auto shift = [](const Perm &p, std::uint32_t offset) {
    std::vector<std::uint32_t> images(10);
    for (std::uint32_t i = 0; i < 10; ++i)
      images[i] = i;
    for (std::uint32_t i = 0; i < 5; ++i)
      images[i + offset] = p[i] + offset;
    return Perm(std::move(images));
  };
  PermGroup a5 = alternating_deg5();
  std::vector<Perm> gens;
  for (const Perm &p : a5.generators()) {
    gens.push_back(shift(p, 0));
    gens.push_back(shift(p, 5));
  }
  return PermGroup(10, std::move(gens));
}

std::uint64_t parse_number(const std::string &digits) {
  std::uint64_t n = 0;
  for (char c : digits) {
    n = n * 10 + static_cast<std::uint64_t>(c - '0');
    if (n > kMaxDegree)
      throw ParseError("named_group: parameter too large");
  }
  return n;
}

} // namespace

PermGroup named_group(const std::string &name) {
  std::string up;
  for (char c : name)
    up.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));

  if (up == "V4")
    return PermGroup(4, {parse_permutation("(1 2)(3 4)", 4),
                         parse_permutation("(1 3)(2 4)", 4)});
  if (up == "F20")
    return PermGroup(5, {parse_permutation("(1 2 3 4 5)", 5),
                         parse_permutation("(2 3 5 4)", 5)});
  if (up == "SL25")
    return special_linear_2_5();
  if (up == "GL23")
    return general_linear_2_3();
  if (up == "PSL27")
    return simple_168();
  if (up == "A5XA5")
    return two_alternating5();
  if (up == "A5WRC2")
    return wreath_product(alternating_deg5(), cyclic(2));

  if (up.size() >= 2 && std::all_of(up.begin() + 1, up.end(), [](char c) {
        return std::isdigit(static_cast<unsigned char>(c)) != 0;
      })) {
    std::uint64_t n = parse_number(up.substr(1));
    switch (up[0]) {
    case 'A':
      if (n >= 1)
        return alternating(static_cast<std::uint32_t>(n));
      break;
    case 'S':
      if (n >= 1)
        return symmetric(static_cast<std::uint32_t>(n));
      break;
    case 'C':
      if (n >= 1)
        return cyclic(static_cast<std::uint32_t>(n));
      break;
    case 'D':
      if (n >= 6 && n % 2 == 0)
        return dihedral(static_cast<std::uint32_t>(n));
      break;
    default:
      break;
    }
  }
  throw ParseError("named_group: unknown name '" + name +
                   "'; expected An, Sn, Cn, D2n (2n >= 6), V4, F20, SL25, "
                   "GL23, PSL27, A5xA5 or A5wrC2");
}

std::vector<std::string> named_group_names() {
  return {"An",  "Sn",   "Cn",    "D2n",   "V4",    "F20",
          "SL25", "GL23", "PSL27", "A5xA5", "A5wrC2"};
}

} // namespace permstruct
