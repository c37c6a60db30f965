#include "permstruct/wreath.hpp"

#include "permstruct/errors.hpp"

namespace permstruct {

PermGroup wreath_product(const PermGroup &bottom, const PermGroup &top) {
  std::uint32_t n = bottom.degree();
  std::uint32_t m = top.degree();
  if (n == 0 || m == 0)
    throw PreconditionError("wreath_product: degrees must be positive");
  std::uint64_t dd = static_cast<std::uint64_t>(n) * m;
  if (dd > (1u << 24))
    throw PreconditionError("wreath_product: degree overflow");
  std::uint32_t degree = static_cast<std::uint32_t>(dd);

  std::vector<Perm> gens;
  for (std::uint32_t block = 0; block < m; ++block) {
    for (const Perm &s : bottom.generators()) {
      std::vector<std::uint32_t> images(degree);
      for (std::uint32_t i = 0; i < degree; ++i)
        images[i] = i;
      for (std::uint32_t x = 0; x < n; ++x)
        images[block * n + x] = block * n + s[x];
      gens.push_back(Perm(std::move(images)));
    }
  }
  for (const Perm &t : top.generators()) {
    std::vector<std::uint32_t> images(degree);
    for (std::uint32_t block = 0; block < m; ++block)
      for (std::uint32_t x = 0; x < n; ++x)
        images[block * n + x] = t[block] * n + x;
    gens.push_back(Perm(std::move(images)));
  }
  return PermGroup(degree, std::move(gens));
}

PermGroup alternating_deg5() {
  return PermGroup({parse_permutation("(1 2 3)", 5),
                    parse_permutation("(1 2 3 4 5)", 5)});
}

PermGroup alternating4_on5() {
  return PermGroup({parse_permutation("(1 2 3)", 5),
                    parse_permutation("(2 3 4)", 5)});
}

PermGroup cyclic5_deg5() {
  return PermGroup({parse_permutation("(1 2 3 4 5)", 5)});
}

PermGroup tower_group(std::uint32_t height) {
  if (height == 0)
    throw PreconditionError("tower_group: height must be at least 1");
  PermGroup cur = alternating_deg5();
  for (std::uint32_t h = 2; h <= height; ++h)
    cur = wreath_product(alternating_deg5(), cur);
  return cur;
}

std::pair<PermGroup, PermGroup> tower_hall_pair(std::uint32_t height) {
  if (height == 0)
    throw PreconditionError("tower_hall_pair: height must be at least 1");
  PermGroup a = alternating4_on5();
  PermGroup b = cyclic5_deg5();
  for (std::uint32_t h = 2; h <= height; ++h) {
    auto lifted = wreath_hall_pair(a, b);
    a = std::move(lifted.first);
    b = std::move(lifted.second);
  }
  return {std::move(a), std::move(b)};
}

std::pair<PermGroup, PermGroup> wreath_hall_pair(const PermGroup &top_hall23,
                                                 const PermGroup &top_hall5) {
  if (top_hall23.degree() != top_hall5.degree())
    throw PreconditionError("wreath_hall_pair: degree mismatch");
  return {wreath_product(alternating4_on5(), top_hall23),
          wreath_product(cyclic5_deg5(), top_hall5)};
}

std::vector<Perm> tower_level_generators(std::uint32_t height,
                                         std::uint32_t level) {
  if (height == 0 || level == 0 || level > height)
    throw PreconditionError("tower_level_generators: level out of range");
  std::uint32_t degree = 1;
  for (std::uint32_t i = 0; i < height; ++i)
    degree *= 5;
  std::uint32_t sub = 1; // 5^(level-1)
  for (std::uint32_t i = 1; i < level; ++i)
    sub *= 5;
  std::uint32_t span = sub * 5;
  std::uint32_t blocks = degree / span;

  const Perm a5a = parse_permutation("(1 2 3)", 5);
  const Perm a5b = parse_permutation("(1 2 3 4 5)", 5);

  std::vector<Perm> out;
  out.reserve(blocks * 2);
  for (std::uint32_t blk = 0; blk < blocks; ++blk) {
    for (const Perm *s : {&a5a, &a5b}) {
      std::vector<std::uint32_t> images(degree);
      for (std::uint32_t i = 0; i < degree; ++i)
        images[i] = i;
      for (std::uint32_t q = 0; q < 5; ++q)
        for (std::uint32_t r = 0; r < sub; ++r)
          images[blk * span + q * sub + r] = blk * span + (*s)[q] * sub + r;
      out.push_back(Perm(std::move(images)));
    }
  }
  return out;
}

} // namespace permstruct
