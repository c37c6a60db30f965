#include "permstruct/factorize.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace permstruct {

bool is_factorization(const PermGroup &group, const PermGroup &a,
                      const PermGroup &b, const EnumerationBudget &budget) {
  if (!is_subgroup(group, a) || !is_subgroup(group, b))
    throw PreconditionError("is_factorization: factors must be subgroups");
  Order lhs = a.order() * b.order();
  Order rhs = group.order() * intersection(a, b, budget).order();
  return lhs == rhs;
}

bool check_lemma_l1(const PermGroup &group, const PermGroup &normal,
                    const Perm &a, const Perm &b) {
  if (!group.contains(a) || !group.contains(b))
    throw PreconditionError("check_lemma_l1: elements must lie in the group");
  if (!is_subgroup(group, normal) || !is_normal(group, normal))
    throw PreconditionError("check_lemma_l1: subgroup must be normal");
  if (!a.order().coprime_to(b.order()))
    throw PreconditionError("check_lemma_l1: element orders must be coprime");
  if (!normal.contains(a * b))
    throw PreconditionError(
        "check_lemma_l1: product must lie in the normal subgroup");
  return normal.contains(a) && normal.contains(b);
}

bool check_lemma_l11(const PermGroup &group, const PermGroup &a,
                     const PermGroup &b, const PermGroup &normal,
                     const EnumerationBudget &budget) {
  if (!is_subgroup(group, a) || !is_subgroup(group, b))
    throw PreconditionError("check_lemma_l11: factors must be subgroups");
  if (!a.order().coprime_to(b.order()))
    throw PreconditionError("check_lemma_l11: factor orders must be coprime");
  if (a.order() * b.order() != group.order())
    throw PreconditionError(
        "check_lemma_l11: orders do not multiply to the group order");
  if (!is_subgroup(group, normal) || !is_normal(group, normal))
    throw PreconditionError("check_lemma_l11: subgroup must be normal");
  Order na = intersection(normal, a, budget).order();
  Order nb = intersection(normal, b, budget).order();
  return na * nb == normal.order();
}

namespace {

using Bits = std::vector<std::uint64_t>;

struct BitsHash {
  std::size_t operator()(const Bits &b) const {
    std::size_t h = 1469598103934665603ull;
    for (std::uint64_t w : b) {
      h ^= w;
      h *= 1099511628211ull;
    }
    return h;
  }
};

bool bit_get(const Bits &b, std::uint32_t i) {
  return (b[i >> 6] >> (i & 63)) & 1;
}

void bit_set(Bits &b, std::uint32_t i) { b[i >> 6] |= 1ull << (i & 63); }

std::uint32_t popcount(const Bits &b) {
  std::uint32_t n = 0;
  for (std::uint64_t w : b)
    n += static_cast<std::uint32_t>(__builtin_popcountll(w));
  return n;
}

bool bits_subset(const Bits &a, const Bits &b) { // a subseteq b
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] & ~b[i])
      return false;
  return true;
}

struct SmallTable {
  std::uint32_t n = 0;
  std::vector<std::uint32_t> mul; // row-major
  std::uint32_t at(std::uint32_t i, std::uint32_t j) const {
    return mul[static_cast<std::size_t>(i) * n + j];
  }
};

// closes seed under the table product; members listed in discovery order
Bits close_bits(const SmallTable &table, Bits seed) {
  std::vector<std::uint32_t> list;
  for (std::uint32_t i = 0; i < table.n; ++i)
    if (bit_get(seed, i))
      list.push_back(i);
  for (std::size_t qi = 0; qi < list.size(); ++qi) {
    std::uint32_t m = list[qi];
    for (std::size_t li = 0; li < list.size(); ++li) {
      std::uint32_t p1 = table.at(m, list[li]);
      if (!bit_get(seed, p1)) {
        bit_set(seed, p1);
        list.push_back(p1);
      }
      std::uint32_t p2 = table.at(list[li], m);
      if (!bit_get(seed, p2)) {
        bit_set(seed, p2);
        list.push_back(p2);
      }
    }
  }
  return seed;
}

} // namespace

std::vector<PermGroup> enumerate_subgroups(const PermGroup &group,
                                           const EnumerationBudget &budget,
                                           std::uint64_t order_cap) {
  budget.validate();
  if (!group.order().leq_u64(order_cap))
    throw BudgetExceededError(BudgetExceededError::Kind::Elements, order_cap,
                              "enumerate_subgroups: group order " +
                                  group.order().str() +
                                  " exceeds the order cap " +
                                  std::to_string(order_cap));
  std::vector<Perm> els = elements(group, budget);
  std::uint32_t n = static_cast<std::uint32_t>(els.size());
  std::unordered_map<Perm, std::uint32_t, PermHash> index;
  index.reserve(n * 2);
  for (std::uint32_t i = 0; i < n; ++i)
    index.emplace(els[i], i);

  SmallTable table;
  table.n = n;
  table.mul.resize(static_cast<std::size_t>(n) * n);
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j)
      table.mul[static_cast<std::size_t>(i) * n + j] =
          index.at(els[i] * els[j]);

  std::uint32_t id = index.at(Perm(group.degree()));
  std::size_t words = (n + 63) / 64;

  Bits trivial(words, 0);
  bit_set(trivial, id);

  // distinct cyclic subgroups seed the join lattice
  std::vector<Bits> cyclics;
  std::unordered_set<Bits, BitsHash> seen_cyclic;
  for (std::uint32_t e = 0; e < n; ++e) {
    if (e == id)
      continue;
    Bits c(words, 0);
    bit_set(c, id);
    std::uint32_t cur = e;
    while (cur != id) {
      bit_set(c, cur);
      cur = table.at(cur, e);
    }
    if (seen_cyclic.insert(c).second)
      cyclics.push_back(c);
  }

  std::vector<Bits> subgroups{trivial};
  std::unordered_set<Bits, BitsHash> seen{trivial};
  for (std::size_t si = 0; si < subgroups.size(); ++si) {
    for (const Bits &c : cyclics) {
      Bits base = subgroups[si];
      if (bits_subset(c, base))
        continue;
      for (std::size_t w = 0; w < words; ++w)
        base[w] |= c[w];
      Bits joined = close_bits(table, std::move(base));
      if (seen.insert(joined).second)
        subgroups.push_back(std::move(joined));
    }
  }

  std::sort(subgroups.begin(), subgroups.end(),
            [](const Bits &a, const Bits &b) {
              std::uint32_t pa = popcount(a), pb = popcount(b);
              if (pa != pb)
                return pa < pb;
              return a < b;
            });

  std::vector<PermGroup> out;
  out.reserve(subgroups.size());
  for (const Bits &bits : subgroups) {
    std::vector<Perm> gens;
    Bits have = trivial;
    std::uint32_t target = popcount(bits);
    for (std::uint32_t i = 0; i < n && popcount(have) < target; ++i) {
      if (!bit_get(bits, i) || bit_get(have, i))
        continue;
      gens.push_back(els[i]);
      bit_set(have, i);
      have = close_bits(table, std::move(have));
    }
    out.push_back(PermGroup(group.degree(), std::move(gens)));
  }
  return out;
}

std::vector<FactorizationRecord>
find_coprime_factorizations(const PermGroup &group,
                            const EnumerationBudget &budget,
                            std::uint64_t order_cap) {
  std::vector<PermGroup> subs = enumerate_subgroups(group, budget, order_cap);
  std::uint64_t total = group.order().u64();
  std::vector<std::uint64_t> orders;
  orders.reserve(subs.size());
  for (const PermGroup &s : subs)
    orders.push_back(s.order().u64());

  std::vector<FactorizationRecord> out;
  for (std::size_t i = 0; i < subs.size(); ++i) {
    for (std::size_t j = i + 1; j < subs.size(); ++j) {
      std::uint64_t oi = orders[i], oj = orders[j];
      if (oi <= 1 || oj <= 1)
        continue;
      if (gcd_u64(oi, oj) != 1)
        continue;
      if (oi > total / oj || oi * oj != total)
        continue;
      // larger factor listed first; coprime sides cannot tie
      if (oi >= oj)
        out.push_back({group, subs[i], subs[j], true});
      else
        out.push_back({group, subs[j], subs[i], true});
    }
  }
  return out;
}

} // namespace permstruct
