#pragma once

#include <cstdint>
#include <vector>

#include "permstruct/group.hpp"

namespace permstruct {

struct FactorizationRecord {
  PermGroup group;
  PermGroup a;
  PermGroup b;
  bool coprime = false;
};

// |a|*|b| == |group|*|a cap b|, i.e. the set product a*b fills the group
bool is_factorization(const PermGroup &group, const PermGroup &a,
                      const PermGroup &b, const EnumerationBudget &budget = {});

// coprime-order elements whose product lies in a normal subgroup lie there
// themselves; preconditions are enforced, the return value is the claim
bool check_lemma_l1(const PermGroup &group, const PermGroup &normal,
                    const Perm &a, const Perm &b);

// a coprime factorization induces one on every normal subgroup:
// |n cap a| * |n cap b| == |n|
bool check_lemma_l11(const PermGroup &group, const PermGroup &a,
                     const PermGroup &b, const PermGroup &normal,
                     const EnumerationBudget &budget = {});

// every subgroup, via join-with-cyclic closure over the multiplication
// table; requires |group| <= order_cap
std::vector<PermGroup> enumerate_subgroups(const PermGroup &group,
                                           const EnumerationBudget &budget = {},
                                           std::uint64_t order_cap = 2000);

// all unordered pairs {a, b} of nontrivial subgroups with coprime orders
// multiplying to |group|; each such pair is automatically a factorization
std::vector<FactorizationRecord>
find_coprime_factorizations(const PermGroup &group,
                            const EnumerationBudget &budget = {},
                            std::uint64_t order_cap = 2000);

} // namespace permstruct
