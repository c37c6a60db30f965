#pragma once

#include <memory>
#include <mutex>
#include <vector>

#include "permstruct/errors.hpp"
#include "permstruct/order.hpp"
#include "permstruct/perm.hpp"
#include "permstruct/stabilizer_chain.hpp"

namespace permstruct {

// immutable permutation group with a lazily built stabilizer chain; cheap to
// copy (shared state), safe to share across threads
class PermGroup {
public:
  explicit PermGroup(std::vector<Perm> generators); // list must be nonempty
  PermGroup(std::uint32_t degree, std::vector<Perm> generators);
  static PermGroup trivial(std::uint32_t degree);

  std::uint32_t degree() const;
  // normalized: identities dropped, order preserved; empty for the trivial
  // group
  const std::vector<Perm> &generators() const;
  bool is_trivial() const { return generators().empty(); }

  const StabilizerChain &chain() const;
  const Order &order() const { return chain().order(); }
  bool contains(const Perm &g) const { return chain().contains(g); }

private:
  struct Data;
  std::shared_ptr<Data> data_;
};

// H <= G as sets (degrees must match)
bool is_subgroup(const PermGroup &g, const PermGroup &h);
bool group_equal(const PermGroup &a, const PermGroup &b);
PermGroup join(const PermGroup &a, const PermGroup &b); // <a, b>

PermGroup normal_closure(const PermGroup &g, const std::vector<Perm> &seeds);
PermGroup derived_subgroup(const PermGroup &g);
bool is_normal(const PermGroup &g, const PermGroup &h); // requires h <= g
PermGroup conjugate_subgroup(const PermGroup &h, const Perm &g);

std::vector<Perm> elements(const PermGroup &g,
                           const EnumerationBudget &budget = {});
std::vector<Perm> conjugacy_class_reps(const PermGroup &g,
                                       const EnumerationBudget &budget = {});
PermGroup intersection(const PermGroup &a, const PermGroup &b,
                       const EnumerationBudget &budget = {});
PermGroup centralizer(const PermGroup &g, const PermGroup &h,
                      const EnumerationBudget &budget = {});
PermGroup normalizer(const PermGroup &g, const PermGroup &h,
                     const EnumerationBudget &budget = {});

bool is_abelian(const PermGroup &g);
bool is_perfect(const PermGroup &g);

// incremental closure helper: membership-gated generator accumulation over
// one growing chain
class GrowingGroup {
public:
  explicit GrowingGroup(std::uint32_t degree);
  explicit GrowingGroup(const PermGroup &start);

  bool add(const Perm &p); // true when the group grew
  bool contains(const Perm &p) const { return chain_.contains(p); }
  const Order &order() const { return chain_.order(); }
  const std::vector<Perm> &generators() const { return gens_; }
  std::uint32_t degree() const { return degree_; }
  PermGroup freeze() const;

private:
  std::uint32_t degree_;
  std::vector<Perm> gens_;
  StabilizerChain chain_;
};

} // namespace permstruct
