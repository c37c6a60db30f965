#include "permstruct/group.hpp"

#include <unordered_map>

namespace permstruct {

struct PermGroup::Data {
  std::uint32_t degree = 0;
  std::vector<Perm> gens;
  std::uint64_t seed = 0;
  mutable std::once_flag chain_once;
  mutable std::unique_ptr<StabilizerChain> chain;
};

PermGroup::PermGroup(std::vector<Perm> generators) {
  if (generators.empty())
    throw PreconditionError(
        "PermGroup: empty generator list (use PermGroup::trivial)");
  std::uint32_t degree = generators.front().degree();
  *this = PermGroup(degree, std::move(generators));
}

PermGroup::PermGroup(std::uint32_t degree, std::vector<Perm> generators)
    : data_(std::make_shared<Data>()) {
  data_->degree = degree;
  data_->seed = default_chain_seed();
  for (Perm &g : generators) {
    if (g.degree() != degree)
      throw PreconditionError("PermGroup: generator degree mismatch");
    if (!g.is_identity())
      data_->gens.push_back(std::move(g));
  }
}

PermGroup PermGroup::trivial(std::uint32_t degree) {
  return PermGroup(degree, {});
}

std::uint32_t PermGroup::degree() const { return data_->degree; }

const std::vector<Perm> &PermGroup::generators() const { return data_->gens; }

const StabilizerChain &PermGroup::chain() const {
  std::call_once(data_->chain_once, [this] {
    data_->chain = std::make_unique<StabilizerChain>(data_->degree,
                                                     data_->gens, data_->seed);
  });
  return *data_->chain;
}

namespace {

void require_same_degree(const PermGroup &a, const PermGroup &b,
                         const char *what) {
  if (a.degree() != b.degree())
    throw PreconditionError(std::string(what) + ": degree mismatch");
}

} // namespace

bool is_subgroup(const PermGroup &g, const PermGroup &h) {
  require_same_degree(g, h, "is_subgroup");
  for (const Perm &x : h.generators())
    if (!g.contains(x))
      return false;
  return true;
}

bool group_equal(const PermGroup &a, const PermGroup &b) {
  require_same_degree(a, b, "group_equal");
  if (a.order() != b.order())
    return false;
  return is_subgroup(b, a);
}

PermGroup join(const PermGroup &a, const PermGroup &b) {
  require_same_degree(a, b, "join");
  std::vector<Perm> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return PermGroup(a.degree(), std::move(gens));
}

GrowingGroup::GrowingGroup(std::uint32_t degree)
    : degree_(degree), chain_(degree, {}, default_chain_seed()) {}

GrowingGroup::GrowingGroup(const PermGroup &start)
    : degree_(start.degree()),
      chain_(start.degree(), start.generators(), default_chain_seed()) {
  gens_ = start.generators();
}

bool GrowingGroup::add(const Perm &p) {
  if (p.is_identity() || chain_.contains(p))
    return false;
  chain_.extend({p});
  gens_.push_back(p);
  return true;
}

PermGroup GrowingGroup::freeze() const { return PermGroup(degree_, gens_); }

PermGroup normal_closure(const PermGroup &g, const std::vector<Perm> &seeds) {
  GrowingGroup n(g.degree());
  for (const Perm &s : seeds) {
    if (s.degree() != g.degree())
      throw PreconditionError("normal_closure: seed degree mismatch");
    n.add(s);
  }
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<Perm> snapshot = n.generators();
    for (const Perm &x : snapshot)
      for (const Perm &c : g.generators())
        if (n.add(x.conjugated_by(c)))
          changed = true;
  }
  return n.freeze();
}

PermGroup derived_subgroup(const PermGroup &g) {
  GrowingGroup d(g.degree());
  const auto &gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      d.add(commutator(gens[i], gens[j]));
  bool changed = d.order() != g.order();
  while (changed) {
    changed = false;
    std::vector<Perm> snapshot = d.generators();
    for (const Perm &x : snapshot) {
      for (const Perm &c : gens)
        if (d.add(x.conjugated_by(c)))
          changed = true;
      if (d.order() == g.order())
        return d.freeze();
    }
  }
  return d.freeze();
}

bool is_normal(const PermGroup &g, const PermGroup &h) {
  if (!is_subgroup(g, h))
    throw PreconditionError("is_normal: second group is not a subgroup");
  for (const Perm &x : h.generators())
    for (const Perm &c : g.generators())
      if (!h.contains(x.conjugated_by(c)))
        return false;
  return true;
}

PermGroup conjugate_subgroup(const PermGroup &h, const Perm &g) {
  if (h.degree() != g.degree())
    throw PreconditionError("conjugate_subgroup: degree mismatch");
  std::vector<Perm> gens;
  gens.reserve(h.generators().size());
  for (const Perm &x : h.generators())
    gens.push_back(x.conjugated_by(g));
  return PermGroup(h.degree(), std::move(gens));
}

std::vector<Perm> elements(const PermGroup &g,
                           const EnumerationBudget &budget) {
  budget.validate();
  if (!g.order().leq_u64(budget.max_elements))
    throw BudgetExceededError(BudgetExceededError::Kind::Elements,
                              budget.max_elements,
                              "elements: group order " + g.order().str() +
                                  " exceeds max_elements " +
                                  std::to_string(budget.max_elements));
  std::vector<Perm> out;
  out.reserve(g.order().u64());
  g.chain().for_each_element([&out](const Perm &p) { out.push_back(p); });
  return out;
}

std::vector<Perm> conjugacy_class_reps(const PermGroup &g,
                                       const EnumerationBudget &budget) {
  std::vector<Perm> els = elements(g, budget);
  std::unordered_map<Perm, std::uint32_t, PermHash> index;
  index.reserve(els.size() * 2);
  for (std::uint32_t i = 0; i < els.size(); ++i)
    index.emplace(els[i], i);
  std::vector<bool> seen(els.size(), false);
  std::vector<Perm> reps;
  std::vector<std::uint32_t> queue;
  for (std::uint32_t i = 0; i < els.size(); ++i) {
    if (seen[i])
      continue;
    reps.push_back(els[i]);
    seen[i] = true;
    queue.assign(1, i);
    while (!queue.empty()) {
      std::uint32_t cur = queue.back();
      queue.pop_back();
      for (const Perm &c : g.generators()) {
        std::uint32_t img = index.at(els[cur].conjugated_by(c));
        if (!seen[img]) {
          seen[img] = true;
          queue.push_back(img);
        }
      }
    }
  }
  return reps;
}

PermGroup intersection(const PermGroup &a, const PermGroup &b,
                       const EnumerationBudget &budget) {
  require_same_degree(a, b, "intersection");
  budget.validate();
  if (a.order().coprime_to(b.order()))
    return PermGroup::trivial(a.degree());
  const PermGroup &small = a.order() <= b.order() ? a : b;
  const PermGroup &large = a.order() <= b.order() ? b : a;
  if (!small.order().leq_u64(budget.max_elements))
    throw BudgetExceededError(BudgetExceededError::Kind::Elements,
                              budget.max_elements,
                              "intersection: smaller group order " +
                                  small.order().str() +
                                  " exceeds max_elements");
  GrowingGroup r(a.degree());
  small.chain().for_each_element([&](const Perm &p) {
    if (!r.contains(p) && large.contains(p))
      r.add(p);
  });
  return r.freeze();
}

PermGroup centralizer(const PermGroup &g, const PermGroup &h,
                      const EnumerationBudget &budget) {
  require_same_degree(g, h, "centralizer");
  budget.validate();
  if (h.is_trivial() || g.is_trivial())
    return g;
  if (!g.order().leq_u64(budget.max_elements))
    throw BudgetExceededError(BudgetExceededError::Kind::Elements,
                              budget.max_elements,
                              "centralizer: group order " + g.order().str() +
                                  " exceeds max_elements");
  GrowingGroup c(g.degree());
  g.chain().for_each_element([&](const Perm &p) {
    if (c.contains(p))
      return;
    for (const Perm &x : h.generators())
      if (p * x != x * p)
        return;
    c.add(p);
  });
  return c.freeze();
}

PermGroup normalizer(const PermGroup &g, const PermGroup &h,
                     const EnumerationBudget &budget) {
  require_same_degree(g, h, "normalizer");
  budget.validate();
  if (h.is_trivial() || g.is_trivial())
    return g;
  if (!g.order().leq_u64(budget.max_elements))
    throw BudgetExceededError(BudgetExceededError::Kind::Elements,
                              budget.max_elements,
                              "normalizer: group order " + g.order().str() +
                                  " exceeds max_elements");
  GrowingGroup n(g.degree());
  g.chain().for_each_element([&](const Perm &p) {
    if (n.contains(p))
      return;
    for (const Perm &x : h.generators())
      if (!h.contains(x.conjugated_by(p)))
        return;
    n.add(p);
  });
  return n.freeze();
}

bool is_abelian(const PermGroup &g) {
  const auto &gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (gens[i] * gens[j] != gens[j] * gens[i])
        return false;
  return true;
}

bool is_perfect(const PermGroup &g) {
  return derived_subgroup(g).order() == g.order();
}

} // namespace permstruct
