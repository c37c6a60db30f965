#include "permstruct/quotient.hpp"

#include <deque>

namespace permstruct {

namespace {
constexpr std::uint64_t kPreimageIndexCap = 1024;
}

CosetAction::CosetAction(const PermGroup &g, const PermGroup &n,
                         const EnumerationBudget &budget)
    : g_(g), n_(n), image_(PermGroup::trivial(1)),
      diag_(std::make_shared<DiagState>()) {
  budget.validate();
  if (!is_subgroup(g, n))
    throw PreconditionError("CosetAction: kernel is not a subgroup");
  if (!is_normal(g, n))
    throw PreconditionError("CosetAction: kernel is not normal");
  Order index_order = g.order().divided_by(n.order());
  if (!index_order.leq_u64(budget.max_index))
    throw BudgetExceededError(BudgetExceededError::Kind::Index,
                              budget.max_index,
                              "CosetAction: index " + index_order.str() +
                                  " exceeds max_index " +
                                  std::to_string(budget.max_index));
  std::uint64_t index = index_order.u64();

  reps_.reserve(index);
  rep_index_.reserve(index * 2);
  Perm start = canonical(Perm(g.degree()));
  reps_.push_back(start);
  rep_index_.emplace(start, 0);
  std::deque<std::uint32_t> queue{0};
  while (!queue.empty()) {
    std::uint32_t cur = queue.front();
    queue.pop_front();
    for (const Perm &gen : g_.generators()) {
      Perm next = canonical(reps_[cur] * gen);
      if (rep_index_.emplace(next, reps_.size()).second) {
        reps_.push_back(next);
        queue.push_back(reps_.size() - 1);
      }
    }
  }
  if (reps_.size() != index)
    throw Error("CosetAction: coset walk disagrees with the index");

  image_gens_.reserve(g_.generators().size());
  for (const Perm &gen : g_.generators())
    image_gens_.push_back(apply_unchecked(gen));
  image_ = PermGroup(static_cast<std::uint32_t>(index), image_gens_);
}

Perm CosetAction::canonical(Perm r) const {
  const StabilizerChain &ch = n_.chain();
  for (std::size_t t = 0; t < ch.length(); ++t) {
    const auto &orbit = ch.orbit(t);
    std::uint32_t best = orbit[0];
    for (std::uint32_t p : orbit)
      if (r[p] < r[best])
        best = p;
    if (best != ch.base_point(t))
      r = ch.transversal(t, best) * r;
  }
  return r;
}

Perm CosetAction::apply_unchecked(const Perm &x) const {
  std::vector<std::uint32_t> out(reps_.size());
  for (std::uint32_t i = 0; i < reps_.size(); ++i)
    out[i] = rep_index_.at(canonical(reps_[i] * x));
  return Perm(std::move(out));
}

Perm CosetAction::apply(const Perm &x) const {
  if (!g_.contains(x))
    throw PreconditionError("CosetAction: element outside the group");
  return apply_unchecked(x);
}

PermGroup CosetAction::map_subgroup(const PermGroup &h) const {
  if (!is_subgroup(g_, h))
    throw PreconditionError("CosetAction: map_subgroup needs a subgroup");
  std::vector<Perm> gens;
  gens.reserve(h.generators().size());
  for (const Perm &x : h.generators())
    gens.push_back(apply_unchecked(x));
  return PermGroup(static_cast<std::uint32_t>(index()), std::move(gens));
}

const StabilizerChain &CosetAction::diagonal_chain() const {
  std::call_once(diag_->once, [this] {
    if (index() > kPreimageIndexCap)
      throw PreconditionError(
          "CosetAction: preimage support is capped at index 1024");
    std::uint32_t block = static_cast<std::uint32_t>(index());
    std::uint32_t dd = block + g_.degree();
    std::vector<Perm> diag_gens;
    diag_gens.reserve(g_.generators().size());
    for (std::size_t k = 0; k < g_.generators().size(); ++k) {
      std::vector<std::uint32_t> images(dd);
      for (std::uint32_t i = 0; i < block; ++i)
        images[i] = image_gens_[k][i];
      for (std::uint32_t x = 0; x < g_.degree(); ++x)
        images[block + x] = block + g_.generators()[k][x];
      diag_gens.push_back(Perm(std::move(images)));
    }
    std::vector<std::uint32_t> forced(block);
    for (std::uint32_t i = 0; i < block; ++i)
      forced[i] = i;
    diag_->chain = std::make_unique<StabilizerChain>(
        dd, diag_gens, default_chain_seed(), forced);
  });
  return *diag_->chain;
}

Perm CosetAction::preimage(const Perm &y) const {
  if (y.degree() != index())
    throw PreconditionError("CosetAction: preimage degree mismatch");
  if (!image_.contains(y))
    throw PreconditionError("CosetAction: element outside the image");
  const StabilizerChain &ch = diagonal_chain();
  std::uint32_t block = static_cast<std::uint32_t>(index());
  Perm v(ch.degree());
  Perm v_inv(ch.degree());
  for (std::uint32_t t = 0; t < block; ++t) {
    std::uint32_t target = y[t];
    std::uint32_t delta = v_inv[target];
    if (!ch.in_orbit(t, delta))
      throw Error("CosetAction: preimage walk left the orbit");
    if (delta != ch.base_point(t)) {
      v = ch.transversal(t, delta) * v;
      v_inv = v.inverse();
    }
  }
  std::vector<std::uint32_t> out(g_.degree());
  for (std::uint32_t x = 0; x < g_.degree(); ++x)
    out[x] = v[block + x] - block;
  return Perm(std::move(out));
}

PermGroup CosetAction::preimage_group(const PermGroup &y) const {
  if (!is_subgroup(image_, y))
    throw PreconditionError("CosetAction: preimage_group needs an image subgroup");
  std::vector<Perm> gens = n_.generators();
  for (const Perm &x : y.generators())
    gens.push_back(preimage(x));
  return PermGroup(g_.degree(), std::move(gens));
}

} // namespace permstruct
