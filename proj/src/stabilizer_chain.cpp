#include "permstruct/stabilizer_chain.hpp"

#include <atomic>
#include <random>

#include "permstruct/errors.hpp"

namespace permstruct {

namespace {

constexpr std::uint32_t kExplicitTransversalDegreeCap = 256;
constexpr std::uint32_t kTreeRootGen = UINT32_MAX;

std::atomic<std::uint64_t> g_default_seed{0x5eed0f0df1e1dull};

} // namespace

std::uint64_t default_chain_seed() { return g_default_seed.load(); }

void set_default_chain_seed(std::uint64_t seed) { g_default_seed.store(seed); }

StabilizerChain::StabilizerChain(std::uint32_t degree,
                                 const std::vector<Perm> &generators,
                                 std::uint64_t seed)
    : degree_(degree),
      explicit_transversals_(degree <= kExplicitTransversalDegreeCap) {
  build(generators, seed);
}

StabilizerChain::StabilizerChain(std::uint32_t degree,
                                 const std::vector<Perm> &generators,
                                 std::uint64_t seed,
                                 const std::vector<std::uint32_t> &forced_base)
    : degree_(degree),
      explicit_transversals_(degree <= kExplicitTransversalDegreeCap),
      forced_base_(forced_base) {
  build(generators, seed);
}

void StabilizerChain::build(const std::vector<Perm> &generators,
                            std::uint64_t seed) {
  for (std::uint32_t b : forced_base_) {
    if (b >= degree_)
      throw PreconditionError("StabilizerChain: forced base point exceeds degree");
    append_level(b);
  }
  forced_used_ = forced_base_.size();

  std::vector<Perm> moved;
  for (const Perm &g : generators) {
    if (g.degree() != degree_)
      throw PreconditionError("StabilizerChain: generator degree mismatch");
    if (!g.is_identity())
      moved.push_back(g);
  }
  for (const Perm &g : moved)
    insert_element(g);

  if (!moved.empty()) {
    // short random words seed strong generators early
    std::mt19937_64 rng(seed);
    for (int w = 0; w < 10; ++w) {
      Perm word(degree_);
      std::uint64_t len = 2 + rng() % 6;
      for (std::uint64_t i = 0; i < len; ++i)
        word = word * moved[rng() % moved.size()];
      if (!word.is_identity())
        insert_element(word);
    }
  }

  verify();
  recompute_order();
}

void StabilizerChain::append_level(std::uint32_t base) {
  Level lv;
  lv.base = base;
  lv.position.assign(degree_, -1);
  lv.position[base] = 0;
  lv.orbit.push_back(base);
  if (explicit_transversals_)
    lv.transversal.push_back(Perm(degree_));
  lv.tree.push_back({kTreeRootGen, base});
  lv.scanned.push_back(0);
  lv.verified.push_back(0);
  levels_.push_back(std::move(lv));
}

void StabilizerChain::append_orbit_point(Level &lv, std::uint32_t point,
                                         std::uint32_t gen,
                                         std::uint32_t parent) {
  lv.position[point] = static_cast<std::int32_t>(lv.orbit.size());
  lv.orbit.push_back(point);
  if (explicit_transversals_)
    lv.transversal.push_back(
        lv.transversal[lv.position[parent]] * lv.gens[gen]);
  lv.tree.push_back({gen, parent});
  lv.scanned.push_back(0);
  lv.verified.push_back(0);
}

void StabilizerChain::extend_orbit(std::size_t level) {
  Level &lv = levels_[level];
  for (std::size_t oi = 0; oi < lv.orbit.size(); ++oi) {
    std::uint32_t p = lv.orbit[oi];
    for (std::uint32_t gi = lv.scanned[oi];
         gi < static_cast<std::uint32_t>(lv.gens.size()); ++gi) {
      std::uint32_t q = lv.gens[gi][p];
      if (lv.position[q] < 0)
        append_orbit_point(lv, q, gi, p);
    }
    lv.scanned[oi] = static_cast<std::uint32_t>(lv.gens.size());
  }
}

Perm StabilizerChain::transversal(std::size_t level,
                                  std::uint32_t point) const {
  const Level &lv = levels_[level];
  std::int32_t slot = lv.position[point];
  if (slot < 0)
    throw PreconditionError("StabilizerChain: point outside orbit");
  if (explicit_transversals_)
    return lv.transversal[slot];
  std::vector<std::uint32_t> path;
  while (slot != 0) {
    const auto &[gen, parent] = lv.tree[slot];
    path.push_back(gen);
    slot = lv.position[parent];
  }
  Perm u(degree_);
  for (std::size_t i = path.size(); i-- > 0;)
    u = u * lv.gens[path[i]];
  return u;
}

std::pair<Perm, std::size_t> StabilizerChain::sift(const Perm &g,
                                                   std::size_t from) const {
  Perm r = g;
  for (std::size_t t = from; t < levels_.size(); ++t) {
    std::uint32_t p = r[levels_[t].base];
    if (levels_[t].position[p] < 0)
      return {std::move(r), t};
    r = r * transversal(t, p).inverse();
  }
  return {std::move(r), levels_.size()};
}

bool StabilizerChain::contains(const Perm &g) const {
  if (g.degree() != degree_)
    throw PreconditionError("StabilizerChain: degree mismatch in membership test");
  auto [r, stop] = sift(g);
  return stop == levels_.size() && r.is_identity();
}

void StabilizerChain::insert_element(const Perm &g) {
  auto [r, j] = sift(g);
  if (r.is_identity())
    return;
  if (j == levels_.size())
    append_level(r.smallest_moved_point());
  for (std::size_t t = 0; t <= j; ++t)
    levels_[t].gens.push_back(r);
  for (std::size_t t = 0; t <= j; ++t)
    extend_orbit(t);
}

void StabilizerChain::verify() {
  if (levels_.empty())
    return;
  std::size_t i = levels_.size();
  --i;
  while (true) {
    Level &lv = levels_[i];
    extend_orbit(i);
    bool restart = false;
    for (std::size_t oi = 0; !restart && oi < lv.orbit.size(); ++oi) {
      std::uint32_t p = lv.orbit[oi];
      while (lv.verified[oi] <
             static_cast<std::uint32_t>(lv.gens.size())) {
        std::uint32_t gi = lv.verified[oi]++;
        const Perm &s = lv.gens[gi];
        std::uint32_t q = s[p];
        Perm sg = transversal(i, p) * s * transversal(i, q).inverse();
        if (sg.is_identity())
          continue;
        auto [r, j] = sift(sg, i + 1);
        if (r.is_identity())
          continue;
        if (j == levels_.size())
          append_level(r.smallest_moved_point());
        for (std::size_t t = i + 1; t <= j; ++t)
          levels_[t].gens.push_back(r);
        for (std::size_t t = i + 1; t <= j; ++t)
          extend_orbit(t);
        i = j;
        restart = true;
        break;
      }
    }
    if (restart)
      continue;
    if (i == 0)
      break;
    --i;
  }
}

void StabilizerChain::recompute_order() {
  Order out;
  for (const Level &lv : levels_)
    out *= Order::from_u64(lv.orbit.size());
  order_ = out;
}

bool StabilizerChain::extend(const std::vector<Perm> &generators) {
  Order before = order_;
  bool touched = false;
  for (const Perm &g : generators) {
    if (g.degree() != degree_)
      throw PreconditionError("StabilizerChain: generator degree mismatch");
    if (g.is_identity())
      continue;
    insert_element(g);
    touched = true;
  }
  if (!touched)
    return false;
  verify();
  recompute_order();
  return order_ != before;
}

void StabilizerChain::for_each_element(
    const std::function<void(const Perm &)> &fn) const {
  if (levels_.empty()) {
    fn(Perm(degree_));
    return;
  }
  std::function<void(std::size_t, const Perm &)> rec =
      [&](std::size_t level, const Perm &acc) {
        if (level == levels_.size()) {
          fn(acc);
          return;
        }
        for (std::uint32_t p : levels_[level].orbit)
          rec(level + 1, transversal(level, p) * acc);
      };
  rec(0, Perm(degree_));
}

} // namespace permstruct
