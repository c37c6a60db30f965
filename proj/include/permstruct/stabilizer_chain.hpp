#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "permstruct/order.hpp"
#include "permstruct/perm.hpp"

namespace permstruct {

std::uint64_t default_chain_seed();
void set_default_chain_seed(std::uint64_t seed);

// deterministic stabilizer chain in the Schreier-Sims style; a seeded random
// pre-pass inserts a few short generator words to shorten the closing
// verification, which always checks every Schreier generator exactly once
// per (orbit point, generator) pair
class StabilizerChain {
public:
  StabilizerChain(std::uint32_t degree, const std::vector<Perm> &generators,
                  std::uint64_t seed);

  // forced_base points get a level each, in order, before automatic base
  // selection takes over; used for quotient preimages
  StabilizerChain(std::uint32_t degree, const std::vector<Perm> &generators,
                  std::uint64_t seed, const std::vector<std::uint32_t> &forced_base);

  std::uint32_t degree() const { return degree_; }
  std::size_t length() const { return levels_.size(); }
  std::uint32_t base_point(std::size_t level) const {
    return levels_[level].base;
  }

  const Order &order() const { return order_; }
  bool contains(const Perm &g) const;

  // adds generators and re-closes; returns true when the group grew
  bool extend(const std::vector<Perm> &generators);

  // strips g through levels [from, length()); returns the residue and the
  // level index where stripping stopped (length() when fully stripped)
  std::pair<Perm, std::size_t> sift(const Perm &g, std::size_t from = 0) const;

  const std::vector<std::uint32_t> &orbit(std::size_t level) const {
    return levels_[level].orbit;
  }
  bool in_orbit(std::size_t level, std::uint32_t point) const {
    return levels_[level].position[point] >= 0;
  }
  // u with base_point(level)^u == point
  Perm transversal(std::size_t level, std::uint32_t point) const;

  const std::vector<Perm> &level_generators(std::size_t level) const {
    return levels_[level].gens;
  }

  // visits every element exactly once, as products of transversal
  // representatives, deepest level applied first
  void for_each_element(const std::function<void(const Perm &)> &fn) const;

private:
  struct Level {
    std::uint32_t base = 0;
    std::vector<Perm> gens;
    std::vector<std::int32_t> position; // point -> orbit index, -1 outside
    std::vector<std::uint32_t> orbit;   // discovery order, append-only
    // explicit transversals at small degree, Schreier vector otherwise
    std::vector<Perm> transversal;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> tree; // gen, parent
    std::vector<std::uint32_t> scanned;  // per orbit slot: gens closed over
    std::vector<std::uint32_t> verified; // per orbit slot: gens checked
  };

  void build(const std::vector<Perm> &generators, std::uint64_t seed);
  void append_level(std::uint32_t base);
  void append_orbit_point(Level &lv, std::uint32_t point, std::uint32_t gen,
                          std::uint32_t parent);
  void extend_orbit(std::size_t level);
  void insert_element(const Perm &g);
  void verify();
  void recompute_order();

  std::uint32_t degree_;
  bool explicit_transversals_;
  std::vector<std::uint32_t> forced_base_;
  std::size_t forced_used_ = 0;
  std::vector<Level> levels_;
  Order order_;
};

} // namespace permstruct
