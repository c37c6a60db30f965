#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "permstruct/errors.hpp"
#include "permstruct/group.hpp"

namespace permstruct {

// right action of g on the cosets of a normal subgroup n; cosets are labeled
// by canonical representatives so the construction is deterministic
//
// preimage support embeds the graph of the quotient map as a permutation
// group on index + degree points and walks its chain; it is capped at
// index <= 1024 (every in-engine pullback is far below that), while the
// image-side action honors budget.max_index
class CosetAction {
public:
  CosetAction(const PermGroup &g, const PermGroup &n,
              const EnumerationBudget &budget = {});

  const PermGroup &group() const { return g_; }
  const PermGroup &kernel() const { return n_; }
  std::uint64_t index() const { return reps_.size(); }
  const PermGroup &image() const { return image_; }

  Perm apply(const Perm &x) const;                     // x must lie in group()
  PermGroup map_subgroup(const PermGroup &h) const;    // h <= group()
  Perm preimage(const Perm &y) const;                  // y in image()
  PermGroup preimage_group(const PermGroup &y) const;  // y <= image()

private:
  Perm canonical(Perm r) const;
  Perm apply_unchecked(const Perm &x) const;
  const StabilizerChain &diagonal_chain() const;

  struct DiagState {
    std::once_flag once;
    std::unique_ptr<StabilizerChain> chain;
  };

  PermGroup g_;
  PermGroup n_;
  std::vector<Perm> reps_;
  std::unordered_map<Perm, std::uint32_t, PermHash> rep_index_;
  std::vector<Perm> image_gens_; // aligned with g_.generators()
  PermGroup image_;
  std::shared_ptr<DiagState> diag_;
};

} // namespace permstruct
