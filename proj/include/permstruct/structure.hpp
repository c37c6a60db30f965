#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "permstruct/group.hpp"
#include "permstruct/quotient.hpp"

namespace permstruct {

enum class FactorKind { Soluble, Semisimple, Mixed };

// ascending subnormal series from the trivial group to ambient; kinds label
// the factors terms[i+1]/terms[i]
struct NormalSeries {
  PermGroup ambient;
  std::vector<PermGroup> terms;
  std::vector<FactorKind> kinds;
  bool verified = false;

  // re-derives every claim: term normality, ascent, factor kinds
  bool verify(const EnumerationBudget &budget = {}) const;
};

// quotient with a possibly trivial kernel; keeps pullback/pushforward
// uniform so radical and socle iterations need no special cases
struct QuotientContext {
  std::optional<CosetAction> action; // nullopt when the kernel is trivial
  PermGroup quotient;

  PermGroup pull(const PermGroup &sub) const {
    return action ? action->preimage_group(sub) : sub;
  }
  PermGroup push(const PermGroup &sub) const {
    return action ? action->map_subgroup(sub) : sub;
  }
};

QuotientContext make_quotient(const PermGroup &g, const PermGroup &n,
                              const EnumerationBudget &budget = {});

std::vector<PermGroup> derived_series(const PermGroup &g); // descending
bool is_soluble(const PermGroup &g);
std::optional<std::uint32_t> derived_length(const PermGroup &g);
PermGroup perfect_core(const PermGroup &g); // terminal derived term

PermGroup p_core(const PermGroup &g, std::uint64_t p,
                 const EnumerationBudget &budget = {});
PermGroup fitting_subgroup(const PermGroup &g,
                           const EnumerationBudget &budget = {});
// ascending; stalls strictly below g exactly when g is insoluble
std::vector<PermGroup> fitting_series(const PermGroup &g,
                                      const EnumerationBudget &budget = {});
std::optional<std::uint32_t> fitting_height(const PermGroup &g,
                                            const EnumerationBudget &budget = {});
bool is_nilpotent(const PermGroup &g, const EnumerationBudget &budget = {});

PermGroup soluble_radical(const PermGroup &g,
                          const EnumerationBudget &budget = {});

std::vector<PermGroup> minimal_normal_subgroups(const PermGroup &g,
                                                const EnumerationBudget &budget = {});
PermGroup socle(const PermGroup &g, const EnumerationBudget &budget = {});
bool is_simple(const PermGroup &g, const EnumerationBudget &budget = {});
// the unique unordered direct factors when g is a direct product of
// nonabelian simple groups; NotSemisimpleError otherwise
std::vector<PermGroup> simple_factor_decomposition(const PermGroup &g,
                                                   const EnumerationBudget &budget = {});

PermGroup layer(const PermGroup &g, const EnumerationBudget &budget = {});
std::vector<PermGroup> components(const PermGroup &g,
                                  const EnumerationBudget &budget = {});
PermGroup generalized_fitting_subgroup(const PermGroup &g,
                                       const EnumerationBudget &budget = {});
NormalSeries gf_series(const PermGroup &g,
                       const EnumerationBudget &budget = {});
std::uint32_t gf_height(const PermGroup &g,
                        const EnumerationBudget &budget = {});

// canonical alternating radical/socle series; the returned count is the
// number of semisimple factors
std::pair<std::uint32_t, NormalSeries>
nonsoluble_length(const PermGroup &g, const EnumerationBudget &budget = {});

struct InvariantReport {
  explicit InvariantReport(const PermGroup &g)
      : group(g), fitting(PermGroup::trivial(g.degree())),
        layer(PermGroup::trivial(g.degree())),
        gf(PermGroup::trivial(g.degree())),
        radical(PermGroup::trivial(g.degree())),
        series{g, {PermGroup::trivial(g.degree())}, {}, false} {}

  PermGroup group;
  bool soluble = false;
  std::optional<std::uint32_t> derived_length;
  std::optional<std::uint32_t> fitting_height;
  std::uint32_t gf_height = 0;
  std::uint32_t nonsoluble_length = 0;
  std::size_t simple_factor_count = 0;
  PermGroup fitting;
  PermGroup layer;
  PermGroup gf;
  PermGroup radical;
  std::vector<PermGroup> components;
  NormalSeries series;
};

InvariantReport compute_report(const PermGroup &g,
                               const EnumerationBudget &budget = {});

} // namespace permstruct
