#include "permstruct/structure.hpp"

#include <algorithm>

namespace permstruct {

namespace {

bool is_prime_u64(std::uint64_t p) {
  if (p < 2)
    return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0)
      return false;
  return true;
}

// O_p over precomputed class representatives
PermGroup p_core_from_reps(const PermGroup &g, std::uint64_t p,
                           const std::vector<Perm> &reps) {
  GrowingGroup acc(g.degree());
  for (const Perm &rep : reps) {
    if (rep.is_identity() || !rep.order().is_power_of(p))
      continue;
    if (acc.contains(rep))
      continue;
    PermGroup closure = normal_closure(g, {rep});
    if (!closure.order().is_power_of(p))
      continue;
    for (const Perm &x : closure.generators())
      acc.add(x);
  }
  return acc.freeze();
}

PermGroup fitting_from_reps(const PermGroup &g,
                            const std::vector<Perm> &reps) {
  GrowingGroup acc(g.degree());
  for (std::uint64_t p : g.order().primes()) {
    PermGroup core = p_core_from_reps(g, p, reps);
    for (const Perm &x : core.generators())
      acc.add(x);
  }
  return acc.freeze();
}

} // namespace

QuotientContext make_quotient(const PermGroup &g, const PermGroup &n,
                              const EnumerationBudget &budget) {
  if (n.is_trivial())
    return QuotientContext{std::nullopt, g};
  CosetAction action(g, n, budget);
  PermGroup image = action.image();
  return QuotientContext{std::move(action), std::move(image)};
}

std::vector<PermGroup> derived_series(const PermGroup &g) {
  std::vector<PermGroup> out{g};
  while (true) {
    PermGroup next = derived_subgroup(out.back());
    if (next.order() == out.back().order())
      break;
    out.push_back(std::move(next));
  }
  return out;
}

bool is_soluble(const PermGroup &g) {
  return derived_series(g).back().is_trivial();
}

std::optional<std::uint32_t> derived_length(const PermGroup &g) {
  auto series = derived_series(g);
  if (!series.back().is_trivial())
    return std::nullopt;
  return static_cast<std::uint32_t>(series.size() - 1);
}

PermGroup perfect_core(const PermGroup &g) {
  PermGroup cur = g;
  while (true) {
    PermGroup next = derived_subgroup(cur);
    if (next.order() == cur.order())
      return cur;
    cur = std::move(next);
  }
}

PermGroup p_core(const PermGroup &g, std::uint64_t p,
                 const EnumerationBudget &budget) {
  if (!is_prime_u64(p))
    throw PreconditionError("p_core: " + std::to_string(p) + " is not prime");
  return p_core_from_reps(g, p, conjugacy_class_reps(g, budget));
}

PermGroup fitting_subgroup(const PermGroup &g,
                           const EnumerationBudget &budget) {
  if (g.is_trivial())
    return g;
  return fitting_from_reps(g, conjugacy_class_reps(g, budget));
}

std::vector<PermGroup> fitting_series(const PermGroup &g,
                                      const EnumerationBudget &budget) {
  std::vector<PermGroup> terms{PermGroup::trivial(g.degree())};
  while (true) {
    if (terms.back().order() == g.order())
      break;
    QuotientContext ctx = make_quotient(g, terms.back(), budget);
    PermGroup f = fitting_subgroup(ctx.quotient, budget);
    if (f.is_trivial())
      break;
    terms.push_back(ctx.pull(f));
  }
  return terms;
}

std::optional<std::uint32_t> fitting_height(const PermGroup &g,
                                            const EnumerationBudget &budget) {
  auto terms = fitting_series(g, budget);
  if (terms.back().order() != g.order())
    return std::nullopt;
  return static_cast<std::uint32_t>(terms.size() - 1);
}

bool is_nilpotent(const PermGroup &g, const EnumerationBudget &budget) {
  return fitting_subgroup(g, budget).order() == g.order();
}

PermGroup soluble_radical(const PermGroup &g,
                          const EnumerationBudget &budget) {
  return fitting_series(g, budget).back();
}

std::vector<PermGroup> minimal_normal_subgroups(const PermGroup &g,
                                                const EnumerationBudget &budget) {
  std::vector<PermGroup> candidates;
  for (const Perm &rep : conjugacy_class_reps(g, budget)) {
    if (rep.is_identity())
      continue;
    PermGroup closure = normal_closure(g, {rep});
    bool dup = false;
    for (const PermGroup &c : candidates)
      if (group_equal(c, closure)) {
        dup = true;
        break;
      }
    if (!dup)
      candidates.push_back(std::move(closure));
  }
  std::vector<PermGroup> out;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    bool minimal = true;
    for (std::size_t j = 0; j < candidates.size() && minimal; ++j)
      if (j != i && candidates[j].order() < candidates[i].order() &&
          is_subgroup(candidates[i], candidates[j]))
        minimal = false;
    if (minimal)
      out.push_back(candidates[i]);
  }
  return out;
}

PermGroup socle(const PermGroup &g, const EnumerationBudget &budget) {
  GrowingGroup acc(g.degree());
  for (const PermGroup &m : minimal_normal_subgroups(g, budget))
    for (const Perm &x : m.generators())
      acc.add(x);
  return acc.freeze();
}

bool is_simple(const PermGroup &g, const EnumerationBudget &budget) {
  if (g.is_trivial())
    return false;
  for (const Perm &rep : conjugacy_class_reps(g, budget)) {
    if (rep.is_identity())
      continue;
    if (normal_closure(g, {rep}).order() != g.order())
      return false;
  }
  return true;
}

std::vector<PermGroup> simple_factor_decomposition(const PermGroup &g,
                                                   const EnumerationBudget &budget) {
  if (g.is_trivial())
    throw NotSemisimpleError("simple_factor_decomposition: trivial group");
  std::vector<PermGroup> mins = minimal_normal_subgroups(g, budget);
  Order product;
  for (const PermGroup &m : mins) {
    if (is_abelian(m))
      throw NotSemisimpleError(
          "simple_factor_decomposition: abelian minimal normal subgroup");
    if (!is_simple(m, budget))
      throw NotSemisimpleError(
          "simple_factor_decomposition: minimal normal subgroup is not simple");
    product *= m.order();
  }
  if (product != g.order())
    throw NotSemisimpleError(
        "simple_factor_decomposition: socle is a proper subgroup");
  return mins;
}

PermGroup layer(const PermGroup &g, const EnumerationBudget &budget) {
  if (g.is_trivial())
    return g;
  PermGroup f = fitting_subgroup(g, budget);
  PermGroup c = f.is_trivial() ? g : centralizer(g, f, budget);
  if (c.is_trivial())
    return PermGroup::trivial(g.degree());
  PermGroup s = soluble_radical(c, budget);
  if (s.order() == c.order())
    return PermGroup::trivial(g.degree());
  QuotientContext ctx = make_quotient(c, s, budget);
  PermGroup soc = socle(ctx.quotient, budget);
  return perfect_core(ctx.pull(soc));
}

std::vector<PermGroup> components(const PermGroup &g,
                                  const EnumerationBudget &budget) {
  PermGroup e = layer(g, budget);
  if (e.is_trivial())
    return {};
  PermGroup z = centralizer(e, e, budget);
  QuotientContext ctx = make_quotient(e, z, budget);
  std::vector<PermGroup> out;
  for (const PermGroup &s : simple_factor_decomposition(ctx.quotient, budget))
    out.push_back(perfect_core(ctx.pull(s)));
  return out;
}

PermGroup generalized_fitting_subgroup(const PermGroup &g,
                                       const EnumerationBudget &budget) {
  return join(fitting_subgroup(g, budget), layer(g, budget));
}

NormalSeries gf_series(const PermGroup &g, const EnumerationBudget &budget) {
  NormalSeries out{g, {PermGroup::trivial(g.degree())}, {}, false};
  while (out.terms.back().order() != g.order()) {
    QuotientContext ctx = make_quotient(g, out.terms.back(), budget);
    PermGroup fs = generalized_fitting_subgroup(ctx.quotient, budget);
    if (fs.is_trivial())
      throw Error("gf_series: trivial generalized Fitting subgroup in a "
                  "nontrivial quotient");
    out.terms.push_back(ctx.pull(fs));
    out.kinds.push_back(FactorKind::Mixed);
  }
  return out;
}

std::uint32_t gf_height(const PermGroup &g, const EnumerationBudget &budget) {
  return static_cast<std::uint32_t>(gf_series(g, budget).terms.size() - 1);
}

std::pair<std::uint32_t, NormalSeries>
nonsoluble_length(const PermGroup &g, const EnumerationBudget &budget) {
  NormalSeries series{g, {PermGroup::trivial(g.degree())}, {}, false};
  std::uint32_t lambda = 0;
  while (true) {
    PermGroup &r = series.terms.back();
    if (r.order() == g.order())
      break;
    QuotientContext ctx = make_quotient(g, r, budget);
    PermGroup rad = soluble_radical(ctx.quotient, budget);
    if (!rad.is_trivial()) {
      series.terms.push_back(ctx.pull(rad));
      series.kinds.push_back(FactorKind::Soluble);
      if (series.terms.back().order() == g.order())
        break;
      ctx = make_quotient(g, series.terms.back(), budget);
    }
    PermGroup soc = socle(ctx.quotient, budget);
    if (soc.is_trivial())
      throw Error("nonsoluble_length: trivial socle in a nontrivial quotient");
    series.terms.push_back(ctx.pull(soc));
    series.kinds.push_back(FactorKind::Semisimple);
    lambda += 1;
  }
  return {lambda, std::move(series)};
}

bool NormalSeries::verify(const EnumerationBudget &budget) const {
  if (terms.empty() || kinds.size() != terms.size() - 1)
    return false;
  if (!terms.front().is_trivial())
    return false;
  if (!group_equal(terms.back(), ambient))
    return false;
  for (std::size_t i = 0; i + 1 < terms.size(); ++i)
    if (!is_subgroup(terms[i + 1], terms[i]) ||
        !terms[i].order().divides(terms[i + 1].order()))
      return false;
  for (const PermGroup &t : terms)
    if (!is_subgroup(ambient, t) || !is_normal(ambient, t))
      return false;
  for (std::size_t i = 0; i + 1 < terms.size(); ++i) {
    if (kinds[i] == FactorKind::Mixed)
      continue;
    CosetAction factor(terms[i + 1], terms[i], budget);
    if (kinds[i] == FactorKind::Soluble) {
      if (!is_soluble(factor.image()))
        return false;
    } else {
      try {
        simple_factor_decomposition(factor.image(), budget);
      } catch (const NotSemisimpleError &) {
        return false;
      }
    }
  }
  return true;
}

InvariantReport compute_report(const PermGroup &g,
                               const EnumerationBudget &budget) {
  InvariantReport report(g);
  report.derived_length = permstruct::derived_length(g);
  report.soluble = report.derived_length.has_value();
  report.fitting = fitting_subgroup(g, budget);
  auto fseries = fitting_series(g, budget);
  report.radical = fseries.back();
  if (report.radical.order() == g.order())
    report.fitting_height = static_cast<std::uint32_t>(fseries.size() - 1);
  report.layer = permstruct::layer(g, budget);
  report.components = permstruct::components(g, budget);
  report.gf = join(report.fitting, report.layer);
  report.gf_height = permstruct::gf_height(g, budget);
  auto [lambda, series] = permstruct::nonsoluble_length(g, budget);
  report.nonsoluble_length = lambda;
  report.series = std::move(series);
  report.series.verified = report.series.verify(budget);
  if (report.radical.order() != g.order()) {
    QuotientContext ctx = make_quotient(g, report.radical, budget);
    report.simple_factor_count = simple_factor_decomposition(
        generalized_fitting_subgroup(ctx.quotient, budget), budget).size();
  }
  return report;
}

} // namespace permstruct
