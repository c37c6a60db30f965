#include "permstruct/certificate.hpp"

#include <algorithm>
#include <cstdint>
#include <future>
#include <utility>

#include "permstruct/wreath.hpp"

namespace permstruct {

namespace {

std::uint64_t pow2_minus_one(std::uint32_t e) {
  if (e >= 64)
    return UINT64_MAX;
  return (std::uint64_t{1} << e) - 1;
}

bool has_two_primes(const Order &o) { return o.primes().size() >= 2; }

bool normalizes(const PermGroup &h, const PermGroup &target) {
  for (const Perm &x : h.generators())
    for (const Perm &y : target.generators())
      if (!target.contains(y.conjugated_by(x)))
        return false;
  return true;
}

// the permutation of the factor list induced by conjugation, or nullopt
// when some image is not again a listed factor
std::optional<std::vector<std::size_t>>
factor_permutation(const std::vector<SimpleFactorEntry> &factors,
                   const Perm &x) {
  std::vector<std::size_t> img(factors.size());
  std::vector<bool> hit(factors.size(), false);
  for (std::size_t i = 0; i < factors.size(); ++i) {
    PermGroup conj = conjugate_subgroup(factors[i].s, x);
    bool found = false;
    for (std::size_t j = 0; j < factors.size(); ++j) {
      if (hit[j] || factors[j].s.order() != conj.order())
        continue;
      if (group_equal(factors[j].s, conj)) {
        img[i] = j;
        hit[j] = true;
        found = true;
        break;
      }
    }
    if (!found)
      return std::nullopt;
  }
  return img;
}

void require_coprime_factorization(const PermGroup &g, const PermGroup &a,
                                   const PermGroup &b) {
  if (a.degree() != g.degree() || b.degree() != g.degree())
    throw PreconditionError("factor degrees must match the group degree");
  if (!is_subgroup(g, a) || !is_subgroup(g, b))
    throw PreconditionError("factors must be subgroups of the group");
  if (!a.order().coprime_to(b.order()))
    throw PreconditionError("factor orders must be coprime");
  if (a.order() * b.order() != g.order())
    throw PreconditionError(
        "factor orders must multiply to the group order");
}

std::unique_ptr<CertificateNode> replay_node(const PermGroup &g,
                                             const PermGroup &a,
                                             const PermGroup &b,
                                             std::uint32_t depth,
                                             const ReplayOptions &opts) {
  auto node = std::make_unique<CertificateNode>(CertificateNode{g, a, b});
  const EnumerationBudget &budget = opts.budget;
  try {
    node->h_star_a = gf_height(a, budget);
    node->h_star_b = gf_height(b, budget);
    node->claimed_bound = pow2_minus_one(node->h_star_a + node->h_star_b);
    node->observed_lambda = nonsoluble_length(g, budget).first;
    node->bound_holds = *node->observed_lambda <= node->claimed_bound;

    if (is_soluble(g)) {
      node->soluble = true;
      return node;
    }
    if (depth == 0) {
      node->incomplete = true;
      node->incomplete_reason = "recursion depth budget exhausted";
      return node;
    }

    PermGroup rad = soluble_radical(g, budget);
    node->radical = rad;
    QuotientContext q = make_quotient(g, rad, budget);
    PermGroup gq = q.quotient;
    PermGroup aq = q.push(a);
    PermGroup bq = q.push(b);
    node->quotient_a = aq;
    node->quotient_b = bq;

    // with a trivial radical the generalized Fitting subgroup is the
    // socle: a direct product of nonabelian simple groups
    PermGroup fstar = generalized_fitting_subgroup(gq, budget);
    node->l = fstar;
    for (PermGroup &s : simple_factor_decomposition(fstar, budget)) {
      PermGroup sa = intersection(s, aq, budget);
      PermGroup sb = intersection(s, bq, budget);
      node->factors.push_back({std::move(s), std::move(sa), std::move(sb)});
    }
    const auto &factors = node->factors;

    node->factor_orders_ok = true;
    for (const auto &f : factors)
      if (f.s_a.order() * f.s_b.order() != f.s.order())
        node->factor_orders_ok = false;

    node->checks.l_perm = true;
    for (const PermGroup *side : {&aq, &bq})
      for (const Perm &x : side->generators())
        if (!factor_permutation(factors, x))
          node->checks.l_perm = false;

    // orbit partition of the factors under the whole quotient group
    {
      std::vector<std::size_t> parent(factors.size());
      for (std::size_t i = 0; i < parent.size(); ++i)
        parent[i] = i;
      auto find = [&](std::size_t v) {
        while (parent[v] != v)
          v = parent[v] = parent[parent[v]];
        return v;
      };
      bool ok = true;
      for (const Perm &x : gq.generators()) {
        auto sigma = factor_permutation(factors, x);
        if (!sigma) {
          ok = false;
          break;
        }
        for (std::size_t i = 0; i < sigma->size(); ++i)
          parent[find(i)] = find((*sigma)[i]);
      }
      if (ok)
        for (std::size_t i = 0; i < factors.size(); ++i) {
          std::size_t r = find(i);
          if (factors[i].s.order() != factors[r].s.order() ||
              factors[i].s_a.order() != factors[r].s_a.order() ||
              factors[i].s_b.order() != factors[r].s_b.order())
            ok = false;
        }
      node->checks.l_order = ok;
    }

    {
      PermGroup fa = generalized_fitting_subgroup(aq, budget);
      PermGroup fb = generalized_fitting_subgroup(bq, budget);
      node->checks.l2_a = true;
      node->checks.l2_b = true;
      for (const auto &f : factors) {
        if (has_two_primes(f.s_a.order()) && !normalizes(fa, f.s))
          node->checks.l2_a = false;
        if (has_two_primes(f.s_b.order()) && !normalizes(fb, f.s))
          node->checks.l2_b = false;
      }
    }

    node->checks.burnside = true;
    for (const auto &f : factors)
      if (!has_two_primes(f.s_a.order()) && !has_two_primes(f.s_b.order()))
        node->checks.burnside = false;

    std::vector<PermGroup> norms;
    norms.reserve(factors.size());
    for (const auto &f : factors)
      norms.push_back(normalizer(gq, f.s));
    auto intersect_over = [&](auto keep) {
      std::optional<PermGroup> acc;
      for (std::size_t i = 0; i < factors.size(); ++i) {
        if (!keep(factors[i]))
          continue;
        acc = acc ? intersection(*acc, norms[i], budget) : norms[i];
      }
      return acc ? *acc : gq;
    };
    PermGroup k = intersect_over([](const SimpleFactorEntry &) { return true; });
    PermGroup ka = intersect_over(
        [](const SimpleFactorEntry &f) { return has_two_primes(f.s_a.order()); });
    PermGroup kb = intersect_over(
        [](const SimpleFactorEntry &f) { return has_two_primes(f.s_b.order()); });
    node->k = k;
    node->k_a = ka;
    node->k_b = kb;

    node->checks.ka_cap_kb_eq_k =
        group_equal(intersection(ka, kb, budget), k);

    {
      bool sandwich = is_subgroup(k, fstar) && is_normal(k, fstar);
      if (sandwich)
        sandwich = is_soluble(make_quotient(k, fstar, budget).quotient);
      node->checks.lambda_k_le_1 =
          sandwich && nonsoluble_length(k, budget).first <= 1;
    }

    if (node->checks.l_perm && node->checks.l_order &&
        node->checks.burnside) {
      auto recurse = [&](const PermGroup &kern)
          -> std::pair<std::unique_ptr<CertificateNode>, bool> {
        if (group_equal(kern, gq))
          return {nullptr, true};
        QuotientContext qc = make_quotient(gq, kern, budget);
        PermGroup ca = qc.push(aq);
        PermGroup cb = qc.push(bq);
        if (!ca.order().coprime_to(cb.order()) ||
            ca.order() * cb.order() != qc.quotient.order())
          return {nullptr, false};
        return {replay_node(qc.quotient, ca, cb, depth - 1, opts), true};
      };
      std::pair<std::unique_ptr<CertificateNode>, bool> ra, rb;
      if (opts.jobs > 1) {
        auto fut_a = std::async(std::launch::async, recurse, ka);
        auto fut_b = std::async(std::launch::async, recurse, kb);
        ra = fut_a.get();
        rb = fut_b.get();
      } else {
        ra = recurse(ka);
        rb = recurse(kb);
      }
      node->children_factorization_ok = ra.second && rb.second;
      node->child_a = std::move(ra.first);
      node->child_b = std::move(rb.first);
    }
  } catch (const BudgetExceededError &e) {
    node->incomplete = true;
    node->incomplete_reason = e.what();
  }
  return node;
}

} // namespace

bool CertificateNode::node_valid() const {
  if (observed_lambda && !bound_holds)
    return false;
  if (incomplete)
    return true; // nothing that ran failed; completeness is tracked apart
  if (!observed_lambda)
    return false;
  if (soluble)
    return *observed_lambda == 0;
  return checks.all() && factor_orders_ok && children_factorization_ok;
}

bool CertificateNode::subtree_valid() const {
  if (!node_valid())
    return false;
  if (child_a && !child_a->subtree_valid())
    return false;
  if (child_b && !child_b->subtree_valid())
    return false;
  return true;
}

bool CertificateNode::subtree_complete() const {
  if (incomplete)
    return false;
  if (child_a && !child_a->subtree_complete())
    return false;
  if (child_b && !child_b->subtree_complete())
    return false;
  return true;
}

Certificate replay_theorem1(const PermGroup &g, const PermGroup &a,
                            const PermGroup &b, const ReplayOptions &opts) {
  opts.budget.validate();
  if (opts.jobs == 0)
    throw PreconditionError("jobs must be positive");
  require_coprime_factorization(g, a, b);
  std::uint32_t depth = 64;
  try {
    depth = std::min<std::uint32_t>(
        gf_height(a, opts.budget) + gf_height(b, opts.budget) + 1, 64);
  } catch (const BudgetExceededError &) {
    // depth is only a recursion cap; replay_node reports the exhaustion
  }
  Certificate cert;
  cert.root = replay_node(g, a, b, depth, opts);
  return cert;
}

BoundCheck verify_theorem1_bound(const PermGroup &g, const PermGroup &a,
                                 const PermGroup &b,
                                 const EnumerationBudget &budget) {
  budget.validate();
  require_coprime_factorization(g, a, b);
  BoundCheck r;
  r.h_star_a = gf_height(a, budget);
  r.h_star_b = gf_height(b, budget);
  r.bound = pow2_minus_one(r.h_star_a + r.h_star_b);
  r.lambda = nonsoluble_length(g, budget).first;
  r.ok = r.lambda <= r.bound;
  return r;
}

CjsCheck check_cjs_bounds(const PermGroup &g, const PermGroup &a,
                          const PermGroup &b, const EnumerationBudget &budget) {
  budget.validate();
  if (a.degree() != g.degree() || b.degree() != g.degree())
    throw PreconditionError("factor degrees must match the group degree");
  if (!is_subgroup(g, a) || !is_subgroup(g, b))
    throw PreconditionError("factors must be subgroups of the group");
  if (a.is_trivial() || b.is_trivial())
    throw PreconditionError("factors must be nontrivial");
  if (!is_factorization(g, a, b, budget))
    throw PreconditionError("the set product of the factors must fill the group");
  if (!is_soluble(g))
    throw PreconditionError("soluble group required");

  CjsCheck r;
  r.h_g = *fitting_height(g, budget);
  r.h_a = *fitting_height(a, budget);
  r.h_b = *fitting_height(b, budget);
  r.d_b = *derived_length(b);
  r.b_odd = b.order().factorization().count(2) == 0;
  r.b_nilpotent = is_nilpotent(b, budget);

  std::uint64_t h = r.h_g;
  r.general_ok = h <= std::uint64_t{r.h_a} + r.h_b + 4 * std::uint64_t{r.d_b} - 1;
  if (r.b_odd)
    r.odd_ok = h <= std::uint64_t{r.h_a} + r.h_b + 2 * std::uint64_t{r.d_b} - 1;
  if (r.b_nilpotent)
    r.nilpotent_ok = h <= std::uint64_t{r.h_a} + 2 * std::uint64_t{r.d_b};
  r.all_ok = r.general_ok && r.odd_ok.value_or(true) &&
             r.nilpotent_ok.value_or(true);
  return r;
}

std::uint64_t corollary2_bound(std::uint32_t h_star_a, std::uint32_t d_b) {
  using u128 = unsigned __int128;
  std::uint32_t e = h_star_a + d_b;
  if (e > 62)
    throw PreconditionError("corollary2_bound: exponent too large");
  u128 base = (u128(1) << e) - 1;
  std::int64_t steps = std::int64_t{h_star_a} + 5 * std::int64_t{d_b} - 1;
  if (steps < 0)
    steps = 0;
  u128 total = base + (base + 1) * u128(steps);
  if (total > u128(UINT64_MAX))
    throw PreconditionError("corollary2_bound: bound exceeds 64 bits");
  return (std::uint64_t)total;
}

Corollary2Check check_corollary2(const PermGroup &g, const PermGroup &a,
                                 const PermGroup &b,
                                 const EnumerationBudget &budget) {
  budget.validate();
  require_coprime_factorization(g, a, b);
  auto db = derived_length(b);
  if (!db)
    throw PreconditionError("the second factor must be soluble");
  Corollary2Check r;
  r.h_star_a = gf_height(a, budget);
  r.d_b = *db;
  r.bound = corollary2_bound(r.h_star_a, r.d_b);
  r.lambda = nonsoluble_length(g, budget).first;
  r.ok = r.lambda <= r.bound;
  return r;
}

namespace {

struct LevelPack {
  std::vector<PermGroup> blocks;
  bool blocks_simple = true; // each block nonabelian simple of order 60
  bool direct_product = true; // cross-block generators commute, orders multiply
};

LevelPack check_level(std::uint32_t degree, const std::vector<Perm> &gens,
                      const PermGroup &span, const EnumerationBudget &budget) {
  LevelPack pack;
  Order expected;
  for (std::size_t i = 0; i + 1 < gens.size(); i += 2) {
    PermGroup blk(degree, {gens[i], gens[i + 1]});
    if (!(blk.order() == Order::from_u64(60)) || is_abelian(blk) ||
        !is_simple(blk, budget))
      pack.blocks_simple = false;
    expected *= blk.order();
    pack.blocks.push_back(std::move(blk));
  }
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (i / 2 == j / 2)
        continue;
      if (gens[i] * gens[j] != gens[j] * gens[i])
        pack.direct_product = false;
    }
  if (span.order() != expected)
    pack.direct_product = false;
  return pack;
}

// the six structural facts that pin the nonsoluble length of a two-stage
// block group at exactly two
void corner_checks(TowerLambdaCertificate &cert, const std::string &prefix,
                   const PermGroup &g, const PermGroup &base,
                   const PermGroup &block, const LevelPack &base_pack,
                   const EnumerationBudget &budget) {
  auto add = [&](const char *name, bool ok) {
    cert.checks.push_back({prefix + name, ok});
    if (!ok)
      cert.all_checks_ok = false;
  };
  add("block_simple", base_pack.blocks_simple);
  add("base_direct_product", base_pack.direct_product);
  add("base_normal", is_normal(g, base));
  bool top_simple = false;
  if (is_subgroup(g, base) && is_normal(g, base)) {
    PermGroup q = make_quotient(g, base, budget).quotient;
    top_simple = q.order() == Order::from_u64(60) && !is_abelian(q) &&
                 is_simple(q, budget);
  }
  add("top_factor_simple", top_simple);
  add("group_perfect", is_perfect(g));
  add("block_not_normal", !is_normal(g, block));
}

} // namespace

TowerLambdaCertificate tower_lambda_certificate(std::uint32_t height,
                                                const EnumerationBudget &budget) {
  budget.validate();
  if (height < 1 || height > 4)
    throw PreconditionError("tower height must be between 1 and 4");

  PermGroup g = tower_group(height);
  std::uint32_t degree = g.degree();

  TowerLambdaCertificate cert{
      0,  0, Order(), 0, 0, {},
      NormalSeries{g, {PermGroup::trivial(degree)}, {}, false},
      false};
  cert.height = height;
  cert.degree = degree;
  cert.group_order = g.order();
  cert.all_checks_ok = true;
  auto add = [&](std::string name, bool ok) {
    cert.checks.push_back({std::move(name), ok});
    if (!ok)
      cert.all_checks_ok = false;
  };

  if (height == 1) {
    add("group_simple", is_simple(g, budget));
    add("group_nonabelian", !is_abelian(g));
    add("group_order", g.order() == Order::from_u64(60));
    cert.lambda_lower = cert.lambda_upper = 1;
    cert.series = NormalSeries{g,
                               {PermGroup::trivial(degree), g},
                               {FactorKind::Semisimple},
                               false};
    cert.series.verified = cert.all_checks_ok;
    return cert;
  }

  if (height == 2) {
    std::vector<Perm> lvl1 = tower_level_generators(2, 1);
    PermGroup base(degree, lvl1);
    LevelPack pack = check_level(degree, lvl1, base, budget);
    corner_checks(cert, "", g, base, pack.blocks.front(), pack, budget);
    cert.lambda_lower = cert.lambda_upper = 2;
    cert.series = NormalSeries{
        g,
        {PermGroup::trivial(degree), base, g},
        {FactorKind::Semisimple, FactorKind::Semisimple},
        false};
    cert.series.verified = cert.all_checks_ok;
    return cert;
  }

  // taller towers: the level series certifies the upper bound and an
  // embedded two-stage corner group certifies a lower bound of two
  std::vector<std::vector<Perm>> level_gens;
  for (std::uint32_t j = 1; j <= height; ++j)
    level_gens.push_back(tower_level_generators(height, j));

  std::vector<PermGroup> stages{PermGroup::trivial(degree)};
  std::vector<Perm> acc;
  Order expected;
  for (std::uint32_t j = 1; j <= height; ++j) {
    PermGroup vj(degree, level_gens[j - 1]);
    LevelPack pack = check_level(degree, level_gens[j - 1], vj, budget);
    std::string tag = "level" + std::to_string(j) + "_";
    add(tag + "blocks_simple", pack.blocks_simple);
    add(tag + "direct_product", pack.direct_product);

    acc.insert(acc.end(), level_gens[j - 1].begin(), level_gens[j - 1].end());
    PermGroup uj(degree, acc);
    expected *= vj.order();
    add(tag + "stage_order", uj.order() == expected);
    add(tag + "stage_normal", is_normal(g, uj));
    stages.push_back(uj);
  }
  add("tower_order", g.order() == expected);

  // corner group: the deepest two levels over the first 5^(height-1) points
  std::vector<Perm> corner_base_gens(level_gens[0].begin(),
                                     level_gens[0].begin() + 10);
  std::vector<Perm> corner_gens = corner_base_gens;
  corner_gens.push_back(level_gens[1][0]);
  corner_gens.push_back(level_gens[1][1]);
  PermGroup corner(degree, corner_gens);
  PermGroup corner_base(degree, corner_base_gens);
  LevelPack corner_pack =
      check_level(degree, corner_base_gens, corner_base, budget);
  corner_checks(cert, "corner_", corner, corner_base,
                corner_pack.blocks.front(), corner_pack, budget);
  add("corner_normal_in_stage2", is_normal(stages[2], corner));

  cert.lambda_lower = 2;
  cert.lambda_upper = height;
  std::vector<FactorKind> kinds(height, FactorKind::Semisimple);
  cert.series = NormalSeries{g, stages, kinds, false};
  cert.series.verified = cert.all_checks_ok;
  return cert;
}

} // namespace permstruct
