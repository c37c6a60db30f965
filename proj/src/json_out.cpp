#include "permstruct/json_out.hpp"

namespace permstruct {

using nlohmann::ordered_json;

namespace {

const char *kind_name(FactorKind k) {
  switch (k) {
  case FactorKind::Soluble:
    return "soluble";
  case FactorKind::Semisimple:
    return "semisimple";
  default:
    return "mixed";
  }
}

ordered_json opt_u32(const std::optional<std::uint32_t> &v) {
  if (v)
    return *v;
  return nullptr;
}

ordered_json node_to_json(const CertificateNode &n) {
  ordered_json j;
  j["group"] = group_to_json(n.g);
  j["a"] = group_to_json(n.a);
  j["b"] = group_to_json(n.b);
  j["h_star_a"] = n.h_star_a;
  j["h_star_b"] = n.h_star_b;
  j["claimed_bound"] = n.claimed_bound;
  j["observed_lambda"] = opt_u32(n.observed_lambda);
  j["bound_holds"] = n.bound_holds;
  j["soluble"] = n.soluble;
  j["incomplete"] = n.incomplete;
  if (n.incomplete)
    j["incomplete_reason"] = n.incomplete_reason;
  if (n.soluble || n.incomplete)
    return j;

  if (n.radical)
    j["radical"] = group_to_json(*n.radical);
  if (n.quotient_a)
    j["quotient_a"] = group_to_json(*n.quotient_a);
  if (n.quotient_b)
    j["quotient_b"] = group_to_json(*n.quotient_b);
  ordered_json factors = ordered_json::array();
  for (const auto &f : n.factors) {
    ordered_json e;
    e["s"] = group_to_json(f.s);
    e["s_a"] = group_to_json(f.s_a);
    e["s_b"] = group_to_json(f.s_b);
    factors.push_back(std::move(e));
  }
  j["factors"] = std::move(factors);
  j["factor_orders_ok"] = n.factor_orders_ok;
  ordered_json checks;
  checks["l_perm"] = n.checks.l_perm;
  checks["l_order"] = n.checks.l_order;
  checks["l2_a"] = n.checks.l2_a;
  checks["l2_b"] = n.checks.l2_b;
  checks["burnside"] = n.checks.burnside;
  checks["ka_cap_kb_eq_k"] = n.checks.ka_cap_kb_eq_k;
  checks["lambda_k_le_1"] = n.checks.lambda_k_le_1;
  j["lemma_checks"] = std::move(checks);
  if (n.k_a)
    j["k_a"] = group_to_json(*n.k_a);
  if (n.k_b)
    j["k_b"] = group_to_json(*n.k_b);
  if (n.k)
    j["k"] = group_to_json(*n.k);
  if (n.l)
    j["l"] = group_to_json(*n.l);
  j["children_factorization_ok"] = n.children_factorization_ok;
  j["child_a"] = n.child_a ? node_to_json(*n.child_a) : ordered_json(nullptr);
  j["child_b"] = n.child_b ? node_to_json(*n.child_b) : ordered_json(nullptr);
  return j;
}

} // namespace

ordered_json group_to_json(const PermGroup &g) {
  ordered_json j;
  j["degree"] = g.degree();
  j["order"] = g.order().str();
  ordered_json gens = ordered_json::array();
  for (const Perm &p : g.generators())
    gens.push_back(p.cycle_string());
  j["generators"] = std::move(gens);
  return j;
}

ordered_json series_to_json(const NormalSeries &s) {
  ordered_json j;
  ordered_json terms = ordered_json::array();
  for (const PermGroup &t : s.terms)
    terms.push_back(group_to_json(t));
  j["terms"] = std::move(terms);
  ordered_json kinds = ordered_json::array();
  for (FactorKind k : s.kinds)
    kinds.push_back(kind_name(k));
  j["kinds"] = std::move(kinds);
  j["verified"] = s.verified;
  return j;
}

ordered_json report_to_json(const InvariantReport &r) {
  ordered_json j;
  j["degree"] = r.group.degree();
  j["order"] = r.group.order().str();
  j["soluble"] = r.soluble;
  j["derived_length"] = opt_u32(r.derived_length);
  j["fitting_height"] = opt_u32(r.fitting_height);
  j["gf_height"] = r.gf_height;
  j["nonsoluble_length"] = r.nonsoluble_length;
  j["simple_factor_count"] = r.simple_factor_count;
  j["fitting"] = group_to_json(r.fitting);
  j["layer"] = group_to_json(r.layer);
  j["gf"] = group_to_json(r.gf);
  j["radical"] = group_to_json(r.radical);
  ordered_json comps = ordered_json::array();
  for (const PermGroup &c : r.components)
    comps.push_back(group_to_json(c));
  j["components"] = std::move(comps);
  j["series"] = series_to_json(r.series);
  return j;
}

ordered_json
factorizations_to_json(const std::vector<FactorizationRecord> &records) {
  ordered_json arr = ordered_json::array();
  for (const auto &rec : records) {
    ordered_json j;
    j["a"] = group_to_json(rec.a);
    j["b"] = group_to_json(rec.b);
    j["coprime"] = rec.coprime;
    arr.push_back(std::move(j));
  }
  return arr;
}

ordered_json certificate_to_json(const Certificate &c) {
  ordered_json j;
  j["valid"] = c.valid();
  j["complete"] = c.complete();
  j["root"] = c.root ? node_to_json(*c.root) : ordered_json(nullptr);
  return j;
}

ordered_json bound_check_to_json(const BoundCheck &c) {
  ordered_json j;
  j["h_star_a"] = c.h_star_a;
  j["h_star_b"] = c.h_star_b;
  j["bound"] = c.bound;
  j["lambda"] = c.lambda;
  j["ok"] = c.ok;
  return j;
}

ordered_json cjs_to_json(const CjsCheck &c) {
  ordered_json j;
  j["h_g"] = c.h_g;
  j["h_a"] = c.h_a;
  j["h_b"] = c.h_b;
  j["d_b"] = c.d_b;
  j["b_odd"] = c.b_odd;
  j["b_nilpotent"] = c.b_nilpotent;
  j["general_ok"] = c.general_ok;
  j["odd_ok"] = c.odd_ok ? ordered_json(*c.odd_ok) : ordered_json(nullptr);
  j["nilpotent_ok"] =
      c.nilpotent_ok ? ordered_json(*c.nilpotent_ok) : ordered_json(nullptr);
  j["all_ok"] = c.all_ok;
  return j;
}

ordered_json corollary2_to_json(const Corollary2Check &c) {
  ordered_json j;
  j["h_star_a"] = c.h_star_a;
  j["d_b"] = c.d_b;
  j["bound"] = c.bound;
  j["lambda"] = c.lambda;
  j["ok"] = c.ok;
  return j;
}

ordered_json tower_to_json(const TowerLambdaCertificate &c) {
  ordered_json j;
  j["height"] = c.height;
  j["degree"] = c.degree;
  j["order"] = c.group_order.str();
  j["lambda_lower"] = c.lambda_lower;
  j["lambda_upper"] = c.lambda_upper;
  ordered_json checks = ordered_json::array();
  for (const auto &item : c.checks) {
    ordered_json e;
    e["name"] = item.name;
    e["ok"] = item.ok;
    checks.push_back(std::move(e));
  }
  j["checks"] = std::move(checks);
  j["all_checks_ok"] = c.all_checks_ok;
  j["series"] = series_to_json(c.series);
  return j;
}

} // namespace permstruct
