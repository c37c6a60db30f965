#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "permstruct/factorize.hpp"
#include "permstruct/structure.hpp"

namespace permstruct {

// named checks replayed at one recursion node; all must hold
struct LemmaChecks {
  bool l_perm = false;          // conjugation permutes factors consistently
  bool l_order = false;         // orbit-equivalent factors share side orders
  bool l2_a = false;            // F*(A-image) normalizes non-p-group factors
  bool l2_b = false;
  bool burnside = false;        // no factor has two prime-power sides
  bool ka_cap_kb_eq_k = false;  // K_A cap K_B equals the full kernel K
  bool lambda_k_le_1 = false;   // lambda(K) <= 1 and K/F* soluble

  bool all() const {
    return l_perm && l_order && l2_a && l2_b && burnside && ka_cap_kb_eq_k &&
           lambda_k_le_1;
  }
};

struct SimpleFactorEntry {
  PermGroup s;   // simple factor of F* of the radical-free quotient
  PermGroup s_a; // intersection with the A-image
  PermGroup s_b;
};

struct CertificateNode {
  PermGroup g, a, b;
  std::uint32_t h_star_a = 0;
  std::uint32_t h_star_b = 0;
  std::uint64_t claimed_bound = 0;
  std::optional<std::uint32_t> observed_lambda;
  bool bound_holds = false;

  bool soluble = false; // radical short-circuit leaf
  bool incomplete = false;
  std::string incomplete_reason;

  // nonsoluble payload, in the radical-free quotient
  std::optional<PermGroup> radical;
  std::optional<PermGroup> quotient_a, quotient_b;
  std::vector<SimpleFactorEntry> factors;
  std::optional<PermGroup> k_a, k_b, k, l;
  LemmaChecks checks;
  bool factor_orders_ok = false;
  bool children_factorization_ok = true;

  std::unique_ptr<CertificateNode> child_a; // quotient by K_A when proper
  std::unique_ptr<CertificateNode> child_b;

  bool node_valid() const;
  bool subtree_valid() const;
  bool subtree_complete() const;
};

struct ReplayOptions {
  EnumerationBudget budget;
  unsigned jobs = 1;
};

struct Certificate {
  std::unique_ptr<CertificateNode> root;

  bool valid() const { return root && root->subtree_valid(); }
  bool complete() const { return root && root->subtree_complete(); }
};

// mechanical recursion replay for a coprime factorization: every inequality
// and closure property re-checked from group computations alone
Certificate replay_theorem1(const PermGroup &g, const PermGroup &a,
                            const PermGroup &b, const ReplayOptions &opts = {});

struct BoundCheck {
  std::uint32_t h_star_a = 0;
  std::uint32_t h_star_b = 0;
  std::uint64_t bound = 0;
  std::uint32_t lambda = 0;
  bool ok = false;
};

// lambda(g) <= 2^(h*(a) + h*(b)) - 1 for a coprime factorization g = a b
BoundCheck verify_theorem1_bound(const PermGroup &g, const PermGroup &a,
                                 const PermGroup &b,
                                 const EnumerationBudget &budget = {});

struct CjsCheck {
  std::uint32_t h_g = 0, h_a = 0, h_b = 0, d_b = 0;
  bool b_odd = false;
  bool b_nilpotent = false;
  bool general_ok = false;              // h <= h(a) + h(b) + 4 d(b) - 1
  std::optional<bool> odd_ok;           // h <= h(a) + h(b) + 2 d(b) - 1
  std::optional<bool> nilpotent_ok;     // h <= h(a) + 2 d(b)
  bool all_ok = false;
};

// Fitting-height inequalities for a soluble factorized group (not
// necessarily coprime)
CjsCheck check_cjs_bounds(const PermGroup &g, const PermGroup &a,
                          const PermGroup &b,
                          const EnumerationBudget &budget = {});

// closed-form bound on lambda(g) from h*(a) and the derived length of a
// soluble b, for coprime g = a b
std::uint64_t corollary2_bound(std::uint32_t h_star_a, std::uint32_t d_b);

struct Corollary2Check {
  std::uint32_t h_star_a = 0;
  std::uint32_t d_b = 0;
  std::uint64_t bound = 0;
  std::uint32_t lambda = 0;
  bool ok = false;
};

Corollary2Check check_corollary2(const PermGroup &g, const PermGroup &a,
                                 const PermGroup &b,
                                 const EnumerationBudget &budget = {});

struct TowerCheckItem {
  std::string name;
  bool ok = false;
};

struct TowerLambdaCertificate {
  std::uint32_t height = 0;
  std::uint32_t degree = 0;
  Order group_order;
  std::uint32_t lambda_lower = 0;
  std::uint32_t lambda_upper = 0;
  std::vector<TowerCheckItem> checks;
  NormalSeries series; // the level series, all factors semisimple
  bool all_checks_ok = false;
};

// engine-executed lambda certificate for the A5 tower; height 2 is exact,
// height 3 returns the certified window [2, 3]
TowerLambdaCertificate tower_lambda_certificate(std::uint32_t height,
                                                const EnumerationBudget &budget = {});

} // namespace permstruct
