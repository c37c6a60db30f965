// acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL
#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "oracles.hpp"
#include "permstruct/certificate.hpp"
#include "permstruct/errors.hpp"
#include "permstruct/factorize.hpp"
#include "permstruct/group_io.hpp"
#include "permstruct/named_groups.hpp"
#include "permstruct/structure.hpp"
#include "permstruct/wreath.hpp"

using namespace permstruct;
using Clock = std::chrono::steady_clock;

namespace {

const std::vector<std::string> kCorpus = {
    "A4", "S4", "A5",  "S5",  "SL25", "GL23", "PSL27", "D8",    "D10",   "D12",
    "C2", "C3", "C6",  "C7",  "C12",  "F20",  "V4",    "S3",    "A5xA5", "A5wrC2"};

constexpr std::uint64_t kOracleOrderCap = 2000;

int g_failures = 0;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

void report(int idx, bool ok, const std::string &what) {
  std::cout << (ok ? "PASS" : "FAIL") << ": criterion " << idx << " - "
            << what << "\n";
  if (!ok)
    ++g_failures;
}

std::string fmt_secs(double s) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.1fs", s);
  return buf;
}

void walk_nodes(const CertificateNode &n,
                const std::function<void(const CertificateNode &)> &fn) {
  fn(n);
  if (n.child_a)
    walk_nodes(*n.child_a, fn);
  if (n.child_b)
    walk_nodes(*n.child_b, fn);
}

Order pow_order(std::uint64_t base, std::uint32_t exp) {
  Order o;
  for (std::uint32_t i = 0; i < exp; ++i)
    o *= Order::from_u64(base);
  return o;
}

// cached coprime factorizations for the small corpus, shared by criteria 4-6
std::map<std::string, std::vector<FactorizationRecord>> g_factorizations;

// criterion 1: order, membership and normal closure against brute force
void criterion1() {
  auto t0 = Clock::now();
  std::size_t groups = 0, closures = 0, probes = 0;
  std::string fail;
  std::mt19937 rng(12345);
  for (const std::string &name : kCorpus) {
    PermGroup g = named_group(name);
    if (!g.order().leq_u64(10000))
      continue;
    ++groups;
    auto gens = oracle::gens_of(g);
    std::vector<oracle::Images> all = oracle::closure(gens, g.degree(), 20000);
    if (g.order().u64() != all.size()) {
      fail = name + ": order " + g.order().str() + " != closure size " +
             std::to_string(all.size());
      break;
    }
    for (const auto &el : all) {
      if (!g.contains(Perm(el))) {
        fail = name + ": member rejected";
        break;
      }
    }
    // random probes: agreement on arbitrary permutations
    for (int trial = 0; trial < 25 && fail.empty(); ++trial) {
      oracle::Images im(g.degree());
      for (std::uint32_t i = 0; i < g.degree(); ++i)
        im[i] = i;
      std::shuffle(im.begin(), im.end(), rng);
      bool engine = g.contains(Perm(im));
      bool brute = std::binary_search(all.begin(), all.end(), im);
      if (engine != brute) {
        fail = name + ": membership disagreement on a probe";
        break;
      }
      ++probes;
    }
    if (!fail.empty())
      break;
    // normal closures of a few sample elements
    int picked = 0;
    for (const auto &el : all) {
      Perm p(el);
      if (p.is_identity())
        continue;
      if (++picked > 3)
        break;
      PermGroup nc = normal_closure(g, {p});
      auto brute = oracle::normal_closure_elems(gens, {el}, g.degree(), 20000);
      if (nc.order().u64() != brute.size()) {
        fail = name + ": normal closure size mismatch";
        break;
      }
      for (const auto &q : brute)
        if (!nc.contains(Perm(q))) {
          fail = name + ": normal closure missing an element";
          break;
        }
      ++closures;
      if (!fail.empty())
        break;
    }
    if (!fail.empty())
      break;
  }
  double dt = seconds_since(t0);
  bool ok = fail.empty() && groups == kCorpus.size() && dt < 60.0;
  std::string what =
      "order/membership/normal-closure vs brute force on " +
      std::to_string(groups) + " groups, " + std::to_string(closures) +
      " closures, " + std::to_string(probes) + " probes (" + fmt_secs(dt) +
      ")";
  if (!fail.empty())
    what += ": " + fail;
  else if (dt >= 60.0)
    what += ": exceeded 60s";
  report(1, ok, what);
}

// criterion 2: frozen invariant values, oracle-checked at small order
void criterion2() {
  struct Row {
    const char *name;
    char kind; // 'h' fitting height, 'g' gf height, 'l' lambda
    std::uint32_t expect;
  };
  const std::vector<Row> rows = {
      {"S4", 'h', 3},     {"GL23", 'h', 3},  {"A5", 'g', 1},
      {"S5", 'g', 2},     {"SL25", 'g', 1},  {"A5wrC2", 'g', 2},
      {"S4", 'l', 0},     {"A5", 'l', 1},    {"S5", 'l', 1},
      {"SL25", 'l', 1},   {"A5wrC2", 'l', 1}};
  std::string fail;
  std::size_t oracle_checked = 0;
  for (const Row &row : rows) {
    PermGroup g = named_group(row.name);
    std::uint32_t engine = 0;
    if (row.kind == 'h') {
      auto h = fitting_height(g);
      if (!h) {
        fail = std::string(row.name) + ": fitting height undefined";
        break;
      }
      engine = *h;
    } else if (row.kind == 'g') {
      engine = gf_height(g);
    } else {
      engine = nonsoluble_length(g).first;
    }
    if (engine != row.expect) {
      fail = std::string(row.name) + ": engine value " +
             std::to_string(engine) + " != frozen " +
             std::to_string(row.expect);
      break;
    }
    if (g.order().leq_u64(kOracleOrderCap)) {
      oracle::Table t = oracle::table_of(g);
      std::uint32_t brute = 0;
      if (row.kind == 'h') {
        auto h = oracle::fitting_height_table(t);
        if (!h) {
          fail = std::string(row.name) + ": oracle height undefined";
          break;
        }
        brute = *h;
      } else if (row.kind == 'g') {
        brute = oracle::gf_height_table(t);
      } else {
        brute = oracle::lambda_table(t);
      }
      if (brute != row.expect) {
        fail = std::string(row.name) + ": oracle value " +
               std::to_string(brute) + " != frozen " +
               std::to_string(row.expect);
        break;
      }
      ++oracle_checked;
    }
  }
  std::string what = "frozen h/h*/lambda values (" +
                     std::to_string(rows.size()) + " values, " +
                     std::to_string(oracle_checked) +
                     " cross-checked against the lattice oracle)";
  if (!fail.empty())
    what += ": " + fail;
  report(2, fail.empty(), what);
}

// criterion 3: generalized Fitting properties plus monotonicity and
// subadditivity of h* and lambda over normal subgroups
void criterion3() {
  std::string fail;
  std::size_t normals_checked = 0;
  for (const std::string &name : kCorpus) {
    PermGroup g = named_group(name);
    PermGroup f = fitting_subgroup(g);
    PermGroup e = layer(g);
    PermGroup fs = generalized_fitting_subgroup(g);

    if (!g.is_trivial() && !is_subgroup(f, centralizer(g, fs))) {
      fail = name + ": centralizer of F* escapes F";
      break;
    }
    bool commutes = true;
    for (const Perm &x : f.generators())
      for (const Perm &y : e.generators())
        if (!commutator(x, y).is_identity())
          commutes = false;
    if (!commutes) {
      fail = name + ": [F, E] != 1";
      break;
    }
    if (!group_equal(fs, join(f, e))) {
      fail = name + ": F* != F E";
      break;
    }

    // collect normal subgroups: full lattice at small order, the canonical
    // ones otherwise
    std::vector<PermGroup> normals;
    if (g.order().leq_u64(kOracleOrderCap)) {
      oracle::Table t = oracle::table_of(g);
      for (const auto &nb : oracle::normal_subgroups(t))
        normals.push_back(oracle::group_from_bits(t, nb));
    } else {
      normals.push_back(PermGroup::trivial(g.degree()));
      normals.push_back(soluble_radical(g));
      normals.push_back(layer(g));
      normals.push_back(socle(g));
      normals.push_back(g);
    }

    std::uint32_t hg = gf_height(g);
    std::uint32_t lg = nonsoluble_length(g).first;
    for (const PermGroup &n : normals) {
      // the generalized Fitting subgroup restricts along normal subgroups
      PermGroup fn = generalized_fitting_subgroup(n);
      if (!group_equal(fn, intersection(fs, n))) {
        fail = name + ": F*(N) != F*(G) cap N at |N| = " + n.order().str();
        break;
      }
      std::uint32_t hn = gf_height(n);
      std::uint32_t ln = nonsoluble_length(n).first;
      if (hn > hg || ln > lg) {
        fail = name + ": monotonicity violated at |N| = " + n.order().str();
        break;
      }
      QuotientContext ctx = make_quotient(g, n);
      std::uint32_t hq = gf_height(ctx.quotient);
      std::uint32_t lq = nonsoluble_length(ctx.quotient).first;
      if (hg > hn + hq || lg > ln + lq) {
        fail = name + ": subadditivity violated at |N| = " + n.order().str();
        break;
      }
      ++normals_checked;
    }
    if (!fail.empty())
      break;
  }
  std::string what = "generalized Fitting property suite over " +
                     std::to_string(kCorpus.size()) + " groups, " +
                     std::to_string(normals_checked) +
                     " normal subgroups, zero violations";
  if (!fail.empty())
    what = "generalized Fitting property suite: " + fail;
  report(3, fail.empty(), what);
}

// criterion 4: theorem replay on every coprime factorization found, plus
// the three designated instances
void criterion4() {
  auto t0 = Clock::now();
  std::string fail;
  std::size_t replays = 0, nodes = 0;

  auto run_one = [&](const PermGroup &g, const PermGroup &a,
                     const PermGroup &b, const std::string &label) {
    if (!fail.empty())
      return;
    BoundCheck bc = verify_theorem1_bound(g, a, b);
    if (!bc.ok) {
      fail = label + ": bound violated";
      return;
    }
    Certificate cert = replay_theorem1(g, a, b);
    if (!cert.valid() || !cert.complete()) {
      fail = label + ": certificate not valid+complete";
      return;
    }
    walk_nodes(*cert.root, [&](const CertificateNode &n) {
      ++nodes;
      if (!n.soluble && !n.incomplete && !n.checks.all())
        fail = label + ": lemma check failed at an insoluble node";
      if (!n.bound_holds)
        fail = label + ": node bound violated";
    });
    ++replays;
  };

  for (const std::string &name : kCorpus) {
    PermGroup g = named_group(name);
    if (!g.order().leq_u64(kOracleOrderCap))
      continue;
    auto records = find_coprime_factorizations(g);
    g_factorizations[name] = records;
    for (const auto &r : records) {
      run_one(r.group, r.a, r.b, name);
      if (!fail.empty())
        break;
    }
    if (!fail.empty())
      break;
  }

  if (fail.empty()) {
    run_one(named_group("A5"), alternating4_on5(), cyclic5_deg5(),
            "A5 designated pair");
    PermGroup s4_in_s5(5, {parse_permutation("(1 2)", 5),
                           parse_permutation("(1 2 3 4)", 5)});
    PermGroup c5(5, {parse_permutation("(1 2 3 4 5)", 5)});
    run_one(named_group("S5"), s4_in_s5, c5, "S5 designated pair");
    auto [ha, hb] = wreath_hall_pair(named_group("C2"), PermGroup::trivial(2));
    run_one(named_group("A5wrC2"), ha, hb, "wreath square Hall pair");
  }

  double dt = seconds_since(t0);
  bool ok = fail.empty() && dt < 300.0;
  std::string what = "theorem replay on " + std::to_string(replays) +
                     " coprime factorizations, " + std::to_string(nodes) +
                     " certificate nodes (" + fmt_secs(dt) + ")";
  if (!fail.empty())
    what += ": " + fail;
  else if (dt >= 300.0)
    what += ": exceeded 5 minutes";
  report(4, ok, what);
}

// criterion 5: fitting-height inequalities on soluble factorizations
void criterion5() {
  std::string fail;
  std::size_t checks = 0, tight = 0;
  for (const auto &[name, records] : g_factorizations) {
    PermGroup g = named_group(name);
    if (!is_soluble(g))
      continue;
    for (const auto &r : records) {
      for (int flip = 0; flip < 2 && fail.empty(); ++flip) {
        const PermGroup &a = flip ? r.b : r.a;
        const PermGroup &b = flip ? r.a : r.b;
        CjsCheck c = check_cjs_bounds(g, a, b);
        if (!c.all_ok) {
          fail = name + ": inequality violated";
          break;
        }
        if (c.b_nilpotent && c.h_g == c.h_a + 2 * c.d_b)
          ++tight;
        ++checks;
      }
      if (!fail.empty())
        break;
    }
    if (!fail.empty())
      break;
  }
  // the designated equality case: h(S4) = h(D8) + 2 d(C3) = 3
  if (fail.empty()) {
    PermGroup c3(4, {parse_permutation("(1 2 3)", 4)});
    CjsCheck c = check_cjs_bounds(named_group("S4"), named_group("D8"), c3);
    if (!(c.all_ok && c.nilpotent_ok.has_value() && *c.nilpotent_ok &&
          c.h_g == 3 && c.h_a + 2 * c.d_b == 3))
      fail = "designated equality case failed";
  }
  std::string what = "fitting-height inequalities on " +
                     std::to_string(checks) +
                     " oriented soluble factorizations (" +
                     std::to_string(tight) + " attained exactly)";
  if (!fail.empty())
    what += ": " + fail;
  report(5, fail.empty(), what);
}

// criterion 6: the closed-form corollary bound on every instance
void criterion6() {
  std::string fail;
  std::size_t checks = 0;
  for (const auto &[name, records] : g_factorizations) {
    for (const auto &r : records) {
      for (int flip = 0; flip < 2 && fail.empty(); ++flip) {
        const PermGroup &a = flip ? r.b : r.a;
        const PermGroup &b = flip ? r.a : r.b;
        if (!derived_length(b).has_value())
          continue; // the bound needs a soluble second factor
        Corollary2Check c = check_corollary2(r.group, a, b);
        if (!c.ok) {
          fail = name + ": closed-form bound violated";
          break;
        }
        ++checks;
      }
      if (!fail.empty())
        break;
    }
    if (!fail.empty())
      break;
  }
  if (fail.empty()) {
    auto [ha, hb] = wreath_hall_pair(named_group("C2"), PermGroup::trivial(2));
    for (int flip = 0; flip < 2; ++flip) {
      Corollary2Check c = check_corollary2(named_group("A5wrC2"),
                                           flip ? hb : ha, flip ? ha : hb);
      if (!c.ok) {
        fail = "wreath square Hall pair: closed-form bound violated";
        break;
      }
      ++checks;
    }
  }
  std::string what = "closed-form lambda bound on " + std::to_string(checks) +
                     " oriented coprime factorizations";
  if (!fail.empty())
    what += ": " + fail;
  report(6, fail.empty(), what);
}

// criterion 7: the wreath tower at heights two and three
void criterion7() {
  auto t0 = Clock::now();
  std::string fail;
  double dt2 = 0;
  try {
    PermGroup t2 = tower_group(2);
    if (t2.order() != pow_order(60, 6))
      fail = "height-2 order mismatch";
    auto [a, b] = tower_hall_pair(2);
    if (fail.empty() &&
        (a.order() * b.order() != t2.order() ||
         !a.order().coprime_to(b.order())))
      fail = "height-2 Hall pair mismatch";
    if (fail.empty()) {
      TowerLambdaCertificate cert = tower_lambda_certificate(2);
      if (!(cert.all_checks_ok && cert.lambda_lower == 2 &&
            cert.lambda_upper == 2))
        fail = "height-2 lambda certificate failed";
    }
    dt2 = seconds_since(t0);
    if (fail.empty() && dt2 >= 120.0)
      fail = "height-2 batch exceeded 2 minutes";
    if (fail.empty()) {
      PermGroup t3 = tower_group(3);
      if (t3.order().str() !=
          "13264435183244001473986560000000000000000000000000000000")
        fail = "height-3 order mismatch";
      TowerLambdaCertificate c3 = tower_lambda_certificate(3);
      if (!(c3.all_checks_ok && c3.lambda_upper == 3 && c3.lambda_lower >= 2))
        fail = "height-3 upper-bound series failed";
    }
  } catch (const std::exception &e) {
    fail = std::string("exception: ") + e.what();
  }
  double dt = seconds_since(t0);
  std::string what = "tower heights 2 and 3: exact order, Hall pair, lambda "
                     "certificates (height 2 in " +
                     fmt_secs(dt2) + ", total " + fmt_secs(dt) + ")";
  if (!fail.empty())
    what += ": " + fail;
  report(7, fail.empty(), what);
}

// criterion 8: budget exhaustion surfaces as the dedicated exit code at the
// cli boundary and as incomplete certificate nodes inside replay
void criterion8(const std::string &cli) {
  std::string fail;
  if (cli.empty()) {
    fail = "cli path not supplied";
  } else {
    std::string cmd = cli + " info --name PSL27 --max-elements 10 "
                            ">/dev/null 2>&1";
    int raw = std::system(cmd.c_str());
    int code = (raw == -1) ? -1 : WEXITSTATUS(raw);
    if (code != 3)
      fail = "cli exit code " + std::to_string(code) + ", expected 3";
  }
  if (fail.empty()) {
    // the order-12^6 Hall factor exceeds the default element budget, so the
    // replay must degrade to an incomplete node, never a wrong verdict
    auto [a, b] = tower_hall_pair(2);
    Certificate cert = replay_theorem1(tower_group(2), a, b);
    bool has_incomplete = false;
    walk_nodes(*cert.root, [&](const CertificateNode &n) {
      if (n.incomplete)
        has_incomplete = true;
    });
    if (!cert.valid())
      fail = "budget-limited replay reported an invalid certificate";
    else if (cert.complete() || !has_incomplete)
      fail = "budget-limited replay claimed completeness";
  }
  std::string what = "budget exhaustion: dedicated cli exit code and "
                     "incomplete replay nodes";
  if (!fail.empty())
    what += ": " + fail;
  report(8, fail.empty(), what);
}

} // namespace

int main(int argc, char **argv) {
  std::string cli = argc > 1 ? argv[1] : "";
  auto guard = [](int idx, void (*fn)()) {
    try {
      fn();
    } catch (const std::exception &e) {
      report(idx, false, std::string("exception: ") + e.what());
    }
  };
  guard(1, criterion1);
  guard(2, criterion2);
  guard(3, criterion3);
  guard(4, criterion4);
  guard(5, criterion5);
  guard(6, criterion6);
  guard(7, criterion7);
  try {
    criterion8(cli);
  } catch (const std::exception &e) {
    report(8, false, std::string("exception: ") + e.what());
  }
  if (g_failures == 0)
    std::cout << "acceptance: all criteria passed\n";
  else
    std::cout << "acceptance: " << g_failures << " criteria failed\n";
  return g_failures == 0 ? 0 : 1;
}
