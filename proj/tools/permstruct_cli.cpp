#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "permstruct/certificate.hpp"
#include "permstruct/errors.hpp"
#include "permstruct/factorize.hpp"
#include "permstruct/group_io.hpp"
#include "permstruct/json_out.hpp"
#include "permstruct/named_groups.hpp"
#include "permstruct/structure.hpp"
#include "permstruct/wreath.hpp"

namespace {

using namespace permstruct;

constexpr int kExitOk = 0;
constexpr int kExitRefuted = 1;
constexpr int kExitInput = 2;
constexpr int kExitBudget = 3;
constexpr int kExitInternal = 4;

struct Options {
  std::string name;
  std::string file;
  bool coprime = false;
  std::string factor_a;
  std::string factor_b;
  std::string theorem = "t1";
  bool replay = false;
  bool json = false;
  std::uint64_t seed = 0;
  bool seed_set = false;
  unsigned jobs = 1;
  std::uint64_t max_elements = EnumerationBudget{}.max_elements;
  std::uint64_t max_index = EnumerationBudget{}.max_index;
  std::uint32_t height = 1;
  std::string emit = "lambda";

  EnumerationBudget budget() const { return {max_elements, max_index}; }
};

PermGroup load_group(const Options &opt) {
  if (opt.name.empty() == opt.file.empty())
    throw ParseError("exactly one of --name and --file selects the group");
  if (!opt.name.empty())
    return named_group(opt.name);
  return read_group_file(opt.file);
}

// a factor is a group file when the path opens, a library name otherwise
PermGroup load_factor(const std::string &spec, std::uint32_t degree) {
  {
    std::ifstream in(spec);
    if (in.good())
      return read_group(in);
  }
  PermGroup g = named_group(spec);
  if (g.degree() != degree)
    throw PreconditionError("factor '" + spec + "' has degree " +
                            std::to_string(g.degree()) +
                            ", the group has degree " + std::to_string(degree));
  return g;
}

void emit_json(const nlohmann::ordered_json &j) {
  std::cout << j.dump(2) << "\n";
}

const char *yesno(bool v) { return v ? "yes" : "no"; }

std::string opt_str(const std::optional<std::uint32_t> &v) {
  return v ? std::to_string(*v) : std::string("n/a");
}

int run_info(const Options &opt) {
  PermGroup g = load_group(opt);
  InvariantReport report = compute_report(g, opt.budget());
  if (opt.json) {
    emit_json(report_to_json(report));
    return kExitOk;
  }
  std::cout << "degree: " << g.degree() << "\n"
            << "order: " << g.order().str() << "\n"
            << "soluble: " << yesno(report.soluble) << "\n"
            << "derived length: " << opt_str(report.derived_length) << "\n"
            << "fitting height: " << opt_str(report.fitting_height) << "\n"
            << "gf height: " << report.gf_height << "\n"
            << "nonsoluble length: " << report.nonsoluble_length << "\n"
            << "simple factors of gf: " << report.simple_factor_count << "\n"
            << "fitting order: " << report.fitting.order().str() << "\n"
            << "layer order: " << report.layer.order().str() << "\n"
            << "gf order: " << report.gf.order().str() << "\n"
            << "radical order: " << report.radical.order().str() << "\n"
            << "components: " << report.components.size() << "\n";
  std::cout << "series orders:";
  for (const PermGroup &t : report.series.terms)
    std::cout << " " << t.order().str();
  std::cout << (report.series.verified ? " (verified)" : " (unverified)")
            << "\n";
  return kExitOk;
}

int run_factorize(const Options &opt) {
  PermGroup g = load_group(opt);
  if (!opt.coprime) {
    auto subs = enumerate_subgroups(g, opt.budget());
    if (opt.json) {
      nlohmann::ordered_json j;
      j["order"] = g.order().str();
      j["subgroup_count"] = subs.size();
      nlohmann::ordered_json orders = nlohmann::ordered_json::array();
      for (const PermGroup &s : subs)
        orders.push_back(s.order().str());
      j["subgroup_orders"] = std::move(orders);
      emit_json(j);
      return kExitOk;
    }
    std::cout << "subgroups: " << subs.size() << "\n";
    return kExitOk;
  }
  auto records = find_coprime_factorizations(g, opt.budget());
  if (opt.json) {
    emit_json(factorizations_to_json(records));
    return kExitOk;
  }
  std::cout << "coprime factorizations: " << records.size() << "\n";
  for (const auto &rec : records) {
    std::cout << "  |A| = " << rec.a.order().str()
              << ", |B| = " << rec.b.order().str() << "\n";
    std::cout << "    A:";
    for (const Perm &p : rec.a.generators())
      std::cout << " " << p.cycle_string();
    std::cout << "\n    B:";
    for (const Perm &p : rec.b.generators())
      std::cout << " " << p.cycle_string();
    std::cout << "\n";
  }
  return kExitOk;
}

int run_verify(const Options &opt) {
  PermGroup g = load_group(opt);
  if (opt.factor_a.empty() || opt.factor_b.empty())
    throw ParseError("verify requires -A and -B");
  PermGroup a = load_factor(opt.factor_a, g.degree());
  PermGroup b = load_factor(opt.factor_b, g.degree());
  EnumerationBudget budget = opt.budget();

  if (opt.theorem == "cjs") {
    CjsCheck check = check_cjs_bounds(g, a, b, budget);
    if (opt.json)
      emit_json(cjs_to_json(check));
    else {
      std::cout << "theorem: cjs\n"
                << "h(G) = " << check.h_g << ", h(A) = " << check.h_a
                << ", h(B) = " << check.h_b << ", d(B) = " << check.d_b
                << "\n"
                << "general: " << yesno(check.general_ok) << "\n"
                << "odd-order case: "
                << (check.odd_ok ? yesno(*check.odd_ok) : "n/a") << "\n"
                << "nilpotent case: "
                << (check.nilpotent_ok ? yesno(*check.nilpotent_ok) : "n/a")
                << "\n"
                << "all checks: " << yesno(check.all_ok) << "\n";
    }
    return check.all_ok ? kExitOk : kExitRefuted;
  }

  if (opt.theorem == "cor2") {
    Corollary2Check check = check_corollary2(g, a, b, budget);
    if (opt.json)
      emit_json(corollary2_to_json(check));
    else {
      std::cout << "theorem: cor2\n"
                << "h*(A) = " << check.h_star_a << ", d(B) = " << check.d_b
                << "\n"
                << "bound = " << check.bound << "\n"
                << "lambda = " << check.lambda << "\n"
                << "bound holds: " << yesno(check.ok) << "\n";
    }
    return check.ok ? kExitOk : kExitRefuted;
  }

  if (opt.theorem != "t1")
    throw ParseError("unknown theorem '" + opt.theorem +
                     "'; expected t1, cjs or cor2");

  if (!opt.replay) {
    BoundCheck check = verify_theorem1_bound(g, a, b, budget);
    if (opt.json)
      emit_json(bound_check_to_json(check));
    else {
      std::cout << "theorem: t1\n"
                << "h*(A) = " << check.h_star_a
                << ", h*(B) = " << check.h_star_b << "\n"
                << "bound = " << check.bound << "\n"
                << "lambda = " << check.lambda << "\n"
                << "bound holds: " << yesno(check.ok) << "\n";
    }
    return check.ok ? kExitOk : kExitRefuted;
  }

  ReplayOptions ropts;
  ropts.budget = budget;
  ropts.jobs = opt.jobs;
  Certificate cert = replay_theorem1(g, a, b, ropts);
  if (opt.json)
    emit_json(certificate_to_json(cert));
  else {
    const CertificateNode &root = *cert.root;
    std::cout << "theorem: t1 (replay)\n"
              << "h*(A) = " << root.h_star_a << ", h*(B) = " << root.h_star_b
              << "\n"
              << "bound = " << root.claimed_bound << "\n"
              << "lambda = "
              << (root.observed_lambda ? std::to_string(*root.observed_lambda)
                                       : std::string("n/a"))
              << "\n"
              << "certificate valid: " << yesno(cert.valid()) << "\n"
              << "certificate complete: " << yesno(cert.complete()) << "\n";
  }
  if (!cert.valid())
    return kExitRefuted;
  return cert.complete() ? kExitOk : kExitBudget;
}

int run_tower(const Options &opt) {
  if (opt.height < 1)
    throw ParseError("tower height must be at least 1");

  if (opt.emit == "group") {
    PermGroup g = tower_group(opt.height);
    std::string path = "tower_h" + std::to_string(opt.height) + ".grp";
    write_group_file(path, g);
    if (opt.json) {
      nlohmann::ordered_json j;
      j["file"] = path;
      j["degree"] = g.degree();
      j["order"] = g.order().str();
      emit_json(j);
    } else {
      std::cout << "wrote " << path << " (degree " << g.degree() << ", order "
                << g.order().str() << ")\n";
    }
    return kExitOk;
  }

  if (opt.emit == "hall") {
    PermGroup g = tower_group(opt.height);
    auto [a, b] = tower_hall_pair(opt.height);
    bool coprime = a.order().coprime_to(b.order());
    bool product = a.order() * b.order() == g.order();
    std::string stem = "tower_h" + std::to_string(opt.height) + "_hall_";
    write_group_file(stem + "a.grp", a);
    write_group_file(stem + "b.grp", b);
    if (opt.json) {
      nlohmann::ordered_json j;
      j["file_a"] = stem + "a.grp";
      j["file_b"] = stem + "b.grp";
      j["order_a"] = a.order().str();
      j["order_b"] = b.order().str();
      j["coprime"] = coprime;
      j["product_is_group_order"] = product;
      emit_json(j);
    } else {
      std::cout << "wrote " << stem << "a.grp (order " << a.order().str()
                << ") and " << stem << "b.grp (order " << b.order().str()
                << ")\n"
                << "coprime: " << yesno(coprime)
                << ", product is group order: " << yesno(product) << "\n";
    }
    return coprime && product ? kExitOk : kExitRefuted;
  }

  if (opt.emit != "lambda")
    throw ParseError("unknown emit target '" + opt.emit +
                     "'; expected group, hall or lambda");

  TowerLambdaCertificate cert = tower_lambda_certificate(opt.height, opt.budget());
  if (opt.json)
    emit_json(tower_to_json(cert));
  else {
    std::cout << "height: " << cert.height << "\n"
              << "degree: " << cert.degree << "\n"
              << "order: " << cert.group_order.str() << "\n"
              << "lambda lower: " << cert.lambda_lower << "\n"
              << "lambda upper: " << cert.lambda_upper << "\n";
    std::size_t ok = 0;
    for (const auto &item : cert.checks)
      if (item.ok)
        ++ok;
    std::cout << "checks: " << ok << "/" << cert.checks.size() << " ok\n";
    for (const auto &item : cert.checks)
      if (!item.ok)
        std::cout << "  failed: " << item.name << "\n";
  }
  return cert.all_checks_ok ? kExitOk : kExitRefuted;
}

} // namespace

int main(int argc, char **argv) {
  Options opt;
  CLI::App app{"finite permutation group structure engine"};
  app.require_subcommand(1);
  app.fallthrough();

  app.add_flag("--json", opt.json, "emit JSON instead of text");
  app.add_option("--seed", opt.seed, "seed for randomized chain internals")
      ->each([&](const std::string &) { opt.seed_set = true; });
  app.add_option("--jobs", opt.jobs, "parallel branches in replay")
      ->check(CLI::Range(1u, 64u));
  app.add_option("--max-elements", opt.max_elements,
                 "element enumeration budget");
  app.add_option("--max-index", opt.max_index, "coset index budget");

  CLI::App *info = app.add_subcommand("info", "structure invariant report");
  info->add_option("--name", opt.name, "named group");
  info->add_option("--file", opt.file, "group file");

  CLI::App *factorize =
      app.add_subcommand("factorize", "subgroup and factorization search");
  factorize->add_option("--name", opt.name, "named group");
  factorize->add_option("--file", opt.file, "group file");
  factorize->add_flag("--coprime", opt.coprime,
                      "emit coprime factorizations");

  CLI::App *verify = app.add_subcommand("verify", "replay a bound or lemma");
  verify->add_option("--name", opt.name, "named group");
  verify->add_option("--file", opt.file, "group file");
  verify->add_option("-A", opt.factor_a, "first factor (file or name)");
  verify->add_option("-B", opt.factor_b, "second factor (file or name)");
  verify->add_option("--theorem", opt.theorem, "t1, cjs or cor2");
  verify->add_flag("--replay", opt.replay,
                   "emit the full recursion certificate");

  CLI::App *tower = app.add_subcommand("tower", "iterated wreath tower");
  tower->add_option("--height", opt.height, "tower height")->required();
  tower->add_option("--emit", opt.emit, "group, hall or lambda");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return kExitInput;
  }

  if (opt.seed_set)
    set_default_chain_seed(opt.seed);

  try {
    opt.budget().validate();
    if (app.got_subcommand(info))
      return run_info(opt);
    if (app.got_subcommand(factorize))
      return run_factorize(opt);
    if (app.got_subcommand(verify))
      return run_verify(opt);
    if (app.got_subcommand(tower))
      return run_tower(opt);
    std::cerr << "error: no subcommand\n";
    return kExitInput;
  } catch (const BudgetExceededError &e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const ParseError &e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const PreconditionError &e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::ios_base::failure &e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception &e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}
