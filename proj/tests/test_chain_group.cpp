#include <doctest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "permstruct/errors.hpp"
#include "permstruct/group.hpp"
#include "permstruct/named_groups.hpp"

using namespace permstruct;

namespace {

PermGroup named(const std::string &n) { return named_group(n); }

Perm parse(const std::string &text, std::uint32_t degree) {
  return parse_permutation(text, degree);
}

} // namespace

TEST_CASE("orders match brute-force closure on the small corpus") {
  for (const char *name :
       {"A4", "S4", "A5", "S5", "SL25", "GL23", "PSL27", "D8", "D10", "D12",
        "C2", "C3", "C6", "C7", "C12", "F20", "V4", "S3"}) {
    CAPTURE(name);
    PermGroup g = named(name);
    auto elems = oracle::elements_of(g);
    CHECK(g.order().u64() == elems.size());
    for (const auto &e : elems)
      CHECK(g.contains(Perm(e)));
  }
}

TEST_CASE("membership rejects outside elements") {
  PermGroup a5 = named("A5");
  CHECK_FALSE(a5.contains(parse("(1 2)", 5)));
  CHECK_FALSE(a5.contains(parse("(1 2 3 4)", 5)));
  CHECK(a5.contains(parse("(1 2 3 4 5)", 5)));

  PermGroup v4 = named("V4");
  CHECK_FALSE(v4.contains(parse("(1 2)", 4)));
  CHECK(v4.contains(parse("(1 4)(2 3)", 4)));

  std::mt19937 rng(7);
  for (const char *name : {"A5", "C6", "F20", "SL25", "PSL27"}) {
    CAPTURE(name);
    PermGroup g = named(name);
    auto elems = oracle::elements_of(g);
    std::set<oracle::Images> in(elems.begin(), elems.end());
    oracle::Images probe = oracle::identity(g.degree());
    for (int trial = 0; trial < 40; ++trial) {
      std::shuffle(probe.begin(), probe.end(), rng);
      CHECK(g.contains(Perm(probe)) == (in.count(probe) > 0));
    }
  }
}

TEST_CASE("degree mismatch in membership throws") {
  CHECK_THROWS_AS(named("A5").contains(parse("(1 2)", 4)),
                  PreconditionError);
}

TEST_CASE("normal closure matches the brute-force oracle") {
  struct Case {
    const char *group;
    const char *seed;
    std::uint64_t expected;
  };
  for (const Case &c : std::initializer_list<Case>{
           {"S4", "(1 2)", 24},
           {"S4", "(1 2 3)", 12},
           {"S4", "(1 2)(3 4)", 4},
           {"A5", "(1 2 3 4 5)", 60},
           {"A5", "(1 2 3)", 60},
           {"S5", "(1 2 3)", 60},
           {"D12", "(1 2 3 4 5 6)", 6},
       }) {
    CAPTURE(c.group);
    CAPTURE(c.seed);
    PermGroup g = named(c.group);
    Perm seed = parse(c.seed, g.degree());
    PermGroup nc = normal_closure(g, {seed});
    CHECK(nc.order().u64() == c.expected);
    auto expected = oracle::normal_closure_elems(oracle::gens_of(g),
                                                 {seed.images()}, g.degree());
    CHECK(expected.size() == c.expected);
    for (const auto &e : expected)
      CHECK(nc.contains(Perm(e)));
  }
}

TEST_CASE("normal closure of each generator agrees with the oracle") {
  for (const char *name : {"S4", "A5", "SL25", "GL23", "D12", "F20"}) {
    CAPTURE(name);
    PermGroup g = named(name);
    for (const Perm &gen : g.generators()) {
      PermGroup nc = normal_closure(g, {gen});
      auto expected = oracle::normal_closure_elems(
          oracle::gens_of(g), {gen.images()}, g.degree());
      REQUIRE(nc.order().fits_u64());
      CHECK(nc.order().u64() == expected.size());
    }
  }
}

TEST_CASE("join and subgroup predicates") {
  PermGroup s5 = named("S5");
  PermGroup a5 = named("A5");
  PermGroup c5(5, {parse("(1 2 3 4 5)", 5)});
  PermGroup a4(5, {parse("(1 2 3)", 5), parse("(2 3 4)", 5)});

  CHECK(is_subgroup(s5, a5));
  CHECK(is_subgroup(a5, a4));
  CHECK_FALSE(is_subgroup(a4, a5));
  CHECK(group_equal(a5, a5));
  CHECK_FALSE(group_equal(s5, a5));

  CHECK(join(a4, c5).order().u64() == 60);
  CHECK(group_equal(join(a4, c5), a5));
  PermGroup flip(5, {parse("(1 2)", 5)});
  CHECK(group_equal(join(a5, flip), s5));
}

TEST_CASE("derived subgroup on small groups") {
  CHECK(derived_subgroup(named("S4")).order().u64() == 12);
  CHECK(derived_subgroup(named("A4")).order().u64() == 4);
  CHECK(derived_subgroup(named("A5")).order().u64() == 60);
  CHECK(derived_subgroup(named("C12")).order().is_one());
  CHECK(derived_subgroup(named("D8")).order().u64() == 2);
  CHECK(is_perfect(named("A5")));
  CHECK_FALSE(is_perfect(named("S5")));
  CHECK(is_perfect(named("SL25")));
}

TEST_CASE("normality and conjugates") {
  PermGroup s4 = named("S4");
  PermGroup v4 = named("V4");
  PermGroup a4 = named("A4");
  CHECK(is_normal(s4, v4));
  CHECK(is_normal(s4, a4));
  PermGroup d8(4, {parse("(1 2 3 4)", 4), parse("(1 3)", 4)});
  CHECK(is_subgroup(s4, d8));
  CHECK_FALSE(is_normal(s4, d8));
  CHECK_THROWS_AS(is_normal(v4, s4), PreconditionError);

  Perm t = parse("(1 4)", 4);
  PermGroup c3(4, {parse("(1 2 3)", 4)});
  PermGroup conj = conjugate_subgroup(c3, t);
  CHECK(conj.order().u64() == 3);
  CHECK(conj.contains(parse("(2 3 4)", 4)));
  CHECK_FALSE(group_equal(conj, c3));
}

TEST_CASE("intersection centralizer normalizer frozen values") {
  PermGroup s5 = named("S5");
  PermGroup a5 = named("A5");
  PermGroup s4_in_s5(5, {parse("(1 2)", 5), parse("(1 2 3 4)", 5)});
  PermGroup inter = intersection(s4_in_s5, a5);
  CHECK(inter.order().u64() == 12); // the alternating part of the point stabilizer

  PermGroup s4 = named("S4");
  PermGroup v4 = named("V4");
  CHECK(group_equal(centralizer(s4, v4), v4));
  CHECK(centralizer(s4, s4).order().is_one());

  PermGroup c5(5, {parse("(1 2 3 4 5)", 5)});
  CHECK(normalizer(s5, c5).order().u64() == 20);
  PermGroup a4_in_a5(5, {parse("(1 2 3)", 5), parse("(2 3 4)", 5)});
  CHECK(group_equal(normalizer(a5, a4_in_a5), a4_in_a5));

  CHECK(intersection(named("C12"), named("C12")).order().u64() == 12);
}

TEST_CASE("abelian detection") {
  CHECK(is_abelian(named("C12")));
  CHECK(is_abelian(named("V4")));
  CHECK_FALSE(is_abelian(named("S3")));
  CHECK_FALSE(is_abelian(named("D8")));
}

TEST_CASE("elements respects the budget") {
  EnumerationBudget small;
  small.max_elements = 50;
  CHECK_THROWS_AS(elements(named("S5"), small), BudgetExceededError);
  CHECK(elements(named("S4"), small).size() == 24);
  try {
    elements(named("S5"), small);
    FAIL("expected budget error");
  } catch (const BudgetExceededError &e) {
    CHECK(e.kind() == BudgetExceededError::Kind::Elements);
    CHECK(e.limit() == 50);
  }
}

TEST_CASE("conjugacy class representative counts") {
  CHECK(conjugacy_class_reps(named("S4")).size() == 5);
  CHECK(conjugacy_class_reps(named("A5")).size() == 5);
  CHECK(conjugacy_class_reps(named("S5")).size() == 7);
  CHECK(conjugacy_class_reps(named("PSL27")).size() == 6);
  CHECK(conjugacy_class_reps(named("SL25")).size() == 9);
  CHECK(conjugacy_class_reps(named("C7")).size() == 7);
}

TEST_CASE("growing group accumulates only new elements") {
  PermGroup s4 = named("S4");
  GrowingGroup grow(4);
  CHECK(grow.order().is_one());
  CHECK(grow.add(parse("(1 2)", 4)));
  CHECK_FALSE(grow.add(parse("(1 2)", 4)));
  CHECK(grow.add(parse("(1 2 3 4)", 4)));
  CHECK(grow.order().u64() == 24);
  CHECK(grow.generators().size() == 2);
  CHECK(group_equal(grow.freeze(), s4));
}

TEST_CASE("chain order is seed independent") {
  std::uint64_t before = default_chain_seed();
  for (std::uint64_t seed : {std::uint64_t{1}, std::uint64_t{42},
                             std::uint64_t{0xdeadbeef}}) {
    set_default_chain_seed(seed);
    CHECK(named("S5").order().u64() == 120);
    CHECK(named("SL25").order().u64() == 120);
    CHECK(named("PSL27").order().u64() == 168);
  }
  set_default_chain_seed(before);
}

TEST_CASE("trivial and empty generator handling") {
  PermGroup t = PermGroup::trivial(6);
  CHECK(t.order().is_one());
  CHECK(t.is_trivial());
  CHECK(t.contains(parse("()", 6)));
  CHECK_FALSE(t.contains(parse("(1 2)", 6)));
  PermGroup withid(4, {parse("()", 4), parse("(1 2)", 4)});
  CHECK(withid.generators().size() == 1);
  CHECK(withid.order().u64() == 2);
  CHECK_THROWS_AS(PermGroup(std::vector<Perm>{}), PreconditionError);
}
