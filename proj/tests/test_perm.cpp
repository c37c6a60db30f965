#include <doctest.h>

#include <sstream>

#include "permstruct/errors.hpp"
#include "permstruct/perm.hpp"

using permstruct::Perm;
using permstruct::parse_permutation;

TEST_CASE("parse and print round trip") {
  Perm p = parse_permutation("(1 2 3)(4 5)", 6);
  CHECK(p.cycle_string() == "(1 2 3)(4 5)");
  CHECK(p[0] == 1);
  CHECK(p[2] == 0);
  CHECK(p[3] == 4);
  CHECK(p[5] == 5);
  CHECK(parse_permutation("(1,2)(3,4)", 4) ==
        parse_permutation("(1 2) (3 4)", 4));
  CHECK(parse_permutation("()", 3).is_identity());
  CHECK(parse_permutation("()", 3).cycle_string() == "()");
  Perm q = parse_permutation(p.cycle_string(), 6);
  CHECK(p == q);
}

TEST_CASE("parse rejects malformed text") {
  CHECK_THROWS_AS(parse_permutation("", 4), permstruct::ParseError);
  CHECK_THROWS_AS(parse_permutation("(1 2", 4), permstruct::ParseError);
  CHECK_THROWS_AS(parse_permutation("(0 1)", 4), permstruct::ParseError);
  CHECK_THROWS_AS(parse_permutation("(1 5)", 4), permstruct::ParseError);
  CHECK_THROWS_AS(parse_permutation("(1 2)(2 3)", 4), permstruct::ParseError);
  CHECK_THROWS_AS(parse_permutation("1 2 3", 4), permstruct::ParseError);
  CHECK_THROWS_AS(parse_permutation("(1 x)", 4), permstruct::ParseError);
}

TEST_CASE("composition applies left factor first") {
  Perm a = parse_permutation("(1 2)", 3);
  Perm b = parse_permutation("(2 3)", 3);
  CHECK((a * b).cycle_string() == "(1 3 2)");
  CHECK((b * a).cycle_string() == "(1 2 3)");
  CHECK((a * a).is_identity());
  CHECK((a * b) != (b * a));
}

TEST_CASE("inverse and conjugation") {
  Perm g = parse_permutation("(1 2 3 4 5)", 5);
  CHECK((g * g.inverse()).is_identity());
  CHECK(g.inverse().cycle_string() == "(1 5 4 3 2)");

  Perm h = parse_permutation("(1 2)", 5);
  Perm c = h.conjugated_by(g);
  CHECK(c == g.inverse() * h * g);
  CHECK(c.cycle_string() == "(2 3)");

  Perm x = parse_permutation("(1 2 3)", 5);
  CHECK(permstruct::commutator(x, g) ==
        x.inverse() * g.inverse() * x * g);
  Perm d1 = parse_permutation("(1 2)", 5);
  Perm d2 = parse_permutation("(3 4)", 5);
  CHECK(permstruct::commutator(d1, d2).is_identity());
}

TEST_CASE("cycle structure and element order") {
  Perm p = parse_permutation("(1 2)(3 4 5)", 5);
  CHECK(p.order().u64() == 6);
  CHECK(parse_permutation("()", 4).order().is_one());
  CHECK(parse_permutation("(1 2 3 4 5 6 7)", 7).order().u64() == 7);
  auto cyc = p.cycles();
  REQUIRE(cyc.size() == 2);
  CHECK(cyc[0].size() == 2);
  CHECK(cyc[1].size() == 3);
  CHECK(p.smallest_moved_point() == 0);
  CHECK(parse_permutation("(3 4)", 5).smallest_moved_point() == 2);
  CHECK(parse_permutation("()", 5).smallest_moved_point() == 5);
}

TEST_CASE("stream output matches cycle string") {
  std::ostringstream os;
  os << parse_permutation("(2 4)(3 5)", 5);
  CHECK(os.str() == "(2 4)(3 5)");
}
