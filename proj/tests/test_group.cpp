#include <doctest.h>

#include <fstream>
#include <sstream>

#include "cfact/group.hpp"
#include "cfact/builders.hpp"

using namespace cfact;

namespace {

std::vector<std::vector<int>> cyclic_table(int n) {
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return t;
}

// C6 with a 2x2 intercalate swapped: still a Latin square with identity 0,
// but not associative (the only groups of order 6 are C6 and S3, and the
// diagonal matches neither)
std::vector<std::vector<int>> broken_latin6() {
  auto t = cyclic_table(6);
  std::swap(t[1][1], t[1][4]);
  std::swap(t[4][1], t[4][4]);
  return t;
}

}  // namespace

TEST_CASE("cyclic table validates") {
  Group g = Group::from_cayley_table(cyclic_table(6), "C6");
  CHECK(g.order() == 6);
  CHECK(g.mul(2, 5) == 1);
  CHECK(g.inv(1) == 5);
  CHECK(g.element_order(1) == 6);
  CHECK(g.element_order(2) == 3);
  CHECK(g.element_order(3) == 2);
  CHECK(g.exponent() == 6);
  CHECK(g.is_abelian());
}

TEST_CASE("identity must sit at index 0") {
  auto t = cyclic_table(4);
  std::swap(t[0], t[1]);
  std::swap(t[2][0], t[2][1]);
  std::swap(t[3][0], t[3][1]);
  try {
    Group::from_cayley_table(t, "x");
    FAIL("expected a throw");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NoIdentityAtZero);
  }
}

TEST_CASE("repeated entry in a row is rejected") {
  auto t = cyclic_table(4);
  t[2][3] = t[2][2];
  try {
    Group::from_cayley_table(t, "x");
    FAIL("expected a throw");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotLatinSquare);
  }
}

TEST_CASE("non-associative Latin square is rejected with a witness triple") {
  auto t = broken_latin6();
  // the oracle: find a violating triple by brute force first
  bool found = false;
  for (int a = 0; a < 6 && !found; ++a)
    for (int b = 0; b < 6 && !found; ++b)
      for (int c = 0; c < 6 && !found; ++c)
        if (t[t[a][b]][c] != t[a][t[b][c]]) found = true;
  REQUIRE(found);
  try {
    Group::from_cayley_table(t, "x");
    FAIL("expected a throw");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotAssociative);
  }
}

TEST_CASE("out of range entries are rejected") {
  auto t = cyclic_table(4);
  t[3][3] = 4;
  try {
    Group::from_cayley_table(t, "x");
    FAIL("expected a throw");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::IndexOutOfRange);
  }
}

TEST_CASE("conjugation, commutators and powers") {
  Group g = from_permutations({{1, 2, 0}, {0, 2, 1}}, "S3");
  REQUIRE(g.order() == 6);
  for (Elt a = 0; a < g.order(); ++a) {
    CHECK(g.mul(a, g.inv(a)) == Group::identity);
    CHECK(g.conj(a, Group::identity) == a);
    CHECK(g.commutator(a, a) == Group::identity);
    CHECK(g.power(a, g.element_order(a)) == Group::identity);
    CHECK(g.power(a, -1) == g.inv(a));
  }
  CHECK_FALSE(g.is_abelian());
  CHECK(g.exponent() == 6);
}

TEST_CASE("cay round trip preserves the table") {
  Group g = from_permutations({{1, 2, 3, 0}}, "C4");
  std::ostringstream out;
  g.write_cay(out);
  std::istringstream in(out.str());
  Group h = Group::read_cay(in, "C4");
  REQUIRE(h.order() == g.order());
  for (Elt a = 0; a < g.order(); ++a)
    for (Elt b = 0; b < g.order(); ++b) CHECK(g.mul(a, b) == h.mul(a, b));
}

TEST_CASE("cay file errors") {
  CHECK_THROWS_AS(Group::read_cay_file("/nonexistent/file.cay"), Error);
  std::istringstream bad("3\n0 1 2\n1 2 0\n");
  try {
    Group::read_cay(bad, "x");
    FAIL("expected a throw");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ParseError);
  }
}

TEST_CASE("subgroup construction validates closure") {
  Group g = from_permutations({{1, 2, 3, 0}}, "C4");
  Bitset ok(4);
  ok.set(0);
  ok.set(2);
  Subgroup s(g, ok);
  CHECK(s.size() == 2);
  CHECK(s.is_cyclic());
  CHECK(s.is_normal());

  Bitset open(4);
  open.set(0);
  open.set(1);  // <1> = whole group, {0,1} not closed
  CHECK_THROWS_AS(Subgroup(g, open), Error);

  Bitset noid(4);
  noid.set(2);
  CHECK_THROWS_AS(Subgroup(g, noid), Error);
}

TEST_CASE("subgroup as standalone group keeps the parent order map") {
  Group g = from_permutations({{1, 0, 2, 3}, {0, 1, 3, 2}}, "V4");
  Bitset b(4);
  b.set(0);
  b.set(1);
  auto sg = as_group(Subgroup(g, b));
  CHECK(sg.group.order() == 2);
  CHECK(sg.to_parent[0] == 0);
  CHECK(sg.group.mul(1, 1) == 0);
}

TEST_CASE("morphism predicates") {
  Group c4 = from_permutations({{1, 2, 3, 0}}, "C4");
  Group c2 = from_permutations({{1, 0}}, "C2");
  Morphism onto{&c4, &c2, {0, 1, 0, 1}};
  CHECK(onto.is_homomorphism());
  CHECK_FALSE(onto.is_bijective());
  Morphism wrong{&c4, &c2, {0, 1, 1, 0}};
  CHECK_FALSE(wrong.is_homomorphism());
}

TEST_CASE("element names attach to Q8") {
  const std::vector<std::vector<int>> q8 = {
      {0, 1, 2, 3, 4, 5, 6, 7}, {1, 0, 3, 2, 5, 4, 7, 6},
      {2, 3, 1, 0, 6, 7, 5, 4}, {3, 2, 0, 1, 7, 6, 4, 5},
      {4, 5, 7, 6, 1, 0, 2, 3}, {5, 4, 6, 7, 0, 1, 3, 2},
      {6, 7, 4, 5, 3, 2, 1, 0}, {7, 6, 5, 4, 2, 3, 0, 1}};
  Group g = Group::from_cayley_table(q8, "Q8");
  CHECK(g.element_order(1) == 2);
  int involutions = 0;
  for (Elt x = 1; x < g.order(); ++x)
    if (g.element_order(x) == 2) ++involutions;
  CHECK(involutions == 1);  // the distinguishing count against D8
  g.set_element_names({"1", "-1", "i", "-i", "j", "-j", "k", "-k"});
  CHECK(g.element_names()[4] == "j");
  CHECK_THROWS_AS(g.set_element_names({"too", "few"}), Error);
}
