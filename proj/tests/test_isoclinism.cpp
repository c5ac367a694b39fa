#include <doctest.h>

#include <algorithm>

#include <nlohmann/json.hpp>

#include "cfact/corpus.hpp"
#include "cfact/invariants.hpp"
#include "cfact/isoclinism.hpp"
#include "cfact/structure.hpp"

using namespace cfact;

TEST_CASE("reflexivity and symmetry") {
  for (const char* spec : {"S(3)", "Q8", "Heis(3)", "S(4)"}) {
    const Group& g = *resolve(spec);
    CAPTURE(spec);
    auto w = isoclinic(g, g);
    REQUIRE(w.has_value());
    CHECK(verify_witness(g, g, *w).ok);
  }
  const Group& d8 = *resolve("D(8)");
  const Group& q8 = *resolve("Q8");
  CHECK(isoclinic(d8, q8).has_value());
  CHECK(isoclinic(q8, d8).has_value());
}

TEST_CASE("abelian groups are all isoclinic to the trivial group") {
  const Group& c1 = *resolve("C(1)");
  for (const char* spec : {"C(7)", "C(2) x C(2)", "C(12)"}) {
    const Group& g = *resolve(spec);
    CAPTURE(spec);
    auto w = isoclinic(g, c1);
    REQUIRE(w.has_value());
    CHECK(verify_witness(g, c1, *w).ok);
  }
}

TEST_CASE("positive pairs verify end to end") {
  struct Pair {
    const char* a;
    const char* b;
  };
  const Pair pairs[] = {
      {"D(8)", "Q8"},
      {"S(4) x C(2)", "S(4)"},
      {"S(3) x C(4)", "S(3)"},
      {"Heis(3)", "ES(3,p2)"},
      {"Frob(5,4) x C(3)", "Frob(5,4)"},
  };
  for (const auto& p : pairs) {
    const Group& a = *resolve(p.a);
    const Group& b = *resolve(p.b);
    CAPTURE(p.a);
    CAPTURE(p.b);
    auto w = isoclinic(a, b, true);
    REQUIRE(w.has_value());
    CHECK(verify_witness(a, b, *w).ok);
    auto j = nlohmann::json::parse(witness_to_json(*w));
    CHECK(j.contains("phi"));
    CHECK(j.contains("psi"));
    CHECK(j["phi"].size() == w->qg.quotient.order());
  }
}

TEST_CASE("negative pairs") {
  CHECK_FALSE(isoclinic(*resolve("D(8)"), *resolve("C(8)")).has_value());
  CHECK_FALSE(isoclinic(*resolve("A(4)"), *resolve("D(12)")).has_value());
  CHECK_FALSE(isoclinic(*resolve("S(4)"), *resolve("A(4)")).has_value());
  CHECK_FALSE(isoclinic(*resolve("Heis(3)"), *resolve("D(8)")).has_value());
  CHECK_FALSE(isoclinic(*resolve("SL(2,3)"), *resolve("S(4)")).has_value());
}

TEST_CASE("commutator pairing is well defined and lands in G'") {
  const Group& s4 = *resolve("S(4)");
  auto q = quotient(s4, center(s4));
  auto t = commutator_pairing(s4, q);
  auto der = derived_subgroup(s4);
  REQUIRE(t.size() == q.quotient.order());
  for (const auto& row : t)
    for (Elt v : row) CHECK(der.contains(v));
  // value only depends on the pair of cosets: recompute from raw elements
  for (Elt a = 0; a < s4.order(); ++a)
    for (Elt b = 0; b < s4.order(); ++b)
      CHECK(t[q.projection[a]][q.projection[b]] == s4.commutator(a, b));
}

TEST_CASE("a corrupted phi fails verification") {
  const Group& g = *resolve("S(3) x C(4)");
  const Group& h = *resolve("S(3)");
  auto w = isoclinic(g, h);
  REQUIRE(w.has_value());
  REQUIRE(verify_witness(g, h, *w).ok);

  // swap the images of two quotient elements of different orders; the
  // result is still a bijection fixing the identity but not a homomorphism
  const Group& qg = w->qg.quotient;
  Elt i = 0, j = 0;
  for (Elt x = 1; x < qg.order(); ++x)
    for (Elt y = Elt(x + 1); y < qg.order(); ++y)
      if (qg.element_order(x) != qg.element_order(y)) {
        i = x;
        j = y;
      }
  REQUIRE(i != j);
  auto bad = *w;
  std::swap(bad.phi[i], bad.phi[j]);
  auto r = verify_witness(g, h, bad);
  CHECK_FALSE(r.ok);
  CHECK_FALSE(r.detail.empty());
}

TEST_CASE("a corrupted psi fails verification") {
  const Group& d8 = *resolve("D(8)");
  const Group& q8 = *resolve("Q8");
  auto w = isoclinic(d8, q8);
  REQUIRE(w.has_value());
  auto bad = *w;
  REQUIRE(bad.psi.size() == 2);
  std::swap(bad.psi[0], bad.psi[1]);  // identity no longer maps to identity
  CHECK_FALSE(verify_witness(d8, q8, bad).ok);
}

TEST_CASE("compatibility is stronger than having both isomorphisms") {
  // G = S4 x C2 and H = S4: compose phi with conjugation on the quotient by
  // an element whose induced tweak breaks compatibility with the fixed psi
  const Group& g = *resolve("S(4) x C(2)");
  const Group& h = *resolve("S(4)");
  auto w = isoclinic(g, h);
  REQUIRE(w.has_value());
  REQUIRE(verify_witness(g, h, *w).ok);

  const Group& qh = w->qh.quotient;
  bool broke_one = false;
  for (Elt c = 1; c < qh.order() && !broke_one; ++c) {
    auto bad = *w;
    for (auto& v : bad.phi) v = qh.conj(v, c);
    // still a pair of isomorphisms of quotients; compatibility may not survive
    auto r = verify_witness(g, h, bad);
    if (!r.ok) broke_one = true;
  }
  CHECK(broke_one);
}

TEST_CASE("fast prefilter changes nothing on a mixed sample") {
  struct Pair {
    const char* a;
    const char* b;
  };
  const Pair sample[] = {{"D(8)", "Q8"},      {"D(8)", "C(8)"},
                         {"S(3)", "D(12)"},   {"A(4)", "S(4)"},
                         {"Q8", "ES(3,p2)"}};
  for (const auto& p : sample) {
    const Group& a = *resolve(p.a);
    const Group& b = *resolve(p.b);
    CAPTURE(p.a);
    CAPTURE(p.b);
    CHECK(isoclinic(a, b, false).has_value() ==
          isoclinic(a, b, true).has_value());
  }
}
