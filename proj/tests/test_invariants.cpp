#include <doctest.h>

#include <set>
#include <vector>

#include <nlohmann/json.hpp>

#include "cfact/corpus.hpp"
#include "cfact/invariants.hpp"
#include "cfact/structure.hpp"

using namespace cfact;

namespace {

// oracle: |Cent(G)| as the number of distinct centralizer sets, computed
// with none of the library's class machinery
int naive_cent_count(const Group& g) {
  std::set<std::vector<int>> seen;
  for (Elt x = 0; x < g.order(); ++x) {
    std::vector<int> c;
    for (Elt y = 0; y < g.order(); ++y)
      if (g.mul(x, y) == g.mul(y, x)) c.push_back(y);
    seen.insert(c);
  }
  return int(seen.size());
}

// oracle: exact max clique in the element-level non-commuting graph by
// plain recursion (fine for orders up to ~30)
void clique_rec(const Group& g, const std::vector<Elt>& cand, int depth,
                int& best) {
  if (depth + int(cand.size()) <= best) return;
  if (cand.empty()) {
    if (depth > best) best = depth;
    return;
  }
  for (std::size_t i = 0; i < cand.size(); ++i) {
    Elt v = cand[i];
    std::vector<Elt> next;
    for (std::size_t j = i + 1; j < cand.size(); ++j)
      if (g.mul(v, cand[j]) != g.mul(cand[j], v)) next.push_back(cand[j]);
    clique_rec(g, next, depth + 1, best);
  }
}

int naive_omega(const Group& g) {
  std::vector<Elt> noncentral;
  for (Elt x = 0; x < g.order(); ++x) {
    bool central = true;
    for (Elt y = 0; y < g.order() && central; ++y)
      if (g.mul(x, y) != g.mul(y, x)) central = false;
    if (!central) noncentral.push_back(x);
  }
  if (noncentral.empty()) return 1;
  int best = 0;
  clique_rec(g, noncentral, 0, best);
  return best;
}

}  // namespace

TEST_CASE("cent_count agrees with the naive set-of-sets oracle") {
  for (const char* spec :
       {"C(6)", "S(3)", "D(8)", "Q8", "D(10)", "A(4)", "SL(2,3)", "S(4)",
        "Heis(3)", "D(16)", "D(24)", "Frob(5,4)", "GL(2,3)", "ES32",
        "Special32", "C(3) x S(3)"}) {
    const Group& g = *resolve(spec);
    CAPTURE(spec);
    CHECK(cent_count(g) == naive_cent_count(g));
  }
}

TEST_CASE("omega agrees with the element-level clique oracle") {
  for (const char* spec :
       {"S(3)", "D(8)", "Q8", "A(4)", "D(12)", "Heis(3)", "SL(2,3)", "S(4)",
        "D(16)"}) {
    const Group& g = *resolve(spec);
    CAPTURE(spec);
    CHECK(omega(g) == naive_omega(g));
  }
}

TEST_CASE("known omega values") {
  CHECK(omega(*resolve("A(4)")) == 5);
  CHECK(omega(*resolve("S(4)")) == 10);
  CHECK(omega(*resolve("A(5)")) == 21);
  CHECK(omega(*resolve("SL(2,5)")) == 31);
  CHECK(omega(*resolve("GL(2,3)")) == 13);
  CHECK(omega(*resolve("SL(2,3)")) == 7);
  CHECK(omega(*resolve("C(30)")) == 1);
}

TEST_CASE("cent structure bookkeeping") {
  const Group& s3 = *resolve("S(3)");
  auto cs = cent_structure(s3);
  CHECK(cs.count == 5);
  CHECK(cs.nacent_count == 1);  // only C(1) = G itself
  CHECK(cs.class_of.size() == 6);
  for (Elt x = 0; x < s3.order(); ++x)
    CHECK(cs.centralizers[cs.class_of[x]].contains(x));
  // the whole group appears exactly once, for the central elements
  int whole = 0;
  for (const auto& c : cs.centralizers)
    if (c.size() == s3.order()) ++whole;
  CHECK(whole == 1);
}

TEST_CASE("centralizer and center basics") {
  const Group& q8 = *resolve("Q8");
  CHECK(center(q8).size() == 2);
  for (Elt x = 0; x < q8.order(); ++x) {
    auto c = centralizer(q8, x);
    CHECK(c.contains(x));
    CHECK(q8.order() % c.size() == 0);
  }
  CHECK(derived_subgroup(q8).size() == 2);
  CHECK(center_of_centralizer(q8, 2).size() == 4);  // C(i) = <i> is abelian
}

TEST_CASE("p-group classification") {
  auto cls = [](const char* spec) {
    return p_group_classification(*resolve(spec));
  };
  CHECK(cls("Heis(3)").cls == PGroupClass::Extraspecial);
  CHECK(cls("ES(5,p2)").cls == PGroupClass::Extraspecial);
  CHECK(cls("ES32").cls == PGroupClass::Extraspecial);
  auto sp = cls("Special32");
  CHECK(sp.cls == PGroupClass::Special);
  CHECK(sp.rank == 2);
  CHECK(cls("Ultra64").cls == PGroupClass::Ultraspecial);
  CHECK(cls("MaxClass81").cls == PGroupClass::MaximalClass);
  CHECK(cls("D(16)").cls == PGroupClass::MaximalClass);
  CHECK(cls("C(8)").cls == PGroupClass::None);
  CHECK(cls("S(3)").cls == PGroupClass::None);  // not a p-group at all
  CHECK(p_group_class_name(cls("Heis(3)")) == "extraspecial");
}

TEST_CASE("invariant profile of GL(2,3)") {
  auto p = profile(*resolve("GL(2,3)"));
  CHECK(p.order == 48);
  CHECK(p.z_order == 2);
  CHECK(p.derived_order == 24);
  CHECK(p.derived_meet_center_order == 2);
  CHECK(p.cent_count == 14);
  CHECK(p.omega == 13);
  CHECK(p.derived_length == 4);
  CHECK_FALSE(p.nilpotency_class.has_value());
  CHECK(p.is_CA);
  CHECK_FALSE(p.is_perfect);
  CHECK_FALSE(p.is_Z_group);
  CHECK(p.quotient_cent_count == 14);  // GL(2,3)/Z = S4
  CHECK(p.is_primitive_Cn);
}

TEST_CASE("profile flags on characteristic examples") {
  CHECK(profile(*resolve("Q8")).is_CA);
  CHECK(profile(*resolve("S(3)")).is_CA);
  CHECK_FALSE(profile(*resolve("S(4)")).is_CA);
  CHECK(profile(*resolve("A(5)")).is_perfect);
  CHECK(profile(*resolve("S(3)")).is_Z_group);
  CHECK(profile(*resolve("Frob(7,3)")).is_Z_group);
  CHECK_FALSE(profile(*resolve("D(8)")).is_Z_group);
  CHECK(profile(*resolve("Heis(5)")).has_conjugate_type(5));
  CHECK_FALSE(profile(*resolve("S(4)")).has_conjugate_type(3));
}

TEST_CASE("ncgraph is consistent with the profile") {
  const Group& a4 = *resolve("A(4)");
  auto g = ncgraph(a4);
  CHECK(g.omega == 5);
  CHECK(g.node_count == cent_count(a4) - 1);  // whole-group class dropped
  int covered = 0;
  for (int s : g.class_size) covered += s;
  CHECK(covered == a4.order() - int(center(a4).size()));
  for (int v = 0; v < g.node_count; ++v) CHECK_FALSE(g.adj[v].test(v));
}

TEST_CASE("graph exports parse and carry the right node count") {
  const Group& s3 = *resolve("S(3)");
  auto dot = export_ncgraph(s3, GraphFormat::Dot);
  CHECK(dot.find("graph") != std::string::npos);
  CHECK(dot.find("--") != std::string::npos);

  auto j = nlohmann::json::parse(export_ncgraph(s3, "json"));
  CHECK(j["nodes"].size() == 4);
  CHECK(j["omega"] == 4);  // three transpositions and a 3-cycle
  CHECK_THROWS_AS(export_ncgraph(s3, "xml"), Error);
}
