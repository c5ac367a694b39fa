// Acceptance gate: one line per criterion, nonzero exit if any fails.
#include <chrono>
#include <cstdio>
#include <set>
#include <string>
#include <vector>

#include "cfact/corpus.hpp"
#include "cfact/checks.hpp"
#include "cfact/invariants.hpp"
#include "cfact/isoclinism.hpp"
#include "cfact/structure.hpp"

using namespace cfact;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

void report(int n, const char* what, bool ok, double secs, double budget) {
  bool in_budget = budget <= 0 || secs < budget;
  if (!ok || !in_budget) ++failures;
  std::printf("criterion %d: %-4s  %-38s (%.2fs%s)\n", n,
              ok && in_budget ? "pass" : "FAIL", what, secs,
              !in_budget ? ", over budget" : "");
}

bool derived_is(const char* spec, const char* target) {
  const Group& g = *resolve(spec);
  auto d = as_group(derived_subgroup(g));
  return isomorphic(d.group, *resolve(target)).has_value();
}

bool derived_meet_center(const char* spec, int expected) {
  const Group& g = *resolve(spec);
  Bitset m = derived_subgroup(g).members();
  m &= center(g).members();
  return int(m.count()) == expected;
}

}  // namespace

static bool criterion1() {
  const std::vector<std::pair<const char*, int>> table = {
      {"Q8", 4},        {"S(3)", 5},      {"Heis(3)", 5},  {"A(4)", 6},
      {"D(16)", 6},     {"Special32", 6}, {"Ultra64", 6},  {"D(10)", 7},
      {"Frob(5,4)", 7}, {"Heis(5)", 7},   {"ES(5,p2)", 7}, {"G1(2)", 8},
      {"SL(2,3)", 8},   {"D(24)", 8},     {"D(14)", 9},    {"Frob(7,3)", 9},
      {"Frob(7,6)", 9}, {"Heis(7)", 9},   {"ES(7,p2)", 9}};
  bool ok = true;
  for (const auto& [spec, expected] : table)
    if (cent_count(*resolve(spec)) != expected) {
      std::printf("  cent_count(%s) != %d\n", spec, expected);
      ok = false;
    }
  return ok;
}

static bool criterion2() {
  bool ok = true;
  auto expect = [&](bool cond, const char* what) {
    if (!cond) {
      std::printf("  failed: %s\n", what);
      ok = false;
    }
  };
  expect(cent_count(*resolve("GL(2,3)")) == 14, "cent(GL(2,3))=14");
  expect(derived_meet_center("GL(2,3)", 2), "|GL(2,3)' n Z|=2");
  expect(cent_count(*resolve("A(5)")) == 22, "cent(A5)=22");
  expect(cent_count(*resolve("SL(2,5)")) == 32, "cent(SL(2,5))=32");
  expect(omega(*resolve("A(5)")) == 21, "omega(A5)=21");
  expect(omega(*resolve("SL(2,5)")) == 31, "omega(SL(2,5))=31");
  auto s4 = profile(*resolve("S(4)"));
  expect(s4.omega == 10 && s4.nacent_count == 4 && !s4.is_CA,
         "S4 profile");
  expect(derived_is("S(4)", "A(4)"), "S4' = A4");
  auto gl = profile(*resolve("GL(2,3)"));
  expect(gl.omega == 13 && gl.is_CA && gl.derived_length == 4,
         "GL(2,3) profile");
  expect(derived_is("GL(2,3)", "SL(2,3)"), "GL(2,3)' = SL(2,3)");
  expect(cent_count(*resolve("SL(2,3)")) == 8, "cent(SL(2,3))=8");
  expect(omega(*resolve("SL(2,3)")) == 7, "omega(SL(2,3))=7");
  expect(derived_is("SL(2,3)", "Q8"), "SL(2,3)' = Q8");
  expect(cent_count(*resolve("A(4)")) == 6, "cent(A4)=6");
  expect(omega(*resolve("A(4)")) == 5, "omega(A4)=5");
  expect(derived_is("A(4)", "C(2) x C(2)"), "A4' = V4");
  return ok;
}

static bool criterion3() {
  bool ok = true;
  for (int p : {2, 3}) {
    const Group& g = *resolve("G1(" + std::to_string(p) + ")");
    if (cent_count(g) != p * p + p + 2) ok = false;
    auto d = as_group(derived_subgroup(g));
    std::string target = "C(" + std::to_string(p) + ")";
    if (!isomorphic(d.group, *resolve(target + " x " + target + " x " + target))
             .has_value())
      ok = false;
  }
  const Group& sp = *resolve("Special32");
  auto spc = p_group_classification(sp);
  if (cent_count(sp) != 6 || spc.cls != PGroupClass::Special || spc.rank != 2)
    ok = false;
  const Group& mc = *resolve("MaxClass81");
  if (cent_count(mc) != 11 ||
      p_group_classification(mc).cls != PGroupClass::MaximalClass)
    ok = false;
  auto t0 = Clock::now();
  const Group& g2 = *resolve("G2(5)");
  auto pr = profile(g2);
  if (pr.cent_count != 32 || pr.nilpotency_class != 3 || g2.exponent() != 5 ||
      !pr.has_conjugate_type(25))
    ok = false;
  double g2s = seconds_since(t0);
  if (g2s >= 60.0) {
    std::printf("  G2(5) check took %.2fs, budget 60s\n", g2s);
    ok = false;
  }
  return ok;
}

static bool criterion4() {
  const std::vector<std::pair<const char*, const char*>> pos = {
      {"D(8)", "Q8"},
      {"A(4) x C(7)", "A(4)"},
      {"S(3) x C(4)", "S(3)"},
      {"S(4) x C(2)", "S(4)"},
      {"Frob(5,4) x C(3)", "Frob(5,4)"},
      {"SL(2,3) x C(5)", "SL(2,3)"}};
  const std::vector<std::pair<const char*, const char*>> neg = {
      {"S(4)", "GL(2,3)"},
      {"S(3)", "Heis(3)"},
      {"Q8", "S(3)"},
      {"A(4)", "SL(2,3)"},
      {"A(5)", "SL(2,5)"}};
  bool ok = true;
  for (const auto& [a, b] : pos) {
    const Group& ga = *resolve(a);
    const Group& gb = *resolve(b);
    auto w = isoclinic(ga, gb);
    if (!w || !verify_witness(ga, gb, *w).ok) {
      std::printf("  expected isoclinic: %s ~ %s\n", a, b);
      ok = false;
      continue;
    }
    auto pa = profile(ga);
    auto pb = profile(gb);
    if (pa.cent_count != pb.cent_count || pa.omega != pb.omega ||
        pa.derived_meet_center_order != pb.derived_meet_center_order) {
      std::printf("  invariants disagree across %s ~ %s\n", a, b);
      ok = false;
    }
  }
  for (const auto& [a, b] : neg)
    if (isoclinic(*resolve(a), *resolve(b)).has_value()) {
      std::printf("  expected non-isoclinic: %s, %s\n", a, b);
      ok = false;
    }
  return ok;
}

static bool criterion5() {
  bool ok = true;
  for (const auto& entry : corpus_list()) {
    const Group& g = *entry.group();
    if (g.order() > 200) continue;
    auto der = derived_subgroup(g).members();
    for (const auto& n : all_normal_subgroups(g)) {
      Bitset meet = der;
      meet &= n.members();
      int lhs = cent_count(quotient(g, n).quotient);
      int rhs = cent_count(quotient(g, Subgroup(g, meet)).quotient);
      if (lhs != rhs) {
        std::printf("  violation in %s at |N|=%d\n", entry.name.c_str(),
                    n.size());
        ok = false;
      }
    }
  }
  return ok;
}

static bool criterion6() {
  bool ok = true;
  auto expect = [&](bool cond, const char* what) {
    if (!cond) {
      std::printf("  failed: %s\n", what);
      ok = false;
    }
  };
  // |G'| = 2: G = C(x) u C(y) u C(xy) for every non-commuting pair, and
  // cent_count = |G : Z(G)|
  for (const char* spec : {"D(8)", "Q8", "D(8) x C(2)", "ES32"}) {
    const Group& g = *resolve(spec);
    expect(derived_subgroup(g).size() == 2, "derived order 2");
    bool covered = true;
    for (Elt x = 0; x < g.order() && covered; ++x)
      for (Elt y = 0; y < g.order() && covered; ++y) {
        if (g.commutes(x, y)) continue;
        Elt xy = g.mul(x, y);
        for (Elt z = 0; z < g.order(); ++z)
          if (!g.commutes(z, x) && !g.commutes(z, y) && !g.commutes(z, xy)) {
            covered = false;
            break;
          }
      }
    expect(covered, spec);
    expect(cent_count(g) == g.order() / int(center(g).size()), "cor2.9 count");
  }
  // extraspecial count formula: |G| = p^(2a+1) gives (p^2a - 1)/(p - 1) + 1
  const std::tuple<const char*, int, int> es[] = {
      {"Heis(3)", 3, 1}, {"Heis(5)", 5, 1}, {"Heis(7)", 7, 1}, {"ES32", 2, 2}};
  for (const auto& [spec, p, a] : es) {
    long long pw = 1;
    for (int i = 0; i < 2 * a; ++i) pw *= p;
    expect(cent_count(*resolve(spec)) == (pw - 1) / (p - 1) + 1, spec);
  }
  // Frobenius |G'| + 2 law
  for (const char* spec : {"Frob(5,4)", "Frob(7,6)", "Frob(5,4) x C(3)"}) {
    const Group& g = *resolve(spec);
    expect(cent_count(g) == int(derived_subgroup(g).size()) + 2, spec);
  }
  // dihedral meet law
  const std::pair<const char*, int> meets[] = {
      {"D(16)", 2}, {"D(20)", 1}, {"D(24)", 2}, {"D(28)", 1}};
  for (const auto& [spec, expected] : meets)
    expect(derived_meet_center(spec, expected), spec);
  // Z(x) = Z u xZ inside proper centralizers of D8 and Q8
  for (const char* spec : {"D(8)", "Q8"}) {
    const Group& g = *resolve(spec);
    auto z = center(g);
    bool law = true;
    for (Elt x = 0; x < g.order(); ++x) {
      if (z.contains(x)) continue;
      auto zx = center_of_centralizer(g, x);
      Bitset want = z.members();
      for (Elt c : z.elements()) want.set(g.mul(x, c));
      if (zx.members() != want) law = false;
    }
    expect(law, spec);
  }
  // perfect quotient <=> central factor splits off
  {
    const Group& g = *resolve("C(6) x A(5)");
    auto q = quotient(g, center(g));
    expect(derived_subgroup(q.quotient).size() == q.quotient.order(),
           "C6 x A5 perfect quotient");
    Bitset m = derived_subgroup(g).members();
    m &= center(g).members();
    expect(m.count() == 1, "C6 x A5 splits");
    const Group& s4 = *resolve("S(4)");
    auto q2 = quotient(s4, center(s4));
    expect(derived_subgroup(q2.quotient).size() != q2.quotient.order(),
           "S4 quotient not perfect");
  }
  return ok;
}

static bool criterion7() {
  const std::vector<std::pair<const char*, std::set<int>>> scans = {
      {"SL(2,5)", {4, 5, 6, 7, 8, 22, 32}},
      {"SL(2,3)", {4, 6, 8}},
      {"D(16)", {4, 6}}};
  bool ok = true;
  for (const auto& [spec, allowed] : scans) {
    const Group& g = *resolve(spec);
    for (const auto& h : all_subgroups(g)) {
      if (h.is_abelian()) continue;
      int c = cent_count(as_group(h).group);
      if (!allowed.count(c)) {
        std::printf("  %s: subgroup of order %d has cent_count %d\n", spec,
                    h.size(), c);
        ok = false;
      }
    }
  }
  return ok;
}

static bool criterion8() {
  bool ok = true;
  for (const auto& entry : corpus_list()) {
    const Group& g = *entry.group();
    int c = cent_count(g);
    if (c == 2 || c == 3) {
      std::printf("  %s has cent_count %d\n", entry.name.c_str(), c);
      ok = false;
    }
    if (!g.is_abelian() && c < 4) {
      std::printf("  %s non-abelian with cent_count %d\n", entry.name.c_str(),
                  c);
      ok = false;
    }
  }
  for (const auto& name : {"q16", "sd16", "m16", "dic12", "c4sc4", "pauli16",
                           "d12", "c16"}) {
    auto g = resolve("@" + data_dir() + "/" + name + ".cay");
    if (g->order() > 16) continue;
    int c = cent_count(*g);
    if (c == 2 || c == 3) {
      std::printf("  table %s has cent_count %d\n", name, c);
      ok = false;
    }
  }
  return ok;
}

int main() {
  struct Crit {
    int n;
    const char* what;
    bool (*fn)();
    double budget;
  };
  const Crit criteria[] = {
      {1, "cent-catalogue golden values", criterion1, 60.0},
      {2, "section 3 invariants", criterion2, 0.0},
      {3, "p^3-central family", criterion3, 0.0},
      {4, "isoclinism positive/negative pairs", criterion4, 120.0},
      {5, "central-factor quotient law", criterion5, 0.0},
      {6, "section 2 laws", criterion6, 0.0},
      {7, "subgroup scans", criterion7, 60.0},
      {8, "negative space", criterion8, 0.0},
  };
  for (const auto& c : criteria) {
    auto t0 = Clock::now();
    bool ok = c.fn();
    report(c.n, c.what, ok, seconds_since(t0), c.budget);
  }
  if (failures) std::printf("%d criterion(s) failed\n", failures);
  return failures ? 1 : 0;
}
