#include "cfact/isoclinism.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

#include "cfact/caps.hpp"
#include "cfact/invariants.hpp"
#include "cfact/structure.hpp"

namespace cfact {

std::vector<std::vector<Elt>> commutator_pairing(const Group& g,
                                                 const QuotientResult& q) {
  int m = q.quotient.order();
  std::vector<std::vector<Elt>> t(m, std::vector<Elt>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      t[i][j] = g.commutator(q.coset_reps[i], q.coset_reps[j]);
  // well-definedness: recompute with a second representative set (each rep
  // shifted by a kernel element); commutators are constant on central cosets
  auto zelems = [&] {
    std::vector<Elt> out;
    for (int x = 0; x < g.order(); ++x)
      if (q.projection[x] == Group::identity) out.push_back(Elt(x));
    return out;
  }();
  Elt shift = zelems.size() > 1 ? zelems[1] : zelems[0];
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      Elt r1 = g.mul(q.coset_reps[i], shift);
      Elt r2 = g.mul(q.coset_reps[j], shift);
      if (g.commutator(r1, r2) != t[i][j])
        throw Error(Errc::ValidationFailed,
                    "commutator pairing not constant on cosets at (" +
                        std::to_string(i) + "," + std::to_string(j) + ")");
    }
  return t;
}

namespace {

// Given a complete phi on the quotients, derive the induced map psi on
// commutator values and extend it multiplicatively over G'. Returns the
// full map (indexed by G-element) or nullopt on any conflict.
std::optional<std::vector<int>> induced_derived_map(
    const Group& g, const Group& h, const std::vector<std::vector<Elt>>& tg,
    const std::vector<std::vector<Elt>>& th, const std::vector<Elt>& phi,
    const Subgroup& dg, const Subgroup& dh) {
  std::vector<int> psi(g.order(), -1);
  std::vector<char> used(h.order(), 0);
  std::vector<Elt> dom;
  auto assign = [&](Elt a, Elt b) {
    if (psi[a] < 0) {
      if (used[b]) return false;
      psi[a] = b;
      used[b] = 1;
      dom.push_back(a);
      return true;
    }
    return psi[a] == int(b);
  };
  int m = int(phi.size());
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (!assign(tg[i][j], th[phi[i]][phi[j]])) return std::nullopt;
  // word closure: pairing values generate G'
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::size_t i = 0; i < dom.size(); ++i)
      for (std::size_t j = 0; j < dom.size(); ++j) {
        Elt p = g.mul(dom[i], dom[j]);
        Elt q = h.mul(Elt(psi[dom[i]]), Elt(psi[dom[j]]));
        if (psi[p] < 0) {
          if (used[q]) return std::nullopt;
          psi[p] = q;
          used[q] = 1;
          dom.push_back(p);
          grew = true;
        } else if (psi[p] != int(q)) {
          return std::nullopt;
        }
      }
  }
  if (int(dom.size()) != dg.size()) return std::nullopt;  // did not cover G'
  for (auto a : dom)
    if (!dh.contains(Elt(psi[a]))) return std::nullopt;
  return psi;
}

}  // namespace

std::optional<IsoclinismWitness> isoclinic(const Group& g, const Group& h,
                                           bool fast) {
  auto zg = center(g);
  auto zh = center(h);
  auto dg = derived_subgroup(g);
  auto dh = derived_subgroup(h);
  // definitional necessary conditions only; the paper's invariance theorems
  // are what the harness tests, so they are not used here
  if (dg.size() != dh.size()) return std::nullopt;
  if (g.order() / zg.size() != h.order() / zh.size()) return std::nullopt;
  if (g.order() / zg.size() > caps().quotient)
    throw Error(Errc::QuotientTooLarge,
                "|G/Z| = " + std::to_string(g.order() / zg.size()));
  if (fast && cent_count(g) != cent_count(h)) return std::nullopt;

  auto qg = quotient(g, zg);
  auto qh = quotient(h, zh);
  auto tg = commutator_pairing(g, qg);
  auto th = commutator_pairing(h, qh);

  std::optional<IsoclinismWitness> found;
  for_each_isomorphism(qg.quotient, qh.quotient, [&](const Morphism& phi) {
    auto psi = induced_derived_map(g, h, tg, th, phi.map, dg, dh);
    if (!psi) return true;  // keep searching
    IsoclinismWitness w;
    w.qg = qg;
    w.qh = qh;
    w.phi = phi.map;
    w.derived_g = dg.elements();
    w.derived_h = dh.elements();
    w.psi.reserve(w.derived_g.size());
    for (auto a : w.derived_g) w.psi.push_back(Elt((*psi)[a]));
    found = std::move(w);
    return false;  // deterministic: first witness in search order
  });
  return found;
}

VerifyResult verify_witness(const Group& g, const Group& h,
                            const IsoclinismWitness& w) {
  auto fail = [](std::string d) { return VerifyResult{false, std::move(d)}; };
  // quotients must be G/Z(G) and H/Z(H)
  auto zg = center(g);
  auto zh = center(h);
  if (int(w.qg.projection.size()) != g.order() ||
      int(w.qh.projection.size()) != h.order())
    return fail("projection size mismatch");
  for (int x = 0; x < g.order(); ++x)
    if ((w.qg.projection[x] == Group::identity) != zg.contains(Elt(x)))
      return fail("qg kernel is not Z(G) at " + std::to_string(x));
  for (int x = 0; x < h.order(); ++x)
    if ((w.qh.projection[x] == Group::identity) != zh.contains(Elt(x)))
      return fail("qh kernel is not Z(H) at " + std::to_string(x));
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b)
      if (w.qg.projection[g.mul(Elt(a), Elt(b))] !=
          w.qg.quotient.mul(w.qg.projection[a], w.qg.projection[b]))
        return fail("qg projection not a homomorphism");
  for (int a = 0; a < h.order(); ++a)
    for (int b = 0; b < h.order(); ++b)
      if (w.qh.projection[h.mul(Elt(a), Elt(b))] !=
          w.qh.quotient.mul(w.qh.projection[a], w.qh.projection[b]))
        return fail("qh projection not a homomorphism");

  // phi: bijective homomorphism between the quotients
  Morphism phi{&w.qg.quotient, &w.qh.quotient, w.phi};
  if (int(w.phi.size()) != w.qg.quotient.order() || !phi.is_bijective())
    return fail("phi not bijective");
  if (!phi.is_homomorphism()) return fail("phi not a homomorphism");

  // psi: bijective homomorphism G' -> H'
  auto dg = derived_subgroup(g);
  auto dh = derived_subgroup(h);
  if (w.derived_g != dg.elements() || w.derived_h != dh.elements())
    return fail("stored derived subgroups mismatch");
  if (w.psi.size() != w.derived_g.size()) return fail("psi size mismatch");
  std::vector<int> psi_of(g.order(), -1);
  std::vector<char> hit(h.order(), 0);
  for (std::size_t i = 0; i < w.derived_g.size(); ++i) {
    Elt b = w.psi[i];
    if (!dh.contains(b)) return fail("psi image outside H'");
    if (hit[b]) return fail("psi not injective");
    hit[b] = 1;
    psi_of[w.derived_g[i]] = b;
  }
  for (auto a : w.derived_g)
    for (auto b : w.derived_g)
      if (psi_of[g.mul(a, b)] !=
          int(h.mul(Elt(psi_of[a]), Elt(psi_of[b]))))
        return fail("psi not a homomorphism at " + std::to_string(a) + "*" +
                    std::to_string(b));

  // compatibility, quantified over every representative pair on both sides
  for (int g1 = 0; g1 < g.order(); ++g1)
    for (int g2 = 0; g2 < g.order(); ++g2) {
      Elt q1 = w.qg.projection[g1], q2 = w.qg.projection[g2];
      Elt want = Elt(psi_of[g.commutator(Elt(g1), Elt(g2))]);
      Elt h1 = w.qh.coset_reps[w.phi[q1]];
      Elt h2 = w.qh.coset_reps[w.phi[q2]];
      // commutators are constant on central cosets, so checking the stored
      // representative shifted by every kernel element covers all h1, h2
      if (h.commutator(h1, h2) != want ||
          h.commutator(h.mul(h1, zh.elements().back()), h2) != want)
        return fail("compatibility fails at coset pair (" + std::to_string(q1) +
                    "," + std::to_string(q2) + ")");
    }
  return {};
}

std::string witness_to_json(const IsoclinismWitness& w) {
  nlohmann::json j;
  j["phi"] = w.phi;
  j["psi"] = w.psi;
  j["derived_g"] = w.derived_g;
  j["derived_h"] = w.derived_h;
  j["coset_reps_g"] = w.qg.coset_reps;
  j["coset_reps_h"] = w.qh.coset_reps;
  return j.dump(2);
}

}  // namespace cfact
