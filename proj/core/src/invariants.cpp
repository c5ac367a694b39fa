#include "cfact/invariants.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <unordered_map>

#include <nlohmann/json.hpp>

#include "cfact/structure.hpp"

namespace cfact {

Subgroup centralizer(const Group& g, Elt x) {
  if (int(x) >= g.order()) throw Error(Errc::IndexOutOfRange, std::to_string(x));
  Bitset b(g.order());
  for (int y = 0; y < g.order(); ++y)
    if (g.commutes(x, Elt(y))) b.set(y);
  return Subgroup(g, std::move(b));
}

Subgroup center(const Group& g) {
  Bitset b(g.order());
  for (int x = 0; x < g.order(); ++x) {
    bool c = true;
    for (int y = 0; y < g.order() && c; ++y)
      if (!g.commutes(Elt(x), Elt(y))) c = false;
    if (c) b.set(x);
  }
  return Subgroup(g, std::move(b));
}

Subgroup derived_subgroup(const Group& g) {
  Bitset seed(g.order());
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b) seed.set(g.commutator(Elt(a), Elt(b)));
  return Subgroup(g, closure_bits(g, std::move(seed)));
}

Subgroup center_of_centralizer(const Group& g, Elt x) {
  auto c = centralizer(g, x);
  auto es = c.elements();
  Bitset b(g.order());
  for (auto a : es) {
    bool central = true;
    for (auto y : es)
      if (!g.commutes(a, y)) {
        central = false;
        break;
      }
    if (central) b.set(a);
  }
  return Subgroup(g, std::move(b));
}

CentStructure cent_structure(const Group& g) {
  int n = g.order();
  std::unordered_map<Bitset, int, BitsetHash> index;
  std::vector<Bitset> bits;
  std::vector<int> raw_class(n);
  for (int x = 0; x < n; ++x) {
    Bitset b(n);
    for (int y = 0; y < n; ++y)
      if (g.commutes(Elt(x), Elt(y))) b.set(y);
    auto it = index.find(b);
    if (it == index.end()) {
      it = index.emplace(b, int(bits.size())).first;
      bits.push_back(std::move(b));
    }
    raw_class[x] = it->second;
  }
  // deterministic order: (order, smallest member)
  std::vector<int> perm(bits.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = int(i);
  std::sort(perm.begin(), perm.end(), [&](int a, int b) {
    if (bits[a].count() != bits[b].count()) return bits[a].count() < bits[b].count();
    return bits[a].to_vector() < bits[b].to_vector();
  });
  std::vector<int> rank(bits.size());
  for (std::size_t i = 0; i < perm.size(); ++i) rank[perm[i]] = int(i);

  CentStructure cs;
  cs.centralizers.reserve(bits.size());
  for (auto p : perm) cs.centralizers.emplace_back(g, bits[p]);
  cs.count = int(bits.size());
  cs.class_of.resize(n);
  for (int x = 0; x < n; ++x) cs.class_of[x] = rank[raw_class[x]];
  for (const auto& c : cs.centralizers)
    if (!c.is_abelian()) ++cs.nacent_count;
  return cs;
}

int cent_count(const Group& g) { return cent_structure(g).count; }

namespace {

// Tomita-style branch and bound with greedy coloring on the class graph.
struct CliqueSolver {
  const std::vector<std::vector<int>>& adj;  // adjacency lists, by node
  std::vector<std::vector<char>> am;
  int best = 0;

  explicit CliqueSolver(const std::vector<std::vector<int>>& a) : adj(a) {
    am.assign(adj.size(), std::vector<char>(adj.size(), 0));
    for (std::size_t i = 0; i < adj.size(); ++i)
      for (int j : adj[i]) am[i][j] = 1;
  }

  void expand(std::vector<int>& cand, int size) {
    if (cand.empty()) {
      best = std::max(best, size);
      return;
    }
    // greedy coloring bound: color classes in candidate order
    std::vector<int> color(cand.size());
    int ncolors = 0;
    for (std::size_t i = 0; i < cand.size(); ++i) {
      int c = 1;
      for (;; ++c) {
        bool ok = true;
        for (std::size_t j = 0; j < i && ok; ++j)
          if (color[j] == c && am[cand[i]][cand[j]]) ok = false;
        if (ok) break;
      }
      color[i] = c;
      ncolors = std::max(ncolors, c);
    }
    // the prune below needs candidates in ascending color order
    std::vector<int> order(cand.size());
    for (std::size_t i = 0; i < cand.size(); ++i) order[i] = int(i);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return color[a] < color[b]; });
    std::vector<int> cand2(cand.size()), color2(cand.size());
    for (std::size_t i = 0; i < cand.size(); ++i) {
      cand2[i] = cand[order[i]];
      color2[i] = color[order[i]];
    }
    cand.swap(cand2);
    color.swap(color2);
    for (int i = int(cand.size()) - 1; i >= 0; --i) {
      if (size + color[i] <= best) return;
      int v = cand[i];
      std::vector<int> next;
      for (int j = 0; j < i; ++j)
        if (am[v][cand[j]]) next.push_back(cand[j]);
      expand(next, size + 1);
    }
    best = std::max(best, size);
  }

  int solve() {
    std::vector<int> nodes(adj.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) nodes[i] = int(i);
    // deterministic: decreasing degree, then index
    std::stable_sort(nodes.begin(), nodes.end(), [&](int a, int b) {
      return adj[a].size() > adj[b].size();
    });
    expand(nodes, 0);
    return best;
  }
};

}  // namespace

NCGraph ncgraph(const Group& g) {
  NCGraph out;
  out.group_label = g.label();
  auto cs = cent_structure(g);
  auto z = center(g);
  // nodes: centralizer classes of non-central elements; the class index is
  // the position among proper centralizers in cs order
  std::vector<int> node_of_class(cs.count, -1);
  std::vector<Elt> rep;
  for (int x = 0; x < g.order(); ++x) {
    if (z.contains(Elt(x))) continue;
    int c = cs.class_of[x];
    if (node_of_class[c] < 0) {
      node_of_class[c] = int(rep.size());
      rep.push_back(Elt(x));
      out.class_size.push_back(0);
      out.centralizer_order.push_back(cs.centralizers[c].size());
    }
    ++out.class_size[node_of_class[c]];
  }
  out.node_count = int(rep.size());
  out.adj.assign(out.node_count, Bitset(std::max(out.node_count, 1)));
  std::vector<std::vector<int>> lists(out.node_count);
  for (int i = 0; i < out.node_count; ++i)
    for (int j = 0; j < out.node_count; ++j)
      if (i != j && !g.commutes(rep[i], rep[j])) {
        out.adj[i].set(j);
        lists[i].push_back(j);
      }
  if (out.node_count == 0) {
    out.omega = 1;  // abelian: a maximum "pairwise non-commuting" set is a singleton
  } else {
    CliqueSolver solver(lists);
    out.omega = solver.solve();
  }
  return out;
}

int omega(const Group& g) { return ncgraph(g).omega; }

PGroupClassification p_group_classification(const Group& g) {
  PGroupClassification out;
  int n = g.order(), p = 0;
  if (n == 1) return out;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      p = d;
      break;
    }
  if (p == 0) p = n;
  int m = n, e = 0;
  while (m % p == 0) {
    m /= p;
    ++e;
  }
  if (m != 1) return out;  // not a p-group
  auto z = center(g);
  auto der = derived_subgroup(g);
  auto cls = nilpotency_class(g);

  if (!g.is_abelian() && z.members() == der.members()) {
    // Frattini subgroup of a p-group: commutators and p-th powers
    Bitset seed = der.members();
    for (int x = 0; x < n; ++x) seed.set(g.power(Elt(x), p));
    Subgroup frat(g, closure_bits(g, std::move(seed)));
    bool quot_elem_ab = true;  // G/G' elementary abelian iff x^p in G' for all x
    for (int x = 0; x < n && quot_elem_ab; ++x)
      if (!der.contains(g.power(Elt(x), p))) quot_elem_ab = false;
    if (frat.members() == z.members() && z.is_elementary_abelian(p) && quot_elem_ab) {
      int rank = 0, zo = z.size();
      while (zo > 1) {
        zo /= p;
        ++rank;
      }
      out.rank = rank;
      if (rank == 1)
        out.cls = PGroupClass::Extraspecial;
      else if (long(z.size()) * z.size() == n / z.size())
        out.cls = PGroupClass::Ultraspecial;
      else
        out.cls = PGroupClass::Special;
      return out;
    }
  }
  if (e > 3 && cls && *cls == e - 1) {
    out.cls = PGroupClass::MaximalClass;
    return out;
  }
  return out;
}

std::string p_group_class_name(const PGroupClassification& c) {
  switch (c.cls) {
    case PGroupClass::None: return "none";
    case PGroupClass::Special: return "special(rank " + std::to_string(c.rank) + ")";
    case PGroupClass::Extraspecial: return "extraspecial";
    case PGroupClass::Ultraspecial: return "ultraspecial";
    case PGroupClass::MaximalClass: return "maximal_class";
  }
  return "none";
}

bool InvariantProfile::has_conjugate_type(int m) const {
  for (auto [size, mult] : conjugate_type)
    if (size != 1 && size != m) return false;
  return true;
}

InvariantProfile profile(const Group& g) {
  InvariantProfile p;
  p.order = g.order();
  auto z = center(g);
  auto der = derived_subgroup(g);
  p.z_order = z.size();
  p.derived_order = der.size();
  Bitset meet = z.members();
  meet &= der.members();
  p.derived_meet_center_order = meet.count();
  auto cs = cent_structure(g);
  p.cent_count = cs.count;
  p.nacent_count = cs.nacent_count;
  p.omega = omega(g);
  p.is_perfect = der.size() == g.order();
  p.derived_length = derived_length(g);
  p.nilpotency_class = nilpotency_class(g);

  p.is_CA = true;
  p.is_F = true;
  for (const auto& c : cs.centralizers) {
    if (c.size() == g.order()) continue;  // centralizer of a central element
    if (!c.is_abelian()) p.is_CA = false;
  }
  for (const auto& a : cs.centralizers)
    for (const auto& b : cs.centralizers) {
      if (a.size() >= b.size() || b.size() == g.order()) continue;
      if (a.members().is_subset_of(b.members())) p.is_F = false;
    }

  p.is_Z_group = true;
  int n = g.order();
  for (int q = 2; q <= n; ++q) {
    if (n % q != 0) continue;
    bool prime = true;
    for (int d = 2; d * d <= q; ++d)
      if (q % d == 0) prime = false;
    if (!prime) continue;
    if (!sylow(g, q).is_cyclic()) {
      p.is_Z_group = false;
      break;
    }
  }

  std::map<int, int> ct;
  for (const auto& cls : conjugacy_classes(g)) ++ct[int(cls.size())];
  p.conjugate_type.assign(ct.begin(), ct.end());

  p.p_group_class = p_group_classification(g);

  auto q = quotient(g, z);
  p.quotient_cent_count = cent_count(q.quotient);
  p.is_primitive_Cn = p.quotient_cent_count == p.cent_count;
  return p;
}

std::string export_ncgraph(const Group& g, GraphFormat format) {
  NCGraph nc = ncgraph(g);
  if (format == GraphFormat::Dot) {
    std::ostringstream out;
    out << "graph noncommuting {\n";
    out << "  label=\"" << nc.group_label << " (omega=" << nc.omega << ")\";\n";
    for (int i = 0; i < nc.node_count; ++i)
      out << "  n" << i << " [label=\"|C|=" << nc.centralizer_order[i]
          << " size=" << nc.class_size[i] << "\"];\n";
    for (int i = 0; i < nc.node_count; ++i)
      for (int j = i + 1; j < nc.node_count; ++j)
        if (nc.adj[i].test(j)) out << "  n" << i << " -- n" << j << ";\n";
    out << "}\n";
    return out.str();
  }
  nlohmann::json j;
  j["group"] = nc.group_label;
  j["omega"] = nc.omega;
  j["nodes"] = nlohmann::json::array();
  for (int i = 0; i < nc.node_count; ++i)
    j["nodes"].push_back({{"id", i},
                          {"class_size", nc.class_size[i]},
                          {"centralizer_order", nc.centralizer_order[i]}});
  j["edges"] = nlohmann::json::array();
  for (int i = 0; i < nc.node_count; ++i)
    for (int k = i + 1; k < nc.node_count; ++k)
      if (nc.adj[i].test(k)) j["edges"].push_back({i, k});
  return j.dump(2);
}

std::string export_ncgraph(const Group& g, const std::string& format) {
  if (format == "dot") return export_ncgraph(g, GraphFormat::Dot);
  if (format == "json") return export_ncgraph(g, GraphFormat::Json);
  throw Error(Errc::UnknownFormat, format);
}

}  // namespace cfact
