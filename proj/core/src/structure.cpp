#include "cfact/structure.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>
#include <unordered_set>

#include "cfact/caps.hpp"
#include "cfact/invariants.hpp"

namespace cfact {

Subgroup trivial_subgroup(const Group& g) {
  Bitset b(g.order());
  b.set(Group::identity);
  return Subgroup(g, std::move(b));
}

Subgroup whole_subgroup(const Group& g) { return Subgroup(g, g.full_bitset()); }

Bitset closure_bits(const Group& g, Bitset seed) {
  seed.set(Group::identity);
  std::vector<Elt> elems;
  for (int i = 0; i < g.order(); ++i)
    if (seed.test(i)) elems.push_back(Elt(i));
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = 0; j < elems.size(); ++j) {
      Elt p = g.mul(elems[i], elems[j]);
      if (!seed.test(p)) {
        seed.set(p);
        elems.push_back(p);
      }
    }
  return seed;
}

Subgroup generated_subgroup(const Group& g, const std::vector<Elt>& seed) {
  Bitset b(g.order());
  for (auto e : seed) {
    if (int(e) >= g.order())
      throw Error(Errc::IndexOutOfRange, std::to_string(e));
    b.set(e);
  }
  return Subgroup(g, closure_bits(g, std::move(b)));
}

std::vector<std::vector<Elt>> conjugacy_classes(const Group& g) {
  std::vector<std::vector<Elt>> classes;
  std::vector<char> seen(g.order(), 0);
  for (int x = 0; x < g.order(); ++x) {
    if (seen[x]) continue;
    std::vector<Elt> cls;
    Bitset in(g.order());
    for (int c = 0; c < g.order(); ++c) {
      Elt y = g.conj(Elt(x), Elt(c));
      if (!in.test(y)) {
        in.set(y);
        cls.push_back(y);
        seen[y] = 1;
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

QuotientResult quotient(const Group& g, const Subgroup& n) {
  if (!n.is_normal())
    throw Error(Errc::NotNormal, "subgroup of order " + std::to_string(n.size()));
  int ord = g.order();
  std::vector<int> coset_id(ord, -1);
  std::vector<Elt> reps;
  auto nelems = n.elements();
  for (int x = 0; x < ord; ++x) {
    if (coset_id[x] >= 0) continue;
    int id = int(reps.size());
    reps.push_back(Elt(x));  // ascending scan: rep is the coset minimum
    for (auto e : nelems) coset_id[g.mul(Elt(x), e)] = id;
  }
  int m = int(reps.size());
  std::vector<Elt> flat(std::size_t(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      flat[std::size_t(i) * m + j] = Elt(coset_id[g.mul(reps[i], reps[j])]);
  Group q = Group::from_table_structural(std::move(flat), m,
                                         g.label() + "/N" + std::to_string(n.size()));
  QuotientResult res;
  res.quotient = std::move(q);
  res.projection.assign(ord, 0);
  for (int x = 0; x < ord; ++x) res.projection[x] = Elt(coset_id[x]);
  res.coset_reps = std::move(reps);
  // kernel of the projection must be exactly N
  for (int x = 0; x < ord; ++x)
    if ((res.projection[x] == Group::identity) != n.contains(Elt(x)))
      throw Error(Errc::ValidationFailed, "projection kernel mismatch");
  return res;
}

namespace {

struct Fingerprint {
  int ord, class_size, cent_order;
  bool central, in_derived;
  auto tie() const { return std::tie(ord, class_size, cent_order, central, in_derived); }
  bool operator<(const Fingerprint& o) const { return tie() < o.tie(); }
  bool operator==(const Fingerprint& o) const { return tie() == o.tie(); }
};

std::vector<Fingerprint> fingerprints(const Group& g) {
  std::vector<Fingerprint> fp(g.order());
  auto classes = conjugacy_classes(g);
  auto z = center(g);
  auto der = derived_subgroup(g);
  for (const auto& cls : classes)
    for (auto e : cls) fp[e].class_size = int(cls.size());
  for (int x = 0; x < g.order(); ++x) {
    fp[x].ord = g.element_order(Elt(x));
    int c = 0;
    for (int y = 0; y < g.order(); ++y)
      if (g.commutes(Elt(x), Elt(y))) ++c;
    fp[x].cent_order = c;
    fp[x].central = z.contains(Elt(x));
    fp[x].in_derived = der.contains(Elt(x));
  }
  return fp;
}

struct IsoSearch {
  const Group& g;
  const Group& h;
  std::vector<Fingerprint> fg, fh;
  std::vector<Elt> gens;                 // irredundant generating sequence of g
  const std::function<bool(const Morphism&)>& fn;
  bool stopped = false;

  IsoSearch(const Group& g_, const Group& h_,
            const std::function<bool(const Morphism&)>& fn_)
      : g(g_), h(h_), fn(fn_) {}

  bool prefilter() {
    if (g.order() != h.order()) return false;
    fg = fingerprints(g);
    fh = fingerprints(h);
    auto sg = fg, sh = fh;
    std::sort(sg.begin(), sg.end());
    std::sort(sh.begin(), sh.end());
    return sg == sh;
  }

  void pick_generators() {
    std::vector<Elt> order_sorted(g.order());
    for (int i = 0; i < g.order(); ++i) order_sorted[i] = Elt(i);
    std::stable_sort(order_sorted.begin(), order_sorted.end(),
                     [&](Elt a, Elt b) { return g.element_order(a) > g.element_order(b); });
    Bitset gen(g.order());
    gen.set(Group::identity);
    for (auto x : order_sorted) {
      if (gen.test(x)) continue;
      gens.push_back(x);
      Bitset seed = gen;
      seed.set(x);
      gen = closure_bits(g, std::move(seed));
    }
  }

  // img maps a subgroup of g into h; dom lists its elements. Extends by
  // multiplicative closure; false on any conflict or injectivity failure.
  bool extend(std::vector<int>& img, std::vector<char>& used, std::vector<Elt>& dom) {
    bool grew = true;
    while (grew) {
      grew = false;
      for (std::size_t i = 0; i < dom.size(); ++i)
        for (std::size_t j = 0; j < dom.size(); ++j) {
          Elt p = g.mul(dom[i], dom[j]);
          Elt q = h.mul(Elt(img[dom[i]]), Elt(img[dom[j]]));
          if (img[p] < 0) {
            if (used[q]) return false;
            img[p] = q;
            used[q] = 1;
            dom.push_back(p);
            grew = true;
          } else if (img[p] != int(q)) {
            return false;
          }
        }
    }
    return true;
  }

  void search(std::size_t k, const std::vector<int>& img,
              const std::vector<char>& used, const std::vector<Elt>& dom) {
    if (stopped) return;
    if (k == gens.size()) {
      // gens generate g, so dom == g and the map is a bijective homomorphism
      Morphism m{&g, &h, {}};
      m.map.resize(g.order());
      for (int i = 0; i < g.order(); ++i) m.map[i] = Elt(img[i]);
      if (!fn(m)) stopped = true;
      return;
    }
    Elt gk = gens[k];
    for (int cand = 0; cand < h.order(); ++cand) {
      if (used[cand] || !(fh[cand] == fg[gk])) continue;
      auto img2 = img;
      auto used2 = used;
      auto dom2 = dom;
      img2[gk] = cand;
      used2[cand] = 1;
      dom2.push_back(gk);
      if (extend(img2, used2, dom2)) search(k + 1, img2, used2, dom2);
      if (stopped) return;
    }
  }

  void run() {
    if (!prefilter()) return;
    pick_generators();
    std::vector<int> img(g.order(), -1);
    std::vector<char> used(h.order(), 0);
    img[Group::identity] = Group::identity;
    used[Group::identity] = 1;
    std::vector<Elt> dom{Group::identity};
    search(0, img, used, dom);
  }
};

}  // namespace

void for_each_isomorphism(const Group& g, const Group& h,
                          const std::function<bool(const Morphism&)>& fn) {
  IsoSearch s(g, h, fn);
  s.run();
}

std::optional<Morphism> isomorphic(const Group& g, const Group& h) {
  std::optional<Morphism> out;
  for_each_isomorphism(g, h, [&](const Morphism& m) {
    out = m;
    return false;  // stop at the first
  });
  return out;
}

namespace {

// Deduplicated join-closure of a set of subgroups (as bitsets).
std::vector<Bitset> join_closure(const Group& g, std::vector<Bitset> base) {
  std::unordered_set<Bitset, BitsetHash> seen(base.begin(), base.end());
  std::vector<Bitset> all(seen.begin(), seen.end());
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      if (all[j].is_subset_of(all[i]) || all[i].is_subset_of(all[j])) continue;
      Bitset u = all[i];
      u |= all[j];
      Bitset joined = closure_bits(g, std::move(u));
      if (seen.insert(joined).second) all.push_back(std::move(joined));
    }
  return all;
}

}  // namespace

std::vector<Subgroup> all_normal_subgroups(const Group& g) {
  if (g.order() > caps().normal_enum)
    throw Error(Errc::OrderExceedsCap, "order " + std::to_string(g.order()) +
                                           " > " + std::to_string(caps().normal_enum));
  std::vector<Bitset> base;
  for (const auto& cls : conjugacy_classes(g)) {
    Bitset seed(g.order());
    for (auto e : cls) seed.set(e);
    base.push_back(closure_bits(g, std::move(seed)));  // normal closure of the class
  }
  Bitset triv(g.order());
  triv.set(Group::identity);
  base.push_back(std::move(triv));
  auto bits = join_closure(g, std::move(base));
  std::sort(bits.begin(), bits.end(), [](const Bitset& a, const Bitset& b) {
    if (a.count() != b.count()) return a.count() < b.count();
    return a.to_vector() < b.to_vector();
  });
  std::vector<Subgroup> out;
  out.reserve(bits.size());
  for (auto& b : bits) out.emplace_back(g, std::move(b));
  return out;
}

std::vector<Subgroup> all_subgroups(const Group& g) {
  if (g.order() > caps().subgroup_enum)
    throw Error(Errc::OrderExceedsCap, "order " + std::to_string(g.order()) +
                                           " > " + std::to_string(caps().subgroup_enum));
  std::vector<Bitset> base;
  for (int x = 0; x < g.order(); ++x) {
    Bitset seed(g.order());
    seed.set(x);
    base.push_back(closure_bits(g, std::move(seed)));
  }
  auto bits = join_closure(g, std::move(base));
  std::sort(bits.begin(), bits.end(), [](const Bitset& a, const Bitset& b) {
    if (a.count() != b.count()) return a.count() < b.count();
    return a.to_vector() < b.to_vector();
  });
  std::vector<Subgroup> out;
  out.reserve(bits.size());
  for (auto& b : bits) out.emplace_back(g, std::move(b));
  return out;
}

namespace {

Bitset commutator_bits(const Group& g, const Bitset& a, const Bitset& b) {
  Bitset seed(g.order());
  for (int x = 0; x < g.order(); ++x) {
    if (!a.test(x)) continue;
    for (int y = 0; y < g.order(); ++y)
      if (b.test(y)) seed.set(g.commutator(Elt(x), Elt(y)));
  }
  return closure_bits(g, std::move(seed));
}

}  // namespace

std::vector<Subgroup> series(const Group& g, SeriesKind kind) {
  std::vector<Subgroup> out;
  Bitset full = g.full_bitset();
  switch (kind) {
    case SeriesKind::Derived: {
      Bitset cur = full;
      out.emplace_back(g, cur);
      for (;;) {
        Bitset next = commutator_bits(g, cur, cur);
        if (next == cur) break;
        out.emplace_back(g, next);
        cur = std::move(next);
      }
      break;
    }
    case SeriesKind::LowerCentral: {
      Bitset cur = full;
      out.emplace_back(g, cur);
      for (;;) {
        Bitset next = commutator_bits(g, full, cur);
        if (next == cur) break;
        out.emplace_back(g, next);
        cur = std::move(next);
      }
      break;
    }
    case SeriesKind::UpperCentral: {
      Bitset cur(g.order());
      cur.set(Group::identity);
      out.emplace_back(g, cur);
      for (;;) {
        Bitset next(g.order());
        for (int x = 0; x < g.order(); ++x) {
          bool ok = true;
          for (int y = 0; y < g.order() && ok; ++y)
            if (!cur.test(g.commutator(Elt(x), Elt(y)))) ok = false;
          if (ok) next.set(x);
        }
        if (next == cur) break;
        out.emplace_back(g, next);
        cur = std::move(next);
      }
      break;
    }
  }
  return out;
}

int derived_length(const Group& g) {
  auto s = series(g, SeriesKind::Derived);
  if (s.back().size() != 1) return -1;  // not solvable
  return int(s.size()) - 1;
}

std::optional<int> nilpotency_class(const Group& g) {
  auto s = series(g, SeriesKind::LowerCentral);
  if (s.back().size() != 1) return std::nullopt;
  return int(s.size()) - 1;
}

Subgroup normalizer(const Group& g, const Subgroup& s) {
  Bitset b(g.order());
  auto es = s.elements();
  for (int x = 0; x < g.order(); ++x) {
    bool ok = true;
    for (auto e : es)
      if (!s.contains(g.conj(e, Elt(x)))) {
        ok = false;
        break;
      }
    if (ok) b.set(x);
  }
  return Subgroup(g, std::move(b));
}

Subgroup sylow(const Group& g, int p) {
  int n = g.order();
  if (p < 2 || n % p != 0)
    throw Error(Errc::PrimeDoesNotDivideOrder,
                std::to_string(p) + " does not divide " + std::to_string(n));
  int ppart = 1;
  while (n % p == 0) {
    ppart *= p;
    n /= p;
  }
  // start from a cyclic p-subgroup (Cauchy via a power of any element of
  // order divisible by p)
  Subgroup cur = trivial_subgroup(g);
  for (int x = 1; x < g.order(); ++x) {
    int o = g.element_order(Elt(x));
    if (o % p == 0) {
      cur = generated_subgroup(g, {g.power(Elt(x), o / p)});
      break;
    }
  }
  while (cur.size() < ppart) {
    Subgroup nrm = normalizer(g, cur);
    bool grew = false;
    for (auto x : nrm.elements()) {
      if (cur.contains(x)) continue;
      // order of xP in N(P)/P: find the smallest k with x^k in P
      int k = 1;
      Elt y = x;
      while (!cur.contains(y)) {
        y = g.mul(y, x);
        ++k;
      }
      if (k % p != 0) continue;
      Elt lift = g.power(x, k / p);  // image has order p in the quotient
      auto seed = cur.elements();
      seed.push_back(lift);
      Subgroup ext = generated_subgroup(g, seed);
      if (ext.size() > cur.size() && ppart % ext.size() == 0) {
        cur = std::move(ext);
        grew = true;
        break;
      }
    }
    if (!grew)
      throw Error(Errc::ValidationFailed, "sylow extension stalled");  // cannot happen
  }
  return cur;
}

}  // namespace cfact
