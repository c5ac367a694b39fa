#include "cfact/builders.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "cfact/caps.hpp"

namespace cfact {

namespace {

// Generic closure of generators under an associative product. Elements are
// ordered identity first, then in BFS discovery order. Returns the flat
// multiplication table.
template <class T, class MulFn>
Group closure_group(std::vector<T> gens, T id, MulFn mulfn, std::string label) {
  std::vector<T> elems{id};
  std::map<T, int> index{{id, 0}};
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const auto& g : gens) {
      T p = mulfn(elems[i], g);
      if (index.emplace(p, int(elems.size())).second) {
        elems.push_back(p);
        if (int(elems.size()) > caps().closure)
          throw Error(Errc::ClosureExceedsCap,
                      "closure exceeds " + std::to_string(caps().closure));
      }
    }
  }
  int n = int(elems.size());
  std::vector<Elt> flat(std::size_t(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      flat[std::size_t(i) * n + j] = Elt(index.at(mulfn(elems[i], elems[j])));
  return Group::from_table_structural(std::move(flat), n, std::move(label));
}

}  // namespace

Group from_permutations(const std::vector<Perm>& generators, std::string label) {
  if (generators.empty())
    return cyclic_group(1, std::move(label));
  std::size_t d = generators.front().size();
  for (const auto& p : generators) {
    if (p.size() != d)
      throw Error(Errc::NotAPermutation, "mixed degrees");
    std::vector<char> hit(d, 0);
    for (int v : p) {
      if (v < 0 || std::size_t(v) >= d || hit[v])
        throw Error(Errc::NotAPermutation, "bad image " + std::to_string(v));
      hit[v] = 1;
    }
  }
  Perm id(d);
  std::iota(id.begin(), id.end(), 0);
  auto compose = [](const Perm& a, const Perm& b) {
    Perm out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = b[a[i]];
    return out;
  };
  return closure_group(generators, id, compose, std::move(label));
}

Group from_matrices(const std::vector<Mat2>& generators, int modulus,
                    std::string label) {
  int q = modulus;
  auto norm = [q](int v) { return ((v % q) + q) % q; };
  std::vector<Mat2> gens;
  for (auto m : generators) {
    for (auto& v : m) v = norm(v);
    int det = norm(m[0] * m[3] - m[1] * m[2]);
    if (std::gcd(det, q) != 1)
      throw Error(Errc::SingularGenerator,
                  "determinant " + std::to_string(det) + " mod " + std::to_string(q));
    gens.push_back(m);
  }
  Mat2 id{1, 0, 0, 1};
  auto mulm = [q](const Mat2& a, const Mat2& b) {
    return Mat2{(a[0] * b[0] + a[1] * b[2]) % q, (a[0] * b[1] + a[1] * b[3]) % q,
                (a[2] * b[0] + a[3] * b[2]) % q, (a[2] * b[1] + a[3] * b[3]) % q};
  };
  return closure_group(gens, id, mulm, std::move(label));
}

Group from_cocycle(int p, int dimV, int dimW,
                   const std::vector<std::vector<std::vector<int>>>& f,
                   std::string label) {
  if (p < 2) throw Error(Errc::NotPrime, std::to_string(p));
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) throw Error(Errc::NotPrime, std::to_string(p));
  int k = dimV, m = dimW;
  if (int(f.size()) != k) throw Error(Errc::DimensionMismatch, "f rows");
  for (const auto& row : f) {
    if (int(row.size()) != k) throw Error(Errc::DimensionMismatch, "f columns");
    for (const auto& v : row)
      if (int(v.size()) != m) throw Error(Errc::DimensionMismatch, "f values");
  }
  long order = 1;
  for (int i = 0; i < k + m; ++i) {
    order *= p;
    if (order > caps().closure)
      throw Error(Errc::ClosureExceedsCap, "p^(k+m) exceeds closure cap");
  }
  int n = int(order);
  long vcount = 1;
  for (int i = 0; i < k; ++i) vcount *= p;
  // element index = x (mixed radix over k digits) + p^k * u (over m digits)
  auto digits = [p](long idx, int len, std::vector<int>& out) {
    out.resize(len);
    for (int i = 0; i < len; ++i) {
      out[i] = int(idx % p);
      idx /= p;
    }
  };
  std::vector<Elt> flat(std::size_t(n) * n);
  std::vector<int> x, y, u, v;
  for (int a = 0; a < n; ++a) {
    digits(a % vcount, k, x);
    digits(a / vcount, m, u);
    for (int b = 0; b < n; ++b) {
      digits(b % vcount, k, y);
      digits(b / vcount, m, v);
      long xi = 0, ui = 0, scale = 1;
      for (int i = 0; i < k; ++i) {
        xi += ((x[i] + y[i]) % p) * scale;
        scale *= p;
      }
      scale = 1;
      for (int t = 0; t < m; ++t) {
        int w = (u[t] + v[t]) % p;
        for (int i = 0; i < k; ++i)
          for (int j = 0; j < k; ++j)
            w = (w + x[i] * y[j] % p * f[i][j][t]) % p;
        ui += w * scale;
        scale *= p;
      }
      flat[std::size_t(a) * n + b] = Elt(xi + vcount * ui);
    }
  }
  return Group::from_table_structural(std::move(flat), n, std::move(label));
}

Group semidirect_cyclic(int q, int d, int k, std::string label) {
  if (q <= 0 || d <= 0) throw Error(Errc::InvalidAction, "nonpositive order");
  k = ((k % q) + q) % q;
  if (q == 1) k = 0;
  if (q > 1) {
    if (std::gcd(k, q) != 1)
      throw Error(Errc::InvalidAction, "gcd(k, q) != 1");
    long kp = 1;
    for (int i = 0; i < d; ++i) kp = kp * k % q;
    if (kp != 1)
      throw Error(Errc::InvalidAction, "k^d != 1 (mod q)");
  }
  long order = long(q) * d;
  if (order > caps().closure)
    throw Error(Errc::ClosureExceedsCap, "q*d exceeds closure cap");
  int n = int(order);
  // powers of k mod q
  std::vector<long> kpow(d, 1);
  for (int i = 1; i < d; ++i) kpow[i] = kpow[i - 1] * k % std::max(q, 1);
  // element index = a*d + b for (a mod q, b mod d); identity (0,0) -> 0
  std::vector<Elt> flat(std::size_t(n) * n);
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < d; ++b)
      for (int a2 = 0; a2 < q; ++a2)
        for (int b2 = 0; b2 < d; ++b2) {
          int ra = int((a + kpow[b] * a2) % q);
          int rb = (b + b2) % d;
          flat[std::size_t(a * d + b) * n + (a2 * d + b2)] = Elt(ra * d + rb);
        }
  if (label.empty())
    label = "C" + std::to_string(q) + ":C" + std::to_string(d) + "(k=" + std::to_string(k) + ")";
  return Group::from_table_structural(std::move(flat), n, std::move(label));
}

Group direct_product(const Group& g, const Group& h, std::string label) {
  long order = long(g.order()) * h.order();
  if (order > caps().closure)
    throw Error(Errc::ProductExceedsCap, "product exceeds closure cap");
  int n = int(order), m = h.order();
  std::vector<Elt> flat(std::size_t(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      Elt ga = Elt(a / m), ha = Elt(a % m), gb = Elt(b / m), hb = Elt(b % m);
      flat[std::size_t(a) * n + b] = Elt(int(g.mul(ga, gb)) * m + h.mul(ha, hb));
    }
  if (label.empty()) label = g.label() + " x " + h.label();
  return Group::from_table_structural(std::move(flat), n, std::move(label));
}

Group cyclic_group(int n, std::string label) {
  if (n <= 0) throw Error(Errc::IndexOutOfRange, "order must be positive");
  std::vector<Elt> flat(std::size_t(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) flat[std::size_t(a) * n + b] = Elt((a + b) % n);
  if (label.empty()) label = "C" + std::to_string(n);
  return Group::from_table_structural(std::move(flat), n, std::move(label));
}

}  // namespace cfact
