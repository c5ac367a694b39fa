#include "cfact/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <numeric>
#include <queue>
#include <sstream>

#include "cfact/builders.hpp"
#include "cfact/structure.hpp"

namespace cfact {

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

using F = std::vector<std::vector<std::vector<int>>>;

F zero_f(int k, int m) {
  return F(k, std::vector<std::vector<int>>(k, std::vector<int>(m, 0)));
}

Group build_q8() {
  // elements: 1, -1, i, -i, j, -j, k, -k
  const std::vector<std::vector<int>> table = {
      {0, 1, 2, 3, 4, 5, 6, 7},
      {1, 0, 3, 2, 5, 4, 7, 6},
      {2, 3, 1, 0, 6, 7, 5, 4},
      {3, 2, 0, 1, 7, 6, 4, 5},
      {4, 5, 7, 6, 1, 0, 2, 3},
      {5, 4, 6, 7, 0, 1, 3, 2},
      {6, 7, 4, 5, 3, 2, 1, 0},
      {7, 6, 5, 4, 2, 3, 0, 1},
  };
  Group g = Group::from_cayley_table(table, "Q8");
  g.set_element_names({"1", "-1", "i", "-i", "j", "-j", "k", "-k"});
  return g;
}

Group build_symmetric(int n, std::string label) {
  if (n <= 1) return cyclic_group(1, std::move(label));
  if (n == 2) return cyclic_group(2, std::move(label));
  Perm t(n), c(n);
  std::iota(t.begin(), t.end(), 0);
  std::swap(t[0], t[1]);
  for (int i = 0; i < n; ++i) c[i] = (i + 1) % n;
  return from_permutations({t, c}, std::move(label));
}

Group build_alternating(int n, std::string label) {
  if (n <= 2) return cyclic_group(1, std::move(label));
  Perm three(n);
  std::iota(three.begin(), three.end(), 0);
  three[0] = 1;
  three[1] = 2;
  three[2] = 0;
  if (n == 3) return from_permutations({three}, std::move(label));
  Perm c(n);
  std::iota(c.begin(), c.end(), 0);
  if (n % 2 == 1) {
    for (int i = 0; i < n; ++i) c[i] = (i + 1) % n;
  } else {
    for (int i = 1; i < n; ++i) c[i] = i % (n - 1) + 1;
  }
  return from_permutations({three, c}, std::move(label));
}

Group build_dihedral(int order, std::string label) {
  if (order % 2 != 0 || order <= 0)
    throw Error(Errc::ParseError, "dihedral order must be even");
  int n = order / 2;
  if (n < 3) return semidirect_cyclic(n, 2, n - 1, std::move(label));
  Perm rot(n), ref(n);
  for (int i = 0; i < n; ++i) {
    rot[i] = (i + 1) % n;
    ref[i] = (n - i) % n;
  }
  Group g = from_permutations({rot, ref}, label);
  g.set_label(std::move(label));
  return g;
}

Group build_sl2(int q, std::string label) {
  if (!is_prime(q)) throw Error(Errc::NotPrime, "SL(2,q) needs prime q");
  return from_matrices({{1, 1, 0, 1}, {1, 0, 1, 1}}, q, std::move(label));
}

int primitive_root(int q) {
  for (int g = 2; g < q; ++g) {
    int x = g % q, ord = 1;
    while (x != 1) {
      x = x * g % q;
      ++ord;
    }
    if (ord == q - 1) return g;
  }
  return 1;
}

Group build_gl2(int q, std::string label) {
  if (!is_prime(q)) throw Error(Errc::NotPrime, "GL(2,q) needs prime q");
  int g = primitive_root(q);
  return from_matrices({{1, 1, 0, 1}, {1, 0, 1, 1}, {g, 0, 0, 1}}, q,
                       std::move(label));
}

Group build_frobenius(int q, int d, std::string label) {
  if (!is_prime(q)) throw Error(Errc::NotPrime, "Frob(q,d) needs prime q");
  if (d <= 1 || (q - 1) % d != 0)
    throw Error(Errc::InvalidAction, "d must divide q-1");
  for (int k = 2; k < q; ++k) {
    int x = k, ord = 1;
    while (x != 1) {
      x = x * k % q;
      ++ord;
    }
    if (ord == d) return semidirect_cyclic(q, d, k, std::move(label));
  }
  throw Error(Errc::InvalidAction, "no action of order d");
}

Group build_wreath(int p, std::string label) {
  // C_p wr C_p on p^2 points: a coordinate cycle on block 0 and the block
  // shift; order p^(p+1)
  if (!is_prime(p)) throw Error(Errc::NotPrime, "Wr(p)");
  int d = p * p;
  Perm cyc(d), shift(d);
  std::iota(cyc.begin(), cyc.end(), 0);
  for (int i = 0; i < p; ++i) cyc[i] = (i + 1) % p;
  for (int i = 0; i < d; ++i) shift[i] = (i + p) % d;
  return from_permutations({cyc, shift}, std::move(label));
}

}  // namespace

Group build_heisenberg(int p) {
  F f = zero_f(2, 1);
  f[0][1][0] = 1;
  return from_cocycle(p, 2, 1, f, "Heis(" + std::to_string(p) + ")");
}

Group build_g1_impl(int p) {
  // f(e_i, e_j) = e_{ij} for i < j
  F f = zero_f(3, 3);
  f[0][1][0] = 1;
  f[0][2][1] = 1;
  f[1][2][2] = 1;
  return from_cocycle(p, 3, 3, f, "G1(" + std::to_string(p) + ")");
}

Group build_G1(int p) { return build_g1_impl(p); }

Group build_special32() {
  F f = zero_f(3, 2);
  f[0][1] = {1, 0};
  f[0][2] = {0, 1};
  f[1][2] = {0, 1};
  return from_cocycle(2, 3, 2, f, "Special32");
}

Group build_ultra64() {
  // Heisenberg over F4 flattened to F2^4 x F2^2: f((x,y),(x',y')) = x * y'
  // with F4 = F2[w]/(w^2+w+1); basis e0,e1 = bits of x, e2,e3 = bits of y
  auto f4mul = [](int a0, int a1, int b0, int b1) {
    return std::pair<int, int>{(a0 * b0 + a1 * b1) % 2,
                               (a0 * b1 + a1 * b0 + a1 * b1) % 2};
  };
  F f = zero_f(4, 2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      auto [c0, c1] = f4mul(i == 0, i == 1, j == 0, j == 1);
      f[i][2 + j] = {c0, c1};
    }
  return from_cocycle(2, 4, 2, f, "Ultra64");
}

Group build_es32() {
  // standard symplectic form on F2^4
  F f = zero_f(4, 1);
  f[0][1][0] = 1;
  f[2][3][0] = 1;
  return from_cocycle(2, 4, 1, f, "ES32");
}

Group build_maxclass81() {
  Group g = build_wreath(3, "MaxClass81");
  if (g.order() != 81) throw Error(Errc::ValidationFailed, "MaxClass81 order");
  return g;
}

Group build_G2(int p) {
  if (!is_prime(p) || p < 5)
    throw Error(Errc::ValidationFailed,
                "G2 requires a prime p >= 5: at p = 3 the exponent-3 relations "
                "collapse the presentation below order p^5");
  // normal form a1^x1 a2^x2 b^y c1^z1 c2^z2, index mixed-radix base p
  long n = 1;
  for (int i = 0; i < 5; ++i) n *= p;
  auto pack = [p](int x1, int x2, int y, int z1, int z2) {
    return ((((long(z2) * p + z1) * p + y) * p + x2) * p + x1);
  };
  auto md = [p](long i, int d) {
    for (int t = 0; t < d; ++t) i /= p;
    return int(i % p);
  };
  // left multiplication by a1 and a2 on normal forms, from the collection
  // rules a2 a1 = a1 a2 b^-1, b a1 = a1 b c1^-1, b a2 = a2 b c2^-1
  std::vector<Elt> La1(n), La2(n);
  for (long i = 0; i < n; ++i) {
    int x1 = md(i, 0), x2 = md(i, 1), y = md(i, 2), z1 = md(i, 3), z2 = md(i, 4);
    La1[i] = Elt(pack((x1 + 1) % p, x2, y, z1, z2));
    int tri = x1 * (x1 - 1) / 2 % p;
    La2[i] = Elt(pack(x1, (x2 + 1) % p, ((y - x1) % p + p) % p,
                      (z1 + tri) % p, (z2 + x1 * x2) % p));
  }
  // permutation closure of the two maps; each element is identified by its
  // image of the identity form, so the perms are exactly the table rows
  std::vector<std::vector<Elt>> perm(n);
  std::vector<char> seen(n, 0);
  std::vector<Elt> id(n);
  std::iota(id.begin(), id.end(), Elt(0));
  perm[0] = id;
  seen[0] = 1;
  std::queue<long> work;
  work.push(0);
  long found = 1;
  while (!work.empty()) {
    long g = work.front();
    work.pop();
    for (const auto* gen : {&La1, &La2}) {
      Elt ga = perm[g][(*gen)[0]];  // g * a, since L_a(e) = a
      if (seen[ga]) continue;
      // L_{g a}(x) = g * (a * x)
      std::vector<Elt> comp(n);
      for (long x = 0; x < n; ++x) comp[x] = perm[g][(*gen)[x]];
      if (comp[0] != ga)
        throw Error(Errc::ValidationFailed, "G2 closure inconsistent");
      perm[ga] = std::move(comp);
      seen[ga] = 1;
      ++found;
      work.push(ga);
    }
  }
  if (found != n)
    throw Error(Errc::ValidationFailed,
                "G2 closure has " + std::to_string(found) + " elements, want p^5");
  std::vector<Elt> flat(std::size_t(n) * n);
  for (long i = 0; i < n; ++i)
    std::copy(perm[i].begin(), perm[i].end(), flat.begin() + i * n);
  Group g = Group::from_table_structural(std::move(flat), int(n),
                                         "G2(" + std::to_string(p) + ")");
  // defining relations and the advertised structure
  Elt a1 = Elt(pack(1, 0, 0, 0, 0)), a2 = Elt(pack(0, 1, 0, 0, 0));
  Elt b = Elt(pack(0, 0, 1, 0, 0));
  Elt c1 = Elt(pack(0, 0, 0, 1, 0)), c2 = Elt(pack(0, 0, 0, 0, 1));
  if (g.commutator(a1, a2) != b)
    throw Error(Errc::ValidationFailed, "G2 relation [a1,a2]=b");
  if (g.commutator(a1, b) != c1)
    throw Error(Errc::ValidationFailed, "G2 relation [a1,b]=c1");
  if (g.commutator(a2, b) != c2)
    throw Error(Errc::ValidationFailed, "G2 relation [a2,b]=c2");
  if (g.exponent() != p)
    throw Error(Errc::ValidationFailed, "G2 exponent");
  auto cls = nilpotency_class(g);
  if (!cls || *cls != 3)
    throw Error(Errc::ValidationFailed, "G2 nilpotency class");
  for (const auto& c : conjugacy_classes(g))
    if (int(c.size()) != 1 && int(c.size()) != p * p)
      throw Error(Errc::ValidationFailed, "G2 conjugate type");
  return g;
}

namespace {

// ---- spec grammar ----------------------------------------------------------

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_product(const std::string& spec) {
  std::vector<std::string> parts;
  int depth = 0;
  std::string cur;
  char prev_sig = 0;  // previous significant character
  for (std::size_t i = 0; i < spec.size(); ++i) {
    char c = spec[i];
    if (c == '(') ++depth;
    if (c == ')') --depth;
    bool atom_end = prev_sig == ')' || std::isdigit(prev_sig);
    bool spaced = i > 0 && i + 1 < spec.size() && spec[i - 1] == ' ' && spec[i + 1] == ' ';
    if (c == 'x' && depth == 0 && (atom_end || spaced)) {
      parts.push_back(trim(cur));
      cur.clear();
      prev_sig = 0;
      continue;
    }
    cur += c;
    if (c != ' ' && c != '\t') prev_sig = c;
  }
  parts.push_back(trim(cur));
  return parts;
}

std::vector<int> parse_args(const std::string& atom, const std::string& name,
                            std::size_t arity) {
  auto open = atom.find('(');
  if (open == std::string::npos || atom.back() != ')')
    throw Error(Errc::ParseError, name + " needs (" + std::to_string(arity) + " args)");
  std::vector<int> args;
  std::string inner = atom.substr(open + 1, atom.size() - open - 2);
  std::string tok;
  std::istringstream in(inner);
  while (std::getline(in, tok, ',')) {
    tok = trim(tok);
    if (tok == "p") {
      args.push_back(-1);  // ES(p, p)
    } else if (tok == "p2") {
      args.push_back(-2);  // ES(p, p2)
    } else {
      try {
        args.push_back(std::stoi(tok));
      } catch (...) {
        throw Error(Errc::ParseError, "bad argument '" + tok + "' in " + atom);
      }
    }
  }
  if (args.size() != arity)
    throw Error(Errc::ParseError, atom + ": expected " + std::to_string(arity) + " arguments");
  return args;
}

Group resolve_atom(const std::string& atom_raw) {
  std::string atom = trim(atom_raw);
  if (atom.empty()) throw Error(Errc::ParseError, "empty atom");
  if (atom[0] == '@') return Group::read_cay_file(atom.substr(1));
  auto head = atom.substr(0, atom.find('('));
  if (head == "Q8") return build_q8();
  if (head == "ES32") return build_es32();
  if (head == "Special32") return build_special32();
  if (head == "Ultra64") return build_ultra64();
  if (head == "MaxClass81") return build_maxclass81();
  if (head == "C") return cyclic_group(parse_args(atom, "C", 1)[0], atom);
  if (head == "D") return build_dihedral(parse_args(atom, "D", 1)[0], atom);
  if (head == "S") return build_symmetric(parse_args(atom, "S", 1)[0], atom);
  if (head == "A") return build_alternating(parse_args(atom, "A", 1)[0], atom);
  if (head == "SL") {
    auto a = parse_args(atom, "SL", 2);
    if (a[0] != 2) throw Error(Errc::ParseError, "only SL(2,q)");
    return build_sl2(a[1], atom);
  }
  if (head == "GL") {
    auto a = parse_args(atom, "GL", 2);
    if (a[0] != 2) throw Error(Errc::ParseError, "only GL(2,q)");
    return build_gl2(a[1], atom);
  }
  if (head == "Frob") {
    auto a = parse_args(atom, "Frob", 2);
    return build_frobenius(a[0], a[1], atom);
  }
  if (head == "Heis") return build_heisenberg(parse_args(atom, "Heis", 1)[0]);
  if (head == "ES") {
    auto a = parse_args(atom, "ES", 2);
    int p = a[0];
    if (a[1] == -1 || a[1] == p) {
      Group g = build_heisenberg(p);  // extraspecial p^3 of exponent p
      g.set_label(atom);
      return g;
    }
    if (a[1] == -2 || a[1] == p * p) {
      // extraspecial p^3 of exponent p^2
      Group g = semidirect_cyclic(p * p, p, 1 + p, atom);
      return g;
    }
    throw Error(Errc::ParseError, "ES exponent must be p or p2");
  }
  if (head == "G1") return build_g1_impl(parse_args(atom, "G1", 1)[0]);
  if (head == "G2") return build_G2(parse_args(atom, "G2", 1)[0]);
  if (head == "Wr") return build_wreath(parse_args(atom, "Wr", 1)[0], atom);
  throw Error(Errc::ParseError, "unknown constructor '" + atom + "'");
}

Group resolve_uncached(const std::string& spec) {
  auto parts = split_product(spec);
  Group acc = resolve_atom(parts[0]);
  for (std::size_t i = 1; i < parts.size(); ++i)
    acc = direct_product(acc, resolve_atom(parts[i]));
  acc.set_label(trim(spec));
  return acc;
}

}  // namespace

std::shared_ptr<const Group> resolve(const std::string& spec) {
  static std::mutex mu;
  static std::map<std::string, std::shared_ptr<const Group>> cache;
  std::string key = trim(spec);
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  auto g = std::make_shared<const Group>(resolve_uncached(key));
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(key, std::move(g)).first->second;
}

const std::vector<CorpusEntry>& corpus_list() {
  auto E = [](std::string name, std::string spec, ExpectedFragment ex = {}) {
    return CorpusEntry{std::move(name), std::move(spec), ex};
  };
  auto cent = [](int n) {
    ExpectedFragment e;
    e.cent_count = n;
    return e;
  };
  auto cent_omega = [](int n, int w) {
    ExpectedFragment e;
    e.cent_count = n;
    e.omega = w;
    return e;
  };
  static const std::vector<CorpusEntry> list = {
      E("C1", "C(1)", cent(1)),
      E("C6", "C(6)", cent_omega(1, 1)),
      E("C12", "C(12)", cent_omega(1, 1)),
      E("S3", "S(3)", cent(5)),
      E("D8", "D(8)", cent(4)),
      E("Q8", "Q8", cent(4)),
      E("D10", "D(10)", cent(7)),
      E("D12", "D(12)", cent(5)),
      E("D14", "D(14)", cent(9)),
      E("D16", "D(16)", cent(6)),
      E("D20", "D(20)", cent(7)),
      E("D24", "D(24)", cent(8)),
      E("D28", "D(28)", cent(9)),
      E("A4", "A(4)", cent_omega(6, 5)),
      E("S4", "S(4)", cent_omega(14, 10)),
      E("A5", "A(5)", cent_omega(22, 21)),
      E("SL(2,3)", "SL(2,3)", cent_omega(8, 7)),
      E("GL(2,3)", "GL(2,3)", cent_omega(14, 13)),
      E("SL(2,5)", "SL(2,5)", cent_omega(32, 31)),
      E("Heis(3)", "Heis(3)", cent(5)),
      E("Heis(5)", "Heis(5)", cent(7)),
      E("Heis(7)", "Heis(7)", cent(9)),
      E("ES(5,p2)", "ES(5,p2)", cent(7)),
      E("ES(7,p2)", "ES(7,p2)", cent(9)),
      E("ES32", "ES32", cent(16)),
      E("Special32", "Special32", cent(6)),
      E("Ultra64", "Ultra64", cent(6)),
      E("MaxClass81", "MaxClass81", cent(11)),
      E("G1(2)", "G1(2)", cent(8)),
      E("G1(3)", "G1(3)", cent(14)),
      E("Frob(5,4)", "Frob(5,4)", cent(7)),
      E("C7:C3", "Frob(7,3)", cent(9)),
      E("Frob(7,6)", "Frob(7,6)", cent(9)),
      E("G2(5)", "G2(5)", cent(32)),
      E("D8xC2", "D(8) x C(2)", cent(4)),
      E("Frob(5,4)xC3", "Frob(5,4) x C(3)", cent(7)),
      E("A4xC7", "A(4) x C(7)", cent(6)),
      E("S3xC4", "S(3) x C(4)", cent(5)),
      E("S4xC2", "S(4) x C(2)", cent(14)),
      E("SL(2,3)xC5", "SL(2,3) x C(5)", cent(8)),
      E("C7:C3xC4", "Frob(7,3) x C(4)", cent(9)),
      E("C6xA5", "C(6) x A(5)", cent(22)),
  };
  return list;
}

}  // namespace cfact
