#include "cfact/group.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>

namespace cfact {

namespace {

std::string cell(int a, int b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

void check_table(const std::vector<Elt>& mul, int n, bool exhaustive_assoc) {
  // identity row/column
  for (int x = 0; x < n; ++x) {
    if (mul[x] != x)
      throw Error(Errc::NoIdentityAtZero, "cell " + cell(0, x));
    if (mul[std::size_t(x) * n] != x)
      throw Error(Errc::NoIdentityAtZero, "cell " + cell(x, 0));
  }
  // Latin square rows and columns
  std::vector<char> seen(n);
  for (int r = 0; r < n; ++r) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int c = 0; c < n; ++c) {
      Elt v = mul[std::size_t(r) * n + c];
      if (seen[v])
        throw Error(Errc::NotLatinSquare, "row " + std::to_string(r) +
                                              ", repeated at cell " + cell(r, c));
      seen[v] = 1;
    }
  }
  for (int c = 0; c < n; ++c) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int r = 0; r < n; ++r) {
      Elt v = mul[std::size_t(r) * n + c];
      if (seen[v])
        throw Error(Errc::NotLatinSquare, "column " + std::to_string(c) +
                                              ", repeated at cell " + cell(r, c));
      seen[v] = 1;
    }
  }
  auto mm = [&](int a, int b) { return mul[std::size_t(a) * n + b]; };
  auto check_triple = [&](int a, int b, int c) {
    if (mm(mm(a, b), c) != mm(a, mm(b, c)))
      throw Error(Errc::NotAssociative,
                  "triple (" + std::to_string(a) + "," + std::to_string(b) +
                      "," + std::to_string(c) + ")");
  };
  if (exhaustive_assoc && n <= 512) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) check_triple(a, b, c);
  } else {
    std::mt19937 rng(0x5EED);
    std::uniform_int_distribution<int> d(0, n - 1);
    int samples = exhaustive_assoc ? 1000000 : 100000;
    for (int i = 0; i < samples; ++i) check_triple(d(rng), d(rng), d(rng));
  }
}

}  // namespace

void Group::finish() {
  inv_.assign(n_, 0);
  std::vector<char> has_inv(n_, 0);
  for (int x = 0; x < n_; ++x) {
    for (int y = 0; y < n_; ++y) {
      if (mul(Elt(x), Elt(y)) == identity) {
        inv_[x] = Elt(y);
        has_inv[x] = 1;
        break;
      }
    }
    if (!has_inv[x])
      throw Error(Errc::NotLatinSquare, "no inverse for element " + std::to_string(x));
  }
  ord_.assign(n_, 1);
  for (int x = 1; x < n_; ++x) {
    Elt y = Elt(x);
    int k = 1;
    while (y != identity) {
      y = mul(y, Elt(x));
      ++k;
    }
    ord_[x] = k;
  }
}

Group Group::from_cayley_table(const std::vector<std::vector<int>>& table,
                               std::string label) {
  int n = int(table.size());
  if (n == 0) throw Error(Errc::IndexOutOfRange, "empty table");
  std::vector<Elt> flat(std::size_t(n) * n);
  for (int r = 0; r < n; ++r) {
    if (int(table[r].size()) != n)
      throw Error(Errc::IndexOutOfRange, "row " + std::to_string(r) + " has " +
                                             std::to_string(table[r].size()) +
                                             " entries, expected " + std::to_string(n));
    for (int c = 0; c < n; ++c) {
      int v = table[r][c];
      if (v < 0 || v >= n)
        throw Error(Errc::IndexOutOfRange, "cell " + cell(r, c) + " = " + std::to_string(v));
      flat[std::size_t(r) * n + c] = Elt(v);
    }
  }
  check_table(flat, n, /*exhaustive_assoc=*/true);
  Group g;
  g.n_ = n;
  g.mul_ = std::move(flat);
  g.label_ = std::move(label);
  g.finish();
  return g;
}

Group Group::from_table_structural(std::vector<Elt> flat_table, int order,
                                   std::string label) {
  if (order <= 0 || flat_table.size() != std::size_t(order) * order)
    throw Error(Errc::IndexOutOfRange, "bad flat table size");
  check_table(flat_table, order, /*exhaustive_assoc=*/false);
  Group g;
  g.n_ = order;
  g.mul_ = std::move(flat_table);
  g.label_ = std::move(label);
  g.finish();
  return g;
}

Group Group::read_cay(std::istream& in, std::string label) {
  int n = 0;
  if (!(in >> n) || n <= 0)
    throw Error(Errc::ParseError, "missing or invalid order line");
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      if (!(in >> table[r][c]))
        throw Error(Errc::ParseError, "short table at row " + std::to_string(r));
  return from_cayley_table(table, std::move(label));
}

Group Group::read_cay_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::Io, "cannot open " + path);
  return read_cay(in, path);
}

void Group::write_cay(std::ostream& out) const {
  out << n_ << "\n";
  for (int r = 0; r < n_; ++r) {
    for (int c = 0; c < n_; ++c) out << (c ? " " : "") << int(mul(Elt(r), Elt(c)));
    out << "\n";
  }
  if (!label_.empty()) out << "# " << label_ << "\n";
}

void Group::write_cay_file(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw Error(Errc::Io, "cannot open " + path);
  write_cay(out);
}

Elt Group::power(Elt x, long e) const {
  int o = element_order(x);
  e %= o;
  if (e < 0) e += o;
  Elt acc = identity;
  for (long i = 0; i < e; ++i) acc = mul(acc, x);
  return acc;
}

int Group::exponent() const {
  long e = 1;
  for (int x = 0; x < n_; ++x) e = std::lcm(e, long(ord_[x]));
  return int(e);
}

bool Group::is_abelian() const {
  for (int a = 0; a < n_; ++a)
    for (int b = a + 1; b < n_; ++b)
      if (mul(Elt(a), Elt(b)) != mul(Elt(b), Elt(a))) return false;
  return true;
}

void Group::set_element_names(std::vector<std::string> names) {
  if (int(names.size()) != n_)
    throw Error(Errc::DimensionMismatch, "element name count");
  names_ = std::move(names);
}

Bitset Group::full_bitset() const {
  Bitset b(n_);
  for (int i = 0; i < n_; ++i) b.set(i);
  return b;
}

Subgroup::Subgroup(const Group& parent, Bitset members)
    : parent_(&parent), members_(std::move(members)) {
  size_ = members_.count();
  if (!members_.test(Group::identity))
    throw Error(Errc::ValidationFailed, "subgroup misses identity");
  auto es = members_.to_vector();
  for (int a : es) {
    if (!members_.test(parent.inv(Elt(a))))
      throw Error(Errc::ValidationFailed,
                  "subgroup not closed under inverse at " + std::to_string(a));
    for (int b : es)
      if (!members_.test(parent.mul(Elt(a), Elt(b))))
        throw Error(Errc::ValidationFailed, "subgroup not closed at " +
                                                std::to_string(a) + "*" + std::to_string(b));
  }
  if (parent.order() % size_ != 0)
    throw Error(Errc::ValidationFailed, "Lagrange violated");  // unreachable for true subgroups
}

std::vector<Elt> Subgroup::elements() const {
  std::vector<Elt> out;
  out.reserve(size_);
  for (int i = 0; i < members_.capacity(); ++i)
    if (members_.test(i)) out.push_back(Elt(i));
  return out;
}

bool Subgroup::is_abelian() const {
  auto es = elements();
  for (std::size_t i = 0; i < es.size(); ++i)
    for (std::size_t j = i + 1; j < es.size(); ++j)
      if (!parent_->commutes(es[i], es[j])) return false;
  return true;
}

bool Subgroup::is_cyclic() const {
  for (auto e : elements())
    if (parent_->element_order(e) == size_) return true;
  return false;
}

bool Subgroup::is_normal() const {
  auto es = elements();
  for (int g = 0; g < parent_->order(); ++g)
    for (auto x : es)
      if (!members_.test(parent_->conj(x, Elt(g)))) return false;
  return true;
}

bool Subgroup::is_elementary_abelian(int p) const {
  if (!is_abelian()) return false;
  for (auto e : elements())
    if (e != Group::identity && parent_->element_order(e) != p) return false;
  return true;
}

SubgroupGroup as_group(const Subgroup& s) {
  std::vector<Elt> to_parent = s.elements();  // ascending, identity first
  const Group& p = s.parent();
  std::vector<int> back(p.order(), -1);
  for (std::size_t i = 0; i < to_parent.size(); ++i) back[to_parent[i]] = int(i);
  int m = int(to_parent.size());
  std::vector<Elt> flat(std::size_t(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      flat[std::size_t(i) * m + j] = Elt(back[p.mul(to_parent[i], to_parent[j])]);
  Group g = Group::from_table_structural(std::move(flat), m,
                                         s.parent().label() + ".subgroup" + std::to_string(m));
  return {std::move(g), std::move(to_parent)};
}

bool Morphism::is_homomorphism() const {
  for (int a = 0; a < source->order(); ++a)
    for (int b = 0; b < source->order(); ++b)
      if (map[source->mul(Elt(a), Elt(b))] != target->mul(map[a], map[b]))
        return false;
  return true;
}

bool Morphism::is_bijective() const {
  if (source->order() != target->order()) return false;
  std::vector<char> hit(target->order(), 0);
  for (auto v : map) {
    if (hit[v]) return false;
    hit[v] = 1;
  }
  return true;
}

}  // namespace cfact
