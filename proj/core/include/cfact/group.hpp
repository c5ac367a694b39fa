#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cfact/bitset.hpp"
#include "cfact/error.hpp"

namespace cfact {

using Elt = std::uint16_t;

/// A finite group as an indexed element set with a total multiplication
/// table. The identity is always element 0. Immutable after construction.
class Group {
 public:
  /// Validates the table fully (identity, Latin-square rows/columns,
  /// inverses, associativity) and throws on the first offending cell.
  /// Associativity is exhaustive up to order 512 and sampled (1e6 random
  /// triples, fixed seed) above.
  static Group from_cayley_table(const std::vector<std::vector<int>>& table,
                                 std::string label);

  /// Constructors whose associativity is structural call this: the table is
  /// still checked for identity/Latin/inverses, and associativity is
  /// spot-checked on a sample rather than exhaustively.
  static Group from_table_structural(std::vector<Elt> flat_table, int order,
                                     std::string label);

  /// .cay format: line 1 = order n; next n lines = rows of the table;
  /// trailing lines starting with '#' are comments.
  static Group read_cay(std::istream& in, std::string label);
  static Group read_cay_file(const std::string& path);
  void write_cay(std::ostream& out) const;
  void write_cay_file(const std::string& path) const;

  int order() const { return n_; }
  Elt mul(Elt a, Elt b) const { return mul_[std::size_t(a) * n_ + b]; }
  Elt inv(Elt a) const { return inv_[a]; }
  static constexpr Elt identity = 0;

  /// g^-1 x g
  Elt conj(Elt x, Elt g) const { return mul(mul(inv(g), x), g); }
  /// [a, b] = a^-1 b^-1 a b
  Elt commutator(Elt a, Elt b) const {
    return mul(mul(inv(a), inv(b)), mul(a, b));
  }
  Elt power(Elt x, long e) const;

  int element_order(Elt x) const { return ord_[x]; }
  int exponent() const;
  bool is_abelian() const;
  bool commutes(Elt a, Elt b) const { return mul(a, b) == mul(b, a); }

  const std::string& label() const { return label_; }
  void set_label(std::string l) { label_ = std::move(l); }

  const std::vector<std::string>& element_names() const { return names_; }
  void set_element_names(std::vector<std::string> names);

  Bitset full_bitset() const;

  /// An empty placeholder (order 0); every usable Group comes from the
  /// validating named constructors.
  Group() = default;

 private:
  void finish();  // inverses, orders

  int n_ = 0;
  std::vector<Elt> mul_;
  std::vector<Elt> inv_;
  std::vector<int> ord_;
  std::string label_;
  std::vector<std::string> names_;
};

/// A subset of a parent group's element indices, closed under
/// multiplication and inverse. Construction checks closure, identity
/// membership and Lagrange.
class Subgroup {
 public:
  Subgroup(const Group& parent, Bitset members);

  const Group& parent() const { return *parent_; }
  const Bitset& members() const { return members_; }
  int size() const { return size_; }
  bool contains(Elt x) const { return members_.test(x); }
  std::vector<Elt> elements() const;

  bool is_abelian() const;
  bool is_cyclic() const;
  bool is_normal() const;
  /// All member orders are powers of p and the exponent divides p.
  bool is_elementary_abelian(int p) const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.parent_ == b.parent_ && a.members_ == b.members_;
  }

 private:
  const Group* parent_;
  Bitset members_;
  int size_;
};

/// A subgroup re-indexed as a standalone Group (identity first, remaining
/// elements in ascending parent order), with the index map back to the
/// parent.
struct SubgroupGroup {
  Group group;
  std::vector<Elt> to_parent;  // sub index -> parent index
};
SubgroupGroup as_group(const Subgroup& s);

/// An index mapping between two groups.
struct Morphism {
  const Group* source = nullptr;
  const Group* target = nullptr;
  std::vector<Elt> map;  // per source element

  bool is_homomorphism() const;
  bool is_bijective() const;
};

struct QuotientResult {
  Group quotient;
  std::vector<Elt> projection;  // parent element -> quotient element
  std::vector<Elt> coset_reps;  // quotient element -> a parent representative
};

}  // namespace cfact
