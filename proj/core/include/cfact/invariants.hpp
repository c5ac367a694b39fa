#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cfact/group.hpp"

namespace cfact {

Subgroup centralizer(const Group& g, Elt x);
Subgroup center(const Group& g);
Subgroup derived_subgroup(const Group& g);
/// Z(C(x))
Subgroup center_of_centralizer(const Group& g, Elt x);

/// The set of distinct element centralizers {C(x) : x in G}, ordered by
/// (order, smallest member index). The whole group appears exactly once.
struct CentStructure {
  std::vector<Subgroup> centralizers;
  int count = 0;         // |Cent(G)|
  int nacent_count = 0;  // non-abelian members
  std::vector<int> class_of;  // element -> index into centralizers
};
CentStructure cent_structure(const Group& g);

int cent_count(const Group& g);

/// Class-level non-commuting graph: nodes are centralizer-equivalence
/// classes of non-central elements; two classes are adjacent iff their
/// representatives do not commute.
struct NCGraph {
  std::string group_label;
  int node_count = 0;
  std::vector<int> class_size;        // elements per node
  std::vector<int> centralizer_order; // per node
  std::vector<Bitset> adj;
  int omega = 1;  // max clique; 1 for abelian groups (empty node set)
};
NCGraph ncgraph(const Group& g);

/// Exact maximum clique of the non-commuting graph, via branch-and-bound on
/// the centralizer-class quotient graph with a greedy-coloring bound.
int omega(const Group& g);

enum class PGroupClass { None, Special, Extraspecial, Ultraspecial, MaximalClass };
struct PGroupClassification {
  PGroupClass cls = PGroupClass::None;
  int rank = 0;  // for Special
};
PGroupClassification p_group_classification(const Group& g);
std::string p_group_class_name(const PGroupClassification& c);

struct InvariantProfile {
  int order = 0;
  int z_order = 0;
  int derived_order = 0;
  int derived_meet_center_order = 0;  // |G' n Z(G)|
  int cent_count = 0;
  int nacent_count = 0;
  int omega = 1;
  bool is_CA = false;
  bool is_F = false;
  bool is_perfect = false;
  bool is_Z_group = false;
  int derived_length = 0;
  std::optional<int> nilpotency_class;
  std::vector<std::pair<int, int>> conjugate_type;  // (class size, multiplicity), sorted
  PGroupClassification p_group_class;
  bool is_primitive_Cn = false;  // cent_count(G) == cent_count(G/Z(G))
  int quotient_cent_count = 0;   // |Cent(G/Z(G))|

  /// Matches the paper's "(1, m)" shorthand: every class size is 1 or m.
  bool has_conjugate_type(int m) const;
};

InvariantProfile profile(const Group& g);

enum class GraphFormat { Dot, Json };
std::string export_ncgraph(const Group& g, GraphFormat format);
std::string export_ncgraph(const Group& g, const std::string& format);

}  // namespace cfact
