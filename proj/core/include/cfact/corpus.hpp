#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cfact/group.hpp"
#include "cfact/invariants.hpp"

namespace cfact {

/// Resolves a group spec string to a group. Grammar:
///   C(n), D(2n), Q8, S(n), A(n), SL(2,q), GL(2,q), Frob(q,d), Heis(p),
///   ES(p,p), ES(p,p2), ES32, Special32, Ultra64, MaxClass81, G1(p), G2(p),
///   Wr(p), products joined with 'x', and @path.cay for external tables.
/// Resolution is deterministic and memoized per spec string.
std::shared_ptr<const Group> resolve(const std::string& spec);

/// G2 = <a1, a2, b, c1, c2 ; [a1,a2]=b, [ai,b]=ci, ai^p=b^p=ci^p=1>,
/// order p^5, built by permutation closure of left multiplication by a1, a2
/// on the p^5 normal forms, then validated (order, defining relations,
/// exponent p, class 3, conjugate type (1, p^2)). Requires p >= 5: at p = 3
/// the exponent-3 relations collapse the presentation below order p^5.
Group build_G2(int p);

Group build_G1(int p);
Group build_heisenberg(int p);
Group build_special32();
Group build_ultra64();
Group build_es32();
Group build_maxclass81();

/// Expected invariant fragment recorded next to a corpus entry; matching
/// the computed profile is the golden test.
struct ExpectedFragment {
  std::optional<int> cent_count;
  std::optional<int> omega;
  std::optional<int> z_order;
  std::optional<int> derived_order;
};

struct CorpusEntry {
  std::string name;
  std::string spec;  // provenance: constructor call, as a resolvable string
  ExpectedFragment expected;

  std::shared_ptr<const Group> group() const { return resolve(spec); }
};

/// All bundled entries, in registry order.
const std::vector<CorpusEntry>& corpus_list();

}  // namespace cfact
