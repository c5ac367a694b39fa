#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cfact/group.hpp"

namespace cfact {

/// A certificate for the isoclinism of two groups: compatible isomorphisms
/// of the central quotients and of the derived subgroups.
struct IsoclinismWitness {
  QuotientResult qg;  // G / Z(G)
  QuotientResult qh;  // H / Z(H)
  std::vector<Elt> phi;  // quotient index of G -> quotient index of H
  std::vector<Elt> derived_g;  // elements of G', ascending
  std::vector<Elt> derived_h;  // elements of H', ascending
  std::vector<Elt> psi;  // position in derived_g -> element of H (member of H')
};

/// t(q1, q2) = [r(q1), r(q2)] for the stored coset representatives; values
/// are elements of G'. Well-definedness on cosets is asserted against a
/// second representative set.
std::vector<std::vector<Elt>> commutator_pairing(const Group& g,
                                                 const QuotientResult& q);

/// Exhaustive decision from the definition: backtracking over isomorphisms
/// of the central quotients, each checked for a compatible induced map on
/// commutator values extended multiplicatively over G'. None is a proof of
/// non-isoclinism. Only definitional necessary conditions (|G'|, |G/Z|) are
/// used as pre-filters; `fast` additionally filters on cent_count.
std::optional<IsoclinismWitness> isoclinic(const Group& g, const Group& h,
                                           bool fast = false);

struct VerifyResult {
  bool ok = true;
  std::string detail;  // first counterexample on failure
};

/// Re-verifies a witness from scratch: both quotients against recomputed
/// centers, both isomorphism properties, and the compatibility condition
/// quantified over every representative pair.
VerifyResult verify_witness(const Group& g, const Group& h,
                            const IsoclinismWitness& w);

std::string witness_to_json(const IsoclinismWitness& w);

}  // namespace cfact
