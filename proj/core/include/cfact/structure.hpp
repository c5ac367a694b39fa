#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "cfact/group.hpp"

namespace cfact {

Subgroup trivial_subgroup(const Group& g);
Subgroup whole_subgroup(const Group& g);

/// Smallest subgroup containing the seed elements.
Subgroup generated_subgroup(const Group& g, const std::vector<Elt>& seed);

/// Closure of a member bitset under multiplication (the seed need not
/// contain inverses; finiteness supplies them).
Bitset closure_bits(const Group& g, Bitset seed);

std::vector<std::vector<Elt>> conjugacy_classes(const Group& g);

/// Throws NotNormal if N is not normal in g.
QuotientResult quotient(const Group& g, const Subgroup& n);

/// Backtracking isomorphism search on an irredundant generating sequence of
/// g (decreasing element order, then index), pruned by per-element
/// fingerprints (order, conjugacy class size, centralizer order,
/// center/derived membership). Deterministic; returns the first
/// isomorphism found, or nullopt as an exhaustive non-existence answer.
std::optional<Morphism> isomorphic(const Group& g, const Group& h);

/// Enumerates every isomorphism g -> h in deterministic order. The callback
/// returns false to stop early.
void for_each_isomorphism(const Group& g, const Group& h,
                          const std::function<bool(const Morphism&)>& fn);

/// Every normal subgroup: join-closure of the normal closures of single
/// conjugacy classes, plus the trivial subgroup. Throws OrderExceedsCap.
std::vector<Subgroup> all_normal_subgroups(const Group& g);

/// All subgroups via fixpoint of joins of cyclic subgroups. Throws
/// OrderExceedsCap above caps().subgroup_enum.
std::vector<Subgroup> all_subgroups(const Group& g);

enum class SeriesKind { Derived, LowerCentral, UpperCentral };

/// The full series until stabilization, starting from G itself (or the
/// trivial subgroup for the upper central series).
std::vector<Subgroup> series(const Group& g, SeriesKind kind);

int derived_length(const Group& g);
std::optional<int> nilpotency_class(const Group& g);

Subgroup normalizer(const Group& g, const Subgroup& s);

/// A Sylow p-subgroup, built by iterated extension inside its normalizer.
/// Throws PrimeDoesNotDivideOrder.
Subgroup sylow(const Group& g, int p);

}  // namespace cfact
