#pragma once

namespace cfact {

/// Size caps for the search-heavy operations. Defaults are chosen so the
/// full verification suite runs at desk scale. Overridable via the
/// CFACT_CAPS environment variable, e.g.
///   CFACT_CAPS="closure=20000,normal=1024,subgroups=300,quotient=2048"
struct Caps {
  int closure = 10000;    // max elements produced by a generating-set closure
  int normal_enum = 512;  // max |G| for all_normal_subgroups
  int subgroup_enum = 200;  // max |G| for all_subgroups
  int quotient = 1024;    // max |G/Z(G)| for the isoclinism search
};

/// Process-wide caps, initialized once from CFACT_CAPS.
Caps& caps();

}  // namespace cfact
