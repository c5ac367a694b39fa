#pragma once

#include <array>
#include <string>
#include <vector>

#include "cfact/group.hpp"

namespace cfact {

/// Permutations are vectors p of size d with p[i] = image of point i.
using Perm = std::vector<int>;

/// Closure of a generating set of permutations under composition. The
/// identity permutation gets index 0.
Group from_permutations(const std::vector<Perm>& generators, std::string label);

/// 2x2 integer matrices mod q, row-major [a b; c d]. Each generator must be
/// invertible mod q.
using Mat2 = std::array<int, 4>;
Group from_matrices(const std::vector<Mat2>& generators, int modulus,
                    std::string label);

/// Group on pairs (x in Fp^k, u in Fp^m) with product
/// (x,u)(y,v) = (x+y, u+v+f(x,y)), f extended bilinearly from the basis
/// structure constants f[i][j] in Fp^m. Order p^(k+m). Bilinearity makes
/// associativity structural; it is additionally spot-validated.
Group from_cocycle(int p, int dimV, int dimW,
                   const std::vector<std::vector<std::vector<int>>>& f,
                   std::string label);

/// C_q x| C_d with (a,b)(a',b') = (a + k^b a' mod q, b + b' mod d).
/// Requires gcd(k, q) = 1 and k^d = 1 (mod q).
Group semidirect_cyclic(int q, int d, int k, std::string label = "");

Group direct_product(const Group& g, const Group& h, std::string label = "");

Group cyclic_group(int n, std::string label = "");

}  // namespace cfact
