#pragma once

#include <memory>
#include <string>

#include "tsgreen/perm_group.hpp"

namespace tsgreen {

// Builds a permutation group from a spec string:
//   "Cn"          cyclic of order n
//   "Dn"          dihedral of order 2n (n >= 3)
//   "Sn" / "An"   symmetric / alternating, n <= 5
//   "Q8"          quaternion group of order 8
//   "Cm:Cn@a"     semidirect product, y x y^{-1} = x^a (needs a^n = 1 mod m, gcd(a,m) = 1)
//   "AxB"         direct product of specs A and B
//   "gens:<degree>:<cycles;...>"  explicit generators in 1-based cycle notation
std::shared_ptr<const PermGroup> build_group(const std::string& spec, int order_cap);

}  // namespace tsgreen
