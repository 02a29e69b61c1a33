#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace tsgreen {

// A permutation of {0..n-1} stored as its image vector.
using Perm = std::vector<std::uint16_t>;

Perm perm_identity(int n);
// (a*b)[i] = a[b[i]], i.e. b acts first; matches matrix convention P_a P_b.
Perm perm_compose(const Perm& a, const Perm& b);
Perm perm_inverse(const Perm& a);
bool perm_is_identity(const Perm& a);
int perm_order(const Perm& a);

// Cycle notation, 1-based points: "(1 2 3)(4 5)"; identity prints "()".
std::string perm_to_cycles(const Perm& a);
Perm perm_from_cycles(const std::string& s, int degree);

}  // namespace tsgreen
