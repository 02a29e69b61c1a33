#pragma once

#include <optional>
#include <vector>

#include "tsgreen/fq.hpp"
#include "tsgreen/perm_group.hpp"

namespace tsgreen {

bool int_is_prime(int n);

// I_m(k): the subgroup of (Z/m)^* generated by |k| mod m, sorted.
// By convention I_1(k) = {0}.  Errors with characteristic_divides_m when p | m, m > 1.
std::vector<int> galois_index_set(int m, const FqPtr& k);

// O^q(G) cyclic, i.e. G is an extension of a cyclic q'-group by a q-group.
bool is_q_hyperelementary(const PermGroup& g, int q);

// G / O_r(G) cyclic.
bool is_r_hypoelementary(const PermGroup& g, const SubgroupLattice& lat, int r);

struct KElementaryWitness {
  bool ok = false;
  int q = 0;                     // the hyperelementary prime used
  int m = 0;                     // order of the cyclic normal part C = O^q(G)
  std::vector<int> cyclic_part;  // element indices of C
  std::vector<int> complement;   // element indices of a complement Q
  std::vector<int> exponents;    // distinct conjugation exponents of Q on C, sorted
  bool p_divides_m = false;      // a candidate q failed only because p | |O^q(G)|
};

// G = C x| Q with C cyclic of order m prime to p and to q, Q a q-group,
// and every conjugation exponent of Q on C inside I_m(k).
KElementaryWitness k_elementary_witness(const PermGroup& g, const FqPtr& k,
                                        const SubgroupLattice& lat);

struct DressReport {
  bool k_dress = false;
  bool dr_p_star = false;        // k_dress and p divides |G/O_p(G)|
  int order = 0;
  int reduced_order = 0;         // |G/O_p(G)|
  std::vector<int> o_p;          // element indices of O_p(G)
  KElementaryWitness reduced;    // witness for G/O_p(G); indices refer to the quotient
};

// G is k-Dress iff G/O_p(G) is k-elementary.
DressReport dress_report(const PermGroup& g, const FqPtr& k);

// Primes q with G q-Dress, i.e. G/O_p(G) q-hyperelementary; candidates are the
// divisors of |G| plus the least non-divisor (larger non-divisors behave the
// same). Sorted ascending.
std::vector<int> dress_primes(const PermGroup& g, int p);

struct MinimalShape {
  int r = 0;  // order of the normal cyclic part
  int q = 0;  // prime of the cyclic complement
  int n = 0;  // complement has order q^n
  int a = 0;  // conjugation exponent of a generator (smallest over generator choices)
};

// Recognizes G = C_r x|_a C_{q^n} with r, q distinct primes, the action
// faithful, a outside I_r(k), and every proper quotient k-Dress.  Errors with
// not_minimal_counterexample otherwise.
MinimalShape minimal_non_k_dress_shape(const PermGroup& g, const FqPtr& k);

}  // namespace tsgreen
