#pragma once

#include <string>
#include <vector>

#include "tsgreen/classify.hpp"
#include "tsgreen/config.hpp"
#include "tsgreen/int_matrix.hpp"
#include "tsgreen/ts_basis.hpp"

namespace tsgreen {

class Session;

// T(G): integer span of all classes induced from proper subgroup classes.
struct InductionLattice {
  struct Col {
    int subgroup_class;  // lattice class index of K < G
    int basis_index;     // index into ts_basis(K)
  };
  IntMatrix matrix;  // |basis(G)| rows, one column per (K, basis element)
  std::vector<Col> provenance;
};

InductionLattice induction_lattice(Session& s, std::shared_ptr<const PermGroup> g, const FqPtr& k);

struct PrimordialVerdict {
  bool is_primordial = false;
  bool identity_in_t = false;
  bool lattice_full = false;
  std::vector<Int> snf_divisors;
  std::vector<Int> witness;  // coefficients over lattice columns with e_0 = matrix * witness
  InductionLattice lattice;
  int basis_size = 0;
};

// e_0 = [1_G] in T(G) decided over the integers by Hermite-form membership,
// cross-checked against Smith-form fullness (T is an ideal, so the criteria
// must agree; disagreement raises inconsistent_ideal_check).
PrimordialVerdict is_primordial(Session& s, std::shared_ptr<const PermGroup> g, const FqPtr& k);

struct TheoremRow {
  std::string group;
  std::string field;
  int order = 0;
  int p = 0;
  bool k_dress = false;
  bool primordial = false;
  bool agree = false;
  int dress_q = 0;  // a prime q with G q-Dress, 0 if none found
};

struct TheoremReport {
  std::vector<TheoremRow> rows;
  bool all_agree = false;
  double seconds = 0.0;
};

struct CatalogEntry {
  std::string group_spec;
  std::string field_spec;
};

// Runs is_primordial vs dress_report over the catalog (parallel map, results
// merged in catalog order). Does not throw on disagreement; the CLI inspects
// all_agree and exits 2.
TheoremReport verify_theorem(const RunConfig& cfg, const std::vector<CatalogEntry>& entries);

struct Prop35Certificate {
  int r = 0, q = 0, n = 0, a = 0;
  std::vector<int> summand_dims;       // non-trivial summands of k[H/Q], with multiplicity
  std::vector<int> cover_subgroup;     // per summand: proper subgroup class A with V | W ind
  std::vector<int> cover_basis_index;  // per summand: index of W in ts_basis(A)
  std::vector<Int> witness;            // e_0 = lattice * witness, from the certificate identity
  int trivial_multiplicity = 0;
};

// Builds and checks the decomposition k[H/Q] = 1_H + (induced-from-proper
// part) for H = C_r x|_a C_q^n, concluding e_0 in T(H).
Prop35Certificate prop35_certificate(Session& s, int r, int q, int n, int a, const FqPtr& k);

}  // namespace tsgreen
