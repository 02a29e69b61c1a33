#pragma once

#include <string>
#include <vector>

#include "tsgreen/decompose.hpp"
#include "tsgreen/int_matrix.hpp"
#include "tsgreen/rep.hpp"
#include "tsgreen/vertex.hpp"

namespace tsgreen {

class Session;

using ClassVector = std::vector<Int>;

struct TSBasisElement {
  Representation rep;
  IndecCertificate cert;
  VertexReport vertex;
  std::vector<FqEl> fingerprint;
  std::string canon_key;  // canonical-form bytes used for the deterministic order
};

// Basis of the trivial-source subring: all indecomposable summands of the
// permutation modules k[G/P], P over the p-subgroup classes. Element 0 is the
// trivial module.
struct TSBasis {
  std::shared_ptr<const PermGroup> group;
  FqPtr field;
  std::vector<TSBasisElement> elems;

  int size() const { return static_cast<int>(elems.size()); }
  Int dim_of(const ClassVector& v) const;  // dimension homomorphism
};

// Scan construction: decompose k[G/P] over the p-subgroup classes in
// ascending order; new iso classes join the basis with the class of first
// appearance as vertex (cross-checked against the Higman scan). Prefer the
// session caches (Session::basis, Session::mult) over calling these directly.
TSBasis build_ts_basis(Session& s, std::shared_ptr<const PermGroup> g, const FqPtr& k);

// Multiplicities of m against the basis. Errors: not_trivial_source when a
// summand matches no basis element (the basis is complete for trivial-source
// modules, so a miss means the summand is not trivial source).
ClassVector classify_in_basis(Session& s, const TSBasis& b, const Representation& m);
ClassVector classify_decomposition(Session& s, const TSBasis& b, const Decomposition& d);

// Column j = classify(induce(basis_k[j])); entries nonnegative.
IntMatrix induction_matrix(Session& s, const TSBasis& bk, const TSBasis& bg,
                           const SubgroupGroup& sub);
IntMatrix restriction_matrix(Session& s, const TSBasis& bg, const TSBasis& bk,
                             const SubgroupGroup& sub);

// tables[i] has column j = classify(b_i (x) b_j); symmetric in i, j.
struct MultTable {
  std::vector<IntMatrix> tables;
};

MultTable build_mult_table(Session& s, const TSBasis& b);

ClassVector class_add(const ClassVector& a, const ClassVector& b);
ClassVector class_sub(const ClassVector& a, const ClassVector& b);
ClassVector class_mul(const MultTable& t, const ClassVector& a, const ClassVector& b);

}  // namespace tsgreen
