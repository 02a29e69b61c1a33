#pragma once

#include <optional>
#include <vector>

#include "tsgreen/rep.hpp"

namespace tsgreen {

class Session;

struct IndecCertificate {
  int end_dim = 0;
  int radical_dim = 0;
  int quotient_dim = 0;  // dim of End/J over k; 1 means absolutely indecomposable
  bool absolutely_indecomposable = false;
};

struct Summand {
  Representation rep;
  FFMatrix embedding;  // columns: the subspace of the parent carrying this copy
  IndecCertificate cert;
  std::vector<FqEl> fingerprint;
};

struct Decomposition {
  std::vector<Summand> classes;      // one representative per iso class
  std::vector<int> multiplicities;   // parallel to classes
  std::vector<int> block_classes;    // class id of each diagonal block, in block order
  FFMatrix change_of_basis;          // conjugates the parent to block-diagonal form
  int parent_dim = 0;

  int total_blocks() const { return static_cast<int>(block_classes.size()); }
};

// Full decomposition into certified indecomposables. Deterministic given the
// session seed. Throws DecompositionFailed when the splitting/certification
// budget is exhausted (never silently returns an uncertified summand).
Decomposition decompose(Session& s, const Representation& m);

// End(m) as a basis of matrices, with a completeness flag. Permutation
// modules use the double-coset basis; otherwise composites through the
// p-subgroup permutation modules (complete iff id lies in their span, which
// holds for trivial-source modules), topped up by spinning when feasible.
struct EndBasis {
  std::vector<FFMatrix> basis;
  bool complete = false;
};
EndBasis end_basis(Session& s, const Representation& m);

// Isomorphism test for certified indecomposables: some composite of a
// hom(m,n) basis element with a hom(n,m) basis element is invertible.
bool iso_indec(const Representation& a, const Representation& b);

// Class index of v (certified indecomposable) inside d, or nullopt.
std::optional<int> find_class(const Decomposition& d, const Representation& v,
                              const std::vector<FqEl>& v_fingerprint);

// Jacobson radical of the algebra spanned by the (complete) basis, returned as
// coordinate rows over that basis. Characteristic-p radical via the
// characteristic-polynomial coefficient forms, verified nilpotent.
std::vector<std::vector<FqEl>> algebra_radical(const FqPtr& k, const std::vector<FFMatrix>& basis);

}  // namespace tsgreen
