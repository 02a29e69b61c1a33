#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "tsgreen/ff_matrix.hpp"
#include "tsgreen/fq.hpp"
#include "tsgreen/perm_group.hpp"

namespace tsgreen {

class Session;

// Origin data kept when a module is a coset permutation module; enables the
// double-coset endomorphism basis and fixed-point hom formulas.
struct PermOrigin {
  std::vector<int> subgroup;     // sorted parent element indices of H
  std::vector<int> transversal;  // minimal coset representatives; point j = t_j H
  std::vector<int> coset_of;     // element index -> point
};

// A kG-module: invertible generator images over a finite field. Images of
// arbitrary elements are rebuilt along the group's BFS words and memoized.
class Representation {
 public:
  // dim passed explicitly: the trivial group has no generators.
  Representation(std::shared_ptr<const PermGroup> grp, FqPtr field, int dim,
                 std::vector<FFMatrix> gen_images, std::string label);

  int dim() const { return dim_; }
  const FqPtr& field() const { return field_; }
  const PermGroup& group() const { return *grp_; }
  const std::shared_ptr<const PermGroup>& group_ptr() const { return grp_; }
  const std::vector<FFMatrix>& gen_images() const { return gen_images_; }
  const std::string& label() const { return label_; }

  const FFMatrix& image(int elem) const;

  const std::optional<PermOrigin>& perm_origin() const { return perm_origin_; }
  void set_perm_origin(PermOrigin o) { perm_origin_ = std::move(o); }

  // image(g * x) == image(g) * image(x) for every generator g and element x;
  // guarantees the generator images satisfy the defining relations.
  void verify_homomorphism() const;

  // Traces of the images at conjugacy class representatives (iso-invariant).
  std::vector<FqEl> fingerprint() const;

 private:
  std::shared_ptr<const PermGroup> grp_;
  FqPtr field_;
  int dim_;
  std::vector<FFMatrix> gen_images_;
  std::string label_;
  std::optional<PermOrigin> perm_origin_;

  struct ImageCache {
    std::mutex mu;
    std::vector<std::unique_ptr<FFMatrix>> by_elem;
  };
  std::shared_ptr<ImageCache> cache_;
};

Representation trivial_rep(std::shared_ptr<const PermGroup> g, const FqPtr& k);
Representation regular_rep(Session& s, std::shared_ptr<const PermGroup> g, const FqPtr& k);

// k[G/H] for the subgroup given by sorted element indices.
Representation perm_module(Session& s, std::shared_ptr<const PermGroup> g, const FqPtr& k,
                           const std::vector<int>& subgroup_elems, const std::string& label);

// Induction along sub (module over sub.grp), with the minimal-representative
// transversal; dim = [G:H] * dim m.
Representation induce(Session& s, std::shared_ptr<const PermGroup> g, const SubgroupGroup& sub,
                      const Representation& m);

// Restriction of a parent-group module to the subgroup.
Representation restrict_rep(const SubgroupGroup& sub, const Representation& m);

// Inflation along the quotient map G -> G/N.
Representation inflate(std::shared_ptr<const PermGroup> g, const QuotientGroup& quo,
                       const Representation& m);

Representation tensor(Session& s, const Representation& a, const Representation& b);

// Multiplicative (tensor) induction: dim = dim(m)^[G:H]; generators permute
// the tensor slots along the transversal and twist each slot by its H-part.
Representation tensor_induce(Session& s, std::shared_ptr<const PermGroup> g,
                             const SubgroupGroup& sub, const Representation& m);

// Basis of {X : X m(g) = n(g) X for all generators}; X maps m -> n and has
// shape dim(n) x dim(m). Spinning formulation (module generators of m).
std::vector<FFMatrix> hom_space(const Representation& m, const Representation& n);

// Same space solved by one dense stacked kernel; cross-check for tests.
std::vector<FFMatrix> hom_space_dense(const Representation& m, const Representation& n);

// Double-coset basis of End(k[G/H]); complete by the standard Hecke argument.
std::vector<FFMatrix> hecke_end_basis(const Representation& permmod);

// Hom(m, permmod) via H-fixed functionals and Hom(permmod, m) via H-fixed
// vectors; both cheap in dim(m).
std::vector<FFMatrix> hom_into_perm(const Representation& m, const Representation& permmod);
std::vector<FFMatrix> hom_from_perm(const Representation& permmod, const Representation& m);

// Greedy generating set of a subgroup, as parent element indices.
std::vector<int> subgroup_generators(const PermGroup& g, const std::vector<int>& elems);

// Action matrices of the subgroup generators of H on m (a module over G).
std::vector<FFMatrix> restricted_gen_images(const Representation& m, const std::vector<int>& hgens);

// Extract the sub-representation on an invariant column space; errors if the
// space is not invariant.
Representation sub_rep(const Representation& m, const FFMatrix& basis_cols, const std::string& label);

}  // namespace tsgreen
