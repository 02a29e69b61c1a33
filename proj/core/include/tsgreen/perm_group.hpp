#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "tsgreen/perm.hpp"

namespace tsgreen {

// Finite permutation group materialized as its full element list.
// Elements are lex-sorted image vectors, so index 0 is always the identity.
class PermGroup {
 public:
  PermGroup(int degree, std::vector<Perm> gens, std::string name, int order_cap);

  int degree() const { return degree_; }
  int order() const { return static_cast<int>(elements_.size()); }
  const std::string& name() const { return name_; }
  const std::vector<Perm>& elements() const { return elements_; }
  const Perm& elem(int i) const { return elements_[i]; }
  const std::vector<int>& gens() const { return gen_idx_; }

  int mul(int a, int b) const { return cayley_[a * order() + b]; }
  int inv(int a) const { return inv_[a]; }
  int conj(int a, int g) const { return mul(mul(g, a), inv(g)); }
  int elem_order(int a) const { return elem_order_[a]; }
  int index_of(const Perm& p) const;  // -1 if not an element

  // BFS factorization over generators: x = gens()[bfs_gen(x)] * bfs_parent(x).
  int bfs_parent(int x) const { return bfs_parent_[x]; }
  int bfs_gen(int x) const { return bfs_gen_[x]; }

  const std::vector<std::vector<int>>& conjugacy_classes() const { return conj_classes_; }
  int class_of_elem(int x) const { return class_of_elem_[x]; }

  bool is_abelian() const;
  bool is_cyclic() const;
  int exponent() const;

  // Stable identifier for caching: degree, order and a hash of the element table.
  const std::string& key() const { return key_; }

 private:
  int degree_;
  std::string name_;
  std::vector<Perm> elements_;
  std::vector<int> gen_idx_;
  std::vector<int> cayley_;
  std::vector<int> inv_;
  std::vector<int> elem_order_;
  std::vector<int> bfs_parent_;
  std::vector<int> bfs_gen_;
  std::vector<std::vector<int>> conj_classes_;
  std::vector<int> class_of_elem_;
  std::string key_;
};

// Closure of a seed set of element indices inside G.
std::vector<int> subgroup_closure(const PermGroup& g, std::vector<int> seed);
bool is_cyclic_subset(const PermGroup& g, const std::vector<int>& elems);

struct SubgroupClass {
  std::vector<int> rep;                   // sorted element indices, lex-least member
  int order = 0;
  bool normal = false;
  std::vector<std::vector<int>> members;  // all conjugates, lex-sorted
};

struct SubgroupLattice {
  std::vector<SubgroupClass> classes;  // sorted by (order, lex rep)
  std::map<std::vector<int>, int> index;

  int class_of(const std::vector<int>& elems) const;
  int trivial_class() const { return 0; }
  int full_class() const { return static_cast<int>(classes.size()) - 1; }
};

SubgroupLattice build_subgroup_lattice(const PermGroup& g);

// Smallest power of r dividing n away: returns r-part of n.
int int_p_part(int n, int r);

// O^q(G): subgroup generated by all elements of order prime to q.
std::vector<int> o_upper(const PermGroup& g, int q);
// O_r(G): intersection of the Sylow r-subgroups.
std::vector<int> o_lower(const PermGroup& g, const SubgroupLattice& lat, int r);
// The Sylow class index for prime r (class of subgroups of full r-power order).
int sylow_class(const PermGroup& g, const SubgroupLattice& lat, int r);

// Subgroup repackaged as a standalone group on the same points.
struct SubgroupGroup {
  std::shared_ptr<const PermGroup> grp;
  std::vector<int> to_parent;    // subgroup element index -> parent index
  std::vector<int> from_parent;  // parent index -> subgroup index or -1
};

SubgroupGroup make_subgroup_group(const PermGroup& g, const std::vector<int>& elems,
                                  const std::string& name);

// Quotient by a normal subgroup, acting on its cosets.
struct QuotientGroup {
  std::shared_ptr<const PermGroup> grp;
  std::vector<int> elem_map;  // parent element index -> quotient element index
};

QuotientGroup make_quotient(const PermGroup& g, const std::vector<int>& normal_elems,
                            const std::string& name);

// Minimal (lex-least) left coset representatives of the subgroup given by elems.
std::vector<int> left_transversal(const PermGroup& g, const std::vector<int>& elems);

}  // namespace tsgreen
