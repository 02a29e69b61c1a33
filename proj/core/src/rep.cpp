#include "tsgreen/rep.hpp"

#include <algorithm>

#include "tsgreen/errors.hpp"
#include "tsgreen/session.hpp"

namespace tsgreen {

namespace {

void check_dim_cap(Session& s, long long dim, const std::string& what) {
  if (dim > s.config().dim_cap)
    throw CapExceeded(what + " has dimension " + std::to_string(dim) + " above the cap " +
                      std::to_string(s.config().dim_cap));
}

// coset_of[parent element] = transversal point whose coset contains it.
std::vector<int> coset_index(const PermGroup& g, const std::vector<int>& subgroup_elems,
                             const std::vector<int>& transversal) {
  std::vector<int> coset_of(g.order(), -1);
  for (int j = 0; j < static_cast<int>(transversal.size()); ++j)
    for (int h : subgroup_elems) coset_of[g.mul(transversal[j], h)] = j;
  for (int x : coset_of)
    if (x < 0) throw InternalCheckFailed("transversal does not cover the group");
  return coset_of;
}

}  // namespace

Representation::Representation(std::shared_ptr<const PermGroup> grp, FqPtr field, int dim,
                               std::vector<FFMatrix> gen_images, std::string label)
    : grp_(std::move(grp)),
      field_(std::move(field)),
      dim_(dim),
      gen_images_(std::move(gen_images)),
      label_(std::move(label)),
      cache_(std::make_shared<ImageCache>()) {
  if (dim_ < 0) throw BadInput("module dimension must be nonnegative");
  if (gen_images_.size() != grp_->gens().size())
    throw InternalCheckFailed("generator image count mismatch in " + label_);
  for (const FFMatrix& m : gen_images_) {
    if (m.rows() != dim_ || m.cols() != dim_)
      throw InternalCheckFailed("generator image shape mismatch in " + label_);
    if (!m.field()->same(*field_)) throw InternalCheckFailed("field mismatch in " + label_);
  }
}

const FFMatrix& Representation::image(int elem) const {
  std::lock_guard<std::mutex> lk(cache_->mu);
  auto& slots = cache_->by_elem;
  if (slots.empty()) slots.resize(grp_->order());
  if (!slots[0]) slots[0] = std::make_unique<FFMatrix>(FFMatrix::identity(field_, dim_));
  if (slots[elem]) return *slots[elem];
  std::vector<int> chain;
  int x = elem;
  while (!slots[x]) {
    chain.push_back(x);
    x = grp_->bfs_parent(x);
  }
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
    const FFMatrix& parent = *slots[grp_->bfs_parent(*it)];
    slots[*it] = std::make_unique<FFMatrix>(gen_images_[grp_->bfs_gen(*it)] * parent);
  }
  return *slots[elem];
}

void Representation::verify_homomorphism() const {
  for (std::size_t gi = 0; gi < gen_images_.size(); ++gi) {
    int gelem = grp_->gens()[gi];
    for (int x = 0; x < grp_->order(); ++x)
      if (!(image(grp_->mul(gelem, x)) == gen_images_[gi] * image(x)))
        throw InternalCheckFailed("generator images do not define a homomorphism in " + label_);
  }
}

std::vector<FqEl> Representation::fingerprint() const {
  std::vector<FqEl> out;
  out.reserve(grp_->conjugacy_classes().size());
  for (const auto& cls : grp_->conjugacy_classes()) out.push_back(image(cls.front()).trace());
  return out;
}

Representation trivial_rep(std::shared_ptr<const PermGroup> g, const FqPtr& k) {
  std::vector<FFMatrix> imgs(g->gens().size(), FFMatrix::identity(k, 1));
  return Representation(std::move(g), k, 1, std::move(imgs), "1");
}

Representation regular_rep(Session& s, std::shared_ptr<const PermGroup> g, const FqPtr& k) {
  std::string label = "k[" + g->name() + "]";
  return perm_module(s, std::move(g), k, {0}, label);
}

Representation perm_module(Session& s, std::shared_ptr<const PermGroup> g, const FqPtr& k,
                           const std::vector<int>& subgroup_elems, const std::string& label) {
  PermOrigin origin;
  origin.subgroup = subgroup_elems;
  origin.transversal = left_transversal(*g, subgroup_elems);
  origin.coset_of = coset_index(*g, subgroup_elems, origin.transversal);
  const int dim = static_cast<int>(origin.transversal.size());
  check_dim_cap(s, dim, label);
  std::vector<FFMatrix> imgs;
  imgs.reserve(g->gens().size());
  for (int gi : g->gens()) {
    FFMatrix m(k, dim, dim);
    for (int j = 0; j < dim; ++j) m.set(origin.coset_of[g->mul(gi, origin.transversal[j])], j, 1);
    imgs.push_back(std::move(m));
  }
  Representation rep(std::move(g), k, dim, std::move(imgs), label);
  rep.set_perm_origin(std::move(origin));
  return rep;
}

Representation induce(Session& s, std::shared_ptr<const PermGroup> g, const SubgroupGroup& sub,
                      const Representation& m) {
  const PermGroup& G = *g;
  std::vector<int> elems = sub.to_parent;
  std::sort(elems.begin(), elems.end());
  std::vector<int> txl = left_transversal(G, elems);
  std::vector<int> coset_of = coset_index(G, elems, txl);
  const int c = static_cast<int>(txl.size());
  const int dm = m.dim();
  const long long dim = static_cast<long long>(c) * dm;
  check_dim_cap(s, dim, "Ind(" + m.label() + ")");
  std::vector<FFMatrix> imgs;
  imgs.reserve(G.gens().size());
  for (int gi : G.gens()) {
    FFMatrix big(m.field(), static_cast<int>(dim), static_cast<int>(dim));
    for (int j = 0; j < c; ++j) {
      int gt = G.mul(gi, txl[j]);
      int i = coset_of[gt];
      int h = G.mul(G.inv(txl[i]), gt);
      int hs = sub.from_parent[h];
      if (hs < 0) throw InternalCheckFailed("coset factorization left the subgroup");
      const FFMatrix& block = m.image(hs);
      for (int r = 0; r < dm; ++r)
        for (int cc = 0; cc < dm; ++cc)
          if (block.at(r, cc)) big.set(i * dm + r, j * dm + cc, block.at(r, cc));
    }
    imgs.push_back(std::move(big));
  }
  return Representation(std::move(g), m.field(), static_cast<int>(dim), std::move(imgs),
                        "Ind(" + m.label() + ")");
}

Representation restrict_rep(const SubgroupGroup& sub, const Representation& m) {
  std::vector<FFMatrix> imgs;
  imgs.reserve(sub.grp->gens().size());
  for (int gi : sub.grp->gens()) imgs.push_back(m.image(sub.to_parent[gi]));
  return Representation(sub.grp, m.field(), m.dim(), std::move(imgs), "Res(" + m.label() + ")");
}

Representation inflate(std::shared_ptr<const PermGroup> g, const QuotientGroup& quo,
                       const Representation& m) {
  std::vector<FFMatrix> imgs;
  imgs.reserve(g->gens().size());
  for (int gi : g->gens()) imgs.push_back(m.image(quo.elem_map[gi]));
  return Representation(std::move(g), m.field(), m.dim(), std::move(imgs),
                        "Infl(" + m.label() + ")");
}

Representation tensor(Session& s, const Representation& a, const Representation& b) {
  if (a.group_ptr().get() != b.group_ptr().get())
    throw InternalCheckFailed("tensor factors live over different groups");
  const long long dim = static_cast<long long>(a.dim()) * b.dim();
  check_dim_cap(s, dim, "(" + a.label() + ")x(" + b.label() + ")");
  std::vector<FFMatrix> imgs;
  imgs.reserve(a.gen_images().size());
  for (std::size_t i = 0; i < a.gen_images().size(); ++i)
    imgs.push_back(a.gen_images()[i].kron(b.gen_images()[i]));
  return Representation(a.group_ptr(), a.field(), static_cast<int>(dim), std::move(imgs),
                        "(" + a.label() + ")x(" + b.label() + ")");
}

Representation tensor_induce(Session& s, std::shared_ptr<const PermGroup> g,
                             const SubgroupGroup& sub, const Representation& m) {
  const PermGroup& G = *g;
  std::vector<int> elems = sub.to_parent;
  std::sort(elems.begin(), elems.end());
  std::vector<int> txl = left_transversal(G, elems);
  std::vector<int> coset_of = coset_index(G, elems, txl);
  const int c = static_cast<int>(txl.size());
  const int dm = m.dim();
  long long dim = 1;
  for (int i = 0; i < c; ++i) {
    dim *= dm;
    if (dim > s.config().dim_cap)
      throw CapExceeded("TensorInd(" + m.label() + ") dimension exceeds the cap");
  }
  const int D = static_cast<int>(dim);
  // tuple index: slot 0 most significant, weight[i] = dm^(c-1-i)
  std::vector<int> weight(c, 1);
  for (int i = c - 2; i >= 0; --i) weight[i] = weight[i + 1] * dm;
  std::vector<FFMatrix> imgs;
  imgs.reserve(G.gens().size());
  const Fq& F = *m.field();
  for (int gi : G.gens()) {
    // g * t_i = t_{sigma(i)} * h_i
    std::vector<int> sigma(c), hblock(c);
    for (int i = 0; i < c; ++i) {
      int gt = G.mul(gi, txl[i]);
      sigma[i] = coset_of[gt];
      int h = G.mul(G.inv(txl[sigma[i]]), gt);
      hblock[i] = sub.from_parent[h];
      if (hblock[i] < 0) throw InternalCheckFailed("coset factorization left the subgroup");
    }
    FFMatrix big(m.field(), D, D);
    std::vector<int> atup(c), btup(c);
    for (int A = 0; A < D; ++A) {
      int rem = A;
      for (int i = 0; i < c; ++i) {
        atup[i] = rem / weight[i];
        rem %= weight[i];
      }
      for (int B = 0; B < D; ++B) {
        rem = B;
        for (int i = 0; i < c; ++i) {
          btup[i] = rem / weight[i];
          rem %= weight[i];
        }
        FqEl prod = 1;
        for (int i = 0; i < c && prod; ++i)
          prod = F.mul(prod, m.image(hblock[i]).at(btup[sigma[i]], atup[i]));
        if (prod) big.set(B, A, prod);
      }
    }
    imgs.push_back(std::move(big));
  }
  return Representation(std::move(g), m.field(), D, std::move(imgs),
                        "TensorInd(" + m.label() + ")");
}

std::vector<FFMatrix> hom_space_dense(const Representation& m, const Representation& n) {
  const int dm = m.dim(), dn = n.dim();
  const FqPtr k = m.field();
  const Fq& F = *k;
  const int vars = dm * dn;  // X[r][c] -> r*dm + c
  const int ngens = static_cast<int>(m.gen_images().size());
  FFMatrix sys(k, ngens * vars, vars);
  for (int gi = 0; gi < ngens; ++gi) {
    const FFMatrix& A = m.gen_images()[gi];
    const FFMatrix& B = n.gen_images()[gi];
    // (X A - B X)[r][j] = sum_c X[r][c] A[c][j] - sum_t B[r][t] X[t][j]
    for (int r = 0; r < dn; ++r)
      for (int j = 0; j < dm; ++j) {
        int row = gi * vars + r * dm + j;
        for (int c = 0; c < dm; ++c)
          if (A.at(c, j)) sys.set(row, r * dm + c, F.add(sys.at(row, r * dm + c), A.at(c, j)));
        for (int t = 0; t < dn; ++t)
          if (B.at(r, t)) sys.set(row, t * dm + j, F.sub(sys.at(row, t * dm + j), B.at(r, t)));
      }
  }
  FFMatrix ker = ff_kernel(sys);
  std::vector<FFMatrix> out;
  out.reserve(ker.cols());
  for (int v = 0; v < ker.cols(); ++v) {
    FFMatrix X(k, dn, dm);
    for (int r = 0; r < dn; ++r)
      for (int c = 0; c < dm; ++c) X.set(r, c, ker.at(r * dm + c, v));
    out.push_back(std::move(X));
  }
  return out;
}

std::vector<FFMatrix> hom_space(const Representation& m, const Representation& n) {
  const int dm = m.dim(), dn = n.dim();
  if (dm == 0 || dn == 0) return {};
  const FqPtr k = m.field();
  const Fq& F = *k;
  const int ngens = static_cast<int>(m.gen_images().size());

  // Spin a module-generator tree for m. Column j of the spin basis carries an
  // expression E_j: a dn x (s*dn) block row mapping the unknown generator
  // images (u_0..u_{s-1}) to the value of the hom at that column.
  EchelonSolver span(k, dm, true);
  std::vector<std::vector<FqEl>> cols;          // spin basis vectors, insert order
  std::vector<int> root_of;                     // -1 for roots, else parent col
  std::vector<int> gen_of;                      // generator used from the parent
  std::vector<int> seed_of;                     // module-generator id of each root
  struct Constraint {
    int gen, col;
    std::vector<FqEl> coords;  // coordinates of rho(gen)*b_col over the spin basis
  };
  std::vector<Constraint> cons;
  int nseeds = 0;
  for (int e = 0; e < dm && span.rank() < dm; ++e) {
    std::vector<FqEl> seed(dm, 0);
    seed[e] = 1;
    if (span.reduce(seed).in_span) continue;
    span.insert(seed);
    cols.push_back(seed);
    root_of.push_back(-1);
    gen_of.push_back(-1);
    seed_of.push_back(nseeds++);
    for (std::size_t j = cols.size() - 1; j < cols.size(); ++j) {
      for (int gi = 0; gi < ngens; ++gi) {
        std::vector<FqEl> w = m.gen_images()[gi].apply(cols[j]);
        auto red = span.reduce(w);
        if (red.in_span) {
          cons.push_back({gi, static_cast<int>(j), std::move(red.coords)});
        } else {
          span.insert(w);
          cols.push_back(std::move(w));
          root_of.push_back(static_cast<int>(j));
          gen_of.push_back(gi);
          seed_of.push_back(-1);
        }
      }
    }
  }
  const int s = nseeds;
  const int vars = s * dn;

  // E_j blocks, built along the tree.
  std::vector<FFMatrix> expr(cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (root_of[j] < 0) {
      FFMatrix e(k, dn, vars);
      for (int r = 0; r < dn; ++r) e.set(r, seed_of[j] * dn + r, 1);
      expr[j] = std::move(e);
    } else {
      expr[j] = n.gen_images()[gen_of[j]] * expr[root_of[j]];
    }
  }

  FFMatrix sys(k, static_cast<int>(cons.size()) * dn, vars);
  for (std::size_t ci = 0; ci < cons.size(); ++ci) {
    FFMatrix lhs = n.gen_images()[cons[ci].gen] * expr[cons[ci].col];
    for (std::size_t l = 0; l < cons[ci].coords.size(); ++l) {
      FqEl c = cons[ci].coords[l];
      if (!c) continue;
      lhs = lhs - expr[l].scale(c);
    }
    for (int r = 0; r < dn; ++r)
      for (int v = 0; v < vars; ++v)
        if (lhs.at(r, v)) sys.set(static_cast<int>(ci) * dn + r, v, lhs.at(r, v));
  }
  FFMatrix ker = ff_kernel(sys);

  FFMatrix B = FFMatrix::from_cols(k, dm, cols);
  FFMatrix Binv = ff_inverse(B);
  std::vector<FFMatrix> out;
  out.reserve(ker.cols());
  for (int v = 0; v < ker.cols(); ++v) {
    std::vector<FqEl> u = ker.col(v);
    std::vector<std::vector<FqEl>> phicols(cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) phicols[j] = expr[j].apply(u);
    FFMatrix phiB = FFMatrix::from_cols(k, dn, phicols);
    out.push_back(phiB * Binv);
  }
  return out;
}

std::vector<FFMatrix> hecke_end_basis(const Representation& permmod) {
  if (!permmod.perm_origin()) throw InternalCheckFailed("Hecke basis needs a permutation module");
  const PermOrigin& o = *permmod.perm_origin();
  const PermGroup& G = permmod.group();
  const FqPtr k = permmod.field();
  const int c = permmod.dim();
  // label the H-double cosets, in order of least element
  std::vector<int> dcos_of(G.order(), -1);
  int ndc = 0;
  for (int e = 0; e < G.order(); ++e) {
    if (dcos_of[e] >= 0) continue;
    int id = ndc++;
    std::vector<int> frontier{e};
    dcos_of[e] = id;
    while (!frontier.empty()) {
      std::vector<int> next;
      for (int x : frontier)
        for (int h : o.subgroup) {
          for (int y : {G.mul(h, x), G.mul(x, h)})
            if (dcos_of[y] < 0) {
              dcos_of[y] = id;
              next.push_back(y);
            }
        }
      frontier = std::move(next);
    }
  }
  std::vector<FFMatrix> out(ndc, FFMatrix(k, c, c));
  for (int i = 0; i < c; ++i)
    for (int j = 0; j < c; ++j) {
      int d = dcos_of[G.mul(G.inv(o.transversal[i]), o.transversal[j])];
      out[d].set(i, j, 1);
    }
  // the double coset of the identity is H itself and must give the identity map
  if (!(out[dcos_of[0]] == FFMatrix::identity(k, c)))
    throw InternalCheckFailed("Hecke basis lost the identity endomorphism");
  return out;
}

std::vector<FFMatrix> hom_into_perm(const Representation& m, const Representation& permmod) {
  if (!permmod.perm_origin()) throw InternalCheckFailed("fixed-point hom needs a permutation module");
  const PermOrigin& o = *permmod.perm_origin();
  const PermGroup& G = m.group();
  const FqPtr k = m.field();
  std::vector<int> hgens = subgroup_generators(G, o.subgroup);
  // functionals fixed by H: lambda * rho(h) = lambda, i.e. (rho(h)^T - I) lambda^T = 0
  FFMatrix sys(k, static_cast<int>(hgens.size()) * m.dim(), m.dim());
  for (std::size_t t = 0; t < hgens.size(); ++t) {
    FFMatrix a = m.image(hgens[t]).transpose() - FFMatrix::identity(k, m.dim());
    for (int r = 0; r < m.dim(); ++r)
      for (int c2 = 0; c2 < m.dim(); ++c2)
        if (a.at(r, c2)) sys.set(static_cast<int>(t) * m.dim() + r, c2, a.at(r, c2));
  }
  FFMatrix ker = ff_kernel(sys);
  std::vector<FFMatrix> out;
  out.reserve(ker.cols());
  for (int v = 0; v < ker.cols(); ++v) {
    std::vector<FqEl> lambda = ker.col(v);
    FFMatrix phi(k, permmod.dim(), m.dim());
    for (int j = 0; j < permmod.dim(); ++j) {
      std::vector<FqEl> row = m.image(G.inv(o.transversal[j])).transpose().apply(lambda);
      for (int c2 = 0; c2 < m.dim(); ++c2) phi.set(j, c2, row[c2]);
    }
    out.push_back(std::move(phi));
  }
  return out;
}

std::vector<FFMatrix> hom_from_perm(const Representation& permmod, const Representation& m) {
  if (!permmod.perm_origin()) throw InternalCheckFailed("fixed-point hom needs a permutation module");
  const PermOrigin& o = *permmod.perm_origin();
  const PermGroup& G = m.group();
  const FqPtr k = m.field();
  std::vector<int> hgens = subgroup_generators(G, o.subgroup);
  FFMatrix sys(k, static_cast<int>(hgens.size()) * m.dim(), m.dim());
  for (std::size_t t = 0; t < hgens.size(); ++t) {
    FFMatrix a = m.image(hgens[t]) - FFMatrix::identity(k, m.dim());
    for (int r = 0; r < m.dim(); ++r)
      for (int c2 = 0; c2 < m.dim(); ++c2)
        if (a.at(r, c2)) sys.set(static_cast<int>(t) * m.dim() + r, c2, a.at(r, c2));
  }
  FFMatrix ker = ff_kernel(sys);
  std::vector<FFMatrix> out;
  out.reserve(ker.cols());
  for (int v = 0; v < ker.cols(); ++v) {
    std::vector<FqEl> u = ker.col(v);
    std::vector<std::vector<FqEl>> cols(permmod.dim());
    for (int j = 0; j < permmod.dim(); ++j) cols[j] = m.image(o.transversal[j]).apply(u);
    out.push_back(FFMatrix::from_cols(k, m.dim(), cols));
  }
  return out;
}

std::vector<int> subgroup_generators(const PermGroup& g, const std::vector<int>& elems) {
  std::vector<int> gens;
  std::vector<int> cl{0};
  for (int x : elems) {
    if (std::binary_search(cl.begin(), cl.end(), x)) continue;
    gens.push_back(x);
    cl = subgroup_closure(g, gens);
    if (cl.size() == elems.size()) break;
  }
  return gens;
}

std::vector<FFMatrix> restricted_gen_images(const Representation& m, const std::vector<int>& hgens) {
  std::vector<FFMatrix> out;
  out.reserve(hgens.size());
  for (int h : hgens) out.push_back(m.image(h));
  return out;
}

Representation sub_rep(const Representation& m, const FFMatrix& basis_cols, const std::string& label) {
  std::vector<FFMatrix> imgs;
  imgs.reserve(m.gen_images().size());
  for (const FFMatrix& a : m.gen_images()) {
    auto x = ff_solve_mat(basis_cols, a * basis_cols);
    if (!x) throw InternalCheckFailed("summand subspace is not invariant in " + m.label());
    imgs.push_back(std::move(*x));
  }
  return Representation(m.group_ptr(), m.field(), basis_cols.cols(), std::move(imgs), label);
}

}  // namespace tsgreen
