#include "tsgreen/ts_basis.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "tsgreen/errors.hpp"
#include "tsgreen/session.hpp"

namespace tsgreen {

namespace {

// Iso-invariant key: dimension, trace fingerprint, hom dimensions into each
// p-subgroup permutation module, and the End(M) certificate dimensions.
std::string make_canon_key(const Representation& v, const IndecCertificate& cert,
                           const std::vector<FqEl>& fp,
                           const std::vector<Representation>& perm_mods) {
  std::string out = "d" + std::to_string(v.dim()) + "|f";
  for (FqEl c : fp) out += ":" + std::to_string(c);
  out += "|h";
  for (const auto& xp : perm_mods)
    out += ":" + std::to_string(hom_into_perm(v, xp).size());
  out += "|e:" + std::to_string(cert.end_dim) + ":" + std::to_string(cert.radical_dim) +
         ":" + std::to_string(cert.quotient_dim);
  return out;
}

bool is_trivial_module(const Representation& v) {
  if (v.dim() != 1) return false;
  for (const auto& gi : v.gen_images())
    if (gi.at(0, 0) != 1) return false;
  return true;
}

int match_basis(const TSBasis& b, const Representation& v, const std::vector<FqEl>& fp) {
  for (int i = 0; i < b.size(); ++i) {
    const TSBasisElement& e = b.elems[i];
    if (e.rep.dim() != v.dim() || e.fingerprint != fp) continue;
    if (iso_indec(e.rep, v)) return i;
  }
  return -1;
}

}  // namespace

Int TSBasis::dim_of(const ClassVector& v) const {
  Int total = 0;
  for (std::size_t i = 0; i < v.size(); ++i) total += v[i] * elems[i].rep.dim();
  return total;
}

TSBasis build_ts_basis(Session& s, std::shared_ptr<const PermGroup> g, const FqPtr& k) {
  TSBasis b{g, k, {}};
  auto lat = s.lattice(*g);
  auto pcls = p_subgroup_classes(s, *g, k->p());

  std::vector<Representation> perm_mods;
  perm_mods.reserve(pcls.size());
  for (int cls : pcls)
    perm_mods.push_back(perm_module(s, g, k, lat->classes[cls].rep,
                                    "k[" + g->name() + "/P" + std::to_string(cls) + "]"));

  for (std::size_t ci = 0; ci < pcls.size(); ++ci) {
    int cls = pcls[ci];
    auto dec = s.perm_decomposition(g, k, cls);
    for (const auto& sm : dec->classes) {
      auto fp = sm.rep.fingerprint();
      if (match_basis(b, sm.rep, fp) >= 0) continue;
      VertexReport vr = vertex_report(s, sm.rep);
      if (vr.vertex_class != cls)
        throw InternalCheckFailed("first appearance of a summand differs from its vertex");
      if (!vr.trivial_source)
        throw InternalCheckFailed("permutation-module summand reported non-trivial source");
      TSBasisElement el{sm.rep, sm.cert, vr, fp,
                        make_canon_key(sm.rep, sm.cert, fp, perm_mods)};
      b.elems.push_back(std::move(el));
    }
  }

  int triv = -1;
  for (int i = 0; i < b.size(); ++i)
    if (is_trivial_module(b.elems[i].rep)) {
      if (triv >= 0) throw InternalCheckFailed("two trivial modules in the basis");
      triv = i;
    }
  if (triv < 0) throw InternalCheckFailed("trivial module missing from the basis");

  std::vector<int> order(b.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
    if (x == triv || y == triv) return x == triv && y != triv;
    const TSBasisElement& a = b.elems[x];
    const TSBasisElement& c = b.elems[y];
    if (a.rep.dim() != c.rep.dim()) return a.rep.dim() < c.rep.dim();
    if (a.vertex.vertex_order != c.vertex.vertex_order)
      return a.vertex.vertex_order < c.vertex.vertex_order;
    if (a.canon_key != c.canon_key) return a.canon_key < c.canon_key;
    return x < y;
  });
  std::vector<TSBasisElement> sorted;
  sorted.reserve(b.size());
  for (int i : order) sorted.push_back(std::move(b.elems[i]));
  b.elems = std::move(sorted);
  return b;
}

ClassVector classify_decomposition(Session& s, const TSBasis& b, const Decomposition& d) {
  ClassVector out(b.size(), 0);
  for (std::size_t c = 0; c < d.classes.size(); ++c) {
    const Summand& sm = d.classes[c];
    int idx = match_basis(b, sm.rep, sm.fingerprint);
    if (idx < 0) {
      VertexReport vr = vertex_report(s, sm.rep);
      if (vr.trivial_source)
        throw Error("unknown_summand",
                    "trivial-source summand of dim " + std::to_string(sm.rep.dim()) +
                        " missing from the basis");
      throw Error("not_trivial_source",
                  "summand of dim " + std::to_string(sm.rep.dim()) +
                      " has source dim " + std::to_string(vr.source_dim));
    }
    out[idx] += d.multiplicities[c];
  }
  return out;
}

ClassVector classify_in_basis(Session& s, const TSBasis& b, const Representation& m) {
  if (m.group().key() != b.group->key())
    throw BadInput("module over " + m.group().name() + " classified against a basis for " +
                   b.group->name());
  Decomposition d = decompose(s, m);
  return classify_decomposition(s, b, d);
}

IntMatrix induction_matrix(Session& s, const TSBasis& bk, const TSBasis& bg,
                           const SubgroupGroup& sub) {
  IntMatrix out(bg.size(), bk.size());
  for (int j = 0; j < bk.size(); ++j) {
    Representation ind = induce(s, bg.group, sub, bk.elems[j].rep);
    ClassVector col = classify_in_basis(s, bg, ind);
    for (int i = 0; i < bg.size(); ++i) out.at(i, j) = col[i];
  }
  return out;
}

IntMatrix restriction_matrix(Session& s, const TSBasis& bg, const TSBasis& bk,
                             const SubgroupGroup& sub) {
  IntMatrix out(bk.size(), bg.size());
  for (int j = 0; j < bg.size(); ++j) {
    Representation res = restrict_rep(sub, bg.elems[j].rep);
    ClassVector col = classify_in_basis(s, bk, res);
    for (int i = 0; i < bk.size(); ++i) out.at(i, j) = col[i];
  }
  return out;
}

namespace {

// Tensor of two coset permutation modules as a permutation module on coset
// pairs: one summand k[G/stab] per orbit, so no matrix decomposition is
// needed (this covers every product over a p-group).
ClassVector perm_pair_product(Session& s, const TSBasis& b, const PermOrigin& oa,
                              const PermOrigin& ob) {
  const PermGroup& g = *b.group;
  auto lat = s.lattice(g);
  int na = static_cast<int>(oa.transversal.size());
  int nb = static_cast<int>(ob.transversal.size());
  ClassVector out(b.size(), 0);
  std::vector<char> seen(static_cast<std::size_t>(na) * nb, 0);
  for (int u = 0; u < na; ++u)
    for (int v = 0; v < nb; ++v) {
      if (seen[static_cast<std::size_t>(u) * nb + v]) continue;
      std::vector<int> stab;
      for (int x = 0; x < g.order(); ++x) {
        int iu = oa.coset_of[g.mul(x, oa.transversal[u])];
        int iv = ob.coset_of[g.mul(x, ob.transversal[v])];
        seen[static_cast<std::size_t>(iu) * nb + iv] = 1;
        if (iu == u && iv == v) stab.push_back(x);
      }
      int cls = lat->class_of(stab);
      ClassVector part = classify_decomposition(s, b, *s.perm_decomposition(b.group, b.field, cls));
      out = class_add(out, part);
    }
  return out;
}

}  // namespace

MultTable build_mult_table(Session& s, const TSBasis& b) {
  const int n = b.size();
  MultTable t;
  t.tables.assign(n, IntMatrix(n, n));
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      ClassVector col;
      if (i == 0 || j == 0) {
        // Tensoring with the trivial module is the identity.
        col.assign(n, 0);
        col[i == 0 ? j : i] = 1;
      } else if (b.elems[i].rep.perm_origin() && b.elems[j].rep.perm_origin()) {
        col = perm_pair_product(s, b, *b.elems[i].rep.perm_origin(),
                                *b.elems[j].rep.perm_origin());
      } else {
        Representation prod = tensor(s, b.elems[i].rep, b.elems[j].rep);
        col = classify_in_basis(s, b, prod);
      }
      for (int l = 0; l < n; ++l) {
        t.tables[i].at(l, j) = col[l];
        t.tables[j].at(l, i) = col[l];
      }
    }
  }
  return t;
}

ClassVector class_add(const ClassVector& a, const ClassVector& b) {
  if (a.size() != b.size()) throw BadInput("class vector sizes differ");
  ClassVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

ClassVector class_sub(const ClassVector& a, const ClassVector& b) {
  if (a.size() != b.size()) throw BadInput("class vector sizes differ");
  ClassVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

ClassVector class_mul(const MultTable& t, const ClassVector& a, const ClassVector& b) {
  const std::size_t n = t.tables.size();
  if (a.size() != n || b.size() != n) throw BadInput("class vector sizes differ");
  ClassVector out(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (b[j] == 0) continue;
      Int c = a[i] * b[j];
      for (std::size_t l = 0; l < n; ++l)
        out[l] += c * t.tables[i].at(static_cast<int>(l), static_cast<int>(j));
    }
  }
  return out;
}

}  // namespace tsgreen
