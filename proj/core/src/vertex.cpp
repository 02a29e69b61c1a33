#include "tsgreen/vertex.hpp"

#include <string>

#include "tsgreen/errors.hpp"
#include "tsgreen/session.hpp"

namespace tsgreen {

namespace {

// Relative trace from H: Tr(phi) = sum over the left transversal of
// rho(t) phi rho(t)^{-1}.
FFMatrix relative_trace(const Representation& m, const std::vector<int>& transversal,
                        const FFMatrix& phi) {
  const PermGroup& g = m.group();
  FFMatrix acc(m.field(), m.dim(), m.dim());
  for (int t : transversal) acc = acc + m.image(t) * phi * m.image(g.inv(t));
  return acc;
}

}  // namespace

HigmanCertificate higman_projective(Session& s, const Representation& m,
                                    const std::vector<int>& subgroup_elems) {
  auto g = m.group_ptr();
  auto lat = s.lattice(*g);
  int cls = lat->class_of(subgroup_elems);
  std::shared_ptr<const SubgroupGroup> sub;
  if (lat->classes[cls].rep == subgroup_elems) {
    sub = s.subgroup(*g, cls);  // cached class representative
  } else {
    sub = std::make_shared<SubgroupGroup>(
        make_subgroup_group(*g, subgroup_elems, "H<" + g->name() + ">"));
  }
  Representation resm = restrict_rep(*sub, m);
  auto endh = hom_space(resm, resm);
  auto transversal = left_transversal(*g, subgroup_elems);

  EchelonSolver span(m.field(), m.dim() * m.dim(), true);
  std::vector<FFMatrix> traces;
  for (const auto& phi : endh) {
    traces.push_back(relative_trace(m, transversal, phi));
    span.insert(traces.back().data());
  }
  FFMatrix id = FFMatrix::identity(m.field(), m.dim());
  auto red = span.reduce(id.data());
  if (!red.in_span) return {false, {}};
  FFMatrix theta(m.field(), m.dim(), m.dim());
  for (std::size_t i = 0; i < endh.size(); ++i)
    if (red.coords[i]) theta = theta + endh[i].scale(red.coords[i]);
  if (!(relative_trace(m, transversal, theta) == id))
    throw InternalCheckFailed("relative trace witness does not produce the identity");
  return {true, theta};
}

std::vector<int> p_subgroup_classes(Session& s, const PermGroup& g, int p) {
  auto lat = s.lattice(g);
  std::vector<int> out;
  for (std::size_t i = 0; i < lat->classes.size(); ++i) {
    int o = lat->classes[i].order;
    while (o % p == 0) o /= p;
    if (o == 1) out.push_back(static_cast<int>(i));
  }
  return out;  // lattice order is (order, lex), so this is ascending
}

VertexReport vertex_report(Session& s, const Representation& m) {
  auto g = m.group_ptr();
  const FqPtr& k = m.field();
  auto lat = s.lattice(*g);
  VertexReport out;
  for (int cls : p_subgroup_classes(s, *g, k->p())) {
    auto cert = higman_projective(s, m, lat->classes[cls].rep);
    if (cert.projective) {
      out.vertex_class = cls;
      out.vertex_order = lat->classes[cls].order;
      break;
    }
  }
  if (out.vertex_class < 0)
    throw InternalCheckFailed("no p-subgroup certifies relative projectivity");

  auto pdec = s.perm_decomposition(g, k, out.vertex_class);
  if (find_class(*pdec, m, m.fingerprint())) {
    out.trivial_source = true;
    out.source_dim = 1;
    return out;
  }

  // Source dimension: the smallest indecomposable summand S of the restriction
  // to the vertex whose induction has m as a summand.
  auto sub = s.subgroup(*g, out.vertex_class);
  Decomposition resd = decompose(s, restrict_rep(*sub, m));
  for (const auto& cls : resd.classes) {
    if (cls.rep.dim() * (g->order() / out.vertex_order) > s.config().dim_cap) continue;
    Decomposition indd = decompose(s, induce(s, g, *sub, cls.rep));
    if (find_class(indd, m, m.fingerprint())) {
      out.source_dim = cls.rep.dim();
      break;
    }
  }
  return out;
}

}  // namespace tsgreen
