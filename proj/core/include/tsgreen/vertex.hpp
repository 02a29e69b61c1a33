#pragma once

#include <optional>
#include <vector>

#include "tsgreen/decompose.hpp"
#include "tsgreen/rep.hpp"

namespace tsgreen {

class Session;

struct HigmanCertificate {
  bool projective = false;  // id in the image of the relative trace from H
  FFMatrix witness;         // theta with Tr_H^G(theta) = id (when projective)
};

// Relative projectivity of m with respect to the subgroup class elements.
HigmanCertificate higman_projective(Session& s, const Representation& m,
                                    const std::vector<int>& subgroup_elems);

struct VertexReport {
  int vertex_class = -1;  // subgroup class index (a p-group class)
  int vertex_order = 0;
  bool trivial_source = false;
  int source_dim = 0;  // 1 when trivial source
};

// Vertex by the minimal-order Higman scan over p-subgroup classes; trivial
// source decided by summand matching against perm_module(G, vertex).
VertexReport vertex_report(Session& s, const Representation& m);

// Subgroup class indices of p-subgroups, ascending by order then lex.
std::vector<int> p_subgroup_classes(Session& s, const PermGroup& g, int p);

}  // namespace tsgreen
