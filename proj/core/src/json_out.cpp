#include "tsgreen/json_out.hpp"

#include <limits>
#include <sstream>

#include "json.hpp"

#include "tsgreen/session.hpp"
#include "tsgreen/version.hpp"
#include "tsgreen/vertex.hpp"

namespace tsgreen {

namespace {

using ojson = nlohmann::ordered_json;

ojson json_int(const Int& v) {
  static const Int lo = std::numeric_limits<std::int64_t>::min();
  static const Int hi = std::numeric_limits<std::int64_t>::max();
  if (v >= lo && v <= hi) return ojson(static_cast<std::int64_t>(v));
  return ojson(v.str());
}

ojson json_int_vec(const std::vector<Int>& v) {
  ojson a = ojson::array();
  for (const auto& x : v) a.push_back(json_int(x));
  return a;
}

ojson json_field(const FqPtr& k) {
  ojson f;
  f["name"] = k->name();
  f["p"] = k->p();
  f["d"] = k->d();
  f["modulus"] = k->modulus();
  return f;
}

ojson envelope(const RunConfig& cfg) {
  ojson e;
  e["tool"] = "tsgreen";
  e["version"] = kVersion;
  e["seed"] = cfg.seed;
  e["caps"] = {{"order", cfg.order_cap}, {"dim", cfg.dim_cap}};
  return e;
}

ojson envelope(const RunConfig& cfg, const FqPtr& k) {
  ojson e = envelope(cfg);
  e["field"] = json_field(k);
  return e;
}

ojson json_matrix(const FFMatrix& m) {
  ojson rows = ojson::array();
  for (int i = 0; i < m.rows(); ++i) {
    ojson row = ojson::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

ojson json_gen_images(const Representation& r) {
  ojson out = ojson::array();
  for (const auto& gi : r.gen_images()) out.push_back(json_matrix(gi));
  return out;
}

ojson json_int_matrix(const IntMatrix& m) {
  ojson rows = ojson::array();
  for (int i = 0; i < m.rows(); ++i) {
    ojson row = ojson::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(json_int(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

ojson json_group(const PermGroup& g) {
  ojson out;
  out["name"] = g.name();
  out["order"] = g.order();
  out["degree"] = g.degree();
  return out;
}

ojson json_summand(const Summand& sm, const VertexReport& vr, bool emit_matrices) {
  ojson e;
  e["dim"] = sm.rep.dim();
  e["vertex_order"] = vr.vertex_order;
  e["vertex_class"] = vr.vertex_class;
  e["trivial_source"] = vr.trivial_source;
  e["source_dim"] = vr.source_dim;
  e["end_dim"] = sm.cert.end_dim;
  e["radical_dim"] = sm.cert.radical_dim;
  e["quotient_dim"] = sm.cert.quotient_dim;
  e["absolutely_indecomposable"] = sm.cert.absolutely_indecomposable;
  e["fingerprint"] = sm.fingerprint;
  if (emit_matrices) e["gen_images"] = json_gen_images(sm.rep);
  return e;
}

std::string dump(const ojson& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string classify_json(const RunConfig& cfg, const PermGroup& g, const FqPtr& k,
                          const DressReport& dress, const std::vector<int>& dress_qs) {
  ojson j = envelope(cfg, k);
  j["group"] = json_group(g);
  ojson p;
  p["k_dress"] = dress.k_dress;
  p["dr_p_star"] = dress.dr_p_star;
  p["reduced_order"] = dress.reduced_order;
  p["o_p_order"] = static_cast<int>(dress.o_p.size());
  p["dress_primes"] = dress_qs;
  if (dress.k_dress) {
    ojson w;
    w["q"] = dress.reduced.q;
    w["m"] = dress.reduced.m;
    w["exponents"] = dress.reduced.exponents;
    p["witness"] = std::move(w);
  }
  j["classification"] = std::move(p);
  return dump(j);
}

std::string imset_json(const RunConfig& cfg, const FqPtr& k, int m,
                       const std::vector<int>& iset) {
  ojson j = envelope(cfg, k);
  j["m"] = m;
  j["generator"] = m == 1 ? 0 : k->q() % m;
  j["index_set"] = iset;
  return dump(j);
}

std::string ts_basis_json(Session& s, const TSBasis& b, bool emit_matrices) {
  ojson j = envelope(s.config(), b.field);
  j["group"] = json_group(*b.group);
  ojson arr = ojson::array();
  for (int i = 0; i < b.size(); ++i) {
    const TSBasisElement& el = b.elems[i];
    ojson e;
    e["index"] = i;
    e["dim"] = el.rep.dim();
    e["vertex_order"] = el.vertex.vertex_order;
    e["vertex_class"] = el.vertex.vertex_class;
    e["end_dim"] = el.cert.end_dim;
    e["quotient_dim"] = el.cert.quotient_dim;
    e["absolutely_indecomposable"] = el.cert.absolutely_indecomposable;
    e["fingerprint"] = el.fingerprint;
    e["canon_key"] = el.canon_key;
    if (emit_matrices) e["gen_images"] = json_gen_images(el.rep);
    arr.push_back(std::move(e));
  }
  j["size"] = b.size();
  j["basis"] = std::move(arr);
  if (emit_matrices) {
    auto lat = s.lattice(*b.group);
    int full = static_cast<int>(lat->classes.size()) - 1;
    ojson subs = ojson::array();
    for (int cls = 0; cls < full; ++cls) {
      auto sub = s.subgroup(*b.group, cls);
      auto bk = s.basis(sub->grp, b.field);
      ojson e;
      e["subgroup_class"] = cls;
      e["subgroup_order"] = lat->classes[cls].order;
      e["basis_size"] = bk->size();
      e["induction"] = json_int_matrix(induction_matrix(s, *bk, b, *sub));
      e["restriction"] = json_int_matrix(restriction_matrix(s, b, *bk, *sub));
      subs.push_back(std::move(e));
    }
    j["subgroups"] = std::move(subs);
  }
  return dump(j);
}

std::string decompose_json(Session& s, const FqPtr& k, const std::string& module_desc,
                           const Decomposition& d, bool emit_matrices) {
  ojson j = envelope(s.config(), k);
  j["module"] = module_desc;
  j["parent_dim"] = d.parent_dim;
  ojson arr = ojson::array();
  for (std::size_t i = 0; i < d.classes.size(); ++i) {
    VertexReport vr = vertex_report(s, d.classes[i].rep);
    ojson e = json_summand(d.classes[i], vr, emit_matrices);
    e["multiplicity"] = d.multiplicities[i];
    arr.push_back(std::move(e));
  }
  j["classes"] = std::move(arr);
  j["blocks"] = d.block_classes;
  return dump(j);
}

std::string primordial_json(Session& s, const std::shared_ptr<const PermGroup>& g,
                            const FqPtr& k, const PrimordialVerdict& v) {
  ojson j = envelope(s.config(), k);
  j["group"] = json_group(*g);
  j["primordial"] = v.is_primordial;
  j["identity_in_t"] = v.identity_in_t;
  j["lattice_full"] = v.lattice_full;
  j["basis_size"] = v.basis_size;
  j["snf_divisors"] = json_int_vec(v.snf_divisors);
  if (!v.witness.empty()) j["witness"] = json_int_vec(v.witness);
  auto lat = s.lattice(*g);
  ojson cols = ojson::array();
  for (const auto& col : v.lattice.provenance) {
    ojson c;
    c["subgroup_class"] = col.subgroup_class;
    c["subgroup_order"] = lat->classes[col.subgroup_class].order;
    c["basis_index"] = col.basis_index;
    cols.push_back(std::move(c));
  }
  j["columns"] = std::move(cols);
  j["matrix"] = json_int_matrix(v.lattice.matrix);
  return dump(j);
}

std::string certificate_json(const RunConfig& cfg, const FqPtr& k, const Prop35Certificate& c) {
  ojson j = envelope(cfg, k);
  j["r"] = c.r;
  j["q"] = c.q;
  j["n"] = c.n;
  j["a"] = c.a;
  j["trivial_multiplicity"] = c.trivial_multiplicity;
  ojson arr = ojson::array();
  for (std::size_t i = 0; i < c.summand_dims.size(); ++i) {
    ojson e;
    e["dim"] = c.summand_dims[i];
    e["cover_subgroup_class"] = c.cover_subgroup[i];
    e["cover_basis_index"] = c.cover_basis_index[i];
    arr.push_back(std::move(e));
  }
  j["summands"] = std::move(arr);
  j["witness"] = json_int_vec(c.witness);
  return dump(j);
}

std::string theorem_json(const RunConfig& cfg, const TheoremReport& r) {
  ojson j = envelope(cfg);
  j["entries"] = static_cast<int>(r.rows.size());
  j["all_agree"] = r.all_agree;
  ojson rows = ojson::array();
  for (const auto& row : r.rows) {
    ojson e;
    e["group"] = row.group;
    e["order"] = row.order;
    e["p"] = row.p;
    e["field"] = row.field;
    e["k_dress"] = row.k_dress;
    e["primordial"] = row.primordial;
    e["agree"] = row.agree;
    e["dress_q"] = row.dress_q;
    rows.push_back(std::move(e));
  }
  j["rows"] = std::move(rows);
  return dump(j);
}

std::string theorem_csv(const TheoremReport& r) {
  std::ostringstream out;
  out << "group,order,p,field,k_dress,primordial,agree,dress_q\n";
  for (const auto& row : r.rows) {
    out << row.group << ',' << row.order << ',' << row.p << ',' << row.field << ','
        << (row.k_dress ? "true" : "false") << ',' << (row.primordial ? "true" : "false")
        << ',' << (row.agree ? "true" : "false") << ',' << row.dress_q << '\n';
  }
  return out.str();
}

std::string error_json(const std::string& code, const std::string& message) {
  ojson j;
  j["tool"] = "tsgreen";
  j["version"] = kVersion;
  j["error"] = {{"code", code}, {"message", message}};
  return dump(j);
}

}  // namespace tsgreen
