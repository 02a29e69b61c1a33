// tsgreen: trivial-source Green ring toolkit.
//
// Subcommands: classify, imset, ts-basis, decompose, primordial, certificate,
// verify-theorem.  Exit codes: 0 success, 1 domain error (structured JSON on
// stderr), 2 theorem violation.

#include <cstdio>
#include <exception>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tsgreen/catalog.hpp"
#include "tsgreen/classify.hpp"
#include "tsgreen/errors.hpp"
#include "tsgreen/json_out.hpp"
#include "tsgreen/primordial.hpp"
#include "tsgreen/session.hpp"
#include "tsgreen/version.hpp"
#include "tsgreen/vertex.hpp"

namespace {

using namespace tsgreen;

struct Opts {
  std::string group;
  std::string field = "GF(2)";
  std::string modulus;  // defining polynomial, constant term first, e.g. "1,1,1"
  std::string module = "regular";
  std::string cert_spec;
  std::string format = "json";
  std::string catalog;
  int m = 0;
  bool emit_matrices = false;
  RunConfig cfg;
};

int parse_int(const std::string& tok, const std::string& what) {
  if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
    throw BadInput(what + ": expected a nonnegative integer, got '" + tok + "'");
  try {
    return std::stoi(tok);
  } catch (const std::exception&) {
    throw BadInput(what + ": integer out of range: '" + tok + "'");
  }
}

FqPtr make_field(const Opts& o) {
  auto k = Fq::parse(o.field);
  if (o.modulus.empty()) return k;
  std::vector<int> coeffs;
  std::stringstream ss(o.modulus);
  std::string tok;
  while (std::getline(ss, tok, ','))
    coeffs.push_back(parse_int(tok, "--modulus coefficient"));
  return Fq::make_with_modulus(k->p(), k->d(), coeffs);
}

// "<r>:<q>@<a>" or "<r>:<q>^<n>@<a>", e.g. 7:2@6 or 13:2^2@5.
void parse_cert_spec(const std::string& s, int& r, int& q, int& n, int& a) {
  auto colon = s.find(':');
  auto at = s.find('@');
  if (colon == std::string::npos || at == std::string::npos || at < colon)
    throw BadInput("certificate spec must look like 7:2@6 or 13:2^2@5, got '" + s + "'");
  r = parse_int(s.substr(0, colon), "certificate r");
  std::string mid = s.substr(colon + 1, at - colon - 1);
  auto caret = mid.find('^');
  if (caret == std::string::npos) {
    q = parse_int(mid, "certificate q");
    n = 1;
  } else {
    q = parse_int(mid.substr(0, caret), "certificate q");
    n = parse_int(mid.substr(caret + 1), "certificate n");
  }
  a = parse_int(s.substr(at + 1), "certificate a");
}

void require_not_csv(const Opts& o) {
  if (o.format == "csv")
    throw BadInput("csv format is only available for verify-theorem");
}

std::string join_ints(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(v[i]);
  }
  return out;
}

int run_classify(const Opts& o) {
  require_not_csv(o);
  Session s(o.cfg);
  auto k = make_field(o);
  auto g = s.group(o.group);
  DressReport dr = dress_report(*g, k);
  std::vector<int> qs = dress_primes(*g, k->p());
  if (o.format == "pretty") {
    std::printf("group %s  order %d  over %s\n", g->name().c_str(), g->order(),
                k->name().c_str());
    std::printf("|O_p(G)| = %d, |G/O_p(G)| = %d\n", (int)dr.o_p.size(), dr.reduced_order);
    if (dr.k_dress)
      std::printf("k-Dress: yes  (q=%d, m=%d, exponents {%s})\n", dr.reduced.q,
                  dr.reduced.m, join_ints(dr.reduced.exponents).c_str());
    else
      std::printf("k-Dress: no\n");
    std::printf("Dr_p^*: %s\n", dr.dr_p_star ? "yes" : "no");
    std::printf("q-Dress primes: {%s}\n", join_ints(qs).c_str());
    return 0;
  }
  std::cout << classify_json(o.cfg, *g, k, dr, qs);
  return 0;
}

int run_imset(const Opts& o) {
  require_not_csv(o);
  if (o.m <= 0) throw BadInput("imset requires --m with a positive integer");
  auto k = make_field(o);
  std::vector<int> iset = galois_index_set(o.m, k);
  if (o.format == "pretty") {
    std::printf("I_%d(%s) = {%s}\n", o.m, k->name().c_str(), join_ints(iset).c_str());
    return 0;
  }
  std::cout << imset_json(o.cfg, k, o.m, iset);
  return 0;
}

int run_ts_basis(const Opts& o) {
  require_not_csv(o);
  Session s(o.cfg);
  auto k = make_field(o);
  auto g = s.group(o.group);
  auto b = s.basis(g, k);
  if (o.format == "pretty") {
    std::printf("trivial-source basis of a(k%s) over %s: %d elements\n",
                g->name().c_str(), k->name().c_str(), b->size());
    std::printf("%4s %5s %8s %5s %7s %s\n", "idx", "dim", "vertex", "end", "end/J", "abs-indec");
    for (int i = 0; i < b->size(); ++i) {
      const auto& e = b->elems[i];
      std::printf("%4d %5d %8d %5d %7d %s\n", i, e.rep.dim(), e.vertex.vertex_order,
                  e.cert.end_dim, e.cert.quotient_dim,
                  e.cert.absolutely_indecomposable ? "yes" : "no");
    }
    return 0;
  }
  std::cout << ts_basis_json(s, *b, o.emit_matrices);
  return 0;
}

int run_decompose(const Opts& o) {
  require_not_csv(o);
  Session s(o.cfg);
  auto k = make_field(o);
  auto g = s.group(o.group);
  auto lat = s.lattice(*g);
  int cls;
  if (o.module == "regular") {
    cls = lat->trivial_class();
  } else if (o.module.rfind("perm:", 0) == 0) {
    cls = parse_int(o.module.substr(5), "--module perm:<class>");
    if (cls < 0 || cls > lat->full_class())
      throw BadInput("subgroup class index out of range: " + std::to_string(cls) +
                     " (group has " + std::to_string(lat->full_class() + 1) + " classes)");
  } else {
    throw BadInput("--module must be 'regular' or 'perm:<subgroup-class>', got '" +
                   o.module + "'");
  }
  auto d = s.perm_decomposition(g, k, cls);
  std::string desc = "k[" + g->name() + "/P" + std::to_string(cls) + "]";
  if (o.format == "pretty") {
    std::printf("%s over %s: dim %d, %d indecomposable summands, %d classes\n",
                desc.c_str(), k->name().c_str(), d->parent_dim, d->total_blocks(),
                (int)d->classes.size());
    for (std::size_t i = 0; i < d->classes.size(); ++i) {
      const auto& c = d->classes[i];
      VertexReport vr = vertex_report(s, c.rep);
      std::printf("  class %d: dim %d, multiplicity %d, vertex order %d, "
                  "end %d, end/J %d, trivial source: %s\n",
                  (int)i, c.rep.dim(), d->multiplicities[i], vr.vertex_order,
                  c.cert.end_dim, c.cert.quotient_dim, vr.trivial_source ? "yes" : "no");
    }
    return 0;
  }
  std::cout << decompose_json(s, k, desc, *d, o.emit_matrices);
  return 0;
}

int run_primordial(const Opts& o) {
  require_not_csv(o);
  Session s(o.cfg);
  auto k = make_field(o);
  auto g = s.group(o.group);
  PrimordialVerdict v = is_primordial(s, g, k);
  if (o.format == "pretty") {
    std::printf("%s over %s: %sprimordial\n", g->name().c_str(), k->name().c_str(),
                v.is_primordial ? "" : "not ");
    std::printf("identity in T(G): %s; induction lattice full: %s\n",
                v.identity_in_t ? "yes" : "no", v.lattice_full ? "yes" : "no");
    std::printf("basis size %d, %d induction columns\n", v.basis_size,
                v.lattice.matrix.cols());
    std::string divs;
    for (std::size_t i = 0; i < v.snf_divisors.size(); ++i) {
      if (i) divs += ", ";
      divs += v.snf_divisors[i].str();
    }
    std::printf("SNF divisors: %s\n", divs.c_str());
    return 0;
  }
  std::cout << primordial_json(s, g, k, v);
  return 0;
}

int run_certificate(const Opts& o) {
  require_not_csv(o);
  Session s(o.cfg);
  auto k = make_field(o);
  int r, q, n, a;
  parse_cert_spec(o.cert_spec, r, q, n, a);
  Prop35Certificate c = prop35_certificate(s, r, q, n, a, k);
  if (o.format == "pretty") {
    std::printf("certificate for C%d x|_%d C%d^%d over %s: OK\n", r, a, q, n,
                k->name().c_str());
    std::printf("k[H/Q]: trivial multiplicity %d, 1 + %d non-trivial dims = %d\n",
                c.trivial_multiplicity, (int)c.summand_dims.size(), r);
    for (std::size_t i = 0; i < c.summand_dims.size(); ++i)
      std::printf("  dim %d: covered by subgroup class %d, basis index %d\n",
                  c.summand_dims[i], c.cover_subgroup[i], c.cover_basis_index[i]);
    std::printf("membership witness for e_0 verified over %d columns\n",
                (int)c.witness.size());
    return 0;
  }
  std::cout << certificate_json(o.cfg, k, c);
  return 0;
}

int run_verify_theorem(const Opts& o) {
  std::vector<CatalogEntry> entries =
      o.catalog.empty() ? default_catalog() : load_catalog(o.catalog);
  TheoremReport rep = verify_theorem(o.cfg, entries);
  std::fprintf(stderr, "verify-theorem: %d entries in %.2f s\n", (int)rep.rows.size(),
               rep.seconds);
  if (o.format == "csv") {
    std::cout << theorem_csv(rep);
  } else if (o.format == "pretty") {
    std::printf("%-12s %6s %2s %-7s %7s %10s %5s %7s\n", "group", "order", "p", "field",
                "k_dress", "primordial", "agree", "dress_q");
    for (const auto& row : rep.rows)
      std::printf("%-12s %6d %2d %-7s %7d %10d %5d %7d\n", row.group.c_str(), row.order,
                  row.p, row.field.c_str(), (int)row.k_dress, (int)row.primordial,
                  (int)row.agree, row.dress_q);
    std::printf("%s\n", rep.all_agree ? "all entries agree" : "DISAGREEMENT FOUND");
  } else {
    std::cout << theorem_json(o.cfg, rep);
  }
  if (!rep.all_agree) {
    std::cerr << error_json("theorem_violation",
                            "k-Dress classification and primordiality disagree on at "
                            "least one catalog entry");
    return 2;
  }
  return 0;
}

void add_common(CLI::App* cmd, Opts& o, bool with_field = true) {
  if (with_field) {
    cmd->add_option("--field", o.field, "finite field, e.g. GF(2), GF(9), GF(2^3)")
        ->capture_default_str();
    cmd->add_option("--modulus", o.modulus,
                    "defining polynomial coefficients, constant term first, e.g. 1,1,1");
  }
  cmd->add_option("--seed", o.cfg.seed, "PRNG seed recorded in outputs")
      ->capture_default_str();
  cmd->add_option("--order-cap", o.cfg.order_cap, "largest allowed group order")
      ->capture_default_str();
  cmd->add_option("--dim-cap", o.cfg.dim_cap, "largest allowed module dimension")
      ->capture_default_str();
  cmd->add_option("--format", o.cfg.format, "output format")
      ->check(CLI::IsMember({"json", "csv", "pretty"}))
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  Opts o;
  CLI::App app{"trivial-source Green ring toolkit"};
  app.set_version_flag("--version", tsgreen::kVersion);
  app.require_subcommand(1);

  auto* classify = app.add_subcommand("classify", "k-Dress classification of a group");
  classify->add_option("group", o.group, "group spec, e.g. S4, D7, C13:C4@5")->required();
  add_common(classify, o);

  auto* imset = app.add_subcommand("imset", "Galois index set I_m(k)");
  imset->add_option("--m", o.m, "modulus m of the index set")->required();
  add_common(imset, o);

  auto* tsb = app.add_subcommand("ts-basis", "basis of the trivial-source Green ring");
  tsb->add_option("group", o.group, "group spec")->required();
  tsb->add_flag("--emit-matrices", o.emit_matrices,
                "include module matrices and subgroup induction/restriction matrices");
  add_common(tsb, o);

  auto* dec = app.add_subcommand("decompose", "decompose a permutation module");
  dec->add_option("group", o.group, "group spec")->required();
  dec->add_option("--module", o.module, "'regular' or 'perm:<subgroup-class>'")
      ->capture_default_str();
  dec->add_flag("--emit-matrices", o.emit_matrices, "include generator images");
  add_common(dec, o);

  auto* prim = app.add_subcommand("primordial", "decide primordiality of a group");
  prim->add_option("group", o.group, "group spec")->required();
  add_common(prim, o);

  auto* cert = app.add_subcommand("certificate",
                                  "membership certificate for C_r x| C_{q^n} groups");
  cert->add_option("spec", o.cert_spec, "r:q@a or r:q^n@a, e.g. 7:2@6")->required();
  add_common(cert, o);

  auto* vt = app.add_subcommand("verify-theorem",
                                "check k-Dress = primordial over a catalog");
  vt->add_option("--catalog", o.catalog, "catalog file (default: built-in catalog)");
  vt->add_option("--jobs", o.cfg.jobs, "parallel workers")->capture_default_str();
  add_common(vt, o, /*with_field=*/false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  o.format = o.cfg.format;
  try {
    if (*classify) return run_classify(o);
    if (*imset) return run_imset(o);
    if (*tsb) return run_ts_basis(o);
    if (*dec) return run_decompose(o);
    if (*prim) return run_primordial(o);
    if (*cert) return run_certificate(o);
    if (*vt) return run_verify_theorem(o);
  } catch (const tsgreen::TheoremViolation& e) {
    std::cerr << tsgreen::error_json(e.code, e.what());
    return 2;
  } catch (const tsgreen::Error& e) {
    std::cerr << tsgreen::error_json(e.code, e.what());
    return 1;
  } catch (const std::exception& e) {
    std::cerr << tsgreen::error_json("internal_error", e.what());
    return 1;
  }
  return 0;
}
