#include "doctest.h"
#include "tsgreen/errors.hpp"
#include "tsgreen/session.hpp"
#include "tsgreen/ts_basis.hpp"
#include "tsgreen/vertex.hpp"

using namespace tsgreen;

namespace {

Session& ses() {
  static Session s;
  return s;
}

FqPtr gf(const char* s) { return Fq::parse(s); }

}  // namespace

TEST_SUITE("vertex") {

TEST_CASE("p-subgroup classes") {
  auto& s = ses();
  auto g = s.group("S4");
  auto classes = p_subgroup_classes(s, *g, 2);
  auto lat = s.lattice(*g);
  std::vector<int> orders;
  for (int c : classes) orders.push_back(lat->classes[c].order);
  CHECK(orders == std::vector<int>{1, 2, 2, 4, 4, 4, 8});
  CHECK(classes.front() == lat->trivial_class());

  auto c3 = p_subgroup_classes(s, *g, 3);
  std::vector<int> o3;
  for (int c : c3) o3.push_back(lat->classes[c].order);
  CHECK(o3 == std::vector<int>{1, 3});
}

TEST_CASE("Higman criterion") {
  auto& s = ses();
  auto k = gf("GF(2)");
  auto g = s.group("S3");
  auto lat = s.lattice(*g);

  // the regular module is projective: relative trace from 1 reaches id
  auto reg = regular_rep(s, g, k);
  auto h0 = higman_projective(s, reg, lat->classes[0].rep);
  CHECK(h0.projective);
  // verify the witness: sum over a transversal of conjugates of theta equals id
  {
    FFMatrix acc(k, reg.dim(), reg.dim());
    for (int t : left_transversal(*g, lat->classes[0].rep))
      acc = acc + reg.image(t) * h0.witness * reg.image(g->inv(t));
    CHECK(acc == FFMatrix::identity(k, reg.dim()));
  }

  // the trivial module is not projective relative to 1 when p | |G|
  auto triv = trivial_rep(g, k);
  CHECK_FALSE(higman_projective(s, triv, lat->classes[0].rep).projective);
  // but every module is projective relative to a Sylow p-subgroup
  int syl = sylow_class(*g, *lat, 2);
  CHECK(higman_projective(s, triv, lat->classes[syl].rep).projective);
}

TEST_CASE("vertices of trivial modules are the Sylow subgroups") {
  auto& s = ses();
  struct Row { const char* g; const char* f; int order; };
  const Row rows[] = {
      {"S4", "GF(2)", 8}, {"A4", "GF(3)", 3}, {"Q8", "GF(2)", 8},
      {"C7:C3@2", "GF(2)", 1}, {"S3", "GF(3)", 3}, {"D7", "GF(7)", 7},
  };
  for (const Row& r : rows) {
    CAPTURE(r.g);
    auto g = s.group(r.g);
    auto rep = vertex_report(s, trivial_rep(g, gf(r.f)));
    auto lat = s.lattice(*g);
    CHECK(lat->classes[rep.vertex_class].order == r.order);
    CHECK(rep.vertex_order == r.order);
    CHECK(rep.trivial_source);
    CHECK(rep.source_dim == 1);
  }
}

TEST_CASE("projective summands have trivial vertex") {
  auto& s = ses();
  auto k = gf("GF(2)");
  auto g = s.group("D7");
  auto d = decompose(s, regular_rep(s, g, k));
  // kD7 = k[C2-part free of 7-part]: all summands projective, vertex 1
  for (const auto& c : d.classes) {
    auto vr = vertex_report(s, c.rep);
    CHECK(vr.vertex_order == 1);
    CHECK(vr.vertex_class == s.lattice(*g)->trivial_class());
    CHECK(vr.trivial_source);
  }

  auto s3 = s.group("S3");
  auto ds = decompose(s, regular_rep(s, s3, k));
  int seen_proj = 0;
  for (const auto& c : ds.classes) {
    auto vr = vertex_report(s, c.rep);
    if (c.cert.end_dim == 1) {
      // the simple projective: vertex 1
      CHECK(vr.vertex_order == 1);
      ++seen_proj;
    } else {
      // projective cover of the trivial module: also projective
      CHECK(vr.vertex_order == 1);
    }
    CHECK(vr.trivial_source);
  }
  CHECK(seen_proj == 1);
}

TEST_CASE("a uniserial non-trivial-source module") {
  auto& s = ses();
  auto k = gf("GF(3)");
  auto g = s.group("C3");
  // Jordan block of size 2 at eigenvalue 1: indecomposable, source dim 2
  FFMatrix j(k, 2, 2);
  j.set(0, 0, 1); j.set(0, 1, 1); j.set(1, 1, 1);
  Representation m(g, k, 2, {j}, "J2");
  m.verify_homomorphism();
  auto vr = vertex_report(s, m);
  CHECK(vr.vertex_order == 3);
  CHECK_FALSE(vr.trivial_source);
  CHECK(vr.source_dim == 2);

  auto b = s.basis(g, k);
  try {
    classify_in_basis(s, *b, m);
    FAIL("expected not_trivial_source");
  } catch (const Error& e) {
    CHECK(e.code == "not_trivial_source");
  }
}

TEST_CASE("inflated module with a non-trivial normal vertex") {
  auto& s = ses();
  auto k = gf("GF(2)");
  auto g = s.group("S4");
  auto lat = s.lattice(*g);
  // k[S4/D4] = 1 (+) (2-dim inflated from S4/V4 = S3); the latter has the
  // normal V4 as vertex
  auto pm = perm_module(s, g, k, lat->classes[8].rep, "k[S4/D4]");
  auto d = decompose(s, pm);
  REQUIRE(d.classes.size() == 2);
  bool seen_two = false;
  for (const auto& c : d.classes) {
    auto vr = vertex_report(s, c.rep);
    if (c.rep.dim() == 2) {
      seen_two = true;
      CHECK(vr.vertex_order == 4);
      CHECK(lat->classes[vr.vertex_class].normal);
      CHECK(vr.trivial_source);
      CHECK(c.cert.end_dim == 1);
    } else {
      CHECK(c.rep.dim() == 1);
      CHECK(vr.vertex_order == 8);  // trivial module: Sylow vertex
    }
  }
  CHECK(seen_two);
}

}  // TEST_SUITE
