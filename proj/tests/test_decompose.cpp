#include "doctest.h"
#include "tsgreen/decompose.hpp"
#include "tsgreen/errors.hpp"
#include "tsgreen/session.hpp"

using namespace tsgreen;

namespace {

Session& ses() {
  static Session s;
  return s;
}

FqPtr gf(const char* s) { return Fq::parse(s); }

int total_dim(const Decomposition& d) {
  int t = 0;
  for (size_t i = 0; i < d.classes.size(); ++i)
    t += d.classes[i].rep.dim() * d.multiplicities[i];
  return t;
}

void check_embeddings(const Decomposition& d, const Representation& parent) {
  // every class representative acts exactly as the parent does on its subspace
  for (const auto& cls : d.classes) {
    const FFMatrix& e = cls.embedding;
    REQUIRE(e.cols() == cls.rep.dim());
    for (size_t gi = 0; gi < parent.group().gens().size(); ++gi) {
      int gidx = parent.group().gens()[gi];
      CHECK(parent.image(gidx) * e == e * cls.rep.image(gidx));
    }
  }
}

}  // namespace

TEST_SUITE("decompose") {

TEST_CASE("algebra radical on known algebras") {
  auto k = gf("GF(2)");
  // dual numbers k[x]/(x^2): radical is spanned by x
  FFMatrix i2 = FFMatrix::identity(k, 2);
  FFMatrix n(k, 2, 2);
  n.set(0, 1, 1);
  auto rad = algebra_radical(k, {i2, n});
  REQUIRE(rad.size() == 1);
  CHECK(rad[0] == std::vector<FqEl>{0, 1});

  // split semisimple k x k: no radical
  FFMatrix e11(k, 2, 2), e22(k, 2, 2);
  e11.set(0, 0, 1);
  e22.set(1, 1, 1);
  CHECK(algebra_radical(k, {e11, e22}).empty());

  // full matrix algebra M2(k): semisimple
  FFMatrix e12(k, 2, 2), e21(k, 2, 2);
  e12.set(0, 1, 1);
  e21.set(1, 0, 1);
  CHECK(algebra_radical(k, {e11, e12, e21, e22}).empty());

  // upper triangular 2x2: radical is the strictly upper part
  auto radt = algebra_radical(k, {e11, e22, e12});
  REQUIRE(radt.size() == 1);
}

TEST_CASE("regular module of C2 over GF(2)") {
  auto& s = ses();
  auto k = gf("GF(2)");
  auto g = s.group("C2");
  auto d = decompose(s, regular_rep(s, g, k));
  REQUIRE(d.classes.size() == 1);
  CHECK(d.multiplicities == std::vector<int>{1});
  CHECK(d.classes[0].rep.dim() == 2);
  CHECK(d.classes[0].cert.end_dim == 2);
  CHECK(d.classes[0].cert.radical_dim == 1);
  CHECK(d.classes[0].cert.quotient_dim == 1);
  CHECK(d.classes[0].cert.absolutely_indecomposable);
}

TEST_CASE("regular module of C3 over GF(2) and GF(4)") {
  auto& s = ses();
  auto g = s.group("C3");

  auto d2 = decompose(s, regular_rep(s, g, gf("GF(2)")));
  REQUIRE(d2.classes.size() == 2);
  CHECK(total_dim(d2) == 3);
  int one = d2.classes[0].rep.dim() == 1 ? 0 : 1;
  int two = 1 - one;
  CHECK(d2.classes[one].rep.dim() == 1);
  CHECK(d2.classes[two].rep.dim() == 2);
  // the 2-dimensional piece splits over GF(4): its endomorphism ring is GF(4)
  CHECK(d2.classes[two].cert.end_dim == 2);
  CHECK(d2.classes[two].cert.radical_dim == 0);
  CHECK(d2.classes[two].cert.quotient_dim == 2);
  CHECK_FALSE(d2.classes[two].cert.absolutely_indecomposable);

  auto d4 = decompose(s, regular_rep(s, g, gf("GF(4)")));
  CHECK(d4.classes.size() == 3);
  for (const auto& c : d4.classes) {
    CHECK(c.rep.dim() == 1);
    CHECK(c.cert.absolutely_indecomposable);
  }
  CHECK(d4.multiplicities == std::vector<int>{1, 1, 1});
}

TEST_CASE("regular module of S3 over GF(2)") {
  auto& s = ses();
  auto k = gf("GF(2)");
  auto g = s.group("S3");
  auto reg = regular_rep(s, g, k);
  auto d = decompose(s, reg);
  REQUIRE(d.classes.size() == 2);
  CHECK(total_dim(d) == 6);
  CHECK(d.total_blocks() == 3);
  for (size_t i = 0; i < d.classes.size(); ++i) {
    const auto& c = d.classes[i];
    CHECK(c.rep.dim() == 2);
    CHECK(c.cert.quotient_dim == 1);
    CHECK(c.cert.absolutely_indecomposable);
    // projective cover of the trivial module has a 1-dim radical quotient
    // endomorphism ring; the simple projective has End = k
    if (c.cert.end_dim == 2) {
      CHECK(d.multiplicities[i] == 1);
      CHECK(c.cert.radical_dim == 1);
    } else {
      CHECK(c.cert.end_dim == 1);
      CHECK(c.cert.radical_dim == 0);
      CHECK(d.multiplicities[i] == 2);
    }
  }
  check_embeddings(d, reg);
}

TEST_CASE("regular module of Q8 over GF(2) is indecomposable") {
  auto& s = ses();
  auto k = gf("GF(2)");
  auto g = s.group("Q8");
  auto d = decompose(s, regular_rep(s, g, k));
  REQUIRE(d.classes.size() == 1);
  CHECK(d.classes[0].rep.dim() == 8);
  CHECK(d.classes[0].cert.end_dim == 8);  // End(kG) = kG^op
  CHECK(d.classes[0].cert.quotient_dim == 1);
  CHECK(d.classes[0].cert.absolutely_indecomposable);
}

TEST_CASE("isomorphism testing") {
  auto& s = ses();
  auto k = gf("GF(2)");
  auto g = s.group("S3");
  auto d1 = decompose(s, regular_rep(s, g, k));

  auto lat = s.lattice(*g);
  auto pm = perm_module(s, g, k, lat->classes[2].rep, "k[S3/C3]");  // 1 + sign = P1? no: dim 2
  auto dp = decompose(s, pm);

  // the projective cover of the trivial module appears in both
  int found = 0;
  for (const auto& a : d1.classes)
    for (const auto& b : dp.classes)
      if (a.rep.dim() == b.rep.dim() && iso_indec(a.rep, b.rep)) ++found;
  CHECK(found == 1);

  // same-dimension non-isomorphic pair inside kS3
  CHECK_FALSE(iso_indec(d1.classes[0].rep, d1.classes[1].rep));
  CHECK(iso_indec(d1.classes[0].rep, d1.classes[0].rep));

  auto h = s.group("C6");
  auto dh = decompose(s, regular_rep(s, h, k));
  CHECK_THROWS_AS(iso_indec(d1.classes[0].rep, dh.classes[0].rep), BadInput);

  // fingerprint-based lookup: the trivial module is not a summand of kS3
  auto triv = trivial_rep(g, k);
  CHECK_FALSE(find_class(d1, triv, triv.fingerprint()).has_value());
  // but each class finds itself
  for (size_t i = 0; i < d1.classes.size(); ++i) {
    auto fc = find_class(d1, d1.classes[i].rep, d1.classes[i].fingerprint);
    REQUIRE(fc.has_value());
    CHECK(*fc == int(i));
  }
}

TEST_CASE("endomorphism bases are complete") {
  auto& s = ses();
  auto k = gf("GF(2)");
  auto g = s.group("S3");
  auto lat = s.lattice(*g);
  auto pm = perm_module(s, g, k, lat->classes[1].rep, "k[S3/C2]");
  auto eb = end_basis(s, pm);
  CHECK(eb.complete);
  CHECK(eb.basis.size() == 2);

  auto d = decompose(s, regular_rep(s, g, k));
  for (const auto& c : d.classes) {
    auto ce = end_basis(s, c.rep);
    CHECK(ce.complete);
    CHECK(int(ce.basis.size()) == c.cert.end_dim);
  }
}

TEST_CASE("dimension cap") {
  RunConfig cfg;
  cfg.dim_cap = 16;
  Session small(cfg);
  auto k = gf("GF(2)");
  auto g = small.group("S4");
  try {
    decompose(small, regular_rep(small, g, k));
    FAIL("expected cap_exceeded");
  } catch (const Error& e) {
    CHECK(e.code == "cap_exceeded");
  }
}

TEST_CASE("block data is consistent") {
  auto& s = ses();
  auto k = gf("GF(3)");
  auto g = s.group("A4");
  auto reg = regular_rep(s, g, k);
  auto d = decompose(s, reg);
  CHECK(total_dim(d) == 12);
  // block_classes lists each block's class; multiplicities must match
  std::vector<int> counts(d.classes.size(), 0);
  int dim_sum = 0;
  for (int b : d.block_classes) {
    REQUIRE(b >= 0);
    REQUIRE(b < int(d.classes.size()));
    counts[b] += 1;
    dim_sum += d.classes[b].rep.dim();
  }
  CHECK(dim_sum == reg.dim());
  for (size_t i = 0; i < counts.size(); ++i) CHECK(counts[i] == d.multiplicities[i]);
  CHECK(ff_rank(d.change_of_basis) == reg.dim());
  check_embeddings(d, reg);
}

}  // TEST_SUITE
