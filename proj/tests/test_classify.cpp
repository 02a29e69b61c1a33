#include <string>
#include <vector>

#include "doctest.h"
#include "tsgreen/classify.hpp"
#include "tsgreen/errors.hpp"
#include "tsgreen/group_spec.hpp"

using namespace tsgreen;

namespace {

std::shared_ptr<const PermGroup> grp(const std::string& spec) {
  return build_group(spec, 200);
}

FqPtr gf(const char* s) { return Fq::parse(s); }

bool kdress(const char* spec, const char* field) {
  return dress_report(*grp(spec), gf(field)).k_dress;
}

}  // namespace

TEST_SUITE("classify") {

TEST_CASE("primality") {
  CHECK(int_is_prime(2));
  CHECK(int_is_prime(13));
  CHECK(int_is_prime(97));
  CHECK_FALSE(int_is_prime(1));
  CHECK_FALSE(int_is_prime(0));
  CHECK_FALSE(int_is_prime(91));  // 7*13
}

TEST_CASE("multiplicative orbit of the field size") {
  using V = std::vector<int>;
  CHECK(galois_index_set(1, gf("GF(2)")) == V{0});
  CHECK(galois_index_set(7, gf("GF(2)")) == V{1, 2, 4});
  CHECK(galois_index_set(7, gf("GF(4)")) == V{1, 2, 4});
  CHECK(galois_index_set(7, gf("GF(3)")) == V{1, 2, 3, 4, 5, 6});
  CHECK(galois_index_set(7, gf("GF(9)")) == V{1, 2, 4});
  CHECK(galois_index_set(13, gf("GF(3)")) == V{1, 3, 9});
  CHECK(galois_index_set(13, gf("GF(9)")) == V{1, 3, 9});
  CHECK(galois_index_set(13, gf("GF(4)")) == V{1, 3, 4, 9, 10, 12});
  CHECK(galois_index_set(13, gf("GF(2)")) == V{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12});
  CHECK(galois_index_set(3, gf("GF(4)")) == V{1});
  CHECK(galois_index_set(2, gf("GF(3)")) == V{1});
  CHECK(galois_index_set(5, gf("GF(2)")) == V{1, 2, 3, 4});
  CHECK(galois_index_set(5, gf("GF(4)")) == V{1, 4});
  CHECK(galois_index_set(5, gf("GF(3)")) == V{1, 2, 3, 4});
  CHECK(galois_index_set(5, gf("GF(9)")) == V{1, 4});

  try {
    galois_index_set(4, gf("GF(2)"));
    FAIL("expected error");
  } catch (const Error& e) {
    CHECK(e.code == "characteristic_divides_m");
  }
}

TEST_CASE("hyperelementary and hypoelementary recognition") {
  CHECK(is_q_hyperelementary(*grp("D7"), 2));
  CHECK(is_q_hyperelementary(*grp("S3"), 2));
  CHECK_FALSE(is_q_hyperelementary(*grp("S3"), 3));  // O^3(S3) = S3, not cyclic
  CHECK_FALSE(is_q_hyperelementary(*grp("A4"), 2));  // O^2(A4) = A4
  CHECK_FALSE(is_q_hyperelementary(*grp("A4"), 3));  // O^3(A4) = V4, not cyclic
  CHECK(is_q_hyperelementary(*grp("C12"), 5));       // whole group already cyclic

  auto s3 = grp("S3");
  auto lat3 = build_subgroup_lattice(*s3);
  CHECK(is_r_hypoelementary(*s3, lat3, 3));        // O_3 = C3, quotient C2 cyclic
  CHECK_FALSE(is_r_hypoelementary(*s3, lat3, 2));  // O_2 = 1 and S3 is not cyclic

  auto c12 = grp("C12");
  auto lat12 = build_subgroup_lattice(*c12);
  for (int r : {2, 3, 5}) CHECK(is_r_hypoelementary(*c12, lat12, r));

  auto q8 = grp("Q8");
  auto lat8 = build_subgroup_lattice(*q8);
  CHECK(is_r_hypoelementary(*q8, lat8, 2));        // O_2 = Q8, trivial quotient
  CHECK_FALSE(is_r_hypoelementary(*q8, lat8, 3));  // O_3 = 1 and Q8 is not cyclic
}

TEST_CASE("k-Dress verdicts across the four standard fields") {
  struct Row {
    const char* g;
    bool gf2, gf4, gf3, gf9;
  };
  const Row rows[] = {
      {"S4", true, false, false, false},
      {"D5", true, true, true, true},
      {"D7", false, false, true, false},
      {"C7:C3@2", true, true, true, true},
      {"C13:C4@5", true, false, false, false},
      {"A4", true, true, false, false},
      {"S3", true, false, true, true},
      {"Q8", true, true, true, true},
      {"D4", true, true, true, true},
      {"C12", true, true, true, true},
      {"C16", true, true, true, true},
      {"C1", true, true, true, true},
  };
  for (const Row& r : rows) {
    CAPTURE(r.g);
    CHECK(kdress(r.g, "GF(2)") == r.gf2);
    CHECK(kdress(r.g, "GF(4)") == r.gf4);
    CHECK(kdress(r.g, "GF(3)") == r.gf3);
    CHECK(kdress(r.g, "GF(9)") == r.gf9);
  }
}

TEST_CASE("witness contents") {
  auto rep = dress_report(*grp("S3"), gf("GF(2)"));
  REQUIRE(rep.k_dress);
  CHECK(rep.reduced_order == 6);
  CHECK(rep.o_p.size() == 1);
  CHECK(rep.reduced.ok);
  CHECK(rep.reduced.q == 2);
  CHECK(rep.reduced.m == 3);
  CHECK(rep.reduced.exponents == std::vector<int>{1, 2});
  CHECK(rep.dr_p_star);  // 2 divides |S3|

  auto d7 = dress_report(*grp("D7"), gf("GF(3)"));
  REQUIRE(d7.k_dress);
  CHECK(d7.reduced.q == 2);
  CHECK(d7.reduced.m == 7);
  CHECK(d7.reduced.exponents == std::vector<int>{1, 6});
  CHECK_FALSE(d7.dr_p_star);  // 3 does not divide 14

  auto s4 = dress_report(*grp("S4"), gf("GF(2)"));
  REQUIRE(s4.k_dress);
  CHECK(s4.reduced_order == 6);  // S4/V4 = S3
  CHECK(s4.o_p.size() == 4);

  auto bad = dress_report(*grp("D7"), gf("GF(2)"));
  CHECK_FALSE(bad.k_dress);
  CHECK_FALSE(bad.reduced.ok);
}

TEST_CASE("Dress primes") {
  using V = std::vector<int>;
  CHECK(dress_primes(*grp("S4"), 2) == V{2});
  CHECK(dress_primes(*grp("D7"), 2) == V{2});
  CHECK(dress_primes(*grp("D7"), 3) == V{2});
  CHECK(dress_primes(*grp("S3"), 2) == V{2});
  CHECK(dress_primes(*grp("C13:C4@5"), 5) == V{2});
  // A4/V4 = C3 is cyclic, so every candidate prime works
  CHECK(dress_primes(*grp("A4"), 2) == V{2, 3, 5});
  CHECK(dress_primes(*grp("C12"), 2) == V{2, 3, 5});  // cyclic quotient: every prime works
  CHECK(dress_primes(*grp("Q8"), 2) == V{2, 3});
  // O_3(A4) = 1 and A4 itself is q-hyperelementary for no prime q
  CHECK(dress_primes(*grp("A4"), 3) == V{});
}

TEST_CASE("minimal counterexample shapes") {
  auto s1 = minimal_non_k_dress_shape(*grp("D7"), gf("GF(2)"));
  CHECK(s1.r == 7);
  CHECK(s1.q == 2);
  CHECK(s1.n == 1);
  CHECK(s1.a == 6);

  auto s2 = minimal_non_k_dress_shape(*grp("C13:C4@5"), gf("GF(3)"));
  CHECK(s2.r == 13);
  CHECK(s2.q == 2);
  CHECK(s2.n == 2);
  CHECK(s2.a == 5);

  auto expect_not_minimal = [](const char* g, const char* f) {
    try {
      minimal_non_k_dress_shape(*grp(g), gf(f));
      FAIL_CHECK("expected not_minimal_counterexample for " << g << " over " << f);
    } catch (const Error& e) {
      CHECK(e.code == "not_minimal_counterexample");
    }
  };
  expect_not_minimal("S3", "GF(2)");   // k-Dress already
  expect_not_minimal("D7", "GF(3)");   // k-Dress already
  expect_not_minimal("A4", "GF(3)");   // wrong shape
  expect_not_minimal("S4", "GF(3)");   // wrong shape
}

}  // TEST_SUITE
