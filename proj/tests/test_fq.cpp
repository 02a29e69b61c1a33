#include <random>
#include <vector>

#include "doctest.h"
#include "tsgreen/errors.hpp"
#include "tsgreen/fq.hpp"

using namespace tsgreen;

TEST_SUITE("fq") {

TEST_CASE("parse and canonical moduli") {
  auto k2 = Fq::parse("GF(2)");
  CHECK(k2->p() == 2);
  CHECK(k2->d() == 1);
  CHECK(k2->q() == 2);
  CHECK(k2->modulus() == std::vector<int>{0, 1});

  auto k4 = Fq::parse("GF(4)");
  CHECK(k4->p() == 2);
  CHECK(k4->d() == 2);
  CHECK(k4->modulus() == std::vector<int>{1, 1, 1});  // x^2+x+1

  auto k8 = Fq::parse("GF(2^3)");
  CHECK(k8->q() == 8);
  CHECK(k8->modulus() == std::vector<int>{1, 1, 0, 1});  // x^3+x+1

  auto k9 = Fq::parse("GF(9)");
  CHECK(k9->modulus() == std::vector<int>{1, 0, 1});  // x^2+1
  CHECK(k9->name() == "GF(9)");
  CHECK(Fq::parse(" gf( 27 ) ")->q() == 27);

  CHECK_THROWS_AS(Fq::parse("GF(6)"), BadInput);
  CHECK_THROWS_AS(Fq::parse("GF(0)"), BadInput);
  CHECK_THROWS_AS(Fq::parse("gf"), BadInput);
  CHECK_THROWS_AS(Fq::parse("GF(2^0)"), BadInput);
}

static void check_axioms(const FqPtr& k, const std::vector<FqEl>& sample) {
  for (FqEl a : sample)
    for (FqEl b : sample) {
      CHECK(k->add(a, b) == k->add(b, a));
      CHECK(k->mul(a, b) == k->mul(b, a));
      CHECK(k->add(a, k->neg(a)) == 0);
      for (FqEl c : sample) {
        CHECK(k->add(k->add(a, b), c) == k->add(a, k->add(b, c)));
        CHECK(k->mul(k->mul(a, b), c) == k->mul(a, k->mul(b, c)));
        CHECK(k->mul(a, k->add(b, c)) == k->add(k->mul(a, b), k->mul(a, c)));
      }
      // Frobenius is additive
      CHECK(k->frob(k->add(a, b)) == k->add(k->frob(a), k->frob(b)));
    }
  for (FqEl a : sample) {
    CHECK(k->mul(a, 1) == a);
    CHECK(k->add(a, 0) == a);
    if (a != 0) {
      CHECK(k->mul(a, k->inv(a)) == 1);
      CHECK(k->pow(a, k->q() - 1) == 1);
    }
    CHECK(k->frob_iter(a, k->d()) == a);  // a^(p^d) = a
  }
}

TEST_CASE("field axioms on small fields (all elements)") {
  for (const char* name : {"GF(2)", "GF(3)", "GF(4)", "GF(5)", "GF(8)", "GF(9)"}) {
    auto k = Fq::parse(name);
    std::vector<FqEl> all;
    for (int a = 0; a < k->q(); ++a) all.push_back(FqEl(a));
    check_axioms(k, all);
  }
}

TEST_CASE("table-free arithmetic beyond the table cap") {
  auto k = Fq::make(5, 4);  // q = 625 > kTableCap
  CHECK(k->q() == 625);
  std::mt19937_64 rng(11);
  std::vector<FqEl> sample{0, 1, 2};
  for (int i = 0; i < 8; ++i) sample.push_back(FqEl(rng() % 625));
  check_axioms(k, sample);
}

TEST_CASE("custom modulus") {
  auto k4 = Fq::parse("GF(4)");
  auto k4b = Fq::make_with_modulus(2, 2, {1, 1, 1});
  CHECK(k4->same(*k4b));

  // GF(9) with x^2+x+2 instead of the canonical x^2+1: t^2 = -2-t = 1+2t.
  auto k9 = Fq::make_with_modulus(3, 2, {2, 1, 1});
  CHECK_FALSE(Fq::parse("GF(9)")->same(*k9));
  CHECK(k9->mul(3, 3) == 7);             // t*t = 1+2t -> 1+2*3
  CHECK(Fq::parse("GF(9)")->mul(3, 3) == 2);  // t^2 = -1 under x^2+1
  std::vector<FqEl> all;
  for (int a = 0; a < 9; ++a) all.push_back(FqEl(a));
  check_axioms(k9, all);

  CHECK_THROWS_AS(Fq::make_with_modulus(2, 2, {1, 0, 1}), BadInput);  // (x+1)^2
  CHECK_THROWS_AS(Fq::make_with_modulus(2, 2, {1, 1}), BadInput);     // wrong length
  CHECK_THROWS_AS(Fq::make_with_modulus(3, 2, {1, 1, 2}), BadInput);  // not monic
}

TEST_CASE("encoding round trips and prime-subfield embedding") {
  auto k8 = Fq::parse("GF(8)");
  for (int a = 0; a < 8; ++a) {
    auto v = k8->to_vec(FqEl(a));
    CHECK(int(v.size()) == 3);
    CHECK(k8->from_vec(v) == FqEl(a));
  }
  auto k9 = Fq::parse("GF(9)");
  CHECK(k9->from_int(5) == 2);
  CHECK(k9->from_int(-1) == k9->neg(1));
  CHECK(k9->from_int(0) == 0);
  CHECK_THROWS_AS(k9->inv(0), BadInput);
}

TEST_CASE("frobenius iterates") {
  auto k9 = Fq::parse("GF(9)");
  int fixed = 0;
  for (int a = 0; a < 9; ++a) {
    CHECK(k9->frob_iter(FqEl(a), 2) == FqEl(a));
    CHECK(k9->frob_iter(FqEl(a), 5) == k9->frob(FqEl(a)));  // 5 mod 2 = 1
    if (k9->frob(FqEl(a)) == FqEl(a)) ++fixed;
  }
  CHECK(fixed == 3);  // fixed field of x -> x^3 is GF(3)
}

}  // TEST_SUITE
