#include <string>

#include "doctest.h"
#include "tsgreen/errors.hpp"
#include "tsgreen/group_spec.hpp"

using namespace tsgreen;

namespace {

std::shared_ptr<const PermGroup> grp(const std::string& spec) {
  return build_group(spec, 200);
}

int involutions(const PermGroup& g) {
  int n = 0;
  for (int x = 0; x < g.order(); ++x)
    if (g.elem_order(x) == 2) ++n;
  return n;
}

}  // namespace

TEST_SUITE("group_spec") {

TEST_CASE("families") {
  CHECK(grp("C6")->order() == 6);
  CHECK(grp("C6")->is_cyclic());
  CHECK(grp("C1")->order() == 1);

  auto d7 = grp("D7");
  CHECK(d7->order() == 14);
  CHECK_FALSE(d7->is_abelian());
  CHECK(involutions(*d7) == 7);

  auto q8 = grp("Q8");
  CHECK(q8->order() == 8);
  CHECK(q8->exponent() == 4);
  CHECK(involutions(*q8) == 1);
  CHECK_FALSE(q8->is_abelian());

  CHECK(grp("S4")->order() == 24);
  CHECK(grp("A5")->order() == 60);
  CHECK(grp("A4")->order() == 12);
}

TEST_CASE("direct products") {
  auto g = grp("C2xC4");
  CHECK(g->order() == 8);
  CHECK(g->is_abelian());
  CHECK_FALSE(g->is_cyclic());
  CHECK(g->exponent() == 4);

  auto e8 = grp("C2xC2xC2");
  CHECK(e8->order() == 8);
  CHECK(e8->exponent() == 2);

  CHECK(grp("C2xS3")->order() == 12);
}

TEST_CASE("semidirect products") {
  auto f52 = grp("C13:C4@5");
  CHECK(f52->order() == 52);
  CHECK_FALSE(f52->is_abelian());
  CHECK(o_upper(*f52, 2).size() == 13);

  auto f21 = grp("C7:C3@2");
  CHECK(f21->order() == 21);
  CHECK_FALSE(f21->is_abelian());
  CHECK(o_upper(*f21, 3).size() == 7);

  // a = 1 gives the direct product
  CHECK(grp("C5:C2@1")->is_abelian());
}

TEST_CASE("explicit generators") {
  CHECK(grp("gens:4:(1 2 3 4)")->order() == 4);
  auto s3 = grp("gens:3:(1 2);(1 2 3)");
  CHECK(s3->order() == 6);
  CHECK_FALSE(s3->is_abelian());
}

TEST_CASE("rejects malformed specs with the bad token named") {
  for (const char* bad : {"D2", "C0", "Cx", "", "Cm", "Q16", "gens:2:(1 3)"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(grp(bad), BadInput);
  }

  auto code_of = [](const char* spec) -> std::string {
    try {
      grp(spec);
    } catch (const Error& e) {
      return e.code;
    }
    return "";
  };
  CHECK(code_of("S6") == "degree_too_large");
  CHECK(code_of("A6") == "degree_too_large");
  // 3^3 = 27 != 1 mod 7, so this action is inconsistent
  CHECK(code_of("C7:C3@3") == "bad_action");
  // gcd(2, 4) != 1
  CHECK(code_of("C4:C2@2") == "bad_action");

  // the failing token appears in the message
  try {
    grp("Q16");
    FAIL("expected BadInput");
  } catch (const BadInput& e) {
    CHECK(std::string(e.what()).find("Q16") != std::string::npos);
  }
}

TEST_CASE("order cap") {
  CHECK(grp("C200")->order() == 200);
  auto code_of = [](const char* spec, int cap) -> std::string {
    try {
      build_group(spec, cap);
    } catch (const Error& e) {
      return e.code;
    }
    return "";
  };
  CHECK(code_of("C201", 200) == "group_too_large");
  CHECK(code_of("S4", 20) == "group_too_large");
}

TEST_CASE("deterministic construction") {
  auto a = grp("S4");
  auto b = grp("S4");
  CHECK(a->key() == b->key());
  CHECK(a->elements() == b->elements());
}

}  // TEST_SUITE
