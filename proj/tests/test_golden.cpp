#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "tsgreen/catalog.hpp"
#include "tsgreen/json_out.hpp"
#include "tsgreen/session.hpp"

using namespace tsgreen;

namespace {

std::string read_file(const std::string& name) {
  std::ifstream in(std::string(TSGREEN_GOLDEN_DIR) + "/" + name, std::ios::binary);
  REQUIRE_MESSAGE(in.good(), "missing golden file " << name);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void compare(const std::string& name, const std::string& produced) {
  std::string want = read_file(name);
  CHECK_MESSAGE(produced == want, "byte mismatch against golden/" << name);
}

Session& ses() {
  static Session s;
  return s;
}

}  // namespace

TEST_SUITE("golden") {

TEST_CASE("classify document") {
  auto& s = ses();
  auto g = s.group("S3");
  auto k = Fq::parse("GF(2)");
  auto rep = dress_report(*g, k);
  auto qs = dress_primes(*g, k->p());
  compare("classify_S3_GF2.json", classify_json(s.config(), *g, k, rep, qs));
}

TEST_CASE("index set document") {
  auto& s = ses();
  auto k = Fq::parse("GF(2)");
  compare("imset_GF2_m7.json", imset_json(s.config(), k, 7, galois_index_set(7, k)));
}

TEST_CASE("basis document") {
  auto& s = ses();
  auto g = s.group("S3");
  auto k = Fq::parse("GF(2)");
  compare("ts_basis_S3_GF2.json", ts_basis_json(s, *s.basis(g, k), false));
}

TEST_CASE("decompose document") {
  auto& s = ses();
  auto g = s.group("D7");
  auto k = Fq::parse("GF(2)");
  auto d = s.perm_decomposition(g, k, 0);
  compare("decompose_D7_GF2.json", decompose_json(s, k, "k[D7/P0]", *d, false));
}

TEST_CASE("primordial documents") {
  auto& s = ses();
  auto k = Fq::parse("GF(2)");
  auto g = s.group("S3");
  compare("primordial_S3_GF2.json", primordial_json(s, g, k, is_primordial(s, g, k)));
  auto d7 = s.group("D7");
  compare("primordial_D7_GF2.json", primordial_json(s, d7, k, is_primordial(s, d7, k)));
}

TEST_CASE("certificate documents") {
  auto& s = ses();
  compare("certificate_D7_GF2.json",
          certificate_json(s.config(), Fq::parse("GF(2)"),
                           prop35_certificate(s, 7, 2, 1, 6, Fq::parse("GF(2)"))));
  compare("certificate_C13C4_GF3.json",
          certificate_json(s.config(), Fq::parse("GF(3)"),
                           prop35_certificate(s, 13, 2, 2, 5, Fq::parse("GF(3)"))));
}

TEST_CASE("theorem documents") {
  RunConfig cfg;
  auto entries = load_catalog(std::string(TSGREEN_GOLDEN_DIR) + "/small.catalog");
  auto rep = verify_theorem(cfg, entries);
  REQUIRE(rep.all_agree);
  compare("verify_theorem_small.json", theorem_json(cfg, rep));
  compare("verify_theorem_small.csv", theorem_csv(rep));
}

TEST_CASE("error document shape") {
  std::string e = error_json("bad_input", "example message");
  CHECK(e.find("\"error\"") != std::string::npos);
  CHECK(e.find("\"bad_input\"") != std::string::npos);
  CHECK(e.back() == '\n');
}

}  // TEST_SUITE
