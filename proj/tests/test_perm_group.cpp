#include <algorithm>
#include <map>
#include <set>

#include "doctest.h"
#include "tsgreen/group_spec.hpp"
#include "tsgreen/perm_group.hpp"

using namespace tsgreen;

namespace {

std::shared_ptr<const PermGroup> grp(const std::string& spec) {
  return build_group(spec, 200);
}

std::multiset<int> class_sizes(const PermGroup& g) {
  std::multiset<int> out;
  for (const auto& c : g.conjugacy_classes()) out.insert(int(c.size()));
  return out;
}

// Every subgroup of the groups tested here is generated by at most two
// elements, so closing all element pairs enumerates the full lattice.
std::set<std::vector<int>> brute_subgroups(const PermGroup& g) {
  std::set<std::vector<int>> subs;
  subs.insert({0});
  for (int a = 0; a < g.order(); ++a)
    for (int b = a; b < g.order(); ++b) subs.insert(subgroup_closure(g, {a, b}));
  return subs;
}

}  // namespace

TEST_SUITE("perm_group") {

TEST_CASE("S4 structure") {
  auto g = grp("S4");
  CHECK(g->order() == 24);
  CHECK(g->degree() == 4);
  CHECK_FALSE(g->is_abelian());
  CHECK(g->exponent() == 12);
  CHECK(class_sizes(*g) == std::multiset<int>{1, 3, 6, 6, 8});

  std::map<int, int> order_count;
  for (int x = 0; x < g->order(); ++x) {
    order_count[g->elem_order(x)] += 1;
    CHECK(g->mul(x, g->inv(x)) == 0);
    CHECK(g->index_of(g->elem(x)) == x);
    // BFS factorization reassembles the element
    if (x != 0) {
      Perm p = perm_compose(g->elem(g->gens()[g->bfs_gen(x)]), g->elem(g->bfs_parent(x)));
      CHECK(p == g->elem(x));
    }
  }
  CHECK(order_count == std::map<int, int>{{1, 1}, {2, 9}, {3, 8}, {4, 6}});
}

TEST_CASE("S4 subgroup lattice") {
  auto g = grp("S4");
  auto lat = build_subgroup_lattice(*g);
  REQUIRE(lat.classes.size() == 11);

  std::vector<int> orders, member_counts;
  std::vector<int> normal_orders;
  for (const auto& c : lat.classes) {
    orders.push_back(c.order);
    member_counts.push_back(int(c.members.size()));
    if (c.normal) normal_orders.push_back(c.order);
    CHECK(int(c.rep.size()) == c.order);
    CHECK(lat.class_of(c.rep) == lat.index.at(c.rep));
    for (const auto& m : c.members) CHECK(lat.class_of(m) >= 0);
  }
  CHECK(orders == std::vector<int>{1, 2, 2, 3, 4, 4, 4, 6, 8, 12, 24});
  CHECK(member_counts == std::vector<int>{1, 6, 3, 4, 3, 1, 3, 4, 3, 1, 1});
  CHECK(normal_orders == std::vector<int>{1, 4, 12, 24});

  CHECK(lat.trivial_class() == 0);
  CHECK(lat.classes[lat.trivial_class()].order == 1);
  CHECK(lat.classes[lat.full_class()].order == 24);
}

TEST_CASE("lattice matches brute-force enumeration") {
  for (const char* spec : {"S4", "D4", "Q8", "C12"}) {
    auto g = grp(spec);
    auto lat = build_subgroup_lattice(*g);
    std::set<std::vector<int>> from_lattice;
    for (const auto& c : lat.classes)
      for (const auto& m : c.members) from_lattice.insert(m);
    CHECK(from_lattice == brute_subgroups(*g));
  }
}

TEST_CASE("upper and lower p-cores") {
  auto s4 = grp("S4");
  auto s3 = grp("S3");
  auto q8 = grp("Q8");
  auto d7 = grp("D7");

  CHECK(o_upper(*s4, 2).size() == 12);  // A4
  CHECK(o_upper(*s3, 2).size() == 3);
  CHECK(o_upper(*s3, 3).size() == 6);   // generated by the involutions
  CHECK(o_upper(*q8, 2).size() == 1);

  auto lat4 = build_subgroup_lattice(*s4);
  auto latd7 = build_subgroup_lattice(*d7);
  auto v4 = o_lower(*s4, lat4, 2);
  CHECK(v4.size() == 4);
  CHECK(lat4.classes[lat4.class_of(v4)].normal);
  CHECK(o_lower(*d7, latd7, 2).size() == 1);
  CHECK(o_lower(*d7, latd7, 7).size() == 7);
}

TEST_CASE("sylow classes") {
  auto g = grp("S4");
  auto lat = build_subgroup_lattice(*g);
  CHECK(lat.classes[sylow_class(*g, lat, 2)].order == 8);
  CHECK(lat.classes[sylow_class(*g, lat, 3)].order == 3);
  CHECK(sylow_class(*g, lat, 5) == lat.trivial_class());
}

TEST_CASE("subgroup groups") {
  auto g = grp("S4");
  auto lat = build_subgroup_lattice(*g);
  auto normal_v4 = o_lower(*g, lat, 2);
  auto sg = make_subgroup_group(*g, normal_v4, "V4");
  CHECK(sg.grp->order() == 4);
  CHECK(sg.grp->exponent() == 2);
  CHECK(sg.grp->is_abelian());
  for (int i = 0; i < sg.grp->order(); ++i) {
    CHECK(sg.from_parent[sg.to_parent[i]] == i);
    for (int j = 0; j < sg.grp->order(); ++j) {
      // embedding is a homomorphism
      CHECK(sg.to_parent[sg.grp->mul(i, j)] == g->mul(sg.to_parent[i], sg.to_parent[j]));
    }
  }
}

TEST_CASE("quotients") {
  auto g = grp("S4");
  auto lat = build_subgroup_lattice(*g);
  auto v4 = o_lower(*g, lat, 2);
  auto q = make_quotient(*g, v4, "S4/V4");
  CHECK(q.grp->order() == 6);
  CHECK_FALSE(q.grp->is_abelian());
  CHECK(q.grp->conjugacy_classes().size() == 3);  // it is S3
  for (int a = 0; a < g->order(); ++a)
    for (int b = 0; b < g->order(); ++b)
      CHECK(q.elem_map[g->mul(a, b)] == q.grp->mul(q.elem_map[a], q.elem_map[b]));
}

TEST_CASE("transversals") {
  auto g = grp("S4");
  auto lat = build_subgroup_lattice(*g);
  int syl2 = sylow_class(*g, lat, 2);
  const auto& h = lat.classes[syl2].rep;
  auto reps = left_transversal(*g, h);
  REQUIRE(reps.size() == 3);
  CHECK(reps[0] == 0);
  std::set<std::vector<int>> cosets;
  for (int r : reps) {
    std::vector<int> coset;
    for (int x : h) coset.push_back(g->mul(r, x));
    std::sort(coset.begin(), coset.end());
    // each rep is the least element of its coset
    CHECK(coset.front() == *std::min_element(coset.begin(), coset.end()));
    CHECK(r == coset.front());
    cosets.insert(coset);
  }
  CHECK(cosets.size() == 3);
}

TEST_CASE("helpers") {
  CHECK(int_p_part(24, 2) == 8);
  CHECK(int_p_part(24, 3) == 3);
  CHECK(int_p_part(24, 5) == 1);
  CHECK(int_p_part(1, 7) == 1);

  auto g = grp("C12");
  std::vector<int> all(12);
  for (int i = 0; i < 12; ++i) all[i] = i;
  CHECK(is_cyclic_subset(*g, all));
  auto q8 = grp("Q8");
  std::vector<int> allq(8);
  for (int i = 0; i < 8; ++i) allq[i] = i;
  CHECK_FALSE(is_cyclic_subset(*q8, allq));
  CHECK(is_cyclic_subset(*q8, {0}));

  CHECK(subgroup_closure(*g, {}).size() == 1);
}

}  // TEST_SUITE
