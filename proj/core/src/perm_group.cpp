#include "tsgreen/perm_group.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>

#include "tsgreen/errors.hpp"

namespace tsgreen {

namespace {

std::uint64_t fnv1a(std::uint64_t h, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) {
    h ^= (v >> (8 * i)) & 0xff;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace

PermGroup::PermGroup(int degree, std::vector<Perm> gens, std::string name, int order_cap)
    : degree_(degree), name_(std::move(name)) {
  if (degree < 1) throw BadInput("permutation degree must be positive");
  for (const Perm& g : gens) {
    if (static_cast<int>(g.size()) != degree) throw BadInput("generator degree mismatch in group " + name_);
    Perm check = g;
    std::sort(check.begin(), check.end());
    for (int i = 0; i < degree; ++i)
      if (check[i] != i) throw BadInput("generator is not a permutation in group " + name_);
  }

  std::set<Perm> closed;
  closed.insert(perm_identity(degree));
  std::vector<Perm> frontier(closed.begin(), closed.end());
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const Perm& x : frontier) {
      for (const Perm& g : gens) {
        Perm y = perm_compose(g, x);
        if (closed.insert(y).second) {
          next.push_back(y);
          if (static_cast<int>(closed.size()) > order_cap)
            throw Error("group_too_large",
                        "group " + name_ + " exceeds order cap " + std::to_string(order_cap));
        }
      }
    }
    frontier = std::move(next);
  }
  elements_.assign(closed.begin(), closed.end());

  const int n = order();
  std::map<Perm, int> pos;
  for (int i = 0; i < n; ++i) pos[elements_[i]] = i;

  cayley_.assign(static_cast<std::size_t>(n) * n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) cayley_[a * n + b] = pos.at(perm_compose(elements_[a], elements_[b]));
  inv_.assign(n, 0);
  for (int a = 0; a < n; ++a) inv_[a] = pos.at(perm_inverse(elements_[a]));

  elem_order_.assign(n, 1);
  for (int a = 0; a < n; ++a) {
    int x = a, ord = 1;
    while (x != 0) {
      x = mul(a, x);
      ++ord;
    }
    elem_order_[a] = ord;
  }

  for (const Perm& g : gens) {
    int gi = pos.at(g);
    if (gi == 0) continue;
    if (std::find(gen_idx_.begin(), gen_idx_.end(), gi) == gen_idx_.end()) gen_idx_.push_back(gi);
  }

  bfs_parent_.assign(n, -1);
  bfs_gen_.assign(n, -1);
  std::queue<int> bfs;
  std::vector<bool> seen(n, false);
  bfs.push(0);
  seen[0] = true;
  while (!bfs.empty()) {
    int x = bfs.front();
    bfs.pop();
    for (std::size_t gp = 0; gp < gen_idx_.size(); ++gp) {
      int y = mul(gen_idx_[gp], x);
      if (!seen[y]) {
        seen[y] = true;
        bfs_parent_[y] = x;
        bfs_gen_[y] = static_cast<int>(gp);
        bfs.push(y);
      }
    }
  }
  for (int x = 0; x < n; ++x)
    if (!seen[x]) throw InternalCheckFailed("generator closure missed an element");

  class_of_elem_.assign(n, -1);
  for (int x = 0; x < n; ++x) {
    if (class_of_elem_[x] >= 0) continue;
    std::vector<int> cls;
    int id = static_cast<int>(conj_classes_.size());
    for (int g = 0; g < n; ++g) {
      int y = conj(x, g);
      if (class_of_elem_[y] < 0) {
        class_of_elem_[y] = id;
        cls.push_back(y);
      }
    }
    std::sort(cls.begin(), cls.end());
    conj_classes_.push_back(std::move(cls));
  }

  std::uint64_t h = 1469598103934665603ull;
  h = fnv1a(h, static_cast<std::uint64_t>(degree_));
  h = fnv1a(h, static_cast<std::uint64_t>(n));
  for (const Perm& e : elements_)
    for (std::uint16_t v : e) h = fnv1a(h, v);
  char buf[32];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  key_ = std::to_string(degree_) + ":" + std::to_string(n) + ":" + buf;
}

int PermGroup::index_of(const Perm& p) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
  if (it == elements_.end() || *it != p) return -1;
  return static_cast<int>(it - elements_.begin());
}

bool PermGroup::is_abelian() const {
  for (int a : gen_idx_)
    for (int b : gen_idx_)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

bool PermGroup::is_cyclic() const {
  for (int x = 0; x < order(); ++x)
    if (elem_order_[x] == order()) return true;
  return false;
}

int PermGroup::exponent() const {
  long long e = 1;
  for (int x = 0; x < order(); ++x) e = std::lcm(e, static_cast<long long>(elem_order_[x]));
  return static_cast<int>(e);
}

std::vector<int> subgroup_closure(const PermGroup& g, std::vector<int> seed) {
  std::vector<char> in(g.order(), 0);
  std::vector<int> cl;
  auto add = [&](int x) {
    if (!in[x]) {
      in[x] = 1;
      cl.push_back(x);
    }
  };
  add(0);
  for (int x : seed) add(x);
  for (std::size_t i = 0; i < cl.size(); ++i) {
    for (std::size_t j = 0; j < cl.size(); ++j) {
      add(g.mul(cl[i], cl[j]));
      add(g.mul(cl[j], cl[i]));
    }
  }
  std::sort(cl.begin(), cl.end());
  return cl;
}

bool is_cyclic_subset(const PermGroup& g, const std::vector<int>& elems) {
  for (int x : elems)
    if (g.elem_order(x) == static_cast<int>(elems.size())) return true;
  return false;
}

int SubgroupLattice::class_of(const std::vector<int>& elems) const {
  auto it = index.find(elems);
  if (it == index.end()) throw InternalCheckFailed("subgroup not present in lattice");
  return it->second;
}

SubgroupLattice build_subgroup_lattice(const PermGroup& g) {
  constexpr std::size_t kSubgroupCap = 50000;
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> subs;
  auto add = [&](std::vector<int> s) {
    if (seen.insert(s).second) {
      subs.push_back(std::move(s));
      if (subs.size() > kSubgroupCap) throw CapExceeded("subgroup enumeration exceeds cap");
    }
  };
  add({0});
  for (int x = 1; x < g.order(); ++x) add(subgroup_closure(g, {x}));
  for (std::size_t i = 0; i < subs.size(); ++i) {
    for (int x = 1; x < g.order(); ++x) {
      std::vector<int> cur = subs[i];  // copy: subs may reallocate
      if (std::binary_search(cur.begin(), cur.end(), x)) continue;
      cur.push_back(x);
      add(subgroup_closure(g, cur));
    }
  }

  SubgroupLattice lat;
  std::map<std::vector<int>, int> cls_of;
  for (const auto& s : subs) {
    if (cls_of.count(s)) continue;
    SubgroupClass c;
    c.order = static_cast<int>(s.size());
    std::set<std::vector<int>> orbit;
    for (int t = 0; t < g.order(); ++t) {
      std::vector<int> img;
      img.reserve(s.size());
      for (int x : s) img.push_back(g.conj(x, t));
      std::sort(img.begin(), img.end());
      orbit.insert(std::move(img));
    }
    c.members.assign(orbit.begin(), orbit.end());
    c.rep = c.members.front();
    c.normal = c.members.size() == 1;
    int id = static_cast<int>(lat.classes.size());
    for (const auto& m : c.members) cls_of[m] = id;
    lat.classes.push_back(std::move(c));
  }

  std::vector<int> perm(lat.classes.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](int a, int b) {
    if (lat.classes[a].order != lat.classes[b].order) return lat.classes[a].order < lat.classes[b].order;
    return lat.classes[a].rep < lat.classes[b].rep;
  });
  std::vector<SubgroupClass> ordered;
  ordered.reserve(perm.size());
  std::vector<int> newpos(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) {
    newpos[perm[i]] = static_cast<int>(i);
    ordered.push_back(std::move(lat.classes[perm[i]]));
  }
  lat.classes = std::move(ordered);
  for (auto& kv : cls_of) lat.index[kv.first] = newpos[kv.second];
  return lat;
}

int int_p_part(int n, int r) {
  int p = 1;
  while (n % r == 0) {
    n /= r;
    p *= r;
  }
  return p;
}

std::vector<int> o_upper(const PermGroup& g, int q) {
  std::vector<int> seed;
  for (int x = 0; x < g.order(); ++x)
    if (g.elem_order(x) % q != 0) seed.push_back(x);
  return subgroup_closure(g, seed);
}

int sylow_class(const PermGroup& g, const SubgroupLattice& lat, int r) {
  int want = int_p_part(g.order(), r);
  int found = -1;
  for (std::size_t i = 0; i < lat.classes.size(); ++i) {
    if (lat.classes[i].order == want) {
      if (found >= 0) throw InternalCheckFailed("multiple Sylow classes of the same order");
      found = static_cast<int>(i);
    }
  }
  if (found < 0) throw InternalCheckFailed("Sylow subgroup missing from lattice");
  return found;
}

std::vector<int> o_lower(const PermGroup& g, const SubgroupLattice& lat, int r) {
  const SubgroupClass& syl = lat.classes[sylow_class(g, lat, r)];
  std::vector<char> common(g.order(), 1);
  for (const auto& m : syl.members) {
    std::vector<char> in(g.order(), 0);
    for (int x : m) in[x] = 1;
    for (int x = 0; x < g.order(); ++x) common[x] = common[x] && in[x];
  }
  std::vector<int> out;
  for (int x = 0; x < g.order(); ++x)
    if (common[x]) out.push_back(x);
  return out;
}

SubgroupGroup make_subgroup_group(const PermGroup& g, const std::vector<int>& elems,
                                  const std::string& name) {
  std::vector<Perm> gens;
  std::vector<int> cl = {0};
  for (int x : elems) {
    if (std::binary_search(cl.begin(), cl.end(), x)) continue;
    gens.push_back(g.elem(x));
    std::vector<int> seed;
    for (const Perm& p : gens) seed.push_back(g.index_of(p));
    cl = subgroup_closure(g, seed);
    if (cl.size() == elems.size()) break;
  }
  if (cl != elems) throw BadInput("element set is not a subgroup");

  SubgroupGroup out;
  out.grp = std::make_shared<PermGroup>(g.degree(), gens, name, g.order() + 1);
  if (out.grp->order() != static_cast<int>(elems.size()))
    throw InternalCheckFailed("subgroup regeneration changed the order");
  out.to_parent.assign(out.grp->order(), -1);
  out.from_parent.assign(g.order(), -1);
  for (int i = 0; i < out.grp->order(); ++i) {
    int pi = g.index_of(out.grp->elem(i));
    if (pi < 0) throw InternalCheckFailed("subgroup element escaped the parent group");
    out.to_parent[i] = pi;
    out.from_parent[pi] = i;
  }
  return out;
}

QuotientGroup make_quotient(const PermGroup& g, const std::vector<int>& normal_elems,
                            const std::string& name) {
  if (subgroup_closure(g, normal_elems) != normal_elems)
    throw Error("not_normal", "quotient kernel is not a subgroup");
  std::vector<char> in(g.order(), 0);
  for (int x : normal_elems) in[x] = 1;
  for (int t = 0; t < g.order(); ++t)
    for (int x : normal_elems)
      if (!in[g.conj(x, t)]) throw Error("not_normal", "subgroup is not normal in " + g.name());

  const int nc = g.order() / static_cast<int>(normal_elems.size());
  std::vector<int> coset_of(g.order(), -1);
  std::vector<int> reps;
  for (int x = 0; x < g.order(); ++x) {
    if (coset_of[x] >= 0) continue;
    int id = static_cast<int>(reps.size());
    reps.push_back(x);
    for (int nelt : normal_elems) coset_of[g.mul(x, nelt)] = id;
  }
  if (static_cast<int>(reps.size()) != nc) throw InternalCheckFailed("coset count mismatch");

  auto action_perm = [&](int x) {
    Perm p(nc);
    for (int j = 0; j < nc; ++j) p[j] = static_cast<std::uint16_t>(coset_of[g.mul(x, reps[j])]);
    return p;
  };
  std::vector<Perm> qgens;
  for (int gi : g.gens()) qgens.push_back(action_perm(gi));

  QuotientGroup out;
  out.grp = std::make_shared<PermGroup>(nc, qgens, name, nc + 1);
  if (out.grp->order() != nc) throw InternalCheckFailed("quotient order mismatch");
  out.elem_map.assign(g.order(), -1);
  for (int x = 0; x < g.order(); ++x) {
    int qi = out.grp->index_of(action_perm(x));
    if (qi < 0) throw InternalCheckFailed("quotient action image missing");
    out.elem_map[x] = qi;
  }
  return out;
}

std::vector<int> left_transversal(const PermGroup& g, const std::vector<int>& elems) {
  std::vector<char> covered(g.order(), 0);
  std::vector<int> reps;
  for (int x = 0; x < g.order(); ++x) {
    if (covered[x]) continue;
    reps.push_back(x);
    for (int h : elems) covered[g.mul(x, h)] = 1;
  }
  return reps;
}

}  // namespace tsgreen
