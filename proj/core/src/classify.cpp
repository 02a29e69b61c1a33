#include "tsgreen/classify.hpp"

#include <algorithm>
#include <set>

#include "tsgreen/errors.hpp"

namespace tsgreen {

namespace {

std::vector<int> prime_divisors(int n) {
  std::vector<int> out;
  for (int d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// Conjugation exponent of y on the cyclic subgroup generated by c0: y c0 y^{-1} = c0^e.
int conj_exponent(const PermGroup& g, int y, int c0, int m) {
  int target = g.conj(c0, y);
  int pw = 0;  // c0^0
  for (int e = 0; e < m; ++e) {
    if (pw == target) return e;
    pw = g.mul(pw, c0);
  }
  throw InternalCheckFailed("conjugate escaped the cyclic subgroup");
}

}  // namespace

bool int_is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<int> galois_index_set(int m, const FqPtr& k) {
  if (m < 1) throw BadInput("modulus must be >= 1");
  if (m == 1) return {0};
  if (m % k->p() == 0)
    throw Error("characteristic_divides_m",
                "characteristic " + std::to_string(k->p()) + " divides " + std::to_string(m));
  int s = k->q() % m;
  std::set<int> seen;
  int cur = 1;
  do {
    seen.insert(cur);
    cur = static_cast<int>(static_cast<long long>(cur) * s % m);
  } while (!seen.count(cur));
  return std::vector<int>(seen.begin(), seen.end());
}

bool is_q_hyperelementary(const PermGroup& g, int q) {
  if (!int_is_prime(q)) throw BadInput("hyperelementary prime expected, got " + std::to_string(q));
  std::vector<int> c = o_upper(g, q);
  return is_cyclic_subset(g, c);
}

bool is_r_hypoelementary(const PermGroup& g, const SubgroupLattice& lat, int r) {
  if (!int_is_prime(r)) throw BadInput("hypoelementary prime expected, got " + std::to_string(r));
  std::vector<int> nr = o_lower(g, lat, r);
  QuotientGroup q = make_quotient(g, nr, g.name() + "/O_" + std::to_string(r));
  return q.grp->is_cyclic();
}

KElementaryWitness k_elementary_witness(const PermGroup& g, const FqPtr& k,
                                        const SubgroupLattice& lat) {
  KElementaryWitness w;
  const int p = k->p();
  std::vector<int> candidates = prime_divisors(g.order());
  for (int q = 2;; ++q) {
    if (!int_is_prime(q) || g.order() % q == 0) continue;
    candidates.push_back(q);
    break;
  }
  for (int q : candidates) {
    std::vector<int> c = o_upper(g, q);
    if (!is_cyclic_subset(g, c)) continue;
    int m = static_cast<int>(c.size());
    if (m % p == 0) {
      w.p_divides_m = true;
      continue;
    }
    // Complement of order |G|/m among subgroup class representatives; since C is
    // normal, a conjugate of a complement is again a complement.
    int want = g.order() / m;
    std::vector<int> comp;
    for (const auto& cls : lat.classes) {
      if (cls.order != want) continue;
      std::size_t common = 0;
      for (int x : cls.rep)
        if (std::binary_search(c.begin(), c.end(), x)) ++common;
      if (common == 1) {
        comp = cls.rep;
        break;
      }
    }
    if (comp.empty()) {
      if (want == 1) throw InternalCheckFailed("trivial complement missing");
      throw InternalCheckFailed("coprime complement missing from lattice");
    }
    std::vector<int> iset = galois_index_set(m, k);
    int c0 = 0;
    for (int x : c)
      if (g.elem_order(x) == m) {
        c0 = x;
        break;
      }
    std::set<int> exps;
    bool ok = true;
    for (int y : comp) {
      int e = m == 1 ? 0 : conj_exponent(g, y, c0, m);
      exps.insert(e);
      if (!std::binary_search(iset.begin(), iset.end(), e)) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    w.ok = true;
    w.q = q;
    w.m = m;
    w.cyclic_part = c;
    w.complement = comp;
    w.exponents.assign(exps.begin(), exps.end());
    return w;
  }
  return w;
}

DressReport dress_report(const PermGroup& g, const FqPtr& k) {
  DressReport r;
  r.order = g.order();
  SubgroupLattice lat = build_subgroup_lattice(g);
  r.o_p = o_lower(g, lat, k->p());
  QuotientGroup q = make_quotient(g, r.o_p, g.name() + "/O_p");
  r.reduced_order = q.grp->order();
  SubgroupLattice qlat = build_subgroup_lattice(*q.grp);
  r.reduced = k_elementary_witness(*q.grp, k, qlat);
  r.k_dress = r.reduced.ok;
  r.dr_p_star = r.k_dress && r.reduced_order % k->p() == 0;
  return r;
}

std::vector<int> dress_primes(const PermGroup& g, int p) {
  SubgroupLattice lat = build_subgroup_lattice(g);
  std::vector<int> op = o_lower(g, lat, p);
  QuotientGroup quo = make_quotient(g, op, g.name() + "/O_p");
  std::vector<int> candidates = prime_divisors(g.order());
  for (int q = 2;; ++q) {
    if (!int_is_prime(q) || g.order() % q == 0) continue;
    candidates.push_back(q);
    break;
  }
  std::sort(candidates.begin(), candidates.end());
  std::vector<int> out;
  for (int q : candidates)
    if (is_q_hyperelementary(*quo.grp, q)) out.push_back(q);
  return out;
}

MinimalShape minimal_non_k_dress_shape(const PermGroup& g, const FqPtr& k) {
  auto fail = [&](const std::string& why) -> Error {
    return Error("not_minimal_counterexample", g.name() + ": " + why);
  };
  DressReport own = dress_report(g, k);
  if (own.k_dress) throw fail("group is k-Dress");

  // Shape forced on a minimal counterexample: G = C_r x|_a C_q^n with r, q
  // distinct primes, r prime to p, the complement acting faithfully, a outside
  // I_r(k).  A faithful action makes every proper quotient collapse the
  // obstruction, which we re-verify directly.
  std::vector<int> primes = prime_divisors(g.order());
  if (primes.size() != 2) throw fail("order is not r * q^n for two distinct primes");
  MinimalShape shape;
  std::string last_reason = "no prime split of the order fits C_r x| C_q^n";
  for (int q : primes) {
    int qpart = int_p_part(g.order(), q);
    int r = g.order() / qpart;
    if (!int_is_prime(r)) continue;
    if (r % k->p() == 0) {
      last_reason = "the candidate cyclic part has order divisible by the characteristic";
      continue;
    }
    std::vector<int> c = o_upper(g, q);
    if (static_cast<int>(c.size()) != r || !is_cyclic_subset(g, c)) {
      last_reason = "O^" + std::to_string(q) + " is not cyclic of prime order";
      continue;
    }
    SubgroupLattice lat = build_subgroup_lattice(g);
    std::vector<int> comp;
    for (const auto& cls : lat.classes) {
      if (cls.order != qpart) continue;
      std::size_t common = 0;
      for (int x : cls.rep)
        if (std::binary_search(c.begin(), c.end(), x)) ++common;
      if (common == 1) {
        comp = cls.rep;
        break;
      }
    }
    if (comp.empty() || !is_cyclic_subset(g, comp)) {
      last_reason = "no cyclic complement of order " + std::to_string(qpart);
      continue;
    }
    int c0 = 0;
    for (int x : c)
      if (g.elem_order(x) == r) {
        c0 = x;
        break;
      }
    // Smallest conjugation exponent over the generators of the complement.
    int a = -1;
    bool faithful = true;
    for (int y : comp) {
      if (g.elem_order(y) != qpart) continue;
      int e = conj_exponent(g, y, c0, r);
      // Minimality forces a faithful action: a power of y acting trivially
      // would yield a smaller quotient with the same obstruction.
      int ord = 1, pw = e;
      while (pw != 1) {
        pw = static_cast<int>(static_cast<long long>(pw) * e % r);
        ++ord;
      }
      if (ord != qpart) faithful = false;
      if (a < 0 || e < a) a = e;
    }
    if (a < 0) throw InternalCheckFailed("cyclic complement without a generator");
    if (!faithful)
      throw fail("the quotient by the kernel of the action is a smaller counterexample");
    std::vector<int> iset = galois_index_set(r, k);
    if (std::binary_search(iset.begin(), iset.end(), a))
      throw fail("conjugation exponent lies in the Galois index set");
    shape.r = r;
    shape.q = q;
    shape.n = 0;
    for (int t = qpart; t > 1; t /= q) ++shape.n;
    shape.a = a;
    if (!is_q_hyperelementary(g, q)) throw InternalCheckFailed("shape group not q-hyperelementary");
    for (const auto& cls : lat.classes) {
      if (!cls.normal || cls.order == 1 || cls.order == g.order()) continue;
      QuotientGroup quo = make_quotient(g, cls.rep, g.name() + "-quo");
      if (!dress_report(*quo.grp, k).k_dress)
        throw fail("proper quotient by the normal subgroup of order " +
                   std::to_string(cls.order) + " is not k-Dress");
    }
    return shape;
  }
  throw fail(last_reason);
}

}  // namespace tsgreen
