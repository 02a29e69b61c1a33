#include "tsgreen/poly.hpp"

#include <algorithm>
#include <random>

#include "tsgreen/errors.hpp"

namespace tsgreen {

int poly_deg(const FqPoly& a) { return int(a.size()) - 1; }

FqPoly poly_trim(FqPoly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

FqPoly poly_add(const Fq& F, const FqPoly& a, const FqPoly& b) {
  FqPoly c(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < c.size(); ++i) {
    FqEl x = i < a.size() ? a[i] : 0;
    FqEl y = i < b.size() ? b[i] : 0;
    c[i] = F.add(x, y);
  }
  return poly_trim(std::move(c));
}

FqPoly poly_sub(const Fq& F, const FqPoly& a, const FqPoly& b) {
  FqPoly c(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < c.size(); ++i) {
    FqEl x = i < a.size() ? a[i] : 0;
    FqEl y = i < b.size() ? b[i] : 0;
    c[i] = F.sub(x, y);
  }
  return poly_trim(std::move(c));
}

FqPoly poly_scale(const Fq& F, const FqPoly& a, FqEl c) {
  if (c == 0) return {};
  FqPoly r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = F.mul(a[i], c);
  return r;
}

FqPoly poly_mul(const Fq& F, const FqPoly& a, const FqPoly& b) {
  if (a.empty() || b.empty()) return {};
  FqPoly c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (size_t j = 0; j < b.size(); ++j)
      c[i + j] = F.add(c[i + j], F.mul(a[i], b[j]));
  }
  return c;
}

FqPoly poly_monic(const Fq& F, const FqPoly& a) {
  if (a.empty()) return a;
  return poly_scale(F, a, F.inv(a.back()));
}

std::pair<FqPoly, FqPoly> poly_divmod(const Fq& F, const FqPoly& a, const FqPoly& b) {
  if (b.empty()) throw BadInput("polynomial division by zero");
  FqPoly r = a;
  int db = poly_deg(b);
  if (poly_deg(a) < db) return {{}, std::move(r)};
  FqPoly quot(a.size() - b.size() + 1, 0);
  FqEl linv = F.inv(b.back());
  for (int i = poly_deg(a); i >= db; --i) {
    FqEl c = F.mul(r[i], linv);
    if (c == 0) continue;
    quot[i - db] = c;
    for (int j = 0; j <= db; ++j)
      r[i - db + j] = F.sub(r[i - db + j], F.mul(c, b[j]));
  }
  return {poly_trim(std::move(quot)), poly_trim(std::move(r))};
}

FqPoly poly_mod(const Fq& F, const FqPoly& a, const FqPoly& b) {
  return poly_divmod(F, a, b).second;
}

FqPoly poly_gcd(const Fq& F, FqPoly a, FqPoly b) {
  while (!b.empty()) {
    FqPoly r = poly_mod(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return poly_monic(F, a);
}

PolyExtGcd poly_ext_gcd(const Fq& F, const FqPoly& a, const FqPoly& b) {
  FqPoly r0 = poly_trim(a), r1 = poly_trim(b);
  FqPoly u0{1}, u1, v0, v1{1};
  while (!r1.empty()) {
    auto [q, r] = poly_divmod(F, r0, r1);
    r0 = std::move(r1);
    r1 = poly_trim(r);
    FqPoly u2 = poly_sub(F, u0, poly_mul(F, q, u1));
    FqPoly v2 = poly_sub(F, v0, poly_mul(F, q, v1));
    u0 = std::move(u1);
    u1 = std::move(u2);
    v0 = std::move(v1);
    v1 = std::move(v2);
  }
  if (r0.empty()) return {r0, {}, {}};
  FqEl lead = r0.back();
  FqEl inv = F.inv(lead);
  return {poly_scale(F, r0, inv), poly_scale(F, u0, inv), poly_scale(F, v0, inv)};
}

FqPoly poly_powmod(const Fq& F, FqPoly base, Int e, const FqPoly& mod) {
  if (poly_deg(mod) <= 0) return {};
  base = poly_mod(F, base, mod);
  FqPoly r{1};
  while (e > 0) {
    if (boost::multiprecision::bit_test(e, 0))
      r = poly_mod(F, poly_mul(F, r, base), mod);
    base = poly_mod(F, poly_mul(F, base, base), mod);
    e >>= 1;
  }
  return r;
}

FqPoly poly_derivative(const Fq& F, const FqPoly& a) {
  if (a.size() <= 1) return {};
  FqPoly r(a.size() - 1);
  for (size_t i = 1; i < a.size(); ++i)
    r[i - 1] = F.mul(a[i], F.from_int(long(i)));
  return poly_trim(std::move(r));
}

FqEl poly_eval(const Fq& F, const FqPoly& a, FqEl x) {
  FqEl r = 0;
  for (int i = poly_deg(a); i >= 0; --i) r = F.add(F.mul(r, x), a[i]);
  return r;
}

FqPoly poly_compose_mod(const Fq& F, const FqPoly& g, const FqPoly& h, const FqPoly& f) {
  FqPoly r;
  for (int i = poly_deg(g); i >= 0; --i) {
    r = poly_mod(F, poly_mul(F, r, h), f);
    r = poly_add(F, r, FqPoly{g[i]});
  }
  return r;
}

namespace {

// x^(q^i) mod f for i = 1..cap, built by iterated Frobenius; since coefficients
// lie in GF(q) the q-th power of a residue is composition with x^q.
struct FrobTower {
  const Fq& F;
  FqPoly f;   // current modulus
  FqPoly xq;  // x^q mod f
  explicit FrobTower(const Fq& F_, FqPoly f_) : F(F_), f(std::move(f_)) {
    xq = poly_powmod(F, FqPoly{0, 1}, Int(F.q()), f);
  }
  void shrink(const FqPoly& nf) {
    f = nf;
    xq = poly_mod(F, xq, f);
  }
  FqPoly step(const FqPoly& h) const { return poly_compose_mod(F, h, xq, f); }
};

FqPoly random_poly(const Fq& F, int max_deg, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coeff(0, F.q() - 1);
  FqPoly h(size_t(max_deg) + 1);
  for (auto& c : h) c = FqEl(coeff(rng));
  return poly_trim(std::move(h));
}

// g monic squarefree, all irreducible factors of degree e; splits completely.
void edf(const Fq& F, const FqPoly& g, int e, std::mt19937_64& rng,
     std::vector<FqPoly>& out) {
  int n = poly_deg(g);
  if (n == e) {
    out.push_back(g);
    return;
  }
  for (int attempt = 0; attempt < 256; ++attempt) {
    FqPoly h = random_poly(F, n - 1, rng);
    if (poly_deg(h) < 1) continue;
    FqPoly cand;
    if (F.p() == 2) {
      // trace map sum h^(2^j), j < log2(q)*e
      int bits = e;
      for (int t = F.q(); t > 2; t /= 2) bits += e;
      FqPoly u = poly_mod(F, h, g), acc = u;
      for (int j = 1; j < bits; ++j) {
        u = poly_mod(F, poly_mul(F, u, u), g);
        acc = poly_add(F, acc, u);
      }
      cand = poly_gcd(F, acc, g);
    } else {
      Int m = (boost::multiprecision::pow(Int(F.q()), unsigned(e)) - 1) / 2;
      FqPoly u = poly_powmod(F, h, m, g);
      cand = poly_gcd(F, poly_sub(F, u, FqPoly{1}), g);
    }
    int dc = poly_deg(cand);
    if (dc > 0 && dc < n) {
      edf(F, cand, e, rng, out);
      edf(F, poly_divmod(F, g, cand).first, e, rng, out);
      return;
    }
  }
  throw InternalCheckFailed("equal-degree splitting did not converge");
}

// w monic squarefree; returns its irreducible factors.
std::vector<FqPoly> factor_squarefree(const Fq& F, FqPoly w, std::mt19937_64& rng) {
  std::vector<FqPoly> out;
  FrobTower tower(F, w);
  FqPoly h{0, 1};  // x^(q^e) mod current w
  int e = 0;
  while (poly_deg(tower.f) > 0 && 2 * (e + 1) <= poly_deg(tower.f)) {
    ++e;
    h = tower.step(h);
    FqPoly part = poly_gcd(F, poly_sub(F, h, FqPoly{0, 1}), tower.f);
    if (poly_deg(part) > 0) {
      edf(F, part, e, rng, out);
      tower.shrink(poly_divmod(F, tower.f, part).first);
      h = poly_mod(F, h, tower.f);
    }
  }
  if (poly_deg(tower.f) > 0) out.push_back(tower.f);
  return out;
}

FqPoly pth_root(const Fq& F, const FqPoly& f) {
  int p = F.p();
  FqPoly g(poly_deg(f) / p + 1, 0);
  for (size_t i = 0; i < g.size(); ++i)
    g[i] = F.frob_iter(f[i * p], F.d() - 1);
  return poly_trim(std::move(g));
}

void distinct_factors(const Fq& F, FqPoly f, std::mt19937_64& rng,
           std::vector<FqPoly>& out) {
  f = poly_monic(F, f);
  if (poly_deg(f) <= 0) return;
  FqPoly fd = poly_derivative(F, f);
  if (fd.empty()) {
    distinct_factors(F, pth_root(F, f), rng, out);
    return;
  }
  FqPoly w = poly_divmod(F, f, poly_gcd(F, f, fd)).first;
  auto part = factor_squarefree(F, w, rng);
  FqPoly rest = f;
  for (const auto& u : part) {
    out.push_back(u);
    while (true) {
      auto [quo, rem] = poly_divmod(F, rest, u);
      if (!rem.empty()) break;
      rest = std::move(quo);
    }
  }
  distinct_factors(F, rest, rng, out);
}

}  // namespace

bool poly_is_irreducible(const Fq& F, const FqPoly& f) {
  int n = poly_deg(f);
  if (n <= 0) return false;
  if (n == 1) return true;
  FrobTower tower(F, poly_monic(F, f));
  // x^(q^i) mod f for i = 1..n
  std::vector<FqPoly> fr(n + 1);
  fr[0] = FqPoly{0, 1};
  for (int i = 1; i <= n; ++i) fr[i] = tower.step(fr[i - 1]);
  if (poly_trim(fr[n]) != FqPoly({0, 1})) return false;
  for (int t = 2; t <= n; ++t) {
    if (n % t) continue;
    bool tprime = true;
    for (int s = 2; s * s <= t; ++s)
      if (t % s == 0) tprime = false;
    if (!tprime) continue;
    FqPoly g = poly_gcd(F, poly_sub(F, fr[n / t], FqPoly{0, 1}), tower.f);
    if (poly_deg(g) != 0) return false;
  }
  return true;
}

std::vector<std::pair<FqPoly, int>> poly_factor(const Fq& F, const FqPoly& f,
                        std::uint64_t seed) {
  if (f.empty()) throw BadInput("cannot factor the zero polynomial");
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::vector<FqPoly> irr;
  distinct_factors(F, f, rng, irr);
  std::sort(irr.begin(), irr.end(), [](const FqPoly& a, const FqPoly& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  });
  irr.erase(std::unique(irr.begin(), irr.end()), irr.end());
  std::vector<std::pair<FqPoly, int>> out;
  FqPoly rest = poly_monic(F, f);
  for (const auto& u : irr) {
    int m = 0;
    while (true) {
      auto [quo, rem] = poly_divmod(F, rest, u);
      if (!rem.empty()) break;
      rest = std::move(quo);
      ++m;
    }
    out.emplace_back(u, m);
  }
  if (poly_deg(rest) != 0)
    throw InternalCheckFailed("factorization does not multiply back");
  return out;
}

}  // namespace tsgreen
