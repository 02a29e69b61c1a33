#include "tsgreen/fq.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>

#include "tsgreen/errors.hpp"

namespace tsgreen {
namespace {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int i = 2; i * i <= n; ++i)
    if (n % i == 0) return false;
  return true;
}

// Dense polynomial arithmetic over Z/p, constant-first, used only to find the
// defining modulus. Vectors are not trimmed; callers track degrees.
using ZpPoly = std::vector<int>;

ZpPoly zp_mulmod(const ZpPoly& a, const ZpPoly& b, const ZpPoly& f, int p) {
  int d = int(f.size()) - 1;
  std::vector<int> c(2 * d - 1, 0);
  for (int i = 0; i < d; ++i) {
    if (!a[i]) continue;
    for (int j = 0; j < d; ++j)
      c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  }
  for (int i = 2 * d - 2; i >= d; --i) {
    int t = c[i];
    if (!t) continue;
    c[i] = 0;
    for (int j = 0; j < d; ++j)
      c[i - d + j] = (c[i - d + j] + t * (p - f[j])) % p;
  }
  c.resize(d);
  return c;
}

ZpPoly zp_powmod(ZpPoly base, long long e, const ZpPoly& f, int p) {
  int d = int(f.size()) - 1;
  ZpPoly r(d, 0);
  r[0] = 1;
  while (e > 0) {
    if (e & 1) r = zp_mulmod(r, base, f, p);
    base = zp_mulmod(base, base, f, p);
    e >>= 1;
  }
  return r;
}

ZpPoly zp_gcd(ZpPoly a, ZpPoly b, int p) {
  auto deg = [](const ZpPoly& v) {
    for (int i = int(v.size()) - 1; i >= 0; --i)
      if (v[i]) return i;
    return -1;
  };
  while (deg(b) >= 0) {
    // a mod b by repeated leading-term elimination
    int db = deg(b);
    int lb = b[db];
    int linv = 1;
    for (int i = 1; i < p; ++i)
      if (lb * i % p == 1) linv = i;
    while (deg(a) >= db) {
      int da = deg(a);
      int c = a[da] * linv % p;
      for (int j = 0; j <= db; ++j)
        a[da - db + j] = ((a[da - db + j] - c * b[j]) % p + p) % p;
    }
    std::swap(a, b);
  }
  return a;
}

// f monic of degree d over Z/p; true iff irreducible.
bool zp_irreducible(const ZpPoly& f, int p) {
  int d = int(f.size()) - 1;
  if (d == 1) return true;
  ZpPoly x(d, 0);
  if (d > 1) x[1] = 1;
  // x^(p^i) mod f by iterated p-th powering
  auto frob_tower = [&](int i) {
    ZpPoly g = x;
    for (int s = 0; s < i; ++s) g = zp_powmod(g, p, f, p);
    return g;
  };
  // x^(p^d) == x required
  ZpPoly top = frob_tower(d);
  if (top != x) return false;
  for (int t = 2; t <= d; ++t) {
    if (d % t || !is_prime(t)) continue;
    ZpPoly g = frob_tower(d / t);
    // gcd(g - x, f) must be 1
    ZpPoly diff(d, 0);
    for (int i = 0; i < d; ++i) diff[i] = ((g[i] - x[i]) % p + p) % p;
    ZpPoly gc = zp_gcd(diff, f, p);
    int dg = -1;
    for (int i = int(gc.size()) - 1; i >= 0; --i)
      if (gc[i]) { dg = i; break; }
    if (dg != 0) return false;
  }
  return true;
}

std::vector<int> find_modulus(int p, int d) {
  if (d == 1) return {0, 1};
  long long total = 1;
  for (int i = 0; i < d; ++i) total *= p;
  for (long long n = 0; n < total; ++n) {
    ZpPoly f(d + 1, 0);
    f[d] = 1;
    long long m = n;
    for (int i = 0; i < d; ++i) {
      f[i] = int(m % p);
      m /= p;
    }
    if (zp_irreducible(f, p)) return f;
  }
  throw InternalCheckFailed("no irreducible modulus found");
}

}  // namespace

Fq::Fq(int p, int d, std::vector<int> modulus) : p_(p), d_(d) {
  long long q = 1;
  for (int i = 0; i < d; ++i) {
    q *= p;
    if (q > 65535) throw CapExceeded("field size exceeds 2^16");
  }
  q_ = int(q);
  modulus_ = modulus.empty() ? find_modulus(p, d) : std::move(modulus);
  if (q_ <= kTableCap) {
    neg_tab_.resize(q_);
    inv_tab_.assign(q_, 0);
    add_tab_.resize(size_t(q_) * q_);
    mul_tab_.resize(size_t(q_) * q_);
    for (int a = 0; a < q_; ++a) {
      neg_tab_[a] = neg_generic(FqEl(a));
      for (int b = 0; b < q_; ++b) {
        add_tab_[size_t(a) * q_ + b] = add_generic(FqEl(a), FqEl(b));
        mul_tab_[size_t(a) * q_ + b] = mul_generic(FqEl(a), FqEl(b));
      }
    }
    for (int a = 1; a < q_; ++a)
      for (int b = 1; b < q_; ++b)
        if (mul_tab_[size_t(a) * q_ + b] == 1) inv_tab_[a] = FqEl(b);
    has_tables_ = true;
  }
}

FqPtr Fq::make(int p, int d) {
  if (!is_prime(p)) throw BadInput("field characteristic must be prime, got " + std::to_string(p));
  if (d < 1) throw BadInput("field degree must be positive");
  // Fields are immutable and shared; cache by (p, d).
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::weak_ptr<const Fq>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{p, d}];
  if (auto f = slot.lock()) return f;
  auto f = std::shared_ptr<const Fq>(new Fq(p, d, {}));
  slot = f;
  return f;
}

FqPtr Fq::make_with_modulus(int p, int d, const std::vector<int>& modulus) {
  if (!is_prime(p)) throw BadInput("field characteristic must be prime, got " + std::to_string(p));
  if (d < 1) throw BadInput("field degree must be positive");
  if (int(modulus.size()) != d + 1)
    throw BadInput("modulus must have degree " + std::to_string(d) +
                   " (" + std::to_string(d + 1) + " coefficients)");
  std::vector<int> f(modulus);
  for (int& c : f) {
    c %= p;
    if (c < 0) c += p;
  }
  if (f[d] != 1) throw BadInput("modulus must be monic");
  if (!zp_irreducible(f, p)) throw BadInput("modulus is not irreducible over GF(" + std::to_string(p) + ")");
  return std::shared_ptr<const Fq>(new Fq(p, d, std::move(f)));
}

FqPtr Fq::parse(const std::string& name) {
  std::string s;
  for (char c : name)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(char(std::tolower(static_cast<unsigned char>(c))));
  if (s.size() < 5 || s.substr(0, 3) != "gf(" || s.back() != ')')
    throw BadInput("cannot parse field '" + name + "'; expected GF(q) or GF(p^d)");
  std::string body = s.substr(3, s.size() - 4);
  auto caret = body.find('^');
  auto to_int = [&](const std::string& t) {
    if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos)
      throw BadInput("cannot parse field '" + name + "'");
    long long v = std::stoll(t);
    if (v <= 0 || v > 65535) throw BadInput("field size out of range in '" + name + "'");
    return int(v);
  };
  if (caret != std::string::npos) {
    int p = to_int(body.substr(0, caret));
    int d = to_int(body.substr(caret + 1));
    return make(p, d);
  }
  int n = to_int(body);
  // factor n as p^d
  for (int p = 2; p <= n; ++p) {
    if (!is_prime(p) || n % p) continue;
    int d = 0;
    long long m = n;
    while (m % p == 0) { m /= p; ++d; }
    if (m != 1) throw BadInput("'" + name + "' is not a prime power");
    return make(p, d);
  }
  throw BadInput("'" + name + "' is not a prime power");
}

FqEl Fq::add_generic(FqEl a, FqEl b) const {
  int r = 0, mult = 1;
  int x = a, y = b;
  for (int i = 0; i < d_; ++i) {
    r += (x % p_ + y % p_) % p_ * mult;
    x /= p_;
    y /= p_;
    mult *= p_;
  }
  return FqEl(r);
}

FqEl Fq::neg_generic(FqEl a) const {
  int r = 0, mult = 1;
  int x = a;
  for (int i = 0; i < d_; ++i) {
    r += (p_ - x % p_) % p_ * mult;
    x /= p_;
    mult *= p_;
  }
  return FqEl(r);
}

FqEl Fq::mul_generic(FqEl a, FqEl b) const {
  std::vector<int> va = to_vec(a), vb = to_vec(b);
  std::vector<int> c(2 * d_ - 1, 0);
  for (int i = 0; i < d_; ++i) {
    if (!va[i]) continue;
    for (int j = 0; j < d_; ++j)
      c[i + j] = (c[i + j] + va[i] * vb[j]) % p_;
  }
  for (int i = 2 * d_ - 2; i >= d_; --i) {
    int t = c[i];
    if (!t) continue;
    c[i] = 0;
    for (int j = 0; j < d_; ++j)
      c[i - d_ + j] = (c[i - d_ + j] + t * (p_ - modulus_[j])) % p_;
  }
  c.resize(d_);
  return from_vec(c);
}

FqEl Fq::inv(FqEl a) const {
  if (a == 0) throw BadInput("division by zero in " + name());
  if (has_tables_) return inv_tab_[a];
  return pow(a, q_ - 2);
}

FqEl Fq::pow(FqEl a, long long e) const {
  FqEl r = 1, base = a;
  while (e > 0) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

FqEl Fq::frob_iter(FqEl a, int i) const {
  i %= d_;
  if (i < 0) i += d_;
  FqEl r = a;
  for (int s = 0; s < i; ++s) r = frob(r);
  return r;
}

FqEl Fq::from_int(long long n) const {
  long long r = n % p_;
  if (r < 0) r += p_;
  return FqEl(r);
}

std::vector<int> Fq::to_vec(FqEl a) const {
  std::vector<int> v(d_);
  int x = a;
  for (int i = 0; i < d_; ++i) {
    v[i] = x % p_;
    x /= p_;
  }
  return v;
}

FqEl Fq::from_vec(const std::vector<int>& v) const {
  int r = 0, mult = 1;
  for (int i = 0; i < d_; ++i) {
    int c = i < int(v.size()) ? ((v[i] % p_) + p_) % p_ : 0;
    r += c * mult;
    mult *= p_;
  }
  return FqEl(r);
}

}  // namespace tsgreen
