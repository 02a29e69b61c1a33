#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace tsgreen {

using FqEl = std::uint16_t;

// GF(p^d). An element sum_i a_i t^i (0 <= a_i < p, t = class of x) is encoded
// as the integer sum_i a_i p^i. The defining modulus is the lexicographically
// least monic irreducible of degree d, scanning the non-leading coefficient
// vector (a_0, a_1, ...) as a base-p integer: GF(4) gets x^2+x+1, GF(8) gets
// x^3+x+1, GF(9) gets x^2+1. Arithmetic is table-driven for q <= kTableCap.
class Fq {
public:
  static constexpr int kTableCap = 512;

  static std::shared_ptr<const Fq> make(int p, int d);
  // Same field with a caller-chosen defining modulus (constant term first,
  // length d+1, monic); verified irreducible over GF(p).
  static std::shared_ptr<const Fq> make_with_modulus(int p, int d, const std::vector<int>& modulus);
  // Accepts "GF(q)" or "GF(p^d)", case-insensitive, spaces ignored.
  static std::shared_ptr<const Fq> parse(const std::string& name);

  int p() const { return p_; }
  int d() const { return d_; }
  int q() const { return q_; }
  // Coefficients of the modulus, constant term first, length d+1, monic.
  const std::vector<int>& modulus() const { return modulus_; }
  std::string name() const { return "GF(" + std::to_string(q_) + ")"; }
  bool same(const Fq& o) const { return p_ == o.p_ && d_ == o.d_ && modulus_ == o.modulus_; }

  FqEl add(FqEl a, FqEl b) const {
    return has_tables_ ? add_tab_[size_t(a) * q_ + b] : add_generic(a, b);
  }
  FqEl sub(FqEl a, FqEl b) const { return add(a, neg(b)); }
  FqEl neg(FqEl a) const {
    return has_tables_ ? neg_tab_[a] : neg_generic(a);
  }
  FqEl mul(FqEl a, FqEl b) const {
    return has_tables_ ? mul_tab_[size_t(a) * q_ + b] : mul_generic(a, b);
  }
  FqEl inv(FqEl a) const;  // throws BadInput on a == 0
  FqEl pow(FqEl a, long long e) const;  // e >= 0
  FqEl frob(FqEl a) const { return pow(a, p_); }
  FqEl frob_iter(FqEl a, int i) const;  // a^(p^i), i may exceed d
  FqEl from_int(long long n) const;     // reduce into the prime subfield

  // Digits of the encoding, constant-first, length d.
  std::vector<int> to_vec(FqEl a) const;
  FqEl from_vec(const std::vector<int>& v) const;

private:
  Fq(int p, int d, std::vector<int> modulus);
  FqEl add_generic(FqEl a, FqEl b) const;
  FqEl neg_generic(FqEl a) const;
  FqEl mul_generic(FqEl a, FqEl b) const;

  int p_, d_, q_;
  std::vector<int> modulus_;
  bool has_tables_ = false;
  std::vector<FqEl> add_tab_, mul_tab_, neg_tab_, inv_tab_;
};

using FqPtr = std::shared_ptr<const Fq>;

}  // namespace tsgreen
