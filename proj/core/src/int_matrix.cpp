#include "tsgreen/int_matrix.hpp"

#include <algorithm>

#include "tsgreen/errors.hpp"

namespace tsgreen {

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (cols_ != o.rows_) throw InternalCheckFailed("integer matrix shape mismatch");
  IntMatrix r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Int& x = at(i, k);
      if (x == 0) continue;
      for (int j = 0; j < o.cols_; ++j)
        if (o.at(k, j) != 0) r.at(i, j) += x * o.at(k, j);
    }
  return r;
}

std::vector<Int> IntMatrix::apply(const std::vector<Int>& v) const {
  std::vector<Int> r(rows_, 0);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (at(i, j) != 0 && v[j] != 0) r[i] += at(i, j) * v[j];
  return r;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

void IntMatrix::swap_cols(int i, int j) {
  if (i == j) return;
  for (int r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
}

void IntMatrix::swap_rows(int i, int j) {
  if (i == j) return;
  for (int c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

void IntMatrix::addmul_col(int j, int i, const Int& c) {
  if (c == 0) return;
  for (int r = 0; r < rows_; ++r)
    if (at(r, i) != 0) at(r, j) += c * at(r, i);
}

void IntMatrix::addmul_row(int j, int i, const Int& c) {
  if (c == 0) return;
  for (int col = 0; col < cols_; ++col)
    if (at(i, col) != 0) at(j, col) += c * at(i, col);
}

void IntMatrix::negate_col(int j) {
  for (int r = 0; r < rows_; ++r) at(r, j) = -at(r, j);
}

Hnf int_hnf(const IntMatrix& m) {
  Hnf out;
  out.h = m;
  out.u = IntMatrix::identity(m.cols());
  IntMatrix& h = out.h;
  IntMatrix& u = out.u;
  int c = 0;
  for (int r = 0; r < m.rows() && c < m.cols(); ++r) {
    // Euclidean sweep: clear row r to the right of column c
    while (true) {
      int best = -1;
      for (int j = c; j < m.cols(); ++j)
        if (h.at(r, j) != 0 &&
          (best < 0 || abs(h.at(r, j)) < abs(h.at(r, best))))
          best = j;
      if (best < 0) break;
      h.swap_cols(c, best);
      u.swap_cols(c, best);
      bool clean = true;
      for (int j = c + 1; j < m.cols(); ++j) {
        if (h.at(r, j) == 0) continue;
        Int q = h.at(r, j) / h.at(r, c);  // truncated division
        h.addmul_col(j, c, -q);
        u.addmul_col(j, c, -q);
        if (h.at(r, j) != 0) clean = false;
      }
      if (clean) break;
    }
    if (h.at(r, c) == 0) continue;  // row r has no pivot
    if (h.at(r, c) < 0) {
      h.negate_col(c);
      u.negate_col(c);
    }
    // reduce earlier columns in the pivot row into [0, pivot)
    for (int j = 0; j < c; ++j) {
      Int q = h.at(r, j) / h.at(r, c);
      if (h.at(r, j) - q * h.at(r, c) < 0) q -= 1;  // floor division
      h.addmul_col(j, c, -q);
      u.addmul_col(j, c, -q);
    }
    out.pivot_rows.push_back(r);
    ++c;
  }
  if (!(m * u == h)) throw InternalCheckFailed("Hermite form does not factor");
  return out;
}

Snf int_snf(const IntMatrix& m) {
  Snf out;
  out.s = m;
  out.u = IntMatrix::identity(m.rows());
  out.v = IntMatrix::identity(m.cols());
  IntMatrix& s = out.s;
  int n = std::min(m.rows(), m.cols());
  for (int t = 0; t < n; ++t) {
    // find the smallest nonzero entry in the trailing block
    int bi = -1, bj = -1;
    for (int i = t; i < m.rows(); ++i)
      for (int j = t; j < m.cols(); ++j)
        if (s.at(i, j) != 0 &&
          (bi < 0 || abs(s.at(i, j)) < abs(s.at(bi, bj)))) {
          bi = i;
          bj = j;
        }
    if (bi < 0) break;
    s.swap_rows(t, bi);
    out.u.swap_rows(t, bi);
    s.swap_cols(t, bj);
    out.v.swap_cols(t, bj);
    while (true) {
      bool again = false;
      for (int i = t + 1; i < m.rows(); ++i) {
        if (s.at(i, t) == 0) continue;
        Int q = s.at(i, t) / s.at(t, t);
        s.addmul_row(i, t, -q);
        out.u.addmul_row(i, t, -q);
        if (s.at(i, t) != 0) {
          s.swap_rows(t, i);
          out.u.swap_rows(t, i);
          again = true;
        }
      }
      for (int j = t + 1; j < m.cols(); ++j) {
        if (s.at(t, j) == 0) continue;
        Int q = s.at(t, j) / s.at(t, t);
        s.addmul_col(j, t, -q);
        out.v.addmul_col(j, t, -q);
        if (s.at(t, j) != 0) {
          s.swap_cols(t, j);
          out.v.swap_cols(t, j);
          again = true;
        }
      }
      if (again) continue;
      // enforce the divisor chain: pivot must divide the trailing block
      bool fixed = true;
      for (int i = t + 1; i < m.rows() && fixed; ++i)
        for (int j = t + 1; j < m.cols() && fixed; ++j)
          if (s.at(i, j) % s.at(t, t) != 0) {
            s.addmul_row(t, i, Int(1));
            out.u.addmul_row(t, i, Int(1));
            fixed = false;
          }
      if (fixed) break;
    }
    if (s.at(t, t) < 0) {
      for (int i = 0; i < m.rows(); ++i) s.at(i, t) = -s.at(i, t);
      for (int i = 0; i < m.cols(); ++i) out.v.at(i, t) = -out.v.at(i, t);
    }
    out.divisors.push_back(s.at(t, t));
    ++out.rank;
  }
  if (!(out.u * m * out.v == out.s))
    throw InternalCheckFailed("Smith form does not factor");
  for (size_t i = 1; i < out.divisors.size(); ++i)
    if (out.divisors[i] % out.divisors[i - 1] != 0)
      throw InternalCheckFailed("Smith divisors do not form a chain");
  return out;
}

LatticeQuery lattice_contains(const Hnf& hnf, const IntMatrix& m,
               const std::vector<Int>& target) {
  LatticeQuery out;
  std::vector<Int> y = target;
  int rank = int(hnf.pivot_rows.size());
  std::vector<Int> coef(m.cols(), 0);
  for (int c = 0; c < rank; ++c) {
    int r = hnf.pivot_rows[c];
    const Int& piv = hnf.h.at(r, c);
    if (y[r] % piv != 0) return out;
    Int q = y[r] / piv;
    coef[c] = q;
    if (q != 0)
      for (int i = 0; i < m.rows(); ++i) y[i] -= q * hnf.h.at(i, c);
  }
  for (const Int& x : y)
    if (x != 0) return out;
  out.contains = true;
  out.witness = hnf.u.apply(coef);
  if (!(m.apply(out.witness) == target))
    throw InternalCheckFailed("lattice witness does not reproduce target");
  return out;
}

LatticeQuery lattice_contains(const IntMatrix& m, const std::vector<Int>& target) {
  return lattice_contains(int_hnf(m), m, target);
}

bool lattice_equals_zn(const IntMatrix& m) {
  Hnf h = int_hnf(m);
  if (int(h.pivot_rows.size()) != m.rows()) return false;
  for (int c = 0; c < m.rows(); ++c)
    if (h.h.at(h.pivot_rows[c], c) != 1) return false;
  return true;
}

Int int_det(IntMatrix m) {
  if (m.rows() != m.cols()) throw BadInput("determinant of non-square matrix");
  int n = m.rows();
  if (n == 0) return 1;
  Int sign = 1, prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m.at(k, k) == 0) {
      int piv = -1;
      for (int i = k + 1; i < n; ++i)
        if (m.at(i, k) != 0) { piv = i; break; }
      if (piv < 0) return 0;
      m.swap_rows(k, piv);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        Int num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
        m.at(i, j) = num / prev;  // Bareiss: division is exact
      }
    prev = m.at(k, k);
  }
  return sign * m.at(n - 1, n - 1);
}

}  // namespace tsgreen
