#include "tsgreen/ff_matrix.hpp"

#include <algorithm>

#include "tsgreen/errors.hpp"

namespace tsgreen {

FFMatrix FFMatrix::identity(FqPtr F, int n) {
  FFMatrix m(std::move(F), n, n);
  for (int i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

FFMatrix FFMatrix::from_cols(FqPtr F, int dim, const std::vector<std::vector<FqEl>>& cols) {
  FFMatrix m(std::move(F), dim, int(cols.size()));
  for (int j = 0; j < int(cols.size()); ++j)
    for (int i = 0; i < dim; ++i) m.set(i, j, cols[j][i]);
  return m;
}

std::vector<FqEl> FFMatrix::row(int i) const {
  return {a_.begin() + size_t(i) * cols_, a_.begin() + size_t(i + 1) * cols_};
}

std::vector<FqEl> FFMatrix::col(int j) const {
  std::vector<FqEl> v(rows_);
  for (int i = 0; i < rows_; ++i) v[i] = at(i, j);
  return v;
}

void FFMatrix::set_col(int j, const std::vector<FqEl>& v) {
  for (int i = 0; i < rows_; ++i) set(i, j, v[i]);
}

FFMatrix FFMatrix::operator+(const FFMatrix& o) const {
  FFMatrix r(F_, rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = F_->add(a_[i], o.a_[i]);
  return r;
}

FFMatrix FFMatrix::operator-(const FFMatrix& o) const {
  FFMatrix r(F_, rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = F_->sub(a_[i], o.a_[i]);
  return r;
}

FFMatrix FFMatrix::operator*(const FFMatrix& o) const {
  if (cols_ != o.rows_) throw InternalCheckFailed("matrix shape mismatch in multiply");
  FFMatrix r(F_, rows_, o.cols_);
  const Fq& F = *F_;
  for (int i = 0; i < rows_; ++i) {
    for (int k = 0; k < cols_; ++k) {
      FqEl x = at(i, k);
      if (!x) continue;  // permutation-like matrices are mostly zero
      const FqEl* orow = &o.a_[size_t(k) * o.cols_];
      FqEl* rrow = &r.a_[size_t(i) * o.cols_];
      for (int j = 0; j < o.cols_; ++j)
        if (orow[j]) rrow[j] = F.add(rrow[j], F.mul(x, orow[j]));
    }
  }
  return r;
}

std::vector<FqEl> FFMatrix::apply(const std::vector<FqEl>& v) const {
  std::vector<FqEl> r(rows_, 0);
  const Fq& F = *F_;
  for (int i = 0; i < rows_; ++i) {
    FqEl acc = 0;
    const FqEl* arow = &a_[size_t(i) * cols_];
    for (int j = 0; j < cols_; ++j)
      if (arow[j] && v[j]) acc = F.add(acc, F.mul(arow[j], v[j]));
    r[i] = acc;
  }
  return r;
}

FFMatrix FFMatrix::scale(FqEl c) const {
  FFMatrix r(F_, rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = F_->mul(a_[i], c);
  return r;
}

FFMatrix FFMatrix::transpose() const {
  FFMatrix r(F_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.set(j, i, at(i, j));
  return r;
}

FFMatrix FFMatrix::kron(const FFMatrix& o) const {
  FFMatrix r(F_, rows_ * o.rows_, cols_ * o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) {
      FqEl x = at(i, j);
      if (!x) continue;
      for (int k = 0; k < o.rows_; ++k)
        for (int l = 0; l < o.cols_; ++l)
          if (o.at(k, l))
            r.set(i * o.rows_ + k, j * o.cols_ + l, F_->mul(x, o.at(k, l)));
    }
  return r;
}

bool FFMatrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](FqEl x) { return x == 0; });
}

FqEl FFMatrix::trace() const {
  FqEl t = 0;
  for (int i = 0; i < rows_; ++i) t = F_->add(t, at(i, i));
  return t;
}

FFMatrix ff_hstack(const FFMatrix& a, const FFMatrix& b) {
  FFMatrix r(a.field(), a.rows(), a.cols() + b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) r.set(i, j, a.at(i, j));
    for (int j = 0; j < b.cols(); ++j) r.set(i, a.cols() + j, b.at(i, j));
  }
  return r;
}

FFMatrix ff_vstack(const FFMatrix& a, const FFMatrix& b) {
  FFMatrix r(a.field(), a.rows() + b.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r.set(i, j, a.at(i, j));
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) r.set(a.rows() + i, j, b.at(i, j));
  return r;
}

std::vector<int> ff_rref(FFMatrix& m) {
  const Fq& F = *m.field();
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int piv = -1;
    for (int i = r; i < m.rows(); ++i)
      if (m.at(i, c)) { piv = i; break; }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = 0; j < m.cols(); ++j) {
        FqEl t = m.at(r, j);
        m.set(r, j, m.at(piv, j));
        m.set(piv, j, t);
      }
    FqEl inv = F.inv(m.at(r, c));
    for (int j = c; j < m.cols(); ++j) m.set(r, j, F.mul(m.at(r, j), inv));
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r) continue;
      FqEl f = m.at(i, c);
      if (!f) continue;
      for (int j = c; j < m.cols(); ++j)
        m.set(i, j, F.sub(m.at(i, j), F.mul(f, m.at(r, j))));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

int ff_rank(FFMatrix m) { return int(ff_rref(m).size()); }

FFMatrix ff_kernel(const FFMatrix& m) {
  FFMatrix r = m;
  std::vector<int> pivots = ff_rref(r);
  const Fq& F = *m.field();
  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<std::vector<FqEl>> basis;
  for (int c = 0; c < m.cols(); ++c) {
    if (is_pivot[c]) continue;
    std::vector<FqEl> v(m.cols(), 0);
    v[c] = 1;
    for (int i = 0; i < int(pivots.size()); ++i)
      v[pivots[i]] = F.neg(r.at(i, c));
    basis.push_back(std::move(v));
  }
  return FFMatrix::from_cols(m.field(), m.cols(), basis);
}

std::optional<std::vector<FqEl>> ff_solve(const FFMatrix& m, const std::vector<FqEl>& b) {
  if (int(b.size()) != m.rows()) throw Error("dimension_mismatch", "ff_solve rhs length");
  FFMatrix aug(m.field(), m.rows(), m.cols() + 1);
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) aug.set(i, j, m.at(i, j));
    aug.set(i, m.cols(), b[i]);
  }
  std::vector<int> pivots = ff_rref(aug);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  std::vector<FqEl> x(m.cols(), 0);
  for (int i = 0; i < int(pivots.size()); ++i) x[pivots[i]] = aug.at(i, m.cols());
  return x;
}

LinearSystem ff_solve_full(const FFMatrix& m, const std::vector<FqEl>& b) {
  LinearSystem out;
  auto x = ff_solve(m, b);
  out.consistent = x.has_value();
  if (x) out.solution = std::move(*x);
  out.kernel = ff_kernel(m);
  return out;
}

std::optional<FFMatrix> ff_solve_mat(const FFMatrix& a, const FFMatrix& rhs) {
  if (rhs.rows() != a.rows()) throw Error("dimension_mismatch", "ff_solve_mat rhs rows");
  FFMatrix aug = ff_hstack(a, rhs);
  std::vector<int> pivots = ff_rref(aug);
  for (int c : pivots)
    if (c >= a.cols()) return std::nullopt;
  FFMatrix x(a.field(), a.cols(), rhs.cols());
  for (int i = 0; i < int(pivots.size()); ++i)
    for (int j = 0; j < rhs.cols(); ++j) x.set(pivots[i], j, aug.at(i, a.cols() + j));
  return x;
}

FFMatrix ff_inverse(const FFMatrix& m) {
  if (m.rows() != m.cols()) throw BadInput("cannot invert a non-square matrix");
  FFMatrix aug = ff_hstack(m, FFMatrix::identity(m.field(), m.rows()));
  std::vector<int> pivots = ff_rref(aug);
  if (int(pivots.size()) != m.rows() || (!pivots.empty() && pivots.back() >= m.cols()))
    throw BadInput("matrix is singular");
  FFMatrix r(m.field(), m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r.set(i, j, aug.at(i, m.cols() + j));
  return r;
}

FFMatrix ff_left_inverse(const FFMatrix& m) {
  FFMatrix aug = ff_hstack(m, FFMatrix::identity(m.field(), m.rows()));
  std::vector<int> pivots = ff_rref(aug);
  int rank = 0;
  for (int c : pivots)
    if (c < m.cols()) ++rank;
  if (rank != m.cols()) throw InternalCheckFailed("left inverse of rank-deficient matrix");
  FFMatrix r(m.field(), m.cols(), m.rows());
  for (int i = 0; i < m.cols(); ++i)
    for (int j = 0; j < m.rows(); ++j) r.set(i, j, aug.at(i, m.cols() + j));
  return r;
}

FqPoly ff_charpoly(const FFMatrix& m) {
  const Fq& F = *m.field();
  int n = m.rows();
  FFMatrix h = m;
  // similarity reduction to upper Hessenberg
  for (int j = 0; j + 2 < n; ++j) {
    int piv = -1;
    for (int i = j + 1; i < n; ++i)
      if (h.at(i, j)) { piv = i; break; }
    if (piv < 0) continue;
    if (piv != j + 1) {
      for (int c = 0; c < n; ++c) {
        FqEl t = h.at(j + 1, c);
        h.set(j + 1, c, h.at(piv, c));
        h.set(piv, c, t);
      }
      for (int r = 0; r < n; ++r) {
        FqEl t = h.at(r, j + 1);
        h.set(r, j + 1, h.at(r, piv));
        h.set(r, piv, t);
      }
    }
    FqEl inv = F.inv(h.at(j + 1, j));
    for (int i = j + 2; i < n; ++i) {
      FqEl t = F.mul(h.at(i, j), inv);
      if (!t) continue;
      for (int c = 0; c < n; ++c)
        h.set(i, c, F.sub(h.at(i, c), F.mul(t, h.at(j + 1, c))));
      for (int r = 0; r < n; ++r)
        h.set(r, j + 1, F.add(h.at(r, j + 1), F.mul(t, h.at(r, i))));
    }
  }
  // charpoly of leading k x k blocks of the Hessenberg form
  std::vector<FqPoly> p(n + 1);
  p[0] = FqPoly{1};
  for (int k = 1; k <= n; ++k) {
    FqPoly xm{F.neg(h.at(k - 1, k - 1)), 1};
    p[k] = poly_mul(F, xm, p[k - 1]);
    FqEl prod = 1;
    for (int mlen = 2; mlen <= k; ++mlen) {
      prod = F.mul(prod, h.at(k - mlen + 1, k - mlen));
      if (!prod) break;
      FqEl coef = F.mul(h.at(k - mlen, k - 1), prod);
      if (!coef) continue;
      p[k] = poly_sub(F, p[k], poly_scale(F, p[k - mlen], coef));
    }
  }
  return p[n];
}

FqPoly ff_min_poly(const FFMatrix& m) {
  const Fq& F = *m.field();
  FqPtr Fp = m.field();
  int n = m.rows();
  if (n == 0) return FqPoly{1};
  EchelonSolver global(Fp, n, false);
  FqPoly mp{1};
  for (int s = 0; s < n && global.rank() < n; ++s) {
    std::vector<FqEl> seed(n, 0);
    seed[s] = 1;
    if (global.reduce(seed).in_span) continue;
    EchelonSolver local(Fp, n, true);
    std::vector<FqEl> w = seed;
    std::vector<std::vector<FqEl>> chain;
    FqPoly localmp;
    while (true) {
      auto red = local.reduce(w);
      if (red.in_span) {
        // w = A^k seed = sum c_j A^j seed; relation x^k - sum c_j x^j
        localmp.assign(chain.size() + 1, 0);
        for (size_t j = 0; j < red.coords.size(); ++j) localmp[j] = red.coords[j];
        for (auto& c : localmp) c = F.neg(c);
        localmp.back() = 1;
        break;
      }
      local.insert(w);
      chain.push_back(w);
      w = m.apply(w);
    }
    for (const auto& v : chain) global.insert(v);
    // mp = lcm(mp, localmp)
    FqPoly g = poly_gcd(F, mp, localmp);
    mp = poly_mul(F, mp, poly_divmod(F, localmp, g).first);
    mp = poly_monic(F, mp);
    if (poly_deg(mp) == n) break;
  }
  return mp;
}

FFMatrix ff_poly_eval(const FFMatrix& m, const FqPoly& f) {
  const Fq& F = *m.field();
  int n = m.rows();
  FFMatrix r(m.field(), n, n);
  for (int i = poly_deg(f); i >= 0; --i) {
    r = r * m;
    if (f[i])
      for (int d = 0; d < n; ++d) r.set(d, d, F.add(r.at(d, d), f[i]));
  }
  return r;
}

EchelonSolver::EchelonSolver(FqPtr F, int dim, bool track_coords)
  : F_(std::move(F)), dim_(dim), track_(track_coords) {}

EchelonSolver::Reduction EchelonSolver::reduce(const std::vector<FqEl>& v) const {
  const Fq& F = *F_;
  Reduction out;
  out.residual = v;
  std::vector<FqEl> combo;
  if (track_) combo.assign(accepted_, 0);
  for (const Row& row : rows_) {
    FqEl c = out.residual[row.pivot];
    if (!c) continue;
    for (int j = 0; j < dim_; ++j)
      if (row.v[j])
        out.residual[j] = F.sub(out.residual[j], F.mul(c, row.v[j]));
    if (track_)
      for (size_t j = 0; j < row.combo.size(); ++j)
        if (row.combo[j]) combo[j] = F.add(combo[j], F.mul(c, row.combo[j]));
  }
  out.in_span = std::all_of(out.residual.begin(), out.residual.end(),
               [](FqEl x) { return x == 0; });
  if (track_) out.coords = std::move(combo);
  return out;
}

bool EchelonSolver::insert(const std::vector<FqEl>& v) {
  const Fq& F = *F_;
  Reduction red = reduce(v);
  if (red.in_span) {
    if (track_) ++accepted_;  // keep coordinates aligned with insert order
    return false;
  }
  Row row;
  row.v = std::move(red.residual);
  row.pivot = 0;
  while (!row.v[row.pivot]) ++row.pivot;
  FqEl inv = F.inv(row.v[row.pivot]);
  for (auto& x : row.v) x = F.mul(x, inv);
  if (track_) {
    // residual = v - (used combination); normalize by the same factor
    row.combo.assign(accepted_ + 1, 0);
    for (int j = 0; j < accepted_; ++j)
      row.combo[j] = F.mul(F.neg(red.coords[j]), inv);
    row.combo[accepted_] = inv;
  }
  // keep earlier rows reduced against the new pivot
  for (Row& r2 : rows_) {
    FqEl c = r2.v[row.pivot];
    if (!c) continue;
    for (int j = 0; j < dim_; ++j)
      if (row.v[j]) r2.v[j] = F.sub(r2.v[j], F.mul(c, row.v[j]));
    if (track_) {
      r2.combo.resize(accepted_ + 1, 0);
      for (size_t j = 0; j < row.combo.size(); ++j)
        if (row.combo[j])
          r2.combo[j] = F.sub(r2.combo[j], F.mul(c, row.combo[j]));
    }
  }
  rows_.push_back(std::move(row));
  ++accepted_;
  return true;
}

}  // namespace tsgreen
