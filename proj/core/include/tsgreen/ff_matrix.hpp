#pragma once

#include <optional>
#include <vector>

#include "tsgreen/fq.hpp"
#include "tsgreen/poly.hpp"

namespace tsgreen {

// Dense row-major matrix over GF(q).
class FFMatrix {
public:
  FFMatrix() : rows_(0), cols_(0) {}
  FFMatrix(FqPtr F, int rows, int cols)
    : F_(std::move(F)), rows_(rows), cols_(cols), a_(size_t(rows) * cols, 0) {}

  static FFMatrix identity(FqPtr F, int n);
  static FFMatrix from_cols(FqPtr F, int dim, const std::vector<std::vector<FqEl>>& cols);

  const FqPtr& field() const { return F_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  FqEl at(int i, int j) const { return a_[size_t(i) * cols_ + j]; }
  void set(int i, int j, FqEl v) { a_[size_t(i) * cols_ + j] = v; }
  const std::vector<FqEl>& data() const { return a_; }

  std::vector<FqEl> row(int i) const;
  std::vector<FqEl> col(int j) const;
  void set_col(int j, const std::vector<FqEl>& v);

  FFMatrix operator+(const FFMatrix& o) const;
  FFMatrix operator-(const FFMatrix& o) const;
  FFMatrix operator*(const FFMatrix& o) const;
  std::vector<FqEl> apply(const std::vector<FqEl>& v) const;  // matrix * column
  FFMatrix scale(FqEl c) const;
  FFMatrix transpose() const;
  FFMatrix kron(const FFMatrix& o) const;
  bool operator==(const FFMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }
  bool is_zero() const;
  FqEl trace() const;

private:
  FqPtr F_;
  int rows_, cols_;
  std::vector<FqEl> a_;
};

FFMatrix ff_hstack(const FFMatrix& a, const FFMatrix& b);
FFMatrix ff_vstack(const FFMatrix& a, const FFMatrix& b);

// Row-reduce in place to reduced row echelon form; returns pivot columns.
std::vector<int> ff_rref(FFMatrix& m);
int ff_rank(FFMatrix m);
// Basis of the right kernel {x : m x = 0}, returned as matrix columns.
FFMatrix ff_kernel(const FFMatrix& m);
// One solution of m x = b (free variables set to 0), or nullopt.
std::optional<std::vector<FqEl>> ff_solve(const FFMatrix& m, const std::vector<FqEl>& b);
// Particular solution plus a kernel basis, in one elimination.
struct LinearSystem {
  bool consistent = false;
  std::vector<FqEl> solution;  // empty unless consistent
  FFMatrix kernel;             // columns span {x : m x = 0}
};
LinearSystem ff_solve_full(const FFMatrix& m, const std::vector<FqEl>& b);
// X with a * X = rhs (matrix right-hand side), or nullopt when inconsistent.
std::optional<FFMatrix> ff_solve_mat(const FFMatrix& a, const FFMatrix& rhs);
FFMatrix ff_inverse(const FFMatrix& m);  // throws BadInput if singular
// L with L * m = identity; m must have full column rank.
FFMatrix ff_left_inverse(const FFMatrix& m);
FqPoly ff_charpoly(const FFMatrix& m);   // monic, via Hessenberg reduction
FqPoly ff_min_poly(const FFMatrix& m);   // lcm of cyclic-subspace relations
FFMatrix ff_poly_eval(const FFMatrix& m, const FqPoly& f);  // f(m)

// Incremental row-space tracker. Vectors are inserted one at a time; the rows
// are kept fully reduced so membership tests are a single reduction pass.
// When coordinate tracking is on, reduce() reports the combination of the
// previously *accepted* vectors (in insertion order) that produces the query.
class EchelonSolver {
public:
  EchelonSolver(FqPtr F, int dim, bool track_coords = false);

  struct Reduction {
    bool in_span = false;
    std::vector<FqEl> residual;  // fully reduced remainder
    std::vector<FqEl> coords;    // combination of accepted inserts used
  };
  Reduction reduce(const std::vector<FqEl>& v) const;
  bool insert(const std::vector<FqEl>& v);  // true iff rank grew
  int rank() const { return int(rows_.size()); }
  int dim() const { return dim_; }

private:
  struct Row {
    std::vector<FqEl> v;
    int pivot;
    std::vector<FqEl> combo;  // v as combination of accepted inserts
  };
  FqPtr F_;
  int dim_;
  bool track_;
  int accepted_ = 0;
  std::vector<Row> rows_;
};

}  // namespace tsgreen
