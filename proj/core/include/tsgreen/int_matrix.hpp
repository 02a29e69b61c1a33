#pragma once

#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace tsgreen {

using Int = boost::multiprecision::cpp_int;

class IntMatrix {
public:
  IntMatrix() : rows_(0), cols_(0) {}
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}

  static IntMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Int& at(int i, int j) const { return a_[size_t(i) * cols_ + j]; }
  Int& at(int i, int j) { return a_[size_t(i) * cols_ + j]; }

  IntMatrix operator*(const IntMatrix& o) const;
  std::vector<Int> apply(const std::vector<Int>& v) const;
  IntMatrix transpose() const;
  bool operator==(const IntMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

  void swap_cols(int i, int j);
  void swap_rows(int i, int j);
  // col_j += c * col_i, row_j += c * row_i
  void addmul_col(int j, int i, const Int& c);
  void addmul_row(int j, int i, const Int& c);
  void negate_col(int j);

private:
  int rows_, cols_;
  std::vector<Int> a_;
};

// Column-style Hermite normal form: h = m * u with u unimodular. Nonzero
// columns come first; their topmost nonzero entries (pivots) sit in strictly
// increasing rows and are positive; in each pivot row, entries in earlier
// columns are reduced into [0, pivot); entries in later columns are zero.
struct Hnf {
  IntMatrix h;
  IntMatrix u;
  std::vector<int> pivot_rows;  // pivot row of column c, for c < rank
};
Hnf int_hnf(const IntMatrix& m);

// Smith normal form: u * m * v = s diagonal, with d_1 | d_2 | ... positive.
struct Snf {
  IntMatrix s, u, v;
  std::vector<Int> divisors;  // the nonzero diagonal entries
  int rank = 0;
};
Snf int_snf(const IntMatrix& m);

// Is target in the lattice spanned by the columns of m over Z? When yes,
// witness holds integer coefficients over the original columns.
struct LatticeQuery {
  bool contains = false;
  std::vector<Int> witness;
};
LatticeQuery lattice_contains(const IntMatrix& m, const std::vector<Int>& target);
LatticeQuery lattice_contains(const Hnf& hnf, const IntMatrix& m,
               const std::vector<Int>& target);

// Does the column lattice equal all of Z^rows?
bool lattice_equals_zn(const IntMatrix& m);

Int int_det(IntMatrix m);  // Bareiss fraction-free elimination

}  // namespace tsgreen
