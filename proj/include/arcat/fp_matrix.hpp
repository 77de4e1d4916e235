#pragma once

#include <optional>
#include <vector>

#include "arcat/common.hpp"

namespace arcat {

// Dense row-major matrix over the prime field F_p. Entries are kept reduced
// into [0, p). All elimination is deterministic: scan for the first nonzero
// pivot in row order, eliminate the full column, normalize pivots to 1.
struct Mat {
  int rows = 0;
  int cols = 0;
  u32 p = 2;
  std::vector<u32> a;

  Mat() = default;
  Mat(int r, int c, u32 mod) : rows(r), cols(c), p(mod), a(static_cast<size_t>(r) * c, 0) {
    ARCAT_REQUIRE(r >= 0 && c >= 0, "matrix dims nonnegative");
    ARCAT_REQUIRE(mod >= 2, "modulus >= 2");
  }
  static Mat zero(int r, int c, u32 mod) { return Mat(r, c, mod); }
  static Mat identity(int n, u32 mod) {
    Mat m(n, n, mod);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  u32& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  u32 at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

  bool is_zero() const;
  bool is_identity() const;
  bool is_square() const { return rows == cols; }

  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat operator*(const Mat& o) const;
  Mat scaled(u32 c) const;
  Mat transposed() const;

  friend bool operator==(const Mat& x, const Mat& y) {
    return x.rows == y.rows && x.cols == y.cols && x.p == y.p && x.a == y.a;
  }
  friend bool operator!=(const Mat& x, const Mat& y) { return !(x == y); }
};

u32 fp_inv(u32 x, u32 p);
u32 fp_neg(u32 x, u32 p);

struct Rref {
  Mat m;
  std::vector<int> pivot_cols;  // one entry per pivot row, increasing
};

// Reduced row echelon form; pivots normalized to 1, pivot columns cleared.
Rref rref(const Mat& m);
int rank(const Mat& m);

// Columns form a basis of { x : m x = 0 }. Deterministic: one column per free
// column of rref(m), in increasing free-column order, with unit at the free slot.
Mat kernel_basis(const Mat& m);

// Columns form a basis of the column space: the columns of m sitting at the
// pivot positions of rref(m), copied verbatim (deterministic representatives).
Mat column_space_basis(const Mat& m);

// One solution x of m x = b (b may have several columns; free variables 0),
// or nullopt if inconsistent.
std::optional<Mat> solve(const Mat& m, const Mat& b);

std::optional<Mat> inverse(const Mat& m);

// Coordinates of the columns of v in the given basis (columns of basis must be
// independent and span them); throws InternalError otherwise.
Mat coords_in_basis(const Mat& basis, const Mat& v);

Mat hstack(const Mat& x, const Mat& y);
Mat vstack(const Mat& x, const Mat& y);
Mat block_diag(const Mat& x, const Mat& y);

// m restricted to the given columns, in the given order.
Mat take_columns(const Mat& m, const std::vector<int>& cols);

// Flatten to a single column (row-major), and back.
Mat vec_of(const Mat& m);

}  // namespace arcat
