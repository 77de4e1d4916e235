#include "arcat/fp_matrix.hpp"

#include <algorithm>

namespace arcat {

u32 fp_neg(u32 x, u32 p) { return x == 0 ? 0 : p - x; }

u32 fp_inv(u32 x, u32 p) {
  ARCAT_REQUIRE(x % p != 0, "inverse of zero");
  // p is tiny and prime; extended Euclid without the ceremony.
  long long t = 0, newt = 1, r = p, newr = x % p;
  while (newr != 0) {
    long long q = r / newr;
    std::swap(t -= q * newt, newt);
    std::swap(r -= q * newr, newr);
  }
  if (t < 0) t += p;
  return static_cast<u32>(t);
}

bool Mat::is_zero() const {
  return std::all_of(a.begin(), a.end(), [](u32 x) { return x == 0; });
}

bool Mat::is_identity() const {
  if (rows != cols) return false;
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      if (at(i, j) != (i == j ? 1u : 0u)) return false;
  return true;
}

static void check_same_shape(const Mat& x, const Mat& y) {
  ARCAT_CHECK(x.p == y.p, "modulus mismatch");
  ARCAT_CHECK(x.rows == y.rows && x.cols == y.cols, "shape mismatch");
}

Mat Mat::operator+(const Mat& o) const {
  check_same_shape(*this, o);
  Mat r(rows, cols, p);
  for (size_t i = 0; i < a.size(); ++i) r.a[i] = (a[i] + o.a[i]) % p;
  return r;
}

Mat Mat::operator-(const Mat& o) const {
  check_same_shape(*this, o);
  Mat r(rows, cols, p);
  for (size_t i = 0; i < a.size(); ++i) r.a[i] = (a[i] + p - o.a[i]) % p;
  return r;
}

Mat Mat::operator*(const Mat& o) const {
  ARCAT_CHECK(p == o.p, "modulus mismatch");
  ARCAT_CHECK(cols == o.rows, "inner dim mismatch");
  Mat r(rows, o.cols, p);
  for (int i = 0; i < rows; ++i)
    for (int k = 0; k < cols; ++k) {
      u64 m = at(i, k);
      if (!m) continue;
      for (int j = 0; j < o.cols; ++j)
        r.at(i, j) = static_cast<u32>((r.at(i, j) + m * o.at(k, j)) % p);
    }
  return r;
}

Mat Mat::scaled(u32 c) const {
  Mat r(rows, cols, p);
  c %= p;
  for (size_t i = 0; i < a.size(); ++i) r.a[i] = static_cast<u32>((static_cast<u64>(a[i]) * c) % p);
  return r;
}

Mat Mat::transposed() const {
  Mat r(cols, rows, p);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) r.at(j, i) = at(i, j);
  return r;
}

Rref rref(const Mat& m) {
  Rref out{m, {}};
  Mat& w = out.m;
  int r = 0;
  for (int c = 0; c < w.cols && r < w.rows; ++c) {
    int piv = -1;
    for (int i = r; i < w.rows; ++i)
      if (w.at(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = 0; j < w.cols; ++j) std::swap(w.at(piv, j), w.at(r, j));
    u32 inv = fp_inv(w.at(r, c), w.p);
    for (int j = 0; j < w.cols; ++j)
      w.at(r, j) = static_cast<u32>((static_cast<u64>(w.at(r, j)) * inv) % w.p);
    for (int i = 0; i < w.rows; ++i) {
      if (i == r) continue;
      u32 f = w.at(i, c);
      if (!f) continue;
      for (int j = 0; j < w.cols; ++j)
        w.at(i, j) =
            static_cast<u32>((w.at(i, j) + static_cast<u64>(w.p - f) * w.at(r, j)) % w.p);
    }
    out.pivot_cols.push_back(c);
    ++r;
  }
  return out;
}

int rank(const Mat& m) { return static_cast<int>(rref(m).pivot_cols.size()); }

Mat kernel_basis(const Mat& m) {
  Rref rr = rref(m);
  std::vector<int> free_cols;
  {
    size_t k = 0;
    for (int c = 0; c < m.cols; ++c) {
      if (k < rr.pivot_cols.size() && rr.pivot_cols[k] == c)
        ++k;
      else
        free_cols.push_back(c);
    }
  }
  Mat ker(m.cols, static_cast<int>(free_cols.size()), m.p);
  for (size_t j = 0; j < free_cols.size(); ++j) {
    ker.at(free_cols[j], static_cast<int>(j)) = 1;
    for (size_t i = 0; i < rr.pivot_cols.size(); ++i)
      ker.at(rr.pivot_cols[i], static_cast<int>(j)) =
          fp_neg(rr.m.at(static_cast<int>(i), free_cols[j]), m.p);
  }
  return ker;
}

Mat column_space_basis(const Mat& m) {
  Rref rr = rref(m);
  return take_columns(m, rr.pivot_cols);
}

std::optional<Mat> solve(const Mat& m, const Mat& b) {
  ARCAT_CHECK(m.p == b.p, "modulus mismatch");
  ARCAT_CHECK(m.rows == b.rows, "rhs row mismatch");
  Rref rr = rref(hstack(m, b));
  // Any pivot landing in the b-block means inconsistency.
  for (int c : rr.pivot_cols)
    if (c >= m.cols) return std::nullopt;
  Mat x(m.cols, b.cols, m.p);
  for (size_t i = 0; i < rr.pivot_cols.size(); ++i)
    for (int j = 0; j < b.cols; ++j)
      x.at(rr.pivot_cols[i], j) = rr.m.at(static_cast<int>(i), m.cols + j);
  return x;
}

std::optional<Mat> inverse(const Mat& m) {
  ARCAT_REQUIRE(m.is_square(), "inverse needs square matrix");
  Rref rr = rref(hstack(m, Mat::identity(m.rows, m.p)));
  if (static_cast<int>(rr.pivot_cols.size()) != m.rows) return std::nullopt;
  for (int i = 0; i < m.rows; ++i)
    if (rr.pivot_cols[i] != i) return std::nullopt;
  Mat inv(m.rows, m.rows, m.p);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.rows; ++j) inv.at(i, j) = rr.m.at(i, m.cols + j);
  return inv;
}

Mat coords_in_basis(const Mat& basis, const Mat& v) {
  auto x = solve(basis, v);
  ARCAT_CHECK(x.has_value(), "vector not in span of basis");
  ARCAT_CHECK(basis * *x == v, "coords_in_basis solve mismatch");
  return *x;
}

Mat hstack(const Mat& x, const Mat& y) {
  ARCAT_CHECK(x.p == y.p && x.rows == y.rows, "hstack shape mismatch");
  Mat r(x.rows, x.cols + y.cols, x.p);
  for (int i = 0; i < x.rows; ++i) {
    for (int j = 0; j < x.cols; ++j) r.at(i, j) = x.at(i, j);
    for (int j = 0; j < y.cols; ++j) r.at(i, x.cols + j) = y.at(i, j);
  }
  return r;
}

Mat vstack(const Mat& x, const Mat& y) {
  ARCAT_CHECK(x.p == y.p && x.cols == y.cols, "vstack shape mismatch");
  Mat r(x.rows + y.rows, x.cols, x.p);
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < x.cols; ++j) r.at(i, j) = x.at(i, j);
  for (int i = 0; i < y.rows; ++i)
    for (int j = 0; j < x.cols; ++j) r.at(x.rows + i, j) = y.at(i, j);
  return r;
}

Mat block_diag(const Mat& x, const Mat& y) {
  ARCAT_CHECK(x.p == y.p, "modulus mismatch");
  Mat r(x.rows + y.rows, x.cols + y.cols, x.p);
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < x.cols; ++j) r.at(i, j) = x.at(i, j);
  for (int i = 0; i < y.rows; ++i)
    for (int j = 0; j < y.cols; ++j) r.at(x.rows + i, x.cols + j) = y.at(i, j);
  return r;
}

Mat take_columns(const Mat& m, const std::vector<int>& cols) {
  Mat r(m.rows, static_cast<int>(cols.size()), m.p);
  for (int i = 0; i < m.rows; ++i)
    for (size_t j = 0; j < cols.size(); ++j) r.at(i, static_cast<int>(j)) = m.at(i, cols[j]);
  return r;
}

Mat vec_of(const Mat& m) {
  Mat v(m.rows * m.cols, 1, m.p);
  for (size_t i = 0; i < m.a.size(); ++i) v.a[i] = m.a[i];
  return v;
}

}  // namespace arcat
