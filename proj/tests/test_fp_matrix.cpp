#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "arcat/fp_matrix.hpp"

using namespace arcat;

namespace {

Mat from_rows(int r, int c, u32 p, std::initializer_list<u32> vals) {
  Mat m(r, c, p);
  auto it = vals.begin();
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m.at(i, j) = *it++ % p;
  return m;
}

// Brute-force kernel: enumerate every vector of F_p^cols. Only used as an
// oracle for tiny sizes.
std::vector<Mat> kernel_by_enumeration(const Mat& m) {
  std::vector<Mat> out;
  u64 total = 1;
  for (int i = 0; i < m.cols; ++i) total *= m.p;
  for (u64 code = 0; code < total; ++code) {
    Mat x(m.cols, 1, m.p);
    u64 t = code;
    for (int i = 0; i < m.cols; ++i) {
      x.at(i, 0) = static_cast<u32>(t % m.p);
      t /= m.p;
    }
    if ((m * x).is_zero()) out.push_back(x);
  }
  return out;
}

Mat deterministic_matrix(int r, int c, u32 p, u64 seed) {
  Rng rng(seed);
  Mat m(r, c, p);
  for (auto& e : m.a) e = rng.below(p);
  return m;
}

}  // namespace

TEST_CASE("hand reduction over F2") {
  Mat m = from_rows(2, 2, 2, {1, 1, 1, 1});
  Rref rr = rref(m);
  CHECK(rr.m == from_rows(2, 2, 2, {1, 1, 0, 0}));
  CHECK(rr.pivot_cols == std::vector<int>{0});
  CHECK(rank(m) == 1);

  Mat row = from_rows(1, 2, 2, {1, 1});
  Mat ker = kernel_basis(row);
  CHECK(ker.cols == 1);
  CHECK(ker.at(0, 0) == 1);
  CHECK(ker.at(1, 0) == 1);
}

TEST_CASE("solve over F3") {
  Mat a = from_rows(1, 1, 3, {2});
  Mat b = from_rows(1, 1, 3, {1});
  auto x = solve(a, b);
  REQUIRE(x.has_value());
  CHECK(x->at(0, 0) == 2);

  // Inconsistent system: 0*x = 1.
  Mat z = from_rows(1, 1, 3, {0});
  CHECK(!solve(z, b).has_value());
}

TEST_CASE("field inverses") {
  for (u32 p : {2u, 3u, 5u, 7u})
    for (u32 x = 1; x < p; ++x) CHECK((static_cast<u64>(x) * fp_inv(x, p)) % p == 1);
}

TEST_CASE("rref properties on a deterministic sweep") {
  for (u32 p : {2u, 3u}) {
    for (u64 seed = 0; seed < 40; ++seed) {
      int r = 1 + static_cast<int>(seed % 4);
      int c = 1 + static_cast<int>((seed / 4) % 4);
      Mat m = deterministic_matrix(r, c, p, seed * 7 + p);
      Rref rr = rref(m);
      // Idempotent.
      CHECK(rref(rr.m).m == rr.m);
      // Pivot columns are unit columns.
      for (size_t i = 0; i < rr.pivot_cols.size(); ++i)
        for (int row = 0; row < r; ++row)
          CHECK(rr.m.at(row, rr.pivot_cols[i]) == (row == static_cast<int>(i) ? 1u : 0u));
      // Row space preserved: every rref row solvable from original rows and back.
      CHECK(rank(m) == rank(vstack(m, rr.m)));
    }
  }
}

TEST_CASE("kernel matches exhaustive enumeration") {
  for (u32 p : {2u, 3u}) {
    for (u64 seed = 0; seed < 24; ++seed) {
      int r = 1 + static_cast<int>(seed % 3);
      int c = 1 + static_cast<int>((seed / 3) % 3);
      if (static_cast<u64>(c) * (p == 2 ? 1 : 2) > 16) continue;
      Mat m = deterministic_matrix(r, c, p, seed * 13 + p);
      Mat ker = kernel_basis(m);
      CHECK((m * ker).is_zero());
      CHECK(rank(ker) == ker.cols);
      u64 expected = 1;
      for (int i = 0; i < ker.cols; ++i) expected *= p;
      CHECK(kernel_by_enumeration(m).size() == expected);
      CHECK(ker.cols == m.cols - rank(m));
    }
  }
}

TEST_CASE("solve consistency sweep") {
  for (u32 p : {2u, 3u}) {
    for (u64 seed = 0; seed < 30; ++seed) {
      int r = 1 + static_cast<int>(seed % 4);
      int c = 1 + static_cast<int>((seed / 4) % 4);
      Mat m = deterministic_matrix(r, c, p, seed + 100 * p);
      Mat x0 = deterministic_matrix(c, 1, p, seed + 999);
      Mat b = m * x0;  // guaranteed consistent
      auto x = solve(m, b);
      REQUIRE(x.has_value());
      CHECK(m * *x == b);
    }
  }
}

TEST_CASE("inverse round trip and singular detection") {
  Mat m = from_rows(2, 2, 3, {1, 2, 1, 1});
  auto inv = inverse(m);
  REQUIRE(inv.has_value());
  CHECK((m * *inv).is_identity());
  CHECK((*inv * m).is_identity());
  CHECK(!inverse(from_rows(2, 2, 2, {1, 1, 1, 1})).has_value());
}

TEST_CASE("column space basis spans the image") {
  Mat m = from_rows(3, 3, 2, {1, 1, 0, 1, 1, 0, 0, 0, 1});
  Mat cs = column_space_basis(m);
  CHECK(cs.cols == rank(m));
  // Every original column solvable in the basis.
  CHECK(solve(cs, m).has_value());
}

TEST_CASE("stacking and coordinates") {
  Mat x = from_rows(2, 1, 2, {1, 0});
  Mat y = from_rows(2, 1, 2, {0, 1});
  Mat basis = hstack(x, y);
  Mat v = from_rows(2, 1, 2, {1, 1});
  Mat coords = coords_in_basis(basis, v);
  CHECK(basis * coords == v);
  Mat bd = block_diag(Mat::identity(1, 2), Mat::identity(2, 2));
  CHECK(bd.is_identity());
}
