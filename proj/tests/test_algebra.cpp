#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "arcat/algebra.hpp"
#include "arcat/io.hpp"

using namespace arcat;

TEST_CASE("truncated polynomial algebras have the path basis e, x, ..., x^{n-1}") {
  for (int n : {2, 3, 4}) {
    auto alg = bundled_algebra("lambda" + std::to_string(n));
    CHECK(alg->dim() == n);
    for (int d = 0; d < n; ++d) CHECK(alg->basis[d].length() == d);
    // x^{n-1} * x = 0, x^i * x^j = x^{i+j} below the bound.
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const SparseVec& prod = alg->mult(i, j);
        if (i + j < n) {
          REQUIRE(prod.size() == 1);
          CHECK(prod[0] == std::pair<int, u32>{i + j, 1});
        } else {
          CHECK(prod.empty());
        }
      }
  }
}

TEST_CASE("nakayama2 basis and products") {
  auto alg = bundled_algebra("nakayama2");
  CHECK(alg->dim() == 4);  // e1, e2, a, b
  CHECK(alg->idempotent.size() == 2);
  int a = -1, b = -1;
  for (int i = 0; i < alg->dim(); ++i) {
    if (alg->path_to_string(alg->basis[i]) == "a") a = i;
    if (alg->path_to_string(alg->basis[i]) == "b") b = i;
  }
  REQUIRE(a >= 0);
  REQUIRE(b >= 0);
  CHECK(alg->mult(a, b).empty());  // a after b = a.b traverses b then a: rad^2 = 0
  CHECK(alg->mult(b, a).empty());
}

TEST_CASE("path algebra of A3 keeps the length-2 path") {
  auto alg = bundled_algebra("kA3");
  CHECK(alg->dim() == 6);
  int ba = -1;
  for (int i = 0; i < alg->dim(); ++i)
    if (alg->basis[i].length() == 2) ba = i;
  REQUIRE(ba >= 0);
  CHECK(alg->path_to_string(alg->basis[ba]) == "a.b");
}

TEST_CASE("opposite is an involution on the same objects") {
  for (const std::string& name : bundled_algebra_names()) {
    auto alg = bundled_algebra(name);
    const Algebra& op = alg->op();
    CHECK(&op.op() == alg.get());
    CHECK(op.dim() == alg->dim());
    CHECK(op.p == alg->p);
    // Arrow directions swapped.
    for (int i = 0; i < alg->quiver.num_arrows(); ++i) {
      CHECK(op.quiver.arrows[i].from == alg->quiver.arrows[i].to);
      CHECK(op.quiver.arrows[i].to == alg->quiver.arrows[i].from);
    }
    auto op_ptr = opposite(alg);
    CHECK(op_ptr.get() == &op);
    CHECK(opposite(op_ptr).get() == alg.get());
  }
}

TEST_CASE("admissibility is verified") {
  Quiver q;
  q.vertices = {"1"};
  q.arrows = {{"x", 0, 0}};
  // k[x] with no relation truncating the loop: not admissible at any bound.
  CHECK_THROWS_AS(make_algebra(2, q, {}, 3, "bad"), HypothesisError);
  // Relation longer than the declared bound cannot witness J^2 = 0.
  Path x3{0, 0, {0, 0, 0}};
  CHECK_THROWS_AS(make_algebra(2, q, {Relation{{1, x3}}}, 2, "bad"), HypothesisError);
  // Declared bound larger than needed is fine.
  Path x2{0, 0, {0, 0}};
  auto ok = make_algebra(2, q, {Relation{{1, x2}}}, 4, "ok");
  CHECK(ok->dim() == 2);
}

TEST_CASE("non-homogeneous relations are rejected") {
  Quiver q;
  q.vertices = {"1"};
  q.arrows = {{"x", 0, 0}};
  Path x2{0, 0, {0, 0}};
  Path x3{0, 0, {0, 0, 0}};
  CHECK_THROWS_AS(make_algebra(2, q, {Relation{{1, x2}, {1, x3}}}, 4, "bad"), HypothesisError);
}

TEST_CASE("commutative square algebra basis") {
  // 1 -> 2 -> 4 and 1 -> 3 -> 4 with the two length-2 paths identified.
  Quiver q;
  q.vertices = {"1", "2", "3", "4"};
  q.arrows = {{"a", 0, 1}, {"c", 1, 3}, {"b", 0, 2}, {"d", 2, 3}};
  Relation comm{{1, Path{0, 3, {0, 1}}}, {2 - 1, Path{0, 3, {2, 3}}}};  // a.c - b.d over F2
  auto alg = make_algebra(2, q, {comm}, 3, "square");
  // Basis: 4 idempotents, 4 arrows, 1 diagonal.
  CHECK(alg->dim() == 9);
  // reduce_path maps the second diagonal onto the first.
  SparseVec r1 = alg->reduce_path(Path{0, 3, {0, 1}});
  SparseVec r2 = alg->reduce_path(Path{0, 3, {2, 3}});
  CHECK(r1 == r2);
  CHECK(r1.size() == 1);
}
