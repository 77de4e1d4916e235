#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "arcat/io.hpp"
#include "arcat/module.hpp"

using namespace arcat;

namespace {

// Independent oracle: count intertwiners by brute force over every candidate
// component tuple. Only usable when p^(total entries) stays tiny.
long count_homs_exhaustive(const Module& x, const Module& y) {
  const Quiver& q = x.alg->quiver;
  u32 p = x.alg->p;
  int entries = 0;
  for (size_t v = 0; v < x.dim.size(); ++v) entries += x.dim[v] * y.dim[v];
  REQUIRE(entries <= 16);
  long count = 0;
  std::vector<u32> digits(entries, 0);
  while (true) {
    std::vector<Mat> comp;
    int pos = 0;
    for (size_t v = 0; v < x.dim.size(); ++v) {
      Mat c(y.dim[v], x.dim[v], p);
      for (u32& e : c.a) e = digits[pos++];
      comp.push_back(std::move(c));
    }
    bool ok = true;
    for (int ai = 0; ai < q.num_arrows() && ok; ++ai)
      ok = (y.act[ai] * comp[q.arrows[ai].from]) == (comp[q.arrows[ai].to] * x.act[ai]);
    if (ok) ++count;
    int i = 0;
    while (i < entries && ++digits[i] == p) digits[i++] = 0;
    if (i == entries) break;
  }
  return count;
}

long ipow(long b, int e) {
  long r = 1;
  while (e--) r *= b;
  return r;
}

Module regular_module(const AlgebraPtr& alg) {
  std::vector<Module> parts;
  for (int v = 0; v < alg->quiver.num_vertices(); ++v) parts.push_back(projective_module(alg, v));
  return direct_sum(alg, parts).sum;
}

}  // namespace

TEST_CASE("hom dimensions match exhaustive enumeration") {
  for (const char* name : {"lambda2", "nakayama2", "kA2"}) {
    AlgebraPtr alg = bundled_algebra(name);
    CAPTURE(name);
    std::vector<Module> zoo;
    for (int v = 0; v < alg->quiver.num_vertices(); ++v) {
      zoo.push_back(simple_module(alg, v));
      zoo.push_back(projective_module(alg, v));
      zoo.push_back(injective_module(alg, v));
    }
    for (const Module& x : zoo)
      for (const Module& y : zoo) {
        int entries = 0;
        for (size_t v = 0; v < x.dim.size(); ++v) entries += x.dim[v] * y.dim[v];
        if (entries > 16) continue;
        CHECK(ipow(alg->p, hom_dim(x, y)) == count_homs_exhaustive(x, y));
      }
  }
}

TEST_CASE("yoneda: maps out of P(v) and into I(v) are point evaluations") {
  for (const char* name : {"lambda2", "lambda3", "nakayama2", "kA3"}) {
    AlgebraPtr alg = bundled_algebra(name);
    CAPTURE(name);
    Module reg = regular_module(alg);
    for (int v = 0; v < alg->quiver.num_vertices(); ++v) {
      Module s = simple_module(alg, v);
      CHECK(hom_dim(projective_module(alg, v), reg) == reg.dim[v]);
      CHECK(hom_dim(projective_module(alg, v), s) == s.dim[v]);
      CHECK(hom_dim(reg, injective_module(alg, v)) == reg.dim[v]);
      CHECK(hom_dim(s, injective_module(alg, v)) == s.dim[v]);
    }
  }
}

TEST_CASE("dual polynomial algebra: End(regular) has dimension n") {
  // k[x]/(x^n) is commutative, so End of the regular module is the algebra itself.
  for (const char* name : {"lambda2", "lambda3", "lambda4"}) {
    AlgebraPtr alg = bundled_algebra(name);
    Module reg = projective_module(alg, 0);
    CHECK(hom_dim(reg, reg) == alg->dim());
  }
}

TEST_CASE("projective and injective shapes over the A3 path algebra") {
  AlgebraPtr alg = bundled_algebra("kA3");
  CHECK(dim_vector_string(projective_module(alg, 0)) == "(1,1,1)");
  CHECK(dim_vector_string(projective_module(alg, 1)) == "(0,1,1)");
  CHECK(dim_vector_string(projective_module(alg, 2)) == "(0,0,1)");
  CHECK(dim_vector_string(injective_module(alg, 0)) == "(1,0,0)");
  CHECK(dim_vector_string(injective_module(alg, 1)) == "(1,1,0)");
  CHECK(dim_vector_string(injective_module(alg, 2)) == "(1,1,1)");
  // The full interval is both projective and injective here.
  Module p0 = projective_module(alg, 0);
  Module i2 = injective_module(alg, 2);
  CHECK(hom_dim(p0, i2) == 1);
  ModuleMap f = hom_basis(p0, i2)[0];
  CHECK(is_iso(map_scale(f, 1)));
}

TEST_CASE("radical, socle, top on small algebras") {
  AlgebraPtr n2 = bundled_algebra("nakayama2");
  Module p0 = projective_module(n2, 0);
  CHECK(dim_vector_string(p0) == "(1,1)");
  CHECK(dim_vector_string(radical_of(p0).sub) == "(0,1)");
  CHECK(dim_vector_string(socle_of(p0).sub) == "(0,1)");
  CHECK(dim_vector_string(top_of(p0).quot) == "(1,0)");

  AlgebraPtr l3 = bundled_algebra("lambda3");
  Module reg = projective_module(l3, 0);
  CHECK(radical_of(reg).sub.total_dim() == 2);
  CHECK(socle_of(reg).sub.total_dim() == 1);
  CHECK(radical_of(radical_of(reg).sub).sub.total_dim() == 1);
  CHECK(top_of(reg).quot.total_dim() == 1);

  // Semisimple case: radical vanishes, socle is everything.
  AlgebraPtr a3 = bundled_algebra("kA3");
  Module s1 = simple_module(a3, 1);
  CHECK(radical_of(s1).sub.is_zero_module());
  CHECK(socle_of(s1).sub == s1);
}

TEST_CASE("kernel, image, cokernel and exactness") {
  AlgebraPtr alg = bundled_algebra("nakayama2");
  Module p0 = projective_module(alg, 0);
  SubObject rad = radical_of(p0);
  QuotObject top = top_of(p0);

  CHECK(exact_at(rad.incl, top.proj));
  CHECK(is_injective_map(rad.incl));
  CHECK(is_surjective_map(top.proj));

  SubObject k = kernel(top.proj);
  CHECK(k.sub.dim == rad.sub.dim);
  QuotObject c = cokernel(rad.incl);
  CHECK(c.quot.dim == top.quot.dim);
  SubObject im = image(rad.incl);
  CHECK(im.sub.dim == rad.sub.dim);

  // Not exact: pairing the radical inclusion with a zero map to the top leaves
  // the quotient direction uncovered.
  ModuleMap z = zero_map(p0, top.quot);
  CHECK(is_zero(compose(z, rad.incl)));
  CHECK(!exact_at(rad.incl, z));
}

TEST_CASE("quotient and subobject factorizations") {
  AlgebraPtr alg = bundled_algebra("lambda3");
  Module reg = projective_module(alg, 0);
  SubObject rad = radical_of(reg);
  QuotObject top = top_of(reg);

  // rad^2 sits inside rad: corestrict its inclusion into reg through rad.
  SubObject rad2_in_rad = radical_of(rad.sub);
  ModuleMap rad2_in_reg = compose(rad.incl, rad2_in_rad.incl);
  ModuleMap core = corestrict_to_sub(rad, rad2_in_reg);
  CHECK(compose(rad.incl, core) == rad2_in_reg);

  // reg -> top kills rad, so it factors through reg/rad^2.
  QuotObject by_rad2 = cokernel(rad2_in_reg);
  ModuleMap g = factor_through_quotient(by_rad2, top.proj);
  CHECK(compose(g, by_rad2.proj) == top.proj);
}

TEST_CASE("lifts through epis and extensions along monos") {
  AlgebraPtr alg = bundled_algebra("nakayama2");
  Module p0 = projective_module(alg, 0);
  Module s0 = simple_module(alg, 0);
  QuotObject top = top_of(p0);

  // Projectives lift.
  auto lift = lift_through_epi(top.proj, top.proj);
  REQUIRE(lift.has_value());
  CHECK(compose(top.proj, *lift) == top.proj);

  // S(0) is not projective here: the identity cannot be lifted through the cover.
  ModuleMap id_like = hom_basis(s0, top.quot)[0];
  REQUIRE(is_iso(id_like));
  CHECK(!lift_through_epi(id_like, top.proj).has_value());

  // Dually: socle inclusion extends along itself, but S(1) is not injective...
  Module i0 = injective_module(alg, 0);
  SubObject soc = socle_of(i0);
  auto ext = extend_along_mono(soc.incl, soc.incl);
  REQUIRE(ext.has_value());
  CHECK(compose(*ext, soc.incl) == soc.incl);
  // ...so the identity of soc I(0) = S(1) does not extend along its inclusion
  // into I(0) composed with nothing else -- extending the identity would split
  // the socle off.
  ModuleMap ids = identity_map(soc.sub);
  auto split = extend_along_mono(ids, soc.incl);
  CHECK(!split.has_value());
}

TEST_CASE("hom coordinates round trip") {
  // F3[x]/(x^3), so a coefficient of 2 survives.
  Quiver q;
  q.vertices = {"1"};
  q.arrows = {{"x", 0, 0}};
  Path x3{0, 0, {0, 0, 0}};
  AlgebraPtr alg = make_algebra(3, q, {{{1, x3}}}, 3, "F3[x]/(x^3)");
  Module reg = projective_module(alg, 0);
  auto basis = hom_basis(reg, reg);
  REQUIRE(basis.size() == 3);
  ModuleMap f = map_add(basis[0], map_scale(basis[2], 2));
  Mat c = hom_coords(basis, f);
  CHECK(map_from_coords(basis, c, reg, reg) == f);
  CHECK(c.at(0, 0) == 1);
  CHECK(c.at(1, 0) == 0);
  CHECK(c.at(2, 0) == 2);
}

TEST_CASE("maps from a projective generator") {
  AlgebraPtr alg = bundled_algebra("kA3");
  Module p0 = projective_module(alg, 0);
  Module i2 = injective_module(alg, 2);
  Mat x(i2.dim[0], 1, alg->p);
  x.at(0, 0) = 1;
  ModuleMap f = map_from_projective_generator(p0, 0, i2, x);
  CHECK(is_iso(f));
  // Zero generator image gives the zero map.
  Mat z(i2.dim[0], 1, alg->p);
  CHECK(is_zero(map_from_projective_generator(p0, 0, i2, z)));
}

TEST_CASE("direct sums: projections, inclusions, additivity") {
  AlgebraPtr alg = bundled_algebra("nakayama2");
  Module p0 = projective_module(alg, 0);
  Module p1 = projective_module(alg, 1);
  Module s0 = simple_module(alg, 0);
  SumObject sum = direct_sum(alg, {p0, p1});

  for (size_t i = 0; i < 2; ++i) {
    CHECK(compose(sum.proj[i], sum.incl[i]) == identity_map(i == 0 ? p0 : p1));
  }
  CHECK(is_zero(compose(sum.proj[0], sum.incl[1])));
  ModuleMap idsum = map_add(compose(sum.incl[0], sum.proj[0]), compose(sum.incl[1], sum.proj[1]));
  CHECK(idsum == identity_map(sum.sum));

  CHECK(hom_dim(sum.sum, s0) == hom_dim(p0, s0) + hom_dim(p1, s0));
  CHECK(hom_dim(s0, sum.sum) == hom_dim(s0, p0) + hom_dim(s0, p1));

  // Diagonal map built from components.
  SumObject sum2 = direct_sum(alg, {p0, p1});
  ModuleMap d = direct_sum_map(sum, sum2, {identity_map(p0), zero_map(p1, p1)});
  CHECK(compose(sum2.proj[0], compose(d, sum.incl[0])) == identity_map(p0));
  CHECK(is_zero(compose(sum2.proj[1], compose(d, sum.incl[1]))));
}

TEST_CASE("duality is an involution on the nose") {
  for (const char* name : {"lambda2", "nakayama2", "kA3"}) {
    AlgebraPtr alg = bundled_algebra(name);
    CAPTURE(name);
    for (int v = 0; v < alg->quiver.num_vertices(); ++v) {
      Module p = projective_module(alg, v);
      CHECK(dual(dual(p)) == p);
      CHECK(dual(p).alg->is_opposite_copy());
      // D swaps projectives and injectives across the op.
      Module ip = injective_module(opposite(alg), v);
      CHECK(dual(p).dim == ip.dim);
      CHECK(hom_dim(dual(p), ip) > 0);
    }
    Module p0 = projective_module(alg, 0);
    SubObject soc = socle_of(p0);
    ModuleMap dincl = dual(soc.incl);
    CHECK(is_surjective_map(dincl));
    CHECK(dual(dincl) == soc.incl);
    // D(top M) matches soc(D M) dimensionwise.
    CHECK(top_of(dual(p0)).quot.dim == socle_of(p0).sub.dim);
  }
}

TEST_CASE("submodule spans must be arrow-closed") {
  AlgebraPtr alg = bundled_algebra("kA3");
  Module p0 = projective_module(alg, 0);
  std::vector<Mat> spans;
  spans.push_back(Mat::identity(1, alg->p));     // e_0 alone
  spans.push_back(Mat::zero(1, 0, alg->p));      // nothing at 1
  spans.push_back(Mat::zero(1, 0, alg->p));      // nothing at 2
  CHECK_THROWS_AS(submodule_from_spans(p0, spans), ArcatError);
}

TEST_CASE("relation violations are rejected") {
  AlgebraPtr alg = bundled_algebra("lambda2");
  std::vector<Mat> act;
  act.push_back(Mat::identity(1, alg->p));  // x acting as 1 breaks x^2 = 0
  CHECK_THROWS_AS(make_module(alg, {1}, act), ArcatError);
}
