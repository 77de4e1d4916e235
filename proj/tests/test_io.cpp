#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <string>

#include "arcat/ar.hpp"
#include "arcat/io.hpp"

using namespace arcat;

static const char* kDualNumbers = R"json({
  "algebra": {
    "name": "F2[x]/(x^2)",
    "p": 2,
    "vertices": ["1"],
    "arrows": [{"name": "x", "from": "1", "to": "1"}],
    "relations": [[{"coef": 1, "path": ["x", "x"]}]],
    "bound": 2
  }
})json";

// The thrown message must mention the expected location or cause.
template <typename Fn>
static void check_parse_error(Fn&& fn, const std::string& needle) {
  try {
    fn();
    FAIL_CHECK("expected ParseError mentioning \"" << needle << "\"");
  } catch (const ParseError& e) {
    std::string msg = e.what();
    INFO("needle \"" << needle << "\" not in message \"" << msg << "\"");
    CHECK(msg.find(needle) != std::string::npos);
  }
}

TEST_CASE("display names cover the catalog") {
  AlgebraPtr l2 = bundled_algebra("lambda2");
  Module s = simple_module(l2, 0);
  Module reg = projective_module(l2, 0);
  CHECK(module_display_name(zero_module(l2)) == "0");
  CHECK(module_display_name(s) == "S");
  CHECK(module_display_name(reg) == "L");

  AlgebraPtr n2 = bundled_algebra("nakayama2");
  CHECK(module_display_name(simple_module(n2, 1)) == "S(2)");
  CHECK(module_display_name(projective_module(n2, 0)) == "P(1)");

  AlgebraPtr l3 = bundled_algebra("lambda3");
  Module m2 = omega(simple_module(l3, 0), 1);
  CHECK(module_display_name(m2) == "M(2)");  // neither simple nor projective

  CHECK(map_tag(identity_map(s)) == "1");
  CHECK(map_tag(zero_map(s, s)) == "0");
  CHECK(map_tag(projective_cover(s)) == "p");
  CHECK(map_tag(injective_envelope(s)) == "i");
  CHECK(map_tag(minimal_presentation(s).g) == "f");

  CHECK(morph_display_name(morph_from_zero(s)) == "(0 -> S)");
  CHECK(morph_display_name(morph_to_zero(s)) == "(S -> 0)");
  CHECK(morph_display_name(morph_identity(s)) == "(S = S)_1");
  CHECK(morph_display_name(make_morph(projective_cover(s))) == "(L -> S)_p");
  CHECK(morph_display_name(zero_morph_object(l2)) == "(0)");
  CHECK(morph_compact_label(make_morph(injective_envelope(s))) == "[SL_i]");
  CHECK(morph_compact_label(morph_from_zero(m2)) == "[0M2]");
}

TEST_CASE("algebra records parse and rebuild the catalog entries") {
  AlgebraPtr alg = parse_algebra_text(kDualNumbers);
  CHECK(alg->name == "F2[x]/(x^2)");
  CHECK(alg->p == 2);
  CHECK(is_self_injective(alg));
  Module reg = projective_module(alg, 0);
  CHECK(reg.total_dim() == 2);
  CHECK(enumerate_indecomposables(alg).size() == 2);

  // The wrapper is optional, vertex refs may be indices, coef defaults to 1.
  AlgebraPtr bare = parse_algebra_text(R"json({
    "p": 2, "vertices": ["1"],
    "arrows": [{"name": "x", "from": 0, "to": 0}],
    "relations": [[{"path": ["x", "x"]}]],
    "bound": 2})json");
  CHECK(is_self_injective(bare));
  CHECK(projective_module(bare, 0).total_dim() == 2);

  // Two-vertex cyclic Nakayama, matching the bundled algebra structurally.
  AlgebraPtr nak = parse_algebra_text(R"json({
    "p": 2, "vertices": ["1", "2"],
    "arrows": [{"name": "a", "from": "1", "to": "2"}, {"name": "b", "from": "2", "to": "1"}],
    "relations": [[{"path": ["a", "b"]}], [{"path": ["b", "a"]}]],
    "bound": 2})json");
  CHECK(is_self_injective(nak));
  CHECK(projective_module(nak, 0).total_dim() == 2);
  CHECK(is_isomorphic(tau_plus(simple_module(nak, 0)), simple_module(nak, 1)));

  // Signed coefficients reduce mod p; a coef-0 term drops out.
  AlgebraPtr signs = parse_algebra_text(R"json({
    "p": 3, "vertices": ["1"],
    "arrows": [{"name": "x", "from": "1", "to": "1"}],
    "relations": [[{"coef": -1, "path": ["x", "x"]}, {"coef": 0, "path": ["x", "x"]}]],
    "bound": 2})json");
  CHECK(signs->p == 3);
  CHECK(projective_module(signs, 0).total_dim() == 2);
}

TEST_CASE("algebra parse errors name the line or field") {
  check_parse_error([] { parse_algebra_text("{\n  \"p\": 2,\n  oops\n}"); }, "line 3");
  check_parse_error([] { parse_algebra_text(R"json({"vertices": []})json"); }, "algebra.p");
  check_parse_error([] { parse_algebra_text(R"json({"p": 4, "vertices": ["1"]})json"); },
                    "algebra.p");
  check_parse_error(
      [] {
        parse_algebra_text(R"json({
          "p": 2, "vertices": ["1"],
          "arrows": [{"name": "x", "from": "9", "to": "1"}], "bound": 1})json");
      },
      "algebra.arrows[0].from");
  check_parse_error(
      [] {
        parse_algebra_text(R"json({
          "p": 2, "vertices": ["1"],
          "arrows": [{"name": "x", "from": "1", "to": "1"}],
          "relations": [[{"path": ["y"]}]], "bound": 2})json");
      },
      "algebra.relations[0][0].path[0]");
  // Structurally bad algebra data surfaces as a parse error, not an internal one.
  check_parse_error(
      [] {
        parse_algebra_text(R"json({
          "p": 2, "vertices": ["1"],
          "arrows": [{"name": "x", "from": "1", "to": "1"}], "bound": 2})json");
      },
      "algebra:");  // x^2 is not killed by any relation, so the bound fails
}

TEST_CASE("module records parse against a fixed algebra") {
  AlgebraPtr alg = bundled_algebra("lambda2");
  Module reg = parse_module_text(alg, R"json({
    "module": {"dims": {"1": 2}, "matrices": {"x": [[0, 0], [1, 0]]}}})json");
  CHECK(is_isomorphic(reg, projective_module(alg, 0)));

  // Omitted matrices act as zero: a 2-dimensional semisimple module.
  Module ss = parse_module_text(alg, R"json({"dims": {"1": 2}})json");
  CHECK(is_isomorphic(ss, direct_sum(alg, {simple_module(alg, 0), simple_module(alg, 0)}).sum));

  // Entries reduce mod p, vertices may be indexed.
  Module reg2 =
      parse_module_text(alg, R"json({"dims": {"0": 2}, "matrices": {"x": [[2, -2], [3, 0]]}})json");
  CHECK(is_isomorphic(reg2, reg));

  check_parse_error([&] { parse_module_text(alg, R"json({"matrices": {}})json"); }, "module.dims");
  check_parse_error([&] { parse_module_text(alg, R"json({"dims": {"7": 1}})json"); },
                    "module.dims.7");
  check_parse_error([&] { parse_module_text(alg, R"json({"dims": {"1": -1}})json"); }, "negative");
  check_parse_error(
      [&] { parse_module_text(alg, R"json({"dims": {"1": 2}, "matrices": {"x": [[0, 0]]}})json"); },
      "expected 2 rows");
  check_parse_error(
      [&] { parse_module_text(alg, R"json({"dims": {"1": 1}, "matrices": {"x": [[1]]}})json"); },
      "relation");  // x acts invertibly, so x^2 = 0 fails

  AlgebraPtr nak = bundled_algebra("nakayama2");
  Module s2 = parse_module_text(nak, R"json({"dims": {"2": 1}})json");
  CHECK(is_isomorphic(s2, simple_module(nak, 1)));
}

TEST_CASE("inline module references") {
  AlgebraPtr l2 = bundled_algebra("lambda2");
  CHECK(parse_module_ref(l2, "0").is_zero_module());
  CHECK(is_isomorphic(parse_module_ref(l2, "S"), simple_module(l2, 0)));
  CHECK(is_isomorphic(parse_module_ref(l2, "S(1)"), simple_module(l2, 0)));  // by name
  CHECK(is_isomorphic(parse_module_ref(l2, "S(0)"), simple_module(l2, 0)));  // by index
  CHECK(is_isomorphic(parse_module_ref(l2, "L"), projective_module(l2, 0)));
  CHECK(is_isomorphic(parse_module_ref(l2, "I"), injective_module(l2, 0)));
  CHECK(is_isomorphic(parse_module_ref(l2, " S + S "),
                      direct_sum(l2, {simple_module(l2, 0), simple_module(l2, 0)}).sum));
  CHECK(is_isomorphic(parse_module_ref(l2, "(P(1) \xe2\x8a\x95 S)"),
                      direct_sum(l2, {projective_module(l2, 0), simple_module(l2, 0)}).sum));

  AlgebraPtr nak = bundled_algebra("nakayama2");
  CHECK(is_isomorphic(parse_module_ref(nak, "S(2)"), simple_module(nak, 1)));
  CHECK(is_isomorphic(
      parse_module_ref(nak, "L"),
      direct_sum(nak, {projective_module(nak, 0), projective_module(nak, 1)}).sum));

  check_parse_error([&] { parse_module_ref(l2, "Q"); }, "unknown atom");
  check_parse_error([&] { parse_module_ref(l2, "S(9)"); }, "index out of range");
  check_parse_error([&] { parse_module_ref(l2, "S(1"); }, "unbalanced");
  check_parse_error([&] { parse_module_ref(l2, "S + "); }, "empty summand");
  check_parse_error([&] { parse_module_ref(nak, "S"); }, "needs a vertex");
}

TEST_CASE("inline morphism objects") {
  AlgebraPtr l2 = bundled_algebra("lambda2");
  Module s = simple_module(l2, 0);

  CHECK(is_isomorphic_h(parse_morph_inline(l2, "(0\xe2\x86\x92S)"), morph_from_zero(s)));
  CHECK(is_isomorphic_h(parse_morph_inline(l2, "0->S(0)"), morph_from_zero(s)));
  CHECK(is_isomorphic_h(parse_morph_inline(l2, " S -> 0 "), morph_to_zero(s)));
  CHECK(is_isomorphic_h(parse_morph_inline(l2, "S=S"), morph_identity(s)));
  CHECK(is_isomorphic_h(parse_morph_inline(l2, "cover(S)"), make_morph(projective_cover(s))));
  CHECK(is_isomorphic_h(parse_morph_inline(l2, "envelope(S)"),
                        make_morph(injective_envelope(s))));
  CHECK(is_isomorphic_h(parse_morph_inline(l2, "pres(S)"),
                        make_morph(minimal_presentation(s).g)));

  check_parse_error([&] { parse_morph_inline(l2, "S->L"); }, "zero side");
  check_parse_error([&] { parse_morph_inline(l2, "S=L"); }, "not isomorphic");
  check_parse_error([&] { parse_morph_inline(l2, "hello"); }, "expected");
}

TEST_CASE("morph records parse against a fixed algebra") {
  AlgebraPtr alg = bundled_algebra("lambda2");
  Module s = simple_module(alg, 0);

  // x-multiplication on the regular module, with one inline and one nested side.
  MorphObject xmul = parse_morph_text(alg, R"json({
    "morph": {
      "A": "L",
      "B": {"module": {"dims": {"1": 2}, "matrices": {"x": [[0, 0], [1, 0]]}}},
      "f": {"1": [[0, 0], [1, 0]]}
    }})json");
  CHECK(is_isomorphic_h(xmul, make_morph(minimal_presentation(s).g)));

  // Omitted f is the zero map.
  MorphObject z = parse_morph_text(alg, R"json({"A": "S", "B": "S"})json");
  CHECK(is_zero(z.f));
  CHECK(is_isomorphic_h(z, make_morph(zero_map(s, s))));

  check_parse_error([&] { parse_morph_text(alg, R"json({"A": "S"})json"); }, "morph.B");
  check_parse_error(
      [&] { parse_morph_text(alg, R"json({"A": "S", "B": "S", "f": {"1": [[0, 0]]}})json"); },
      "expected 1 entries");
  // A shape-correct f that fails to commute with the action is rejected.
  check_parse_error(
      [&] {
        parse_morph_text(alg, R"json({"A": "L", "B": "L", "f": {"1": [[0, 1], [0, 0]]}})json");
      },
      "morph.f");
}

TEST_CASE("cli loaders take names, files, or inline text") {
  AlgebraPtr l3 = load_algebra("lambda3");
  CHECK(l3->name == "F2[x]/(x^3)");

  std::string path = "/tmp/arcat_io_test_algebra.json";
  {
    std::ofstream out(path);
    out << kDualNumbers;
  }
  AlgebraPtr fromfile = load_algebra(path);
  CHECK(fromfile->name == "F2[x]/(x^2)");
  CHECK(is_self_injective(fromfile));

  Module s = simple_module(fromfile, 0);
  CHECK(is_isomorphic(load_module(fromfile, "S"), s));
  CHECK(is_isomorphic_h(load_object(fromfile, "(0->S)"), morph_from_zero(s)));

  std::string opath = "/tmp/arcat_io_test_object.json";
  {
    std::ofstream out(opath);
    out << R"json({"morph": {"A": "0", "B": "S", "f": {}}})json";
  }
  CHECK(is_isomorphic_h(load_object(fromfile, opath), morph_from_zero(s)));

  std::string mpath = "/tmp/arcat_io_test_module.json";
  {
    std::ofstream out(mpath);
    out << R"json({"module": {"dims": {"1": 1}}})json";
  }
  CHECK(is_isomorphic(load_module(fromfile, mpath), s));

  check_parse_error([] { load_algebra("no_such_algebra"); }, "not a bundled name");
  check_parse_error([] { bundled_algebra("nope"); }, "unknown bundled algebra");
  std::remove(path.c_str());
  std::remove(opath.c_str());
  std::remove(mpath.c_str());
}
