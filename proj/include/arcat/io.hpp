#pragma once

#include <string>
#include <vector>

#include "arcat/morph.hpp"

namespace arcat {

// Algebras shipped with the tool, addressable by name from the CLI.
std::vector<std::string> bundled_algebra_names();
AlgebraPtr bundled_algebra(const std::string& name);

// Canonical display names, shared by quiver vertices, reports, and the CLI.
// Modules are named by iso class: "0", "S"/"S(v)", "L"/"P(v)", "I"/"I(v)",
// fallback "M(d0,d1,...)". On a one-vertex algebra the regular module prints
// as "L" and vertex suffixes are dropped.
std::string module_display_name(const Module& m);
// One-letter map tags: "1" iso, "0" zero, "p" epi, "i" mono, "f" otherwise.
std::string map_tag(const ModuleMap& f);
// "(S = S)_1", "(0 -> S)", "(L -> S)_p" style.
std::string morph_display_name(const MorphObject& x);
// Compact vertex labels: "[SS_1]", "[0S]", "[LS_p]" (no tag on zero legs).
std::string morph_compact_label(const MorphObject& x);

// Parse an algebra / module / morphism-object record from structured text
// (JSON; see docs/formats.md). Syntax errors report the line, schema and
// semantic errors the field; all surface as ParseError.
AlgebraPtr parse_algebra_text(const std::string& text);
Module parse_module_text(const AlgebraPtr& alg, const std::string& text);
MorphObject parse_morph_text(const AlgebraPtr& alg, const std::string& text);

// Inline mini-language (docs/formats.md): module refs "S(v)", "P(v)+S(v)",
// "L", "0"; object shapes "0->C", "C->0", "C=C", cover/envelope/pres(C).
Module parse_module_ref(const AlgebraPtr& alg, const std::string& spec);
MorphObject parse_morph_inline(const AlgebraPtr& alg, const std::string& spec);

// CLI entry points: a bundled name / existing file path for algebras, an
// existing file path / inline spec for modules and objects.
AlgebraPtr load_algebra(const std::string& name_or_path);
Module load_module(const AlgebraPtr& alg, const std::string& spec_or_path);
MorphObject load_object(const AlgebraPtr& alg, const std::string& spec_or_path);

}  // namespace arcat
