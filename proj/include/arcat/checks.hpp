#pragma once

#include <string>
#include <vector>

#include "arcat/analysis.hpp"
#include "arcat/ass.hpp"

namespace arcat {

enum class CheckStatus { Pass, Fail, Skip };

// One row of a verification table. Skip records a check whose hypotheses the
// algebra does not meet, or whose catalog ran past the caps — visible in the
// report, never counted as a pass and never silently dropped.
struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  std::string detail;
};

struct CheckOptions {
  int dim_cap = 64;
  int count_cap = 512;
  int period_bound = 24;
  unsigned long long seed = 0;
  int sample_pairs = 100;
};

// Duality involutive, the category equivalence preserves hom dimensions on
// sampled pairs, decomposition is stable on pairwise direct sums.
std::vector<CheckResult> check_foundations(const AlgebraPtr& alg, const CheckOptions& opt);

// Every display builder and both generic engines produce sequences that pass
// the full almost-split verifier over the catalog.
std::vector<CheckResult> check_sequence_builders(const AlgebraPtr& alg, const CheckOptions& opt);

// The five middle-term structure claims, each swept over every instance in
// the catalog that satisfies its hypotheses.
std::vector<CheckResult> check_middle_structure(const AlgebraPtr& alg, const CheckOptions& opt);

// Translate-induced class bijections and the socle-quotient identity.
std::vector<CheckResult> check_translate_bijections(const AlgebraPtr& alg,
                                                    const CheckOptions& opt);

// General translate vs. the triangular-algebra route vs. every applicable
// closed form, on each indecomposable non-projective object (family orbits
// when the catalog exceeds the caps).
std::vector<CheckResult> check_triple_agreement(const AlgebraPtr& alg, const CheckOptions& opt);

// Knit the quiver: mesh completeness, stability and connectedness of the
// stable part (expected to fail on non-self-injective controls), tree class,
// and the published 6-vertex picture on the 2-truncated one-loop algebra.
std::vector<CheckResult> check_quiver_global(const AlgebraPtr& alg, const CheckOptions& opt);

// Closed-form orbit tables match direct iteration for |i| <= 8.
std::vector<CheckResult> check_orbit_tables(const AlgebraPtr& alg, const CheckOptions& opt);

// Period-4 families over truncated polynomial algebras, least periods
// reported and strict divisors of 4 flagged.
std::vector<CheckResult> check_periodicity_families(const AlgebraPtr& alg,
                                                    const CheckOptions& opt);

// Stable functor identities: sixth/third syzygy forms when the twist fixes
// the catalog, twisted forms in general.
std::vector<CheckResult> check_stable_identities(const AlgebraPtr& alg, const CheckOptions& opt);

// Component maps induced by the orbit functors: well-definedness,
// translation-orbit invariance, surjectivity.
std::vector<CheckResult> check_component_maps(const AlgebraPtr& alg, const CheckOptions& opt);

// Everything above, in report order.
std::vector<CheckResult> check_paper_all(const AlgebraPtr& alg, const CheckOptions& opt);

bool all_pass(const std::vector<CheckResult>& rows);
std::string render_check_table(const std::vector<CheckResult>& rows);

}  // namespace arcat
