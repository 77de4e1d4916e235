#pragma once

#include "arcat/morph.hpp"

namespace arcat {

// Short exact sequence source --left--> middle --right--> target in the
// morphism category. Plain aggregate so tests can assemble broken candidates;
// make_h_sequence is the validating constructor used by every builder, and
// is_almost_split_h re-checks a candidate from scratch.
struct HSequence {
  MorphMap left;
  MorphMap right;

  const MorphObject& source() const { return left.src; }
  const MorphObject& middle() const { return left.dst; }
  const MorphObject& target() const { return right.dst; }
};

// Validates chain consistency, componentwise exactness (mono, exact middle,
// epi on both legs) and non-splitness. Violations are internal errors: the
// builders below own their displays.
HSequence make_h_sequence(MorphMap left, MorphMap right);

// True when the right map admits a section (equivalently the left map a
// retraction); exact linear solve, no search.
bool h_sequence_splits(const HSequence& s);

// Gate for the builders that consume a module-level almost split sequence:
// exactness, non-splitness, indecomposable end terms, and source isomorphic
// to the translate of the target. Throws HypothesisError naming the failure.
void require_almost_split(const AlmostSplitSeq& s);

// From 0 -> A -f-> B -g-> C -> 0 almost split, the sequence ending at (0->C):
//   0 -> (A = A) --(1, f)--> (A -f-> B) --(0, g)--> (0 -> C) -> 0.
HSequence ass_at_0c(const AlmostSplitSeq& s);

// Companion form ending at (C = C):
//   0 -> (A -> 0) --(f, 0)--> (B -g-> C) --(g, 1)--> (C = C) -> 0.
HSequence ass_at_c1c(const AlmostSplitSeq& s);

// Glue two module sequences delta: 0 -> A -f-> B -> C -> 0 and
// delta': 0 -> A' -> B' -g'-> A -> 0 into
//   0 -> (B' -g'-> A) -> (A = A) + (B' -fg'-> B) -> (A -f-> B) -> 0,
// additionally checking that the summand (B' -fg'-> B) is indecomposable.
HSequence glue_ass(const AlmostSplitSeq& delta, const AlmostSplitSeq& delta_prime);

// For projective indecomposable non-injective a and the module sequence
// 0 -> a -f-> B -> C -> 0 starting at a:
//   0 -> (rad a -i-> a) -> (a = a) + (rad a -fi-> B) -> (a -f-> B) -> 0.
// Translate consistency of the ends is asserted on construction.
HSequence ass_proj_source(const Module& a, const AlmostSplitSeq& s);

// For indecomposable non-projective c: pull the sequence ending at c back
// along the projective cover p: P -> c, push it out along the injective
// envelope e: tau c -> I, and assemble
//   0 -> (tau c -e-> I) -> (Z -dh-> X) -> (P -p-> c) -> 0
// from the resulting 3x3 diagram; all six exactness conditions of the new
// rows are checked.
HSequence ass_at_proj_cover(const Module& c);

// For projective-injective indecomposable P with Q the cover of soc P:
//   0 -> (0 -> P) -> (Q -ip-> P) -> (Q -> 0) -> 0,
// where i: soc P -> P is the inclusion. Also checks Q against the inverse
// Nakayama image of P and the inverse translate of (0 -> P) against (Q -> 0).
HSequence ass_from_0p(const Module& p_mod);

// Almost split sequence in the morphism category ending (resp. starting) at
// x, computed over the triangular algebra and pulled back through the
// equivalence.
HSequence ass_ending_at_h(const MorphObject& x);
HSequence ass_starting_at_h(const MorphObject& x);

// Full verifier: structural validity (commuting squares, exactness,
// non-splitness, indecomposable ends) returns false on failure; then the
// right-almost-split factorization criterion over the catalog: for Y not
// isomorphic to the target, post-composition Hom(Y, middle) -> Hom(Y, target)
// must be surjective; for Y isomorphic to the target every non-isomorphism
// must factor (checked by exhaustive enumeration of the finite hom space).
// Throws HypothesisError when the catalog lacks an end term or a middle
// summand, since the sweep would be vacuous.
bool is_almost_split_h(const HSequence& s, const std::vector<MorphObject>& h_catalog);

// Shape tags for middle-term summands: injective-to-zero (I -> 0),
// zero-to-projective (0 -> P), projective identity (P = P), anything else.
enum class SummandShape { IZero, ZeroP, PIdent, Generic };

// The five middle-term structure claims, keyed by the statement they encode;
// see analyze_middle.
enum class MiddleClaim { P41, P42, P43, P44, P45 };

struct MiddleTermReport {
  std::vector<MorphObject> summands;  // indecomposable, deterministic order
  std::vector<SummandShape> tags;     // parallel to summands
  bool has_nonproj_noninj_summand = false;
  bool has_izero_summand = false;
  bool has_zerop_summand = false;
  bool has_pident_summand = false;
  bool middle_projective = false;
  MiddleClaim claim = MiddleClaim::P41;
  bool claim_holds = false;
  // Indices of the summands that decide the claim (the exceptional summand
  // on success, the offending ones on failure).
  std::vector<std::size_t> witnesses;
};

// Decompose the middle term of a verified sequence and evaluate one claim:
//   P41: target (A -> 0), A indecomposable non-injective. Middle = X + (I->0)
//        with X indecomposable neither projective nor injective and I
//        injective; moreover I = 0 whenever A is not a summand of any
//        J / soc J over the indecomposable injectives J.
//   P42: self-injective algebra, target (P -> Q) indecomposable
//        non-projective with projective legs. Middle = W + (0->V) with W
//        indecomposable neither projective nor injective and V projective.
//   P43: source an injective envelope (C -e-> I). Middle has no (0 -> Q)
//        summand with Q projective, and has an indecomposable non-projective
//        summand.
//   P44: source (rad P -i-> P) with P projective-injective indecomposable
//        and rad P indecomposable non-injective. (P = P) occurs among the
//        middle summands.
//   P45: self-injective algebra, target an indecomposable non-projective
//        envelope (C -e-> I). Middle is not projective and has no (0 -> Q)
//        summand with Q projective.
// The sequence is re-validated (exact, non-split, indecomposable ends,
// translate-consistent) and each claim hypothesis is checked separately;
// violations raise HypothesisError naming the hypothesis.
MiddleTermReport analyze_middle(const HSequence& s, MiddleClaim claim);

// The translate-induced bijections between distinguished classes of
// indecomposables, plus the socle-quotient translate identity, enumerated
// over the full catalogs of a representation-finite algebra.
struct CorollaryReport {
  // (P -p-> A) cover of indecomposable non-projective A  <->  its translate
  // (B -e-> I), an envelope of indecomposable non-injective B.
  std::vector<std::pair<MorphObject, MorphObject>> covers_to_envelopes;
  bool covers_bijective = false;
  // (A -f-> B) minimal left almost split, A non-injective  <->  its translate
  // (C -g-> D) minimal right almost split, D non-projective.
  std::vector<std::pair<MorphObject, MorphObject>> left_to_right_almost_split;
  bool almost_split_maps_bijective = false;
  // (P -f-> Q) indecomposable non-projective with projective legs, Q != 0
  // <->  the module m with translate image (0 -> m); m runs over the
  // indecomposable non-projectives.
  std::vector<std::pair<MorphObject, Module>> proj_presentations_to_modules;
  bool presentations_bijective = false;
  // tau(P / soc P) ~ rad P over every projective-injective indecomposable P.
  std::size_t proj_inj_count = 0;
  bool socle_quotient_translates_ok = false;

  bool all_ok() const {
    return covers_bijective && almost_split_maps_bijective && presentations_bijective &&
           socle_quotient_translates_ok;
  }
};

CorollaryReport corollary_checks(const AlgebraPtr& alg, int dim_cap = 64, int count_cap = 512);

}  // namespace arcat
