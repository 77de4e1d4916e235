#pragma once

#include "arcat/functors.hpp"

namespace arcat {

// Minimal projective cover, returned as the onto map P -> m. The kernel is
// checked to be superfluous (inside rad P).
ModuleMap projective_cover(const Module& m);
// Minimal injective envelope, returned as the mono m -> I.
ModuleMap injective_envelope(const Module& m);

bool is_projective(const Module& m);
bool is_injective(const Module& m);
bool is_self_injective(const AlgebraPtr& alg);

// Minimal presentation P1 -g-> P0 -onto-> m -> 0.
struct Presentation {
  ModuleMap g;
  ModuleMap onto;
};
Presentation minimal_presentation(const Module& m);

// Transpose coker(Hom(P0, Lambda) -> Hom(P1, Lambda)) over the opposite
// algebra; kills projective summands.
Module transpose_of(const Module& m);

// Translates tau = D Tr and its inverse Tr D. Projective (resp. injective)
// summands die; tau of a projective is the zero module.
Module tau_plus(const Module& m);
Module tau_minus(const Module& m);

// Syzygy (n > 0) / cosyzygy (n < 0) via minimal covers and envelopes,
// stripping projective resp. injective summands along the way. n = 0 strips
// both, i.e. projects onto the stable part. Intended for self-injective
// algebras, where this is the stable-category loop functor.
Module omega(const Module& m, int n);

// Indecomposable direct summands (Fitting splitting; deterministic order).
std::vector<Module> decompose(const Module& m);
bool is_indecomposable(const Module& m);
Module strip_projective_summands(const Module& m);
Module strip_injective_summands(const Module& m);

bool is_isomorphic(const Module& x, const Module& y);

// Basis of rad End(m) = the nilpotent endomorphisms, for indecomposable m
// small enough to enumerate End(m) exhaustively. Certifies along the way
// that the nilpotents form a subspace (End local).
std::vector<ModuleMap> end_radical_basis(const Module& m);

// 0 -> tau C -left-> E -right-> C -> 0.
struct AlmostSplitSeq {
  ModuleMap left;
  ModuleMap right;
};
// Almost split sequence ending at indecomposable non-projective c: realized
// as a pushout of a class spanning the socle of Ext^1(c, tau c) over End(c);
// exactness and non-splitness are verified on construction.
AlmostSplitSeq ass_ending_at(const Module& c);
// Almost split sequence starting at indecomposable non-injective n (the dual
// construction run over the opposite algebra).
AlmostSplitSeq ass_starting_at(const Module& n);

// Right/left almost split checks of a candidate sequence against a catalog
// of indecomposables (one per iso class).
bool is_right_almost_split(const AlmostSplitSeq& seq, const std::vector<Module>& catalog);
bool is_left_almost_split(const AlmostSplitSeq& seq, const std::vector<Module>& catalog);

// All indecomposables, one per iso class, by closing the projectives,
// injectives, and simples under almost split middles and both translates.
// Throws CapExceeded when a dimension or count cap is hit (possible
// infinite representation type).
std::vector<Module> enumerate_indecomposables(const AlgebraPtr& alg, int dim_cap = 64,
                                              int count_cap = 512);

struct ArQuiver {
  std::vector<Module> verts;
  std::vector<bool> proj, inj;
  std::vector<int> tau;                            // index, or -1 on projectives
  std::vector<std::tuple<int, int, int>> arrows;   // from, to, multiplicity
};
// Auslander-Reiten quiver: arrows into non-projectives from almost split
// middles, arrows into projectives from radical summands; mesh-consistency
// checked (arrows X -> Z and tau Z -> X carry equal multiplicities).
ArQuiver ar_quiver(const AlgebraPtr& alg, int dim_cap = 64, int count_cap = 512);

}  // namespace arcat
