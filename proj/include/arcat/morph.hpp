#pragma once

#include "arcat/ar.hpp"

namespace arcat {

// Object of the morphism category: a module map A -> B, nothing more. All the
// structure lives in how functors treat the two legs.
struct MorphObject {
  ModuleMap f;

  const Module& a() const { return f.src; }
  const Module& b() const { return f.dst; }
  const AlgebraPtr& alg() const { return f.src.alg; }
  int total_dim() const { return f.src.total_dim() + f.dst.total_dim(); }
  bool is_zero_object() const { return total_dim() == 0; }

  friend bool operator==(const MorphObject& x, const MorphObject& y) { return x.f == y.f; }
  friend bool operator!=(const MorphObject& x, const MorphObject& y) { return !(x == y); }
};

MorphObject make_morph(ModuleMap f);
MorphObject morph_from_zero(Module b);   // (0 -> B)
MorphObject morph_to_zero(Module a);     // (A -> 0)
MorphObject morph_identity(Module m);    // (M = M)
MorphObject zero_morph_object(const AlgebraPtr& alg);

// Commuting square (h1, h2) between two objects; the square is asserted on
// construction.
struct MorphMap {
  MorphObject src, dst;
  ModuleMap h1, h2;

  friend bool operator==(const MorphMap& x, const MorphMap& y) {
    return x.src == y.src && x.dst == y.dst && x.h1 == y.h1 && x.h2 == y.h2;
  }
};

MorphMap make_morph_map(MorphObject src, MorphObject dst, ModuleMap h1, ModuleMap h2);
MorphMap identity_h(const MorphObject& x);
MorphMap zero_map_h(const MorphObject& x, const MorphObject& y);
MorphMap compose_h(const MorphMap& second, const MorphMap& first);
MorphMap add_h(const MorphMap& f, const MorphMap& g);
MorphMap scale_h(const MorphMap& f, u32 c);
bool is_zero_h(const MorphMap& h);
bool is_mono_h(const MorphMap& h);
bool is_epi_h(const MorphMap& h);
bool is_iso_h(const MorphMap& h);

// Deterministic basis of the solution space of (intertwining, intertwining,
// commuting-square) conditions.
std::vector<MorphMap> hom_basis_h(const MorphObject& x, const MorphObject& y);
int hom_dim_h(const MorphObject& x, const MorphObject& y);

struct SubMorph {
  MorphObject obj;
  MorphMap incl;
};
struct QuotMorph {
  MorphObject obj;
  MorphMap proj;
};
SubMorph kernel_h(const MorphMap& h);
QuotMorph cokernel_h(const MorphMap& h);
SubMorph image_h(const MorphMap& h);
bool exact_at_h(const MorphMap& f, const MorphMap& g);

struct SumMorph {
  MorphObject sum;
  std::vector<MorphMap> incl, proj;
};
SumMorph direct_sum_h(const AlgebraPtr& alg, const std::vector<MorphObject>& parts);

// rad(A -> B) = (rad A -> f(A) + rad B); soc(A -> B) = (soc A  ker f -> soc B).
SubMorph radical_h(const MorphObject& x);
SubMorph socle_h(const MorphObject& x);

enum class MorphShape { Zero, FromZero, ToZero, Identity, General };
struct MorphClass {
  bool projective = false;
  bool injective = false;
  MorphShape shape = MorphShape::General;
};
// Projective iff f mono, A projective, coker f projective; injective iff
// f epi, B injective, ker f injective.
MorphClass classify_h(const MorphObject& x);
bool is_projective_h(const MorphObject& x);
bool is_injective_h(const MorphObject& x);

// Minimal projective cover (P -> P(+)Q) => x, with P covering A and Q covering
// coker f; surjectivity, projectivity, and superfluous kernel are verified.
MorphMap projective_cover_h(const MorphObject& x);
MorphMap injective_envelope_h(const MorphObject& x);

// Hom into the category's projectives, landing over the opposite algebra:
// (A -> B) |-> (ker f* -> B*). Only defined when both legs are projective
// (its only callers present objects by projectives).
MorphObject star_h(const MorphObject& x);
MorphMap star_h(const MorphMap& h);

// D(A -> B) = (DB -> DA) over the opposite algebra; involutive on the nose.
MorphObject dual_h(const MorphObject& x);
MorphMap dual_h(const MorphMap& h);

struct PresentationH {
  MorphMap g;
  MorphMap onto;
};
PresentationH minimal_presentation_h(const MorphObject& x);
MorphObject transpose_h(const MorphObject& x);
// direction +1: dual of transpose; -1: transpose of dual. Projective
// (resp. injective) summands die; projective input yields the zero object.
MorphObject tau_h(const MorphObject& x, int direction);

// Closed-form fast paths, each guarded by its hypotheses (violations raise
// with the failed hypothesis named):
//   C0:       x = (C -> 0)                  |-> (nu P1 -> nu P0)
//   Envelope: x = (C -> I) envelope, Lambda |-> (P -> tau cosyzygy C)
//             self-injective, C w/o projective summands
//   ProjMap:  x = (P -> Q) indecomposable non-projective, P, Q projective,
//             Q nonzero ((P -> 0) has zero cokernel but nonzero translate)
//                                            |-> (0 -> tau coker f)
enum class TauForm { C0, Envelope, ProjMap };
MorphObject tau_h_closed_form(const MorphObject& x, TauForm which);

std::vector<MorphObject> decompose_h(const MorphObject& x);
bool is_indecomposable_h(const MorphObject& x);
bool is_isomorphic_h(const MorphObject& x, const MorphObject& y);

// The triangular matrix algebra of Lambda: doubled quiver with connecting
// arrows, copied relations, commutation relations; dim = 3 dim Lambda.
struct T2Bridge {
  AlgebraPtr lambda;
  AlgebraPtr t2;
};
T2Bridge make_t2(const AlgebraPtr& alg);
// Per-algebra cached bridge, shared by everything that rides the equivalence.
const T2Bridge& shared_bridge(const AlgebraPtr& alg);
// The equivalence between the morphism category and modules over the
// triangular algebra, both ways, on objects and maps.
Module upsilon(const T2Bridge& br, const MorphObject& x);
ModuleMap upsilon(const T2Bridge& br, const MorphMap& h);
MorphObject upsilon_inverse(const T2Bridge& br, const Module& m);
MorphMap upsilon_inverse(const T2Bridge& br, const ModuleMap& f);
// Independent translate oracle through the triangular algebra.
MorphObject tau_h_via_t2(const T2Bridge& br, const MorphObject& x, int direction);
std::vector<MorphObject> enumerate_indecomposables_h(const T2Bridge& br, int dim_cap = 64,
                                                     int count_cap = 512);

}  // namespace arcat
