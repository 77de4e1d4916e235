#pragma once

#include "arcat/algebra.hpp"

namespace arcat {

// Finite-dimensional left module, stored as a representation: a space per
// vertex and a (target-dim x source-dim) matrix per arrow.
struct Module {
  AlgebraPtr alg;
  std::vector<int> dim;   // per vertex
  std::vector<Mat> act;   // per arrow

  int total_dim() const;
  bool is_zero_module() const { return total_dim() == 0; }

  friend bool operator==(const Module& x, const Module& y) {
    return x.alg.get() == y.alg.get() && x.dim == y.dim && x.act == y.act;
  }
  friend bool operator!=(const Module& x, const Module& y) { return !(x == y); }
};

// Validates shapes and that every relation acts as zero.
Module make_module(AlgebraPtr alg, std::vector<int> dim, std::vector<Mat> act);
Module zero_module(AlgebraPtr alg);
Module simple_module(AlgebraPtr alg, int v);
Module projective_module(AlgebraPtr alg, int v);
Module injective_module(AlgebraPtr alg, int v);

// Basis layout of P(v): per target vertex w, the global basis indices of the
// paths v -> w, in increasing order. Matches projective_module's coordinates.
std::vector<std::vector<int>> projective_path_layout(const AlgebraPtr& alg, int v);

// Action of a path / of e_w-times-basis-combination on a module.
Mat path_action(const Module& m, const Path& path);

struct ModuleMap {
  Module src, dst;
  std::vector<Mat> comp;  // per vertex

  friend bool operator==(const ModuleMap& f, const ModuleMap& g) {
    return f.src == g.src && f.dst == g.dst && f.comp == g.comp;
  }
};

ModuleMap make_map(Module src, Module dst, std::vector<Mat> comp);
ModuleMap zero_map(Module src, Module dst);
ModuleMap identity_map(const Module& m);
ModuleMap compose(const ModuleMap& second, const ModuleMap& first);
ModuleMap map_add(const ModuleMap& f, const ModuleMap& g);
ModuleMap map_scale(const ModuleMap& f, u32 c);

bool is_zero(const ModuleMap& f);
bool is_injective_map(const ModuleMap& f);
bool is_surjective_map(const ModuleMap& f);
bool is_iso(const ModuleMap& f);
std::optional<ModuleMap> inverse_of(const ModuleMap& f);

// The map P(v) -> m sending the generator e_v to the column x in m's vertex-v
// coordinates; every module map out of P(v) has this form.
ModuleMap map_from_projective_generator(const Module& pv, int v, const Module& m, const Mat& x);

// Deterministic basis of Hom(x, y) (kernel of the intertwining system, in rref
// order with variables ordered by vertex then row-major).
std::vector<ModuleMap> hom_basis(const Module& x, const Module& y);
int hom_dim(const Module& x, const Module& y);

// Coordinates of f in a hom basis (columns stacked per map); internal error if
// f is outside the span.
Mat hom_coords(const std::vector<ModuleMap>& basis, const ModuleMap& f);
ModuleMap map_from_coords(const std::vector<ModuleMap>& basis, const Mat& coords,
                          const Module& src, const Module& dst);

struct SubObject {
  Module sub;
  ModuleMap incl;
};
struct QuotObject {
  Module quot;
  ModuleMap proj;
};

// Subrepresentation spanned per vertex by the given columns (need not be
// independent; must be arrow-closed).
SubObject submodule_from_spans(const Module& m, const std::vector<Mat>& spans);

SubObject kernel(const ModuleMap& f);
QuotObject cokernel(const ModuleMap& f);
SubObject image(const ModuleMap& f);  // inclusion into f.dst

SubObject radical_of(const Module& m);
SubObject socle_of(const Module& m);
QuotObject top_of(const Module& m);

// g with g . proj = h, for h vanishing on the collapsed subspace.
ModuleMap factor_through_quotient(const QuotObject& q, const ModuleMap& h);
// g with incl . g = h, for h landing inside the subobject.
ModuleMap corestrict_to_sub(const SubObject& s, const ModuleMap& h);
// psi with epi . psi = f (exists when f.src is projective).
std::optional<ModuleMap> lift_through_epi(const ModuleMap& f, const ModuleMap& epi);
// psi with psi . mono = f (exists when f.dst is injective).
std::optional<ModuleMap> extend_along_mono(const ModuleMap& f, const ModuleMap& mono);

struct SumObject {
  Module sum;
  std::vector<ModuleMap> incl;
  std::vector<ModuleMap> proj;
};
SumObject direct_sum(AlgebraPtr alg, const std::vector<Module>& parts);
ModuleMap direct_sum_map(const SumObject& srcsum, const SumObject& dstsum,
                         const std::vector<ModuleMap>& diag);

// Standard duality D = Hom_k(-, k): left modules over alg <-> left modules
// over alg^op; matrices transpose, arrows reverse. D(D(m)) == m on the nose.
Module dual(const Module& m);
ModuleMap dual(const ModuleMap& f);

bool exact_at(const ModuleMap& f, const ModuleMap& g);  // im f == ker g inside g.src

std::string dim_vector_string(const Module& m);

}  // namespace arcat
