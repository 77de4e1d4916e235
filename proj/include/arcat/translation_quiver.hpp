#pragma once

#include "arcat/io.hpp"

namespace arcat {

struct TqVertex {
  MorphObject obj;
  std::string name;   // "(S = S)_1" style
  std::string label;  // "[SS_1]" style
  bool proj = false;
  bool inj = false;
};

// Valued arrow: val_a = multiplicity of the source in the mesh middle ending
// at the target (radical multiplicity for projective targets), val_b the
// mesh-partner count.
struct TqArrow {
  int from = 0;
  int to = 0;
  int val_a = 1;
  int val_b = 1;
};

struct TranslationQuiver {
  AlgebraPtr alg;
  std::vector<TqVertex> verts;
  std::vector<TqArrow> arrows;
  std::vector<int> tau;  // vertex index of the translate, -1 where undefined

  // Index of the vertex isomorphic to x, or -1.
  int find(const MorphObject& x) const;
  std::vector<int> arrows_into(int v) const;   // arrow indices
  std::vector<int> arrows_out_of(int v) const;
};

// The AR quiver of the morphism category, knitted over the triangular matrix
// algebra and pulled back through the equivalence. Every translation edge is
// re-verified against the native translate computed directly on the morphism
// side; a disagreement aborts with the offending vertex named. In the result
// the translation is defined exactly on the non-projective vertices.
TranslationQuiver gamma_h(const AlgebraPtr& alg, int dim_cap = 64, int count_cap = 512);

// Induced subquiver on the vertices that are neither projective nor
// injective (both kinds removed, with their arrows). The translation may
// become partial when a translate was cut away.
TranslationQuiver stable_quiver(const TranslationQuiver& g);

// True when every power of the translation is defined everywhere, i.e. the
// translation is a total permutation of the (finite) vertex set.
bool stability_check(const TranslationQuiver& g);

// Underlying undirected graph connected (vacuously true when empty).
bool connectedness_check(const TranslationQuiver& g);

// At every vertex v with v' = tau(v) defined, the multiset of arrow sources
// into v (with multiplicity val_a) equals the multiset of arrow targets out
// of v'.
bool mesh_complete(const TranslationQuiver& g);

// Graphviz export; projective and injective vertices styled distinctly,
// translation shown as dotted edges.
std::string to_dot(const TranslationQuiver& g);

}  // namespace arcat
