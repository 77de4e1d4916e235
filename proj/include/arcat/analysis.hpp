#pragma once

#include <map>
#include <optional>

#include "arcat/translation_quiver.hpp"

namespace arcat {

// The periodic families of objects over a self-injective algebra, keyed by
// the shape of the base object (C ranges over indecomposable non-projective
// modules, P/Q over projectives):
//   type1-0C       (0 -> C)
//   type1-C1C      (C = C)_1
//   type1-C0       (C -> 0)
//   type2-PQ       (P -> Q) indecomposable, neither projective nor injective
//   type3-cover    (P -> C) the projective cover
//   type4-envelope (C -> I) the injective envelope
enum class OrbitFamily { T1FromZero, T1Identity, T1ToZero, T2ProjLegs, T3Cover, T4Envelope };
OrbitFamily orbit_family_from_name(const std::string& name);
std::string orbit_family_name(OrbitFamily fam);

// The i-th translate of x straight from the case table for its family,
// using module-level operations only (translates, syzygies, the Nakayama
// functor, covers, envelopes, presentations) - the translate is never
// iterated on the morphism side. Hypotheses: self-injective algebra and the
// family's shape; violations are named.
MorphObject orbit_closed_form(const MorphObject& x, OrbitFamily fam, int i);

struct OrbitRecord {
  MorphObject base;
  std::map<int, MorphObject> iterates;  // i -> i-th translate, i in [lo, hi]
  std::optional<int> period;            // least m <= bound with the m-th translate iso to the base
};
OrbitRecord orbit_record(const MorphObject& x, int lo, int hi, int period_bound = 24);

// Least m in [1, bound] with the m-th translate of x isomorphic to x.
// Projective x has no translate and is refused.
std::optional<int> periodicity(const MorphObject& x, int bound = 24);

// Stable autoequivalences A = tau nu tau^2 and B = tau Omega^{-1} tau of a
// self-injective algebra, applied i-fold (negative i: the inverse).
// Projective summands are stripped first; *stripped reports whether any
// were. The zero module is fixed.
enum class StableFunctor { A, B };
Module stable_functor(const Module& m, StableFunctor which, int i, bool* stripped = nullptr);

// Isomorphic after stripping projective summands from both sides.
bool stable_iso(const Module& x, const Module& y);

struct DynkinType {
  char cls = 'A';  // 'A', 'D', or 'E'
  int n = 0;
};
std::string dynkin_name(const DynkinType& t);  // "A3", "D4", "E6"

struct OrbitGraph {
  std::vector<std::vector<int>> orbits;  // vertex indices, one list per translation orbit
  struct Edge {
    int o1 = 0, o2 = 0;    // orbit indices, o1 < o2
    int val12 = 0, val21 = 0;  // arrows from a fixed vertex of one orbit into the other
  };
  std::vector<Edge> edges;  // collapsed to one edge per orbit pair
  bool self_loops = false;  // arrows within a single orbit (ignored for matching)
};

struct DynkinReport {
  DynkinType type;
  OrbitGraph graph;
  // A finite stable connected translation quiver is a twisted cylinder over a
  // Dynkin tree. When the twist folds the tree onto a smaller orbit graph the
  // valuations record the fold; unfold_tree() in the implementation undoes it.
  bool folded = false;
  // Quiver vertices per tree vertex (uniform: |vertices| / n).
  int per_tree_vertex = 0;
};

// Tree-class recognition for a finite stable connected translation quiver:
// computes translation orbits, the valued orbit graph, unfolds any diagram
// twist, and matches the resulting tree against A_n / D_n / E6 / E7 / E8.
// Returns nullopt when the orbit graph fits no Dynkin tree. Non-stable or
// disconnected input is refused.
std::optional<DynkinReport> dynkin_recognition(const TranslationQuiver& g);

// The component maps of the module category into the quiver of the morphism
// category: delta sends the A-orbit of an indecomposable non-projective M to
// the component containing (0 -> M), beta sends the B-orbit to the component
// of the projective cover (P -> M). Checks that orbit mates land in one
// component (indeed in one translation orbit) and that every component
// meeting such a vertex is hit.
struct DeltaBetaReport {
  std::vector<std::vector<Module>> a_orbits;  // indecomposable non-projectives, grouped
  std::vector<std::vector<Module>> b_orbits;
  std::vector<int> delta_component;  // component index per A-orbit
  std::vector<int> beta_component;   // component index per B-orbit
  int components = 0;                // components of the full quiver
  bool delta_well_defined = false;
  bool beta_well_defined = false;
  bool delta_surjective = false;
  bool beta_surjective = false;
  bool delta_same_translation_orbit = false;
  bool beta_same_translation_orbit = false;

  bool all_ok() const {
    return delta_well_defined && beta_well_defined && delta_surjective && beta_surjective &&
           delta_same_translation_orbit && beta_same_translation_orbit;
  }
};
DeltaBetaReport delta_beta_maps(const AlgebraPtr& alg, int dim_cap = 64, int count_cap = 512);

}  // namespace arcat
