#pragma once

#include "arcat/module.hpp"

namespace arcat {

// Right multiplication by the arrow a: v -> w, as the module map
// P(w) -> P(v), q |-> q.a. Single building block for the arrow actions of
// the hom-into-projectives functor below.
ModuleMap right_mult_map(const AlgebraPtr& alg, int arrow);

// The contravariant functor M |-> Hom(M, Lambda) landing in modules over the
// opposite algebra: vertex u carries Hom(M, P(u)), arrows act by
// postcomposition with right multiplication. Deterministic hom bases make
// repeated calls reproducible matrix-for-matrix.
Module star_module(const Module& m);
// On maps: precomposition. Contravariant: star(g.f) = star(f).star(g).
ModuleMap star_map(const ModuleMap& f);

// Nakayama functor D(Hom(-, Lambda)) and its quasi-inverse Hom(D(-), Lambda).
// Sends projectives to injectives (and back).
Module nakayama(const Module& m);
ModuleMap nakayama(const ModuleMap& f);
Module nakayama_inverse(const Module& m);
ModuleMap nakayama_inverse(const ModuleMap& f);

}  // namespace arcat
