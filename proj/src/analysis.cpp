#include "arcat/analysis.hpp"

#include <algorithm>
#include <cstdlib>

namespace arcat {

namespace {

// One application of A = tau nu tau^2 (dir > 0) or its inverse
// tau^{-2} nu^{-1} tau^{-1} (dir < 0).
Module a_step(const Module& c, int dir) {
  if (dir > 0) return tau_plus(nakayama(tau_plus(tau_plus(c))));
  return tau_minus(tau_minus(nakayama_inverse(tau_minus(c))));
}

// One application of B = tau Omega^{-1} tau or its inverse tau^{-1} Omega tau^{-1}.
Module b_step(const Module& c, int dir) {
  if (dir > 0) return tau_plus(omega(tau_plus(c), -1));
  return tau_minus(omega(tau_minus(c), +1));
}

Module iterate_step(Module c, int i, Module (*step)(const Module&, int)) {
  int dir = i >= 0 ? +1 : -1;
  for (int k = 0; k < std::abs(i); ++k) c = step(c, dir);
  return c;
}

// j = 4m + k resp. 2m + k with 0 <= k < q and m of either sign.
std::pair<int, int> floor_divmod(int j, int q) {
  int m = j / q, k = j % q;
  if (k < 0) {
    k += q;
    m -= 1;
  }
  return {m, k};
}

// Case table for the orbit of (0 -> C): the j-th translate is
//   k=0: (0 -> A^m C)        k=1: (tau A^m C = tau A^m C)_1
//   k=2: (tau^2 A^m C -> 0)  k=3: the Nakayama twist of the minimal
//                                 presentation of tau^2 A^m C
MorphObject t1_table(const Module& c, int j) {
  auto [m, k] = floor_divmod(j, 4);
  Module cm = iterate_step(c, m, a_step);
  switch (k) {
    case 0: return morph_from_zero(cm);
    case 1: return morph_identity(tau_plus(cm));
    case 2: return morph_to_zero(tau_plus(tau_plus(cm)));
    default: {
      Presentation pr = minimal_presentation(tau_plus(tau_plus(cm)));
      return make_morph(nakayama(pr.g));
    }
  }
}

// Case table for the orbit of the projective cover (P -> C): the j-th
// translate alternates between the cover of B^m C and the envelope of
// tau B^m C.
MorphObject t3_table(const Module& c, int j) {
  auto [m, k] = floor_divmod(j, 2);
  Module cm = iterate_step(c, m, b_step);
  if (k == 0) return make_morph(projective_cover(cm));
  return make_morph(injective_envelope(tau_plus(cm)));
}

void require_base_module(const Module& c, const char* family) {
  ARCAT_REQUIRE(!c.is_zero_module(), std::string(family) + " needs a nonzero base module");
  ARCAT_REQUIRE(is_indecomposable(c), std::string(family) + " needs an indecomposable base module");
  ARCAT_REQUIRE(!is_projective(c), std::string(family) + " needs a non-projective base module");
}

}  // namespace

OrbitFamily orbit_family_from_name(const std::string& name) {
  if (name == "type1-0C") return OrbitFamily::T1FromZero;
  if (name == "type1-C1C") return OrbitFamily::T1Identity;
  if (name == "type1-C0") return OrbitFamily::T1ToZero;
  if (name == "type2-PQ") return OrbitFamily::T2ProjLegs;
  if (name == "type3-cover") return OrbitFamily::T3Cover;
  if (name == "type4-envelope") return OrbitFamily::T4Envelope;
  throw ParseError("unknown orbit family: " + name);
}

std::string orbit_family_name(OrbitFamily fam) {
  switch (fam) {
    case OrbitFamily::T1FromZero: return "type1-0C";
    case OrbitFamily::T1Identity: return "type1-C1C";
    case OrbitFamily::T1ToZero: return "type1-C0";
    case OrbitFamily::T2ProjLegs: return "type2-PQ";
    case OrbitFamily::T3Cover: return "type3-cover";
    default: return "type4-envelope";
  }
}

MorphObject orbit_closed_form(const MorphObject& x, OrbitFamily fam, int i) {
  ARCAT_REQUIRE(is_self_injective(x.alg()), "closed-form orbits need a self-injective algebra");
  switch (fam) {
    case OrbitFamily::T1FromZero: {
      ARCAT_REQUIRE(x.a().is_zero_module(), "type1-0C needs shape (0 -> C)");
      require_base_module(x.b(), "type1-0C");
      return t1_table(x.b(), i);
    }
    case OrbitFamily::T1Identity: {
      ARCAT_REQUIRE(!x.a().is_zero_module() && is_iso(x.f), "type1-C1C needs shape (C = C)_1");
      require_base_module(x.a(), "type1-C1C");
      // (C = C)_1 is the translate of (0 -> tau^{-1} C), so shift the table.
      return t1_table(tau_minus(x.a()), i + 1);
    }
    case OrbitFamily::T1ToZero: {
      ARCAT_REQUIRE(x.b().is_zero_module(), "type1-C0 needs shape (C -> 0)");
      require_base_module(x.a(), "type1-C0");
      return t1_table(tau_minus(tau_minus(x.a())), i + 2);
    }
    case OrbitFamily::T2ProjLegs: {
      ARCAT_REQUIRE(is_projective(x.a()) && is_projective(x.b()),
                    "type2-PQ needs projective legs");
      ARCAT_REQUIRE(is_indecomposable_h(x), "type2-PQ needs an indecomposable object");
      ARCAT_REQUIRE(!is_projective_h(x) && !is_injective_h(x),
                    "type2-PQ excludes projective and injective objects");
      // The translate of (P -> Q) is (0 -> tau coker), so x itself is the
      // (-1)-st entry of the table for that orbit.
      Module c = tau_plus(cokernel(x.f).quot);
      ARCAT_CHECK(!c.is_zero_module() && is_indecomposable(c),
                  "type2-PQ cokernel must translate to an indecomposable");
      return t1_table(c, i - 1);
    }
    case OrbitFamily::T3Cover: {
      require_base_module(x.b(), "type3-cover");
      ARCAT_REQUIRE(is_isomorphic_h(x, make_morph(projective_cover(x.b()))),
                    "type3-cover needs the projective cover of its target");
      return t3_table(x.b(), i);
    }
    default: {  // T4Envelope
      require_base_module(x.a(), "type4-envelope");
      ARCAT_REQUIRE(is_isomorphic_h(x, make_morph(injective_envelope(x.a()))),
                    "type4-envelope needs the injective envelope of its source");
      // (C -> I) is the translate of the cover of tau^{-1} C.
      return t3_table(tau_minus(x.a()), i + 1);
    }
  }
}

std::optional<int> periodicity(const MorphObject& x, int bound) {
  ARCAT_REQUIRE(!is_projective_h(x), "periodicity needs a translate: the object is projective");
  MorphObject y = x;
  for (int m = 1; m <= bound; ++m) {
    y = tau_h(y, +1);
    if (y.is_zero_object()) return std::nullopt;  // fell off the stable part
    if (is_isomorphic_h(y, x)) return m;
  }
  return std::nullopt;
}

OrbitRecord orbit_record(const MorphObject& x, int lo, int hi, int period_bound) {
  ARCAT_REQUIRE(lo <= hi, "iterate range must be nonempty");
  OrbitRecord r{x, {}, std::nullopt};
  if (lo <= 0 && 0 <= hi) r.iterates[0] = x;
  MorphObject y = x;
  for (int i = 1; i <= hi; ++i) {
    y = tau_h(y, +1);
    if (i >= lo) r.iterates[i] = y;
  }
  y = x;
  for (int i = -1; i >= lo; --i) {
    y = tau_h(y, -1);
    if (i <= hi) r.iterates[i] = y;
  }
  if (!x.is_zero_object() && !is_projective_h(x)) r.period = periodicity(x, period_bound);
  return r;
}

Module stable_functor(const Module& m, StableFunctor which, int i, bool* stripped) {
  ARCAT_REQUIRE(is_self_injective(m.alg), "stable functors need a self-injective algebra");
  Module c = strip_projective_summands(m);
  if (stripped) *stripped = c.total_dim() != m.total_dim();
  return iterate_step(c, i, which == StableFunctor::A ? a_step : b_step);
}

bool stable_iso(const Module& x, const Module& y) {
  return is_isomorphic(strip_projective_summands(x), strip_projective_summands(y));
}

std::string dynkin_name(const DynkinType& t) { return std::string(1, t.cls) + std::to_string(t.n); }

namespace {

// Shape of a finite simple connected tree against the simply laced list.
std::optional<DynkinType> classify_tree(int n, const std::vector<std::pair<int, int>>& edges) {
  if (int(edges.size()) != n - 1) return std::nullopt;  // connected input, so a tree iff n-1 edges
  std::vector<std::vector<int>> adj(n);
  for (auto [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<int> branch;
  for (int v = 0; v < n; ++v) {
    if (int(adj[v].size()) >= 4) return std::nullopt;
    if (int(adj[v].size()) == 3) branch.push_back(v);
  }
  if (branch.size() > 1) return std::nullopt;
  if (branch.empty()) return DynkinType{'A', n};
  std::vector<int> arms;
  for (int start : adj[branch[0]]) {
    int len = 1, prev = branch[0], cur = start;
    while (int(adj[cur].size()) == 2) {
      int next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
      prev = cur;
      cur = next;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1) return DynkinType{'D', n};
  if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) return DynkinType{'E', n};
  return std::nullopt;
}

}  // namespace

std::optional<DynkinReport> dynkin_recognition(const TranslationQuiver& g) {
  ARCAT_REQUIRE(!g.verts.empty(), "tree-class recognition needs a nonempty quiver");
  ARCAT_REQUIRE(stability_check(g), "tree-class recognition needs a stable quiver");
  ARCAT_REQUIRE(connectedness_check(g), "tree-class recognition needs a connected quiver");

  int nv = int(g.verts.size());
  std::vector<int> ov(nv, -1);
  std::vector<std::vector<int>> orbits;
  for (int v = 0; v < nv; ++v) {
    if (ov[v] != -1) continue;
    std::vector<int> orbit;
    for (int w = v; ov[w] == -1; w = g.tau[w]) {
      ov[w] = int(orbits.size());
      orbit.push_back(w);
    }
    orbits.push_back(orbit);
  }
  int no = int(orbits.size());

  // Arrow counts from a vertex into each orbit are constant along its own
  // orbit (the translation matches meshes up); certify rather than assume.
  std::vector<std::vector<int>> d(no, std::vector<int>(no, 0));
  for (int o = 0; o < no; ++o) {
    for (size_t idx = 0; idx < orbits[o].size(); ++idx) {
      std::vector<int> cnt(no, 0);
      for (const TqArrow& a : g.arrows)
        if (a.from == orbits[o][idx]) cnt[ov[a.to]] += a.val_a;
      if (idx == 0)
        d[o] = cnt;
      else
        ARCAT_CHECK(cnt == d[o], "arrow counts must be constant along a translation orbit");
    }
  }

  OrbitGraph og;
  og.orbits = orbits;
  for (int o = 0; o < no; ++o) og.self_loops = og.self_loops || d[o][o] > 0;
  for (int o1 = 0; o1 < no; ++o1)
    for (int o2 = o1 + 1; o2 < no; ++o2)
      if (d[o1][o2] > 0 || d[o2][o1] > 0) og.edges.push_back({o1, o2, d[o1][o2], d[o2][o1]});

  DynkinReport rep;
  rep.graph = og;

  bool simply_valued = std::all_of(og.edges.begin(), og.edges.end(),
                                   [](const OrbitGraph::Edge& e) { return e.val12 == 1 && e.val21 == 1; });
  if (simply_valued) {
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : og.edges) edges.push_back({e.o1, e.o2});
    auto type = classify_tree(no, edges);
    if (!type) return std::nullopt;
    rep.type = *type;
    rep.folded = false;
    rep.per_tree_vertex = nv % no == 0 ? nv / no : 0;
    return rep;
  }

  // A twisted quotient folds the tree by a diagram symmetry: folded orbits
  // are r times longer than fixed ones (r = 2, or 3 for the triple fold) and
  // the valuation toward a folded orbit counts its fiber. Undo the fold and
  // classify the unfolded tree.
  int k = orbits[0].size();
  for (const auto& o : orbits) k = std::min(k, int(o.size()));
  std::vector<int> fiber(no);
  int rmax = 1;
  for (int o = 0; o < no; ++o) {
    int s = int(orbits[o].size());
    if (s % k != 0) return std::nullopt;
    fiber[o] = s / k;
    if (fiber[o] < 1 || fiber[o] > 3) return std::nullopt;
    rmax = std::max(rmax, fiber[o]);
  }
  if (rmax == 1) return std::nullopt;  // valued edges but nothing to unfold
  for (int f : fiber)
    if (f != 1 && f != rmax) return std::nullopt;  // one symmetry order only

  std::vector<int> base(no, 0);
  int tree_n = 0;
  for (int o = 0; o < no; ++o) {
    base[o] = tree_n;
    tree_n += fiber[o];
  }
  std::vector<std::pair<int, int>> tree_edges;
  for (const auto& e : og.edges) {
    // Each tree edge over the pair descends from the symmetry orbit of one
    // edge, so the count must come out equal from both sides.
    if (e.val12 * fiber[e.o1] != e.val21 * fiber[e.o2]) return std::nullopt;
    int over = e.val12 * fiber[e.o1];
    if (over != std::max(fiber[e.o1], fiber[e.o2])) return std::nullopt;
    if (fiber[e.o1] == fiber[e.o2]) {
      for (int c = 0; c < fiber[e.o1]; ++c) tree_edges.push_back({base[e.o1] + c, base[e.o2] + c});
    } else {
      int fixed = fiber[e.o1] == 1 ? e.o1 : e.o2;
      int folded = fixed == e.o1 ? e.o2 : e.o1;
      for (int c = 0; c < fiber[folded]; ++c) tree_edges.push_back({base[fixed], base[folded] + c});
    }
  }
  auto type = classify_tree(tree_n, tree_edges);
  if (!type) return std::nullopt;
  rep.type = *type;
  rep.folded = true;
  rep.per_tree_vertex = nv % tree_n == 0 ? nv / tree_n : 0;
  return rep;
}

DeltaBetaReport delta_beta_maps(const AlgebraPtr& alg, int dim_cap, int count_cap) {
  ARCAT_REQUIRE(is_self_injective(alg), "the component maps need a self-injective algebra");
  TranslationQuiver g = gamma_h(alg, dim_cap, count_cap);

  DeltaBetaReport rep;
  std::vector<int> comp(g.verts.size(), -1);
  for (size_t v = 0; v < g.verts.size(); ++v) {
    if (comp[v] != -1) continue;
    std::vector<int> stack = {int(v)};
    comp[v] = rep.components;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (const TqArrow& a : g.arrows) {
        int w = a.from == u ? a.to : a.to == u ? a.from : -1;
        if (w != -1 && comp[w] == -1) {
          comp[w] = rep.components;
          stack.push_back(w);
        }
      }
    }
    ++rep.components;
  }

  std::vector<Module> nonproj;
  for (const Module& m : enumerate_indecomposables(alg, dim_cap, count_cap))
    if (!is_projective(m)) nonproj.push_back(m);

  auto orbit_partition = [&](Module (*step)(const Module&, int)) {
    int n = int(nonproj.size());
    std::vector<int> succ(n, -1);
    for (int i = 0; i < n; ++i) {
      Module next = step(nonproj[i], +1);
      for (int j = 0; j < n; ++j)
        if (is_isomorphic(next, nonproj[j])) {
          succ[i] = j;
          break;
        }
      ARCAT_CHECK(succ[i] != -1, "a stable functor step left the catalog");
    }
    std::vector<std::vector<Module>> out;
    std::vector<char> seen(n, 0);
    for (int i = 0; i < n; ++i) {
      if (seen[i]) continue;
      std::vector<Module> orbit;
      for (int j = i; !seen[j]; j = succ[j]) {
        seen[j] = 1;
        orbit.push_back(nonproj[j]);
      }
      out.push_back(orbit);
    }
    return out;
  };
  rep.a_orbits = orbit_partition(a_step);
  rep.b_orbits = orbit_partition(b_step);

  // The translation orbit of the quiver vertex v, as a set of vertex ids.
  auto tau_orbit_of = [&](int v) {
    std::vector<char> in(g.verts.size(), 0);
    for (int w = v; w != -1 && !in[w]; w = g.tau[w]) in[w] = 1;
    bool grew = true;  // close up backwards: u joins whenever tau(u) is in
    while (grew) {
      grew = false;
      for (size_t u = 0; u < g.verts.size(); ++u)
        if (!in[u] && g.tau[u] != -1 && in[g.tau[u]]) {
          in[u] = 1;
          grew = true;
        }
    }
    return in;
  };

  auto place = [&](const std::vector<std::vector<Module>>& orbits,
                   MorphObject (*display)(const Module&), std::vector<int>& components,
                   bool& well_defined, bool& same_tau_orbit) {
    well_defined = true;
    same_tau_orbit = true;
    for (const auto& orbit : orbits) {
      int c = -1;
      std::vector<char> in;
      for (size_t i = 0; i < orbit.size(); ++i) {
        int v = g.find(display(orbit[i]));
        ARCAT_CHECK(v != -1, "orbit member's vertex missing from the quiver");
        if (i == 0) {
          c = comp[v];
          in = tau_orbit_of(v);
        } else {
          well_defined = well_defined && comp[v] == c;
          same_tau_orbit = same_tau_orbit && in[v];
        }
      }
      components.push_back(c);
    }
  };

  place(
      rep.a_orbits, +[](const Module& m) { return morph_from_zero(m); }, rep.delta_component,
      rep.delta_well_defined, rep.delta_same_translation_orbit);
  place(
      rep.b_orbits, +[](const Module& m) { return make_morph(projective_cover(m)); },
      rep.beta_component, rep.beta_well_defined, rep.beta_same_translation_orbit);

  // Surjectivity onto the components that contain a vertex of the matching
  // shape (immediate from the construction, recorded for the report).
  auto surjective = [&](const std::vector<int>& hit, bool covers) {
    std::vector<char> is_hit(rep.components, 0);
    for (int c : hit) is_hit[c] = 1;
    for (size_t v = 0; v < g.verts.size(); ++v) {
      const MorphObject& x = g.verts[v].obj;
      if (x.b().is_zero_module() || is_projective(x.b()) || !is_indecomposable(x.b())) continue;
      bool shaped = covers ? !x.a().is_zero_module() &&
                                 is_isomorphic_h(x, make_morph(projective_cover(x.b())))
                           : x.a().is_zero_module();
      if (shaped && !is_hit[comp[v]]) return false;
    }
    return true;
  };
  rep.delta_surjective = surjective(rep.delta_component, false);
  rep.beta_surjective = surjective(rep.beta_component, true);
  return rep;
}

}  // namespace arcat
