#include "arcat/translation_quiver.hpp"

#include <algorithm>
#include <set>

namespace arcat {

int TranslationQuiver::find(const MorphObject& x) const {
  for (size_t v = 0; v < verts.size(); ++v)
    if (is_isomorphic_h(verts[v].obj, x)) return int(v);
  return -1;
}

std::vector<int> TranslationQuiver::arrows_into(int v) const {
  std::vector<int> out;
  for (size_t e = 0; e < arrows.size(); ++e)
    if (arrows[e].to == v) out.push_back(int(e));
  return out;
}

std::vector<int> TranslationQuiver::arrows_out_of(int v) const {
  std::vector<int> out;
  for (size_t e = 0; e < arrows.size(); ++e)
    if (arrows[e].from == v) out.push_back(int(e));
  return out;
}

TranslationQuiver gamma_h(const AlgebraPtr& alg, int dim_cap, int count_cap) {
  // The knit dominates every caller, so remember it — including the cap
  // overruns of infinite-type inputs — per algebra and cap pair.
  struct Entry {
    TranslationQuiver g;
    std::string cap_error;
  };
  static std::map<std::tuple<const Algebra*, int, int>, Entry> cache;
  auto key = std::make_tuple(alg.get(), dim_cap, count_cap);
  if (auto it = cache.find(key); it != cache.end()) {
    if (!it->second.cap_error.empty()) throw CapExceeded(it->second.cap_error);
    return it->second.g;
  }

  const T2Bridge& br = shared_bridge(alg);
  ArQuiver q2;
  try {
    q2 = ar_quiver(br.t2, dim_cap, count_cap);
  } catch (const CapExceeded& ex) {
    cache.emplace(key, Entry{{}, ex.what()});
    throw;
  }

  TranslationQuiver g;
  g.alg = alg;
  g.tau = q2.tau;
  for (size_t v = 0; v < q2.verts.size(); ++v) {
    TqVertex tv;
    tv.obj = upsilon_inverse(br, q2.verts[v]);
    tv.name = morph_display_name(tv.obj);
    tv.label = morph_compact_label(tv.obj);
    tv.proj = q2.proj[v];
    tv.inj = q2.inj[v];
    // The equivalence must agree with the intrinsic classification.
    bool proj_native = is_projective_h(tv.obj);
    ARCAT_CHECK(tv.proj == proj_native, "projectivity mismatch across the equivalence at " + tv.name);
    bool inj_native = is_injective_h(tv.obj);
    ARCAT_CHECK(tv.inj == inj_native, "injectivity mismatch across the equivalence at " + tv.name);
    g.verts.push_back(std::move(tv));
  }

  for (auto [from, to, mult] : q2.arrows) {
    TqArrow a{from, to, mult, mult};
    // The mesh partner's multiplicity is the second valuation component; the
    // knitting engine already certified it equals the first where a mesh
    // constrains it, so only genuinely boundary arrows fall back to val_a.
    if (g.tau[to] != -1) {
      for (auto [f2, t2, m2] : q2.arrows)
        if (f2 == g.tau[to] && t2 == from) a.val_b = m2;
    }
    g.arrows.push_back(a);
  }

  for (size_t v = 0; v < g.verts.size(); ++v) {
    ARCAT_CHECK((g.tau[v] == -1) == g.verts[v].proj,
                "translation must be defined exactly off the projectives, violated at " + g.verts[v].name);
    if (g.tau[v] == -1) continue;
    MorphObject native = tau_h(g.verts[v].obj, +1);
    ARCAT_CHECK(is_isomorphic_h(native, g.verts[g.tau[v]].obj),
                "translate disagreement at " + g.verts[v].name + ": knitting says " +
                    g.verts[g.tau[v]].name + ", direct computation says " + morph_display_name(native));
  }
  return g;
}

TranslationQuiver stable_quiver(const TranslationQuiver& g) {
  std::vector<int> keep(g.verts.size(), -1);
  TranslationQuiver s;
  s.alg = g.alg;
  for (size_t v = 0; v < g.verts.size(); ++v) {
    if (g.verts[v].proj || g.verts[v].inj) continue;
    keep[v] = int(s.verts.size());
    s.verts.push_back(g.verts[v]);
  }
  for (const TqArrow& a : g.arrows)
    if (keep[a.from] != -1 && keep[a.to] != -1)
      s.arrows.push_back({keep[a.from], keep[a.to], a.val_a, a.val_b});
  for (size_t v = 0; v < g.verts.size(); ++v) {
    if (keep[v] == -1) continue;
    int t = g.tau[v];
    s.tau.push_back(t != -1 && keep[t] != -1 ? keep[t] : -1);
  }
  return s;
}

bool stability_check(const TranslationQuiver& g) {
  std::vector<int> hits(g.verts.size(), 0);
  for (size_t v = 0; v < g.verts.size(); ++v) {
    if (g.tau[v] == -1) return false;
    ++hits[g.tau[v]];
  }
  // Total and injective on a finite set: a permutation, so every power of
  // the translation and of its inverse is defined everywhere.
  for (int h : hits)
    if (h != 1) return false;
  return true;
}

bool connectedness_check(const TranslationQuiver& g) {
  if (g.verts.empty()) return true;
  std::vector<char> seen(g.verts.size(), 0);
  std::vector<int> stack = {0};
  seen[0] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (const TqArrow& a : g.arrows) {
      int w = a.from == v ? a.to : a.to == v ? a.from : -1;
      if (w != -1 && !seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

bool mesh_complete(const TranslationQuiver& g) {
  for (size_t v = 0; v < g.verts.size(); ++v) {
    if (g.tau[v] == -1) continue;
    std::multiset<std::pair<int, int>> in, out;
    for (const TqArrow& a : g.arrows) {
      if (a.to == int(v)) in.insert({a.from, a.val_a});
      if (a.from == g.tau[v]) out.insert({a.to, a.val_a});
    }
    if (in != out) return false;
  }
  return true;
}

std::string to_dot(const TranslationQuiver& g) {
  std::string dot = "digraph ar {\n  rankdir=LR;\n  node [fontname=\"Helvetica\"];\n";
  for (size_t v = 0; v < g.verts.size(); ++v) {
    const TqVertex& t = g.verts[v];
    std::string shape = t.proj && t.inj ? "box, peripheries=2"
                        : t.proj        ? "box"
                        : t.inj         ? "diamond"
                                        : "ellipse";
    dot += "  v" + std::to_string(v) + " [label=\"" + t.label + "\\n" +
           dim_vector_string(t.obj.a()) + "->" + dim_vector_string(t.obj.b()) + "\", shape=" +
           shape + "];\n";
  }
  for (const TqArrow& a : g.arrows) {
    dot += "  v" + std::to_string(a.from) + " -> v" + std::to_string(a.to);
    if (a.val_a != 1 || a.val_b != 1)
      dot += " [label=\"(" + std::to_string(a.val_a) + "," + std::to_string(a.val_b) + ")\"]";
    dot += ";\n";
  }
  for (size_t v = 0; v < g.verts.size(); ++v)
    if (g.tau[v] != -1)
      dot += "  v" + std::to_string(v) + " -> v" + std::to_string(g.tau[v]) +
             " [style=dotted, color=gray, constraint=false];\n";
  return dot + "}\n";
}

}  // namespace arcat
