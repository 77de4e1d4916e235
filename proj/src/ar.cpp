#include "arcat/ar.hpp"

#include <deque>
#include <map>

namespace arcat {

ModuleMap projective_cover(const Module& m) {
  QuotObject top = top_of(m);
  std::vector<Module> parts;
  std::vector<ModuleMap> gens;
  for (int v = 0; v < m.alg->quiver.num_vertices(); ++v) {
    if (top.quot.dim[v] == 0) continue;
    Module pv = projective_module(m.alg, v);
    for (int i = 0; i < top.quot.dim[v]; ++i) {
      Mat e(top.quot.dim[v], 1, m.alg->p);
      e.at(i, 0) = 1;
      auto x = solve(top.proj.comp[v], e);
      ARCAT_CHECK(x.has_value(), "top projection not onto");
      parts.push_back(pv);
      gens.push_back(map_from_projective_generator(pv, v, m, *x));
    }
  }
  SumObject sum = direct_sum(m.alg, parts);
  ModuleMap onto = zero_map(sum.sum, m);
  for (size_t k = 0; k < gens.size(); ++k) onto = map_add(onto, compose(gens[k], sum.proj[k]));
  ARCAT_CHECK(is_surjective_map(onto), "cover misses part of the module");
  // Minimality: the kernel must be superfluous, i.e. sit inside rad P.
  SubObject ker = kernel(onto);
  SubObject rad = radical_of(sum.sum);
  for (size_t v = 0; v < ker.incl.comp.size(); ++v)
    ARCAT_CHECK(solve(rad.incl.comp[v], ker.incl.comp[v]).has_value(),
                "cover kernel escapes the radical");
  return onto;
}

ModuleMap injective_envelope(const Module& m) { return dual(projective_cover(dual(m))); }

bool is_projective(const Module& m) { return is_injective_map(projective_cover(m)); }
bool is_injective(const Module& m) { return is_surjective_map(injective_envelope(m)); }

bool is_self_injective(const AlgebraPtr& alg) {
  for (int v = 0; v < alg->quiver.num_vertices(); ++v)
    if (!is_injective(projective_module(alg, v))) return false;
  return true;
}

Presentation minimal_presentation(const Module& m) {
  ModuleMap onto = projective_cover(m);
  SubObject k = kernel(onto);
  ModuleMap kcover = projective_cover(k.sub);
  return Presentation{compose(k.incl, kcover), onto};
}

Module transpose_of(const Module& m) {
  Presentation pr = minimal_presentation(m);
  return cokernel(star_map(pr.g)).quot;
}

Module tau_plus(const Module& m) { return dual(transpose_of(m)); }
Module tau_minus(const Module& m) { return transpose_of(dual(m)); }

Module omega(const Module& m, int n) {
  Module cur = strip_projective_summands(strip_injective_summands(m));
  for (; n > 0; --n) cur = strip_projective_summands(kernel(projective_cover(cur)).sub);
  for (; n < 0; ++n) cur = strip_injective_summands(cokernel(injective_envelope(cur)).quot);
  return cur;
}

// ---- Fitting decomposition -------------------------------------------------

static ModuleMap map_power(const ModuleMap& f, int n) {
  ModuleMap acc = identity_map(f.src);
  ModuleMap base = f;
  while (n > 0) {
    if (n & 1) acc = compose(acc, base);
    base = compose(base, base);
    n >>= 1;
  }
  return acc;
}

// Fitting: for phi in End(M), M = ker(phi^dim) + im(phi^dim). Splits strictly
// when phi is neither nilpotent nor invertible.
static bool try_split(const Module& m, const ModuleMap& phi, Module& a, Module& b) {
  ModuleMap ph = map_power(phi, m.total_dim());
  SubObject k = kernel(ph);
  int kd = k.sub.total_dim();
  if (kd == 0 || kd == m.total_dim()) return false;
  SubObject im = image(ph);
  ARCAT_CHECK(kd + im.sub.total_dim() == m.total_dim(), "stable kernel/image do not split");
  a = k.sub;
  b = im.sub;
  return true;
}

static ModuleMap combo(const std::vector<ModuleMap>& basis, const Module& m,
                       const std::vector<u32>& coeff) {
  ModuleMap f = zero_map(m, m);
  for (size_t i = 0; i < basis.size(); ++i) f = map_add(f, map_scale(basis[i], coeff[i]));
  return f;
}

std::vector<Module> decompose(const Module& m) {
  if (m.total_dim() == 0) return {};
  std::vector<ModuleMap> ends = hom_basis(m, m);
  int d = static_cast<int>(ends.size());
  u32 p = m.alg->p;
  Module a = m, b = m;
  auto recurse = [&]() {
    std::vector<Module> out = decompose(a);
    for (Module& part : decompose(b)) out.push_back(std::move(part));
    return out;
  };
  if (d > 1) {
    for (const ModuleMap& f : ends)
      if (try_split(m, f, a, b)) return recurse();
    for (const ModuleMap& f : ends)
      for (const ModuleMap& g : ends)
        if (try_split(m, compose(f, g), a, b)) return recurse();
    for (size_t i = 0; i < ends.size(); ++i)
      for (size_t j = i + 1; j < ends.size(); ++j)
        if (try_split(m, map_add(ends[i], ends[j]), a, b)) return recurse();

    long total = 1;
    bool enumerable = true;
    for (int i = 0; i < d && enumerable; ++i) {
      total *= p;
      enumerable = total <= (1L << 14);
    }
    if (enumerable) {
      // Exhaustive sweep doubles as an indecomposability certificate: every
      // endomorphism of an indecomposable is nilpotent or invertible.
      std::vector<u32> coeff(d, 0);
      while (true) {
        int i = 0;
        while (i < d && ++coeff[i] == p) coeff[i++] = 0;
        if (i == d) break;
        if (try_split(m, combo(ends, m, coeff), a, b)) return recurse();
      }
    } else {
      Rng rng(0);
      for (int t = 0; t < 200; ++t) {
        std::vector<u32> coeff(d);
        for (u32& c : coeff) c = rng.below(p);
        if (try_split(m, combo(ends, m, coeff), a, b)) return recurse();
      }
    }
  }
  return {m};
}

bool is_indecomposable(const Module& m) {
  return m.total_dim() > 0 && decompose(m).size() == 1;
}

static Module keep_summands(const Module& m, bool drop_proj, bool drop_inj) {
  std::vector<Module> kept;
  for (Module& part : decompose(m)) {
    if (drop_proj && is_projective(part)) continue;
    if (drop_inj && is_injective(part)) continue;
    kept.push_back(std::move(part));
  }
  return direct_sum(m.alg, kept).sum;
}

Module strip_projective_summands(const Module& m) { return keep_summands(m, true, false); }
Module strip_injective_summands(const Module& m) { return keep_summands(m, false, true); }

bool is_isomorphic(const Module& x, const Module& y) {
  if (x.dim != y.dim) return false;
  if (x.total_dim() == 0) return true;
  if (x == y) return true;
  std::vector<ModuleMap> basis = hom_basis(x, y);
  if (basis.empty()) return false;
  for (const ModuleMap& f : basis)
    if (is_iso(f)) return true;
  int d = static_cast<int>(basis.size());
  u32 p = x.alg->p;
  long total = 1;
  bool enumerable = true;
  for (int i = 0; i < d && enumerable; ++i) {
    total *= p;
    enumerable = total <= (1L << 14);
  }
  if (enumerable) {
    std::vector<u32> coeff(d, 0);
    while (true) {
      int i = 0;
      while (i < d && ++coeff[i] == p) coeff[i++] = 0;
      if (i == d) break;
      ModuleMap f = zero_map(x, y);
      for (int t = 0; t < d; ++t) f = map_add(f, map_scale(basis[t], coeff[t]));
      if (is_iso(f)) return true;
    }
    return false;  // exhaustive, hence exact
  }
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = i + 1; j < basis.size(); ++j)
      if (is_iso(map_add(basis[i], basis[j]))) return true;
  Rng rng(1);
  for (int t = 0; t < 64; ++t) {
    ModuleMap f = zero_map(x, y);
    for (const ModuleMap& b : basis) f = map_add(f, map_scale(b, rng.below(p)));
    if (is_iso(f)) return true;
  }
  // Beyond the enumerable range this is a (very reliable) one-sided test:
  // a false negative would need every sampled combination to be singular.
  return false;
}

std::vector<ModuleMap> end_radical_basis(const Module& m) {
  ARCAT_REQUIRE(m.total_dim() > 0, "radical of End(0) requested");
  std::vector<ModuleMap> ends = hom_basis(m, m);
  int d = static_cast<int>(ends.size());
  u32 p = m.alg->p;
  long total = 1;
  bool enumerable = true;
  for (int i = 0; i < d && enumerable; ++i) {
    total *= p;
    enumerable = total <= (1L << 18);
  }
  if (enumerable) {
    // Nilpotent elements, recorded by their coefficient vectors.
    std::vector<u32> coeff(d, 0);
    long count = 1;  // zero map is nilpotent
    Mat cols(d, 0, p);
    while (true) {
      int i = 0;
      while (i < d && ++coeff[i] == p) coeff[i++] = 0;
      if (i == d) break;
      ModuleMap f = combo(ends, m, coeff);
      if (is_zero(map_power(f, m.total_dim()))) {
        ++count;
        Mat c(d, 1, p);
        for (int t = 0; t < d; ++t) c.at(t, 0) = coeff[t];
        cols = hstack(cols, c);
      }
    }
    Mat basis = column_space_basis(cols);
    long expect = 1;
    for (int i = 0; i < basis.cols; ++i) expect *= p;
    ARCAT_CHECK(count == expect, "nilpotent endomorphisms do not form a subspace");
    std::vector<ModuleMap> out;
    for (int j = 0; j < basis.cols; ++j)
      out.push_back(map_from_coords(ends, take_columns(basis, {j}), m, m));
    return out;
  }
  // Too many elements to sweep. Callers only reach this with m
  // indecomposable, so End is local: the non-invertible elements are exactly
  // the radical, and each basis element has a unique scalar shift into it
  // when the residue field is the prime field. The shifted basis elements
  // then span the radical (together with 1 they span End, and 1 is a unit).
  Mat cols(d, 0, p);
  for (int i = 0; i < d; ++i) {
    int hits = 0;
    u32 lam = 0;
    for (u32 s = 0; s < p; ++s) {
      if (!is_iso(map_add(ends[i], map_scale(identity_map(m), (p - s) % p)))) {
        ++hits;
        lam = s;
      }
    }
    ARCAT_REQUIRE(hits == 1,
                  "End is not local with prime residue field; cannot span its radical");
    ModuleMap r = map_add(ends[i], map_scale(identity_map(m), (p - lam) % p));
    if (is_zero(r)) continue;
    ARCAT_CHECK(is_zero(map_power(r, m.total_dim())), "shifted endomorphism must be nilpotent");
    cols = hstack(cols, hom_coords(ends, r));
  }
  Mat basis = column_space_basis(cols);
  ARCAT_CHECK(basis.cols == d - 1, "radical of a local algebra has corank one");
  std::vector<ModuleMap> out;
  for (int j = 0; j < basis.cols; ++j)
    out.push_back(map_from_coords(ends, take_columns(basis, {j}), m, m));
  return out;
}

// ---- almost split sequences ------------------------------------------------

// Complement data for F^n modulo the column space of s: projection onto the
// quotient in complement coordinates, plus a section picking representatives.
struct QuotCoords {
  Mat proj;     // q x n
  Mat section;  // n x q
};

static QuotCoords quotient_coords(const Mat& s, int n, u32 p) {
  Mat c = column_space_basis(s);
  int r = c.cols;
  Rref rr = rref(hstack(c, Mat::identity(n, p)));
  std::vector<int> extra;
  for (int piv : rr.pivot_cols)
    if (piv >= r) extra.push_back(piv - r);
  ARCAT_CHECK(static_cast<int>(extra.size()) == n - r, "complement size mismatch");
  Mat t = c;
  for (int e : extra) {
    Mat unit(n, 1, p);
    unit.at(e, 0) = 1;
    t = hstack(t, unit);
  }
  auto tinv = inverse(t);
  ARCAT_CHECK(tinv.has_value(), "complement completion not invertible");
  Mat proj(n - r, n, p);
  for (int i = 0; i < n - r; ++i)
    for (int j = 0; j < n; ++j) proj.at(i, j) = tinv->at(r + i, j);
  Mat section(n, n - r, p);
  for (size_t i = 0; i < extra.size(); ++i) section.at(extra[i], static_cast<int>(i)) = 1;
  return QuotCoords{std::move(proj), std::move(section)};
}

AlmostSplitSeq ass_ending_at(const Module& c) {
  u32 p = c.alg->p;
  ARCAT_REQUIRE(!is_projective(c), "no almost split sequence ends at a projective");
  ARCAT_REQUIRE(is_indecomposable(c), "sequence end must be indecomposable");
  Module tc = tau_plus(c);
  ModuleMap pi = projective_cover(c);
  SubObject k = kernel(pi);

  // Ext^1(c, tc) = Hom(K, tc) / restriction of Hom(P0, tc).
  std::vector<ModuleMap> homK = hom_basis(k.sub, tc);
  int n = static_cast<int>(homK.size());
  ARCAT_CHECK(n > 0, "no maps from the cover kernel into the translate");
  std::vector<ModuleMap> homP = hom_basis(pi.src, tc);
  Mat s(n, static_cast<int>(homP.size()), p);
  for (size_t j = 0; j < homP.size(); ++j) {
    Mat col = hom_coords(homK, compose(homP[j], k.incl));
    for (int i = 0; i < n; ++i) s.at(i, static_cast<int>(j)) = col.at(i, 0);
  }
  QuotCoords ext = quotient_coords(s, n, p);
  int q = ext.proj.rows;
  ARCAT_CHECK(q > 0, "every extension splits; the end cannot be non-projective");

  // Right action of rad End(c) on Ext^1(c, tc), via lifts through the cover.
  std::vector<ModuleMap> radb = end_radical_basis(c);
  Mat stacked(0, q, p);
  for (const ModuleMap& r : radb) {
    auto fhat = lift_through_epi(compose(r, pi), pi);
    ARCAT_CHECK(fhat.has_value(), "endomorphism does not lift through the cover");
    ModuleMap ftilde = corestrict_to_sub(k, compose(*fhat, k.incl));
    Mat rt(n, n, p);
    for (int t = 0; t < n; ++t) {
      Mat col = hom_coords(homK, compose(homK[t], ftilde));
      for (int i = 0; i < n; ++i) rt.at(i, t) = col.at(i, 0);
    }
    stacked = vstack(stacked, ext.proj * rt * ext.section);
  }
  Mat soc = kernel_basis(stacked);
  ARCAT_CHECK(soc.cols > 0, "socle of the extension space vanished");
  Mat coord = ext.section * take_columns(soc, {0});
  ModuleMap phi = map_from_coords(homK, coord, k.sub, tc);

  // Pushout of K -(-incl)-> P0 along phi.
  SumObject mid = direct_sum(c.alg, {tc, pi.src});
  ModuleMap into =
      map_add(compose(mid.incl[0], phi), map_scale(compose(mid.incl[1], k.incl), p - 1));
  QuotObject e = cokernel(into);
  ModuleMap left = compose(e.proj, mid.incl[0]);
  ModuleMap right = factor_through_quotient(e, compose(pi, mid.proj[1]));

  ARCAT_CHECK(is_injective_map(left), "left end of the sequence not mono");
  ARCAT_CHECK(is_surjective_map(right), "right end of the sequence not epi");
  ARCAT_CHECK(exact_at(left, right), "sequence not exact in the middle");
  ARCAT_CHECK(!lift_through_epi(identity_map(c), right).has_value(), "sequence splits");
  return AlmostSplitSeq{std::move(left), std::move(right)};
}

AlmostSplitSeq ass_starting_at(const Module& m) {
  AlmostSplitSeq s = ass_ending_at(dual(m));
  return AlmostSplitSeq{dual(s.right), dual(s.left)};
}

bool is_right_almost_split(const AlmostSplitSeq& seq, const std::vector<Module>& catalog) {
  const Module& c = seq.right.dst;
  const Module& e = seq.right.src;
  u32 p = c.alg->p;
  if (lift_through_epi(identity_map(c), seq.right).has_value()) return false;
  for (const Module& y : catalog) {
    if (is_isomorphic(y, c)) {
      // Factoring exactly the non-isomorphisms: image of Hom(c, E) -> End(c)
      // must be rad End(c).
      std::vector<ModuleMap> be = hom_basis(c, e);
      std::vector<ModuleMap> bc = hom_basis(c, c);
      Mat img(static_cast<int>(bc.size()), static_cast<int>(be.size()), p);
      for (size_t j = 0; j < be.size(); ++j) {
        Mat col = hom_coords(bc, compose(seq.right, be[j]));
        for (int i = 0; i < img.rows; ++i) img.at(i, static_cast<int>(j)) = col.at(i, 0);
      }
      std::vector<ModuleMap> radb = end_radical_basis(c);
      Mat radm(static_cast<int>(bc.size()), static_cast<int>(radb.size()), p);
      for (size_t j = 0; j < radb.size(); ++j) {
        Mat col = hom_coords(bc, radb[j]);
        for (int i = 0; i < radm.rows; ++i) radm.at(i, static_cast<int>(j)) = col.at(i, 0);
      }
      if (rank(img) != rank(radm)) return false;
      if (rank(hstack(img, radm)) != rank(radm)) return false;
    } else {
      std::vector<ModuleMap> bc = hom_basis(y, c);
      if (bc.empty()) continue;
      std::vector<ModuleMap> be = hom_basis(y, e);
      Mat img(static_cast<int>(bc.size()), static_cast<int>(be.size()), p);
      for (size_t j = 0; j < be.size(); ++j) {
        Mat col = hom_coords(bc, compose(seq.right, be[j]));
        for (int i = 0; i < img.rows; ++i) img.at(i, static_cast<int>(j)) = col.at(i, 0);
      }
      if (rank(img) != static_cast<int>(bc.size())) return false;
    }
  }
  return true;
}

bool is_left_almost_split(const AlmostSplitSeq& seq, const std::vector<Module>& catalog) {
  AlmostSplitSeq d{dual(seq.right), dual(seq.left)};
  std::vector<Module> dcat;
  for (const Module& y : catalog) dcat.push_back(dual(y));
  return is_right_almost_split(d, dcat);
}

// ---- catalog and quiver ------------------------------------------------------

std::vector<Module> enumerate_indecomposables(const AlgebraPtr& alg, int dim_cap,
                                              int count_cap) {
  std::vector<Module> cat;
  std::deque<int> queue;
  auto add = [&](const Module& m) {
    if (m.total_dim() == 0) return;
    if (m.total_dim() > dim_cap)
      throw CapExceeded("summand dimension exceeds cap (possible infinite type)");
    for (const Module& x : cat)
      if (is_isomorphic(x, m)) return;
    cat.push_back(m);
    if (static_cast<int>(cat.size()) > count_cap)
      throw CapExceeded("indecomposable count exceeds cap (possible infinite type)");
    queue.push_back(static_cast<int>(cat.size()) - 1);
  };
  for (int v = 0; v < alg->quiver.num_vertices(); ++v) {
    add(projective_module(alg, v));
    add(injective_module(alg, v));
    add(simple_module(alg, v));
  }
  while (!queue.empty()) {
    Module m = cat[queue.front()];
    queue.pop_front();
    if (!is_projective(m)) {
      AlmostSplitSeq s = ass_ending_at(m);
      for (const Module& part : decompose(s.right.src)) add(part);
      add(tau_plus(m));
    }
    if (!is_injective(m)) add(tau_minus(m));
  }
  std::stable_sort(cat.begin(), cat.end(), [](const Module& x, const Module& y) {
    return x.total_dim() != y.total_dim() ? x.total_dim() < y.total_dim() : x.dim < y.dim;
  });
  return cat;
}

ArQuiver ar_quiver(const AlgebraPtr& alg, int dim_cap, int count_cap) {
  ArQuiver g;
  g.verts = enumerate_indecomposables(alg, dim_cap, count_cap);
  int n = static_cast<int>(g.verts.size());
  auto class_of = [&](const Module& m) {
    for (int i = 0; i < n; ++i)
      if (is_isomorphic(g.verts[i], m)) return i;
    ARCAT_CHECK(false, "module escaped the catalog");
    return -1;
  };
  g.tau.assign(n, -1);
  for (int i = 0; i < n; ++i) {
    g.proj.push_back(is_projective(g.verts[i]));
    g.inj.push_back(is_injective(g.verts[i]));
  }
  for (int i = 0; i < n; ++i) {
    std::map<int, int> mult;
    if (!g.proj[i]) {
      g.tau[i] = class_of(tau_plus(g.verts[i]));
      for (const Module& part : decompose(ass_ending_at(g.verts[i]).right.src))
        ++mult[class_of(part)];
    } else {
      for (const Module& part : decompose(radical_of(g.verts[i]).sub)) ++mult[class_of(part)];
    }
    for (const auto& [from, m] : mult) g.arrows.emplace_back(from, i, m);
  }
  // Mesh consistency: arrows x -> z and tau z -> x carry the same multiplicity.
  auto mult_of = [&](int a, int b) {
    for (const auto& [from, to, m] : g.arrows)
      if (from == a && to == b) return m;
    return 0;
  };
  for (const auto& [from, to, m] : g.arrows)
    if (!g.proj[to])
      ARCAT_CHECK(mult_of(g.tau[to], from) == m, "mesh multiplicities disagree");
  return g;
}

}  // namespace arcat
