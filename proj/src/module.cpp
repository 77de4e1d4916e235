#include "arcat/module.hpp"

#include <algorithm>
#include <numeric>

namespace arcat {

int Module::total_dim() const { return std::accumulate(dim.begin(), dim.end(), 0); }

Mat path_action(const Module& m, const Path& path) {
  Mat r = Mat::identity(m.dim[path.from], m.alg->p);
  for (int ai : path.arrows) r = m.act[ai] * r;
  return r;
}

Module make_module(AlgebraPtr alg, std::vector<int> dim, std::vector<Mat> act) {
  ARCAT_CHECK(alg != nullptr, "null algebra");
  const Quiver& q = alg->quiver;
  ARCAT_REQUIRE(static_cast<int>(dim.size()) == q.num_vertices(), "dim vector size mismatch");
  ARCAT_REQUIRE(static_cast<int>(act.size()) == q.num_arrows(), "arrow matrix count mismatch");
  for (int v = 0; v < q.num_vertices(); ++v) ARCAT_REQUIRE(dim[v] >= 0, "negative dimension");
  for (int a = 0; a < q.num_arrows(); ++a) {
    ARCAT_REQUIRE(act[a].p == alg->p, "arrow matrix modulus mismatch");
    ARCAT_REQUIRE(act[a].rows == dim[q.arrows[a].to] && act[a].cols == dim[q.arrows[a].from],
                  "arrow matrix shape mismatch at " + q.arrows[a].name);
  }
  Module m{std::move(alg), std::move(dim), std::move(act)};
  for (const Relation& rel : m.alg->relations) {
    Mat sum = Mat::zero(m.dim[rel[0].path.to], m.dim[rel[0].path.from], m.alg->p);
    for (const RelTerm& t : rel) sum = sum + path_action(m, t.path).scaled(t.coeff);
    ARCAT_REQUIRE(sum.is_zero(), "relation does not vanish on module");
  }
  return m;
}

Module zero_module(AlgebraPtr alg) {
  std::vector<int> dim(alg->quiver.num_vertices(), 0);
  std::vector<Mat> act;
  for (size_t a = 0; a < alg->quiver.arrows.size(); ++a) act.push_back(Mat::zero(0, 0, alg->p));
  return make_module(std::move(alg), std::move(dim), std::move(act));
}

Module simple_module(AlgebraPtr alg, int v) {
  std::vector<int> dim(alg->quiver.num_vertices(), 0);
  dim[v] = 1;
  std::vector<Mat> act;
  for (const Arrow& a : alg->quiver.arrows)
    act.push_back(Mat::zero(dim[a.to], dim[a.from], alg->p));
  return make_module(std::move(alg), std::move(dim), std::move(act));
}

std::vector<std::vector<int>> projective_path_layout(const AlgebraPtr& alg, int v) {
  std::vector<std::vector<int>> layout(alg->quiver.num_vertices());
  for (int i = 0; i < alg->dim(); ++i)
    if (alg->basis[i].from == v) layout[alg->basis[i].to].push_back(i);
  return layout;
}

Module projective_module(AlgebraPtr alg, int v) {
  // P(v) = Lambda e_v: basis paths leaving v, arrows act by left multiplication.
  auto layout = projective_path_layout(alg, v);
  const Quiver& q = alg->quiver;
  std::vector<int> dim(q.num_vertices());
  for (int w = 0; w < q.num_vertices(); ++w) dim[w] = static_cast<int>(layout[w].size());
  std::vector<Mat> act;
  for (int ai = 0; ai < q.num_arrows(); ++ai) {
    const Arrow& a = q.arrows[ai];
    Mat m(dim[a.to], dim[a.from], alg->p);
    for (int col = 0; col < dim[a.from]; ++col) {
      const Path& pth = alg->basis[layout[a.from][col]];
      Path ext = pth;
      ext.arrows.push_back(ai);
      ext.to = a.to;
      for (const auto& [bi, c] : alg->reduce_path(ext)) {
        auto it = std::lower_bound(layout[a.to].begin(), layout[a.to].end(), bi);
        ARCAT_CHECK(it != layout[a.to].end() && *it == bi,
                    "projective reduction left the source block");
        m.at(static_cast<int>(it - layout[a.to].begin()), col) = c;
      }
    }
    act.push_back(std::move(m));
  }
  return make_module(alg, std::move(dim), std::move(act));
}

Module injective_module(AlgebraPtr alg, int v) {
  return dual(projective_module(opposite(alg), v));
}

ModuleMap make_map(Module src, Module dst, std::vector<Mat> comp) {
  ARCAT_CHECK(src.alg.get() == dst.alg.get(), "maps need a common algebra");
  const Quiver& q = src.alg->quiver;
  ARCAT_REQUIRE(static_cast<int>(comp.size()) == q.num_vertices(), "component count mismatch");
  for (int v = 0; v < q.num_vertices(); ++v)
    ARCAT_REQUIRE(comp[v].rows == dst.dim[v] && comp[v].cols == src.dim[v] &&
                      comp[v].p == src.alg->p,
                  "component shape mismatch");
  ModuleMap f{std::move(src), std::move(dst), std::move(comp)};
  for (int ai = 0; ai < q.num_arrows(); ++ai) {
    const Arrow& a = q.arrows[ai];
    ARCAT_CHECK(f.dst.act[ai] * f.comp[a.from] == f.comp[a.to] * f.src.act[ai],
                "map does not intertwine at arrow " + a.name);
  }
  return f;
}

ModuleMap zero_map(Module src, Module dst) {
  std::vector<Mat> comp;
  for (size_t v = 0; v < src.dim.size(); ++v)
    comp.push_back(Mat::zero(dst.dim[v], src.dim[v], src.alg->p));
  return make_map(std::move(src), std::move(dst), std::move(comp));
}

ModuleMap identity_map(const Module& m) {
  std::vector<Mat> comp;
  for (size_t v = 0; v < m.dim.size(); ++v) comp.push_back(Mat::identity(m.dim[v], m.alg->p));
  return make_map(m, m, std::move(comp));
}

ModuleMap compose(const ModuleMap& second, const ModuleMap& first) {
  ARCAT_CHECK(first.dst == second.src, "composition endpoint mismatch");
  std::vector<Mat> comp;
  for (size_t v = 0; v < first.src.dim.size(); ++v)
    comp.push_back(second.comp[v] * first.comp[v]);
  return ModuleMap{first.src, second.dst, std::move(comp)};
}

ModuleMap map_add(const ModuleMap& f, const ModuleMap& g) {
  ARCAT_CHECK(f.src == g.src && f.dst == g.dst, "map addition endpoint mismatch");
  std::vector<Mat> comp;
  for (size_t v = 0; v < f.comp.size(); ++v) comp.push_back(f.comp[v] + g.comp[v]);
  return ModuleMap{f.src, f.dst, std::move(comp)};
}

ModuleMap map_scale(const ModuleMap& f, u32 c) {
  std::vector<Mat> comp;
  for (const Mat& m : f.comp) comp.push_back(m.scaled(c));
  return ModuleMap{f.src, f.dst, std::move(comp)};
}

bool is_zero(const ModuleMap& f) {
  return std::all_of(f.comp.begin(), f.comp.end(), [](const Mat& m) { return m.is_zero(); });
}

bool is_injective_map(const ModuleMap& f) {
  for (const Mat& m : f.comp)
    if (rank(m) != m.cols) return false;
  return true;
}

bool is_surjective_map(const ModuleMap& f) {
  for (const Mat& m : f.comp)
    if (rank(m) != m.rows) return false;
  return true;
}

bool is_iso(const ModuleMap& f) {
  for (size_t v = 0; v < f.comp.size(); ++v)
    if (f.src.dim[v] != f.dst.dim[v] || rank(f.comp[v]) != f.src.dim[v]) return false;
  return true;
}

std::optional<ModuleMap> inverse_of(const ModuleMap& f) {
  std::vector<Mat> comp;
  for (const Mat& m : f.comp) {
    auto inv = inverse(m);
    if (!inv) return std::nullopt;
    comp.push_back(std::move(*inv));
  }
  return make_map(f.dst, f.src, std::move(comp));
}

ModuleMap map_from_projective_generator(const Module& pv, int v, const Module& m, const Mat& x) {
  ARCAT_CHECK(x.rows == m.dim[v] && x.cols == 1, "generator image shape mismatch");
  auto layout = projective_path_layout(m.alg, v);
  std::vector<Mat> comp;
  for (size_t w = 0; w < m.dim.size(); ++w) {
    Mat c(m.dim[w], static_cast<int>(layout[w].size()), m.alg->p);
    for (size_t col = 0; col < layout[w].size(); ++col) {
      Mat img = path_action(m, m.alg->basis[layout[w][col]]) * x;
      for (int i = 0; i < m.dim[w]; ++i) c.at(i, static_cast<int>(col)) = img.at(i, 0);
    }
    comp.push_back(std::move(c));
  }
  return make_map(pv, m, std::move(comp));
}

// ---- hom spaces ----------------------------------------------------------

std::vector<ModuleMap> hom_basis(const Module& x, const Module& y) {
  ARCAT_CHECK(x.alg.get() == y.alg.get(), "hom needs a common algebra");
  const Quiver& q = x.alg->quiver;
  u32 p = x.alg->p;
  int nv = q.num_vertices();

  std::vector<int> offset(nv + 1, 0);
  for (int v = 0; v < nv; ++v) offset[v + 1] = offset[v] + y.dim[v] * x.dim[v];
  int nvars = offset[nv];
  auto vidx = [&](int v, int i, int j) { return offset[v] + i * x.dim[v] + j; };

  int nrows = 0;
  for (const Arrow& a : q.arrows) nrows += y.dim[a.to] * x.dim[a.from];
  Mat sys(nrows, nvars, p);
  int row = 0;
  for (int ai = 0; ai < q.num_arrows(); ++ai) {
    const Arrow& a = q.arrows[ai];
    // y_a h_v - h_w x_a = 0, entry (i, j): i < y.dim[w], j < x.dim[v].
    for (int i = 0; i < y.dim[a.to]; ++i)
      for (int j = 0; j < x.dim[a.from]; ++j) {
        for (int k = 0; k < y.dim[a.from]; ++k) {
          int c = vidx(a.from, k, j);
          sys.at(row, c) = (sys.at(row, c) + y.act[ai].at(i, k)) % p;
        }
        for (int l = 0; l < x.dim[a.to]; ++l) {
          int c = vidx(a.to, i, l);
          sys.at(row, c) = (sys.at(row, c) + fp_neg(x.act[ai].at(l, j), p)) % p;
        }
        ++row;
      }
  }
  Mat ker = kernel_basis(sys);
  std::vector<ModuleMap> basis;
  for (int b = 0; b < ker.cols; ++b) {
    std::vector<Mat> comp;
    for (int v = 0; v < nv; ++v) {
      Mat c(y.dim[v], x.dim[v], p);
      for (int i = 0; i < y.dim[v]; ++i)
        for (int j = 0; j < x.dim[v]; ++j) c.at(i, j) = ker.at(vidx(v, i, j), b);
      comp.push_back(std::move(c));
    }
    basis.push_back(make_map(x, y, std::move(comp)));
  }
  return basis;
}

int hom_dim(const Module& x, const Module& y) {
  return static_cast<int>(hom_basis(x, y).size());
}

static Mat vectorize_map(const ModuleMap& f) {
  Mat v(0, 1, f.src.alg->p);
  for (const Mat& m : f.comp) v = vstack(v, vec_of(m));
  return v;
}

Mat hom_coords(const std::vector<ModuleMap>& basis, const ModuleMap& f) {
  ARCAT_CHECK(!basis.empty(), "empty hom basis cannot express anything");
  Mat cols(vectorize_map(basis[0]).rows, static_cast<int>(basis.size()), f.src.alg->p);
  for (size_t b = 0; b < basis.size(); ++b) {
    Mat v = vectorize_map(basis[b]);
    for (int i = 0; i < v.rows; ++i) cols.at(i, static_cast<int>(b)) = v.at(i, 0);
  }
  return coords_in_basis(cols, vectorize_map(f));
}

ModuleMap map_from_coords(const std::vector<ModuleMap>& basis, const Mat& coords,
                          const Module& src, const Module& dst) {
  ModuleMap f = zero_map(src, dst);
  ARCAT_CHECK(static_cast<int>(basis.size()) == coords.rows && coords.cols == 1,
              "hom coordinate shape mismatch");
  for (size_t b = 0; b < basis.size(); ++b)
    f = map_add(f, map_scale(basis[b], coords.at(static_cast<int>(b), 0)));
  return f;
}

// ---- sub/quotient machinery ----------------------------------------------

SubObject submodule_from_spans(const Module& m, const std::vector<Mat>& spans) {
  const Quiver& q = m.alg->quiver;
  std::vector<Mat> basis;
  std::vector<int> dim;
  for (int v = 0; v < q.num_vertices(); ++v) {
    ARCAT_CHECK(spans[v].rows == m.dim[v], "span row mismatch");
    basis.push_back(column_space_basis(spans[v]));
    dim.push_back(basis.back().cols);
  }
  std::vector<Mat> act;
  for (int ai = 0; ai < q.num_arrows(); ++ai) {
    const Arrow& a = q.arrows[ai];
    act.push_back(coords_in_basis(basis[a.to], m.act[ai] * basis[a.from]));
  }
  Module sub = make_module(m.alg, std::move(dim), std::move(act));
  ModuleMap incl = make_map(sub, m, basis);
  return SubObject{std::move(sub), std::move(incl)};
}

SubObject kernel(const ModuleMap& f) {
  std::vector<Mat> spans;
  for (size_t v = 0; v < f.src.dim.size(); ++v) spans.push_back(kernel_basis(f.comp[v]));
  SubObject k = submodule_from_spans(f.src, spans);
  ARCAT_CHECK(is_zero(compose(f, k.incl)), "kernel inclusion not killed by map");
  return k;
}

QuotObject cokernel(const ModuleMap& f) {
  const Module& n = f.dst;
  u32 p = n.alg->p;
  std::vector<Mat> projs, sections;
  std::vector<int> dim;
  for (size_t v = 0; v < n.dim.size(); ++v) {
    Mat c = column_space_basis(f.comp[v]);
    int full = n.dim[v], r = c.cols;
    // Standard vectors completing im(f_v) to a basis, found by one elimination.
    Rref rr = rref(hstack(c, Mat::identity(full, p)));
    std::vector<int> extra;
    for (int piv : rr.pivot_cols)
      if (piv >= r) extra.push_back(piv - r);
    ARCAT_CHECK(static_cast<int>(extra.size()) == full - r, "complement size mismatch");
    Mat t = c;
    for (int e : extra) {
      Mat unit(full, 1, p);
      unit.at(e, 0) = 1;
      t = hstack(t, unit);
    }
    auto tinv = inverse(t);
    ARCAT_CHECK(tinv.has_value(), "complement completion not invertible");
    Mat proj(full - r, full, p);
    for (int i = 0; i < full - r; ++i)
      for (int j = 0; j < full; ++j) proj.at(i, j) = tinv->at(r + i, j);
    Mat section(full, full - r, p);
    for (size_t i = 0; i < extra.size(); ++i) section.at(extra[i], static_cast<int>(i)) = 1;
    projs.push_back(std::move(proj));
    sections.push_back(std::move(section));
    dim.push_back(full - r);
  }
  std::vector<Mat> act;
  for (int ai = 0; ai < n.alg->quiver.num_arrows(); ++ai) {
    const Arrow& a = n.alg->quiver.arrows[ai];
    act.push_back(projs[a.to] * n.act[ai] * sections[a.from]);
    // Well-definedness: the induced matrix must agree on all of N, not just the section.
    ARCAT_CHECK(act.back() * projs[a.from] == projs[a.to] * n.act[ai],
                "cokernel action not well defined");
  }
  Module quot = make_module(n.alg, std::move(dim), std::move(act));
  ModuleMap proj = make_map(n, quot, projs);
  ARCAT_CHECK(is_zero(compose(proj, f)), "cokernel projection does not kill image");
  return QuotObject{std::move(quot), std::move(proj)};
}

SubObject image(const ModuleMap& f) {
  std::vector<Mat> spans(f.comp.begin(), f.comp.end());
  return submodule_from_spans(f.dst, spans);
}

SubObject radical_of(const Module& m) {
  const Quiver& q = m.alg->quiver;
  std::vector<Mat> spans;
  for (size_t v = 0; v < m.dim.size(); ++v) spans.push_back(Mat::zero(m.dim[v], 0, m.alg->p));
  for (int ai = 0; ai < q.num_arrows(); ++ai)
    spans[q.arrows[ai].to] = hstack(spans[q.arrows[ai].to], m.act[ai]);
  return submodule_from_spans(m, spans);
}

SubObject socle_of(const Module& m) {
  const Quiver& q = m.alg->quiver;
  std::vector<Mat> spans;
  for (int v = 0; v < q.num_vertices(); ++v) {
    Mat stacked(0, m.dim[v], m.alg->p);
    for (int ai = 0; ai < q.num_arrows(); ++ai)
      if (q.arrows[ai].from == v) stacked = vstack(stacked, m.act[ai]);
    spans.push_back(kernel_basis(stacked));
  }
  return submodule_from_spans(m, spans);
}

QuotObject top_of(const Module& m) { return cokernel(radical_of(m).incl); }

ModuleMap factor_through_quotient(const QuotObject& q, const ModuleMap& h) {
  ARCAT_CHECK(h.src == q.proj.src, "factor: source mismatch");
  std::vector<Mat> comp;
  for (size_t v = 0; v < h.comp.size(); ++v) {
    // Solve g_v proj_v = h_v, i.e. proj_v^T g_v^T = h_v^T.
    auto gt = solve(q.proj.comp[v].transposed(), h.comp[v].transposed());
    ARCAT_CHECK(gt.has_value(), "map does not factor through quotient");
    comp.push_back(gt->transposed());
  }
  ModuleMap g = make_map(q.quot, h.dst, std::move(comp));
  ARCAT_CHECK(compose(g, q.proj) == h, "quotient factorization failed");
  return g;
}

ModuleMap corestrict_to_sub(const SubObject& s, const ModuleMap& h) {
  ARCAT_CHECK(h.dst == s.incl.dst, "corestrict: target mismatch");
  std::vector<Mat> comp;
  for (size_t v = 0; v < h.comp.size(); ++v) {
    auto g = solve(s.incl.comp[v], h.comp[v]);
    ARCAT_CHECK(g.has_value(), "map does not land in subobject");
    comp.push_back(std::move(*g));
  }
  ModuleMap g = make_map(h.src, s.sub, std::move(comp));
  ARCAT_CHECK(compose(s.incl, g) == h, "corestriction failed");
  return g;
}

// Search the hom space for psi with (post . psi) or (psi . pre) equal to f.
static std::optional<ModuleMap> solve_in_hom(const Module& src, const Module& dst,
                                             const ModuleMap* post, const ModuleMap* pre,
                                             const ModuleMap& f) {
  std::vector<ModuleMap> basis = hom_basis(src, dst);
  Mat target = vectorize_map(f);
  Mat cols(target.rows, static_cast<int>(basis.size()), f.src.alg->p);
  for (size_t b = 0; b < basis.size(); ++b) {
    ModuleMap probe = basis[b];
    if (post) probe = compose(*post, probe);
    if (pre) probe = compose(probe, *pre);
    Mat v = vectorize_map(probe);
    for (int i = 0; i < v.rows; ++i) cols.at(i, static_cast<int>(b)) = v.at(i, 0);
  }
  auto sol = solve(cols, target);
  if (!sol) return std::nullopt;
  ModuleMap psi = zero_map(src, dst);
  for (size_t b = 0; b < basis.size(); ++b)
    psi = map_add(psi, map_scale(basis[b], sol->at(static_cast<int>(b), 0)));
  return psi;
}

std::optional<ModuleMap> lift_through_epi(const ModuleMap& f, const ModuleMap& epi) {
  ARCAT_CHECK(f.dst == epi.dst, "lift: target mismatch");
  auto psi = solve_in_hom(f.src, epi.src, &epi, nullptr, f);
  if (psi) ARCAT_CHECK(compose(epi, *psi) == f, "lift verification failed");
  return psi;
}

std::optional<ModuleMap> extend_along_mono(const ModuleMap& f, const ModuleMap& mono) {
  ARCAT_CHECK(f.src == mono.src, "extend: source mismatch");
  auto psi = solve_in_hom(mono.dst, f.dst, nullptr, &mono, f);
  if (psi) ARCAT_CHECK(compose(*psi, mono) == f, "extension verification failed");
  return psi;
}

SumObject direct_sum(AlgebraPtr alg, const std::vector<Module>& parts) {
  const Quiver& q = alg->quiver;
  std::vector<int> dim(q.num_vertices(), 0);
  for (const Module& m : parts) {
    ARCAT_CHECK(m.alg.get() == alg.get(), "direct sum across algebras");
    for (int v = 0; v < q.num_vertices(); ++v) dim[v] += m.dim[v];
  }
  std::vector<Mat> act;
  for (int ai = 0; ai < q.num_arrows(); ++ai) {
    Mat m = Mat::zero(0, 0, alg->p);
    for (const Module& part : parts) m = block_diag(m, part.act[ai]);
    // block_diag of nothing: fix shape for empty part list
    if (parts.empty()) m = Mat::zero(dim[q.arrows[ai].to], dim[q.arrows[ai].from], alg->p);
    act.push_back(std::move(m));
  }
  Module sum = make_module(alg, dim, std::move(act));
  SumObject out{std::move(sum), {}, {}};
  std::vector<int> offset(q.num_vertices(), 0);
  for (const Module& part : parts) {
    std::vector<Mat> inc, prj;
    for (int v = 0; v < q.num_vertices(); ++v) {
      Mat i(out.sum.dim[v], part.dim[v], alg->p);
      Mat pr(part.dim[v], out.sum.dim[v], alg->p);
      for (int r = 0; r < part.dim[v]; ++r) {
        i.at(offset[v] + r, r) = 1;
        pr.at(r, offset[v] + r) = 1;
      }
      inc.push_back(std::move(i));
      prj.push_back(std::move(pr));
    }
    out.incl.push_back(make_map(part, out.sum, std::move(inc)));
    out.proj.push_back(make_map(out.sum, part, std::move(prj)));
    for (int v = 0; v < q.num_vertices(); ++v) offset[v] += part.dim[v];
  }
  return out;
}

ModuleMap direct_sum_map(const SumObject& srcsum, const SumObject& dstsum,
                         const std::vector<ModuleMap>& diag) {
  ARCAT_CHECK(srcsum.incl.size() == diag.size() && dstsum.incl.size() == diag.size(),
              "diagonal map count mismatch");
  ModuleMap f = zero_map(srcsum.sum, dstsum.sum);
  for (size_t i = 0; i < diag.size(); ++i)
    f = map_add(f, compose(dstsum.incl[i], compose(diag[i], srcsum.proj[i])));
  return f;
}

Module dual(const Module& m) {
  AlgebraPtr oalg = opposite(m.alg);
  std::vector<Mat> act;
  for (size_t ai = 0; ai < m.act.size(); ++ai) act.push_back(m.act[ai].transposed());
  return make_module(std::move(oalg), m.dim, std::move(act));
}

ModuleMap dual(const ModuleMap& f) {
  std::vector<Mat> comp;
  for (const Mat& c : f.comp) comp.push_back(c.transposed());
  return make_map(dual(f.dst), dual(f.src), std::move(comp));
}

bool exact_at(const ModuleMap& f, const ModuleMap& g) {
  ARCAT_CHECK(f.dst == g.src, "exactness at mismatched spot");
  if (!is_zero(compose(g, f))) return false;
  // With g.f = 0, im f = ker g iff the ranks fill the middle dimension.
  for (size_t v = 0; v < f.comp.size(); ++v)
    if (rank(f.comp[v]) + rank(g.comp[v]) != g.src.dim[v]) return false;
  return true;
}

std::string dim_vector_string(const Module& m) {
  std::string s = "(";
  for (size_t v = 0; v < m.dim.size(); ++v) {
    if (v) s += ",";
    s += std::to_string(m.dim[v]);
  }
  return s + ")";
}

}  // namespace arcat
