#include "arcat/functors.hpp"

namespace arcat {

ModuleMap right_mult_map(const AlgebraPtr& alg, int arrow) {
  const Arrow& a = alg->quiver.arrows[arrow];
  Module pw = projective_module(alg, a.to);
  Module pv = projective_module(alg, a.from);
  // Image of e_w is the length-one path a, a basis element of P(v) at w.
  int gi = alg->basis_index_of(Path{a.from, a.to, {arrow}});
  ARCAT_CHECK(gi >= 0, "length-one path missing from basis");
  auto layout = projective_path_layout(alg, a.from);
  Mat x(pv.dim[a.to], 1, alg->p);
  for (size_t i = 0; i < layout[a.to].size(); ++i)
    if (layout[a.to][i] == gi) x.at(static_cast<int>(i), 0) = 1;
  return map_from_projective_generator(pw, a.to, pv, x);
}

// Shared scaffolding: hom bases into every P(u), recomputed deterministically.
static std::vector<std::vector<ModuleMap>> star_bases(const Module& m) {
  std::vector<std::vector<ModuleMap>> bases;
  for (int u = 0; u < m.alg->quiver.num_vertices(); ++u)
    bases.push_back(hom_basis(m, projective_module(m.alg, u)));
  return bases;
}

Module star_module(const Module& m) {
  AlgebraPtr oalg = opposite(m.alg);
  const Quiver& q = m.alg->quiver;
  auto bases = star_bases(m);
  std::vector<int> dim;
  for (int u = 0; u < q.num_vertices(); ++u) dim.push_back(static_cast<int>(bases[u].size()));
  std::vector<Mat> act;
  for (int ai = 0; ai < q.num_arrows(); ++ai) {
    const Arrow& a = q.arrows[ai];  // opposite arrow ai runs a.to -> a.from
    Mat mat(dim[a.from], dim[a.to], m.alg->p);
    ModuleMap rho = right_mult_map(m.alg, ai);
    for (int j = 0; j < dim[a.to]; ++j) {
      ModuleMap composite = compose(rho, bases[a.to][j]);
      if (dim[a.from] == 0) {
        ARCAT_CHECK(is_zero(composite), "nonzero hom lands outside empty hom space");
        continue;
      }
      Mat c = hom_coords(bases[a.from], composite);
      for (int i = 0; i < dim[a.from]; ++i) mat.at(i, j) = c.at(i, 0);
    }
    act.push_back(std::move(mat));
  }
  return make_module(std::move(oalg), std::move(dim), std::move(act));
}

ModuleMap star_map(const ModuleMap& f) {
  Module ssrc = star_module(f.dst);
  Module sdst = star_module(f.src);
  auto bsrc = star_bases(f.dst);
  auto bdst = star_bases(f.src);
  std::vector<Mat> comp;
  for (size_t u = 0; u < ssrc.dim.size(); ++u) {
    Mat c(sdst.dim[u], ssrc.dim[u], f.src.alg->p);
    for (int j = 0; j < ssrc.dim[u]; ++j) {
      ModuleMap composite = compose(bsrc[u][j], f);
      if (sdst.dim[u] == 0) {
        ARCAT_CHECK(is_zero(composite), "nonzero hom lands outside empty hom space");
        continue;
      }
      Mat coords = hom_coords(bdst[u], composite);
      for (int i = 0; i < sdst.dim[u]; ++i) c.at(i, j) = coords.at(i, 0);
    }
    comp.push_back(std::move(c));
  }
  return make_map(std::move(ssrc), std::move(sdst), std::move(comp));
}

Module nakayama(const Module& m) { return dual(star_module(m)); }
ModuleMap nakayama(const ModuleMap& f) { return dual(star_map(f)); }
Module nakayama_inverse(const Module& m) { return star_module(dual(m)); }
ModuleMap nakayama_inverse(const ModuleMap& f) { return star_map(dual(f)); }

}  // namespace arcat
