#include "arcat/algebra.hpp"

#include <algorithm>
#include <set>

namespace arcat {

namespace {
constexpr size_t kPathCountGuard = 200000;
}

int Quiver::vertex_index(const std::string& name) const {
  for (int i = 0; i < num_vertices(); ++i)
    if (vertices[i] == name) return i;
  return -1;
}

int Quiver::arrow_index(const std::string& name) const {
  for (int i = 0; i < num_arrows(); ++i)
    if (arrows[i].name == name) return i;
  return -1;
}

Path compose_paths(const Path& second, const Path& first) {
  ARCAT_CHECK(first.to == second.from, "paths not composable");
  Path r;
  r.from = first.from;
  r.to = second.to;
  r.arrows = first.arrows;
  r.arrows.insert(r.arrows.end(), second.arrows.begin(), second.arrows.end());
  return r;
}

std::string Algebra::path_to_string(const Path& path) const {
  if (path.arrows.empty()) return "e_" + quiver.vertices[path.from];
  std::string s;
  for (size_t i = 0; i < path.arrows.size(); ++i) {
    if (i) s += ".";
    s += quiver.arrows[path.arrows[i]].name;
  }
  return s;
}

static void validate_quiver(const Quiver& q) {
  ARCAT_REQUIRE(!q.vertices.empty(), "quiver needs at least one vertex");
  std::set<std::string> names(q.vertices.begin(), q.vertices.end());
  ARCAT_REQUIRE(names.size() == q.vertices.size(), "duplicate vertex names");
  std::set<std::string> anames;
  for (const Arrow& a : q.arrows) {
    ARCAT_REQUIRE(!a.name.empty(), "arrow needs a name");
    ARCAT_REQUIRE(anames.insert(a.name).second, "duplicate arrow name: " + a.name);
    ARCAT_REQUIRE(a.from >= 0 && a.from < q.num_vertices(), "arrow source out of range");
    ARCAT_REQUIRE(a.to >= 0 && a.to < q.num_vertices(), "arrow target out of range");
    ARCAT_REQUIRE(names.count(a.name) == 0, "arrow name clashes with a vertex: " + a.name);
  }
}

static void validate_path(const Quiver& q, const Path& path) {
  ARCAT_REQUIRE(path.from >= 0 && path.from < q.num_vertices(), "path source out of range");
  int at = path.from;
  for (int ai : path.arrows) {
    ARCAT_REQUIRE(ai >= 0 && ai < q.num_arrows(), "path arrow out of range");
    ARCAT_REQUIRE(q.arrows[ai].from == at, "path arrows not composable");
    at = q.arrows[ai].to;
  }
  ARCAT_REQUIRE(at == path.to, "path target mismatch");
}

void Algebra::build_core() {
  validate_quiver(quiver);
  ARCAT_REQUIRE(bound >= 1, "nilpotency bound must be >= 1");

  // Normalize relations: drop zero terms, check homogeneity and parallelism.
  std::vector<Relation> cleaned;
  for (const Relation& rel : relations) {
    Relation r;
    for (RelTerm t : rel) {
      t.coeff %= p;
      if (t.coeff == 0) continue;
      validate_path(quiver, t.path);
      r.push_back(t);
    }
    if (r.empty()) continue;
    for (const RelTerm& t : r) {
      ARCAT_REQUIRE(t.path.length() >= 2, "relation term of length < 2 (not admissible)");
      ARCAT_REQUIRE(t.path.length() == r[0].path.length(),
                    "relation mixes path lengths (only homogeneous relations supported)");
      ARCAT_REQUIRE(t.path.from == r[0].path.from && t.path.to == r[0].path.to,
                    "relation mixes non-parallel paths");
    }
    cleaned.push_back(std::move(r));
  }
  relations = std::move(cleaned);

  // Enumerate paths degree by degree; degree `bound` is only used for the
  // admissibility check.
  paths_by_deg_.assign(bound + 1, {});
  path_pos_by_deg_.assign(bound + 1, {});
  for (int v = 0; v < quiver.num_vertices(); ++v)
    paths_by_deg_[0].push_back(Path{v, v, {}});
  for (int d = 1; d <= bound; ++d) {
    for (const Path& q : paths_by_deg_[d - 1])
      for (int ai = 0; ai < quiver.num_arrows(); ++ai)
        if (quiver.arrows[ai].from == q.to) {
          Path ext = q;
          ext.arrows.push_back(ai);
          ext.to = quiver.arrows[ai].to;
          paths_by_deg_[d].push_back(std::move(ext));
        }
    ARCAT_REQUIRE(paths_by_deg_[d].size() <= kPathCountGuard,
                  "path count explosion (raise guard or lower bound)");
  }
  for (int d = 0; d <= bound; ++d)
    for (size_t i = 0; i < paths_by_deg_[d].size(); ++i)
      path_pos_by_deg_[d][{paths_by_deg_[d][i].from, paths_by_deg_[d][i].arrows}] =
          static_cast<int>(i);

  // Degree-d span of all shifts u * r * w of the relations.
  auto shift_rows = [&](int d) {
    std::vector<std::vector<u32>> rows;
    for (const Relation& rel : relations) {
      int len = rel[0].path.length();
      if (len > d) continue;
      int rfrom = rel[0].path.from, rto = rel[0].path.to;
      for (int dw = 0; dw + len <= d; ++dw) {
        int du = d - len - dw;
        for (const Path& w : paths_by_deg_[dw]) {
          if (w.to != rfrom) continue;
          for (const Path& u : paths_by_deg_[du]) {
            if (u.from != rto) continue;
            std::vector<u32> row(paths_by_deg_[d].size(), 0);
            for (const RelTerm& t : rel) {
              Path s = compose_paths(u, compose_paths(t.path, w));
              int pos = path_pos_by_deg_[d].at({s.from, s.arrows});
              row[pos] = (row[pos] + t.coeff) % p;
            }
            rows.push_back(std::move(row));
          }
        }
      }
    }
    return rows;
  };

  auto rows_to_mat = [&](const std::vector<std::vector<u32>>& rows, int ncols) {
    Mat m(static_cast<int>(rows.size()), ncols, p);
    for (size_t i = 0; i < rows.size(); ++i)
      for (int j = 0; j < ncols; ++j) m.at(static_cast<int>(i), j) = rows[i][j];
    return m;
  };

  // Admissibility witness: at degree `bound` the relation shifts span everything.
  {
    int n = static_cast<int>(paths_by_deg_[bound].size());
    if (n > 0) {
      Mat m = rows_to_mat(shift_rows(bound), n);
      ARCAT_REQUIRE(rank(m) == n,
                    "relations not admissible: some path of length " + std::to_string(bound) +
                        " does not lie in the relation ideal");
    }
  }

  // Basis and reduction matrices for degrees 0..bound-1.
  red_.assign(bound, Mat());
  basis_global_by_deg_.assign(bound, {});
  basis.clear();
  idempotent.assign(quiver.num_vertices(), -1);
  for (int d = 0; d < bound; ++d) {
    int n = static_cast<int>(paths_by_deg_[d].size());
    Rref rr = rref(rows_to_mat(shift_rows(d), n));
    std::vector<int> free_cols;
    {
      size_t k = 0;
      for (int c = 0; c < n; ++c) {
        if (k < rr.pivot_cols.size() && rr.pivot_cols[k] == c)
          ++k;
        else
          free_cols.push_back(c);
      }
    }
    Mat red(static_cast<int>(free_cols.size()), n, p);
    for (size_t t = 0; t < free_cols.size(); ++t) red.at(static_cast<int>(t), free_cols[t]) = 1;
    for (size_t i = 0; i < rr.pivot_cols.size(); ++i)
      for (size_t t = 0; t < free_cols.size(); ++t)
        red.at(static_cast<int>(t), rr.pivot_cols[i]) =
            fp_neg(rr.m.at(static_cast<int>(i), free_cols[t]), p);
    red_[d] = std::move(red);
    for (int c : free_cols) {
      basis_global_by_deg_[d].push_back(dim());
      if (d == 0) idempotent[paths_by_deg_[0][c].from] = dim();
      basis.push_back(paths_by_deg_[d][c]);
    }
  }
  for (int v = 0; v < quiver.num_vertices(); ++v)
    ARCAT_CHECK(idempotent[v] >= 0, "missing idempotent (degree-0 relation?)");

  build_mult_table();
}

SparseVec Algebra::reduce_path(const Path& path) const {
  validate_path(quiver, path);
  int d = path.length();
  if (d >= bound) return {};
  int pos = path_pos_by_deg_[d].at({path.from, path.arrows});
  SparseVec out;
  for (int t = 0; t < red_[d].rows; ++t) {
    u32 c = red_[d].at(t, pos);
    if (c) out.emplace_back(basis_global_by_deg_[d][t], c);
  }
  return out;
}

int Algebra::basis_index_of(const Path& path) const {
  for (int i = 0; i < dim(); ++i)
    if (basis[i] == path) return i;
  return -1;
}

void Algebra::build_mult_table() {
  int n = dim();
  mult_table_.assign(static_cast<size_t>(n) * n, {});
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (basis[j].to != basis[i].from) continue;
      mult_table_[i * n + j] = reduce_path(compose_paths(basis[i], basis[j]));
    }

  // Unit and associativity sanity (full check at desk scale).
  auto mult_sparse = [&](const SparseVec& x, const SparseVec& y) {
    std::map<int, u32> acc;
    for (const auto& [i, ci] : x)
      for (const auto& [j, cj] : y)
        for (const auto& [k, ck] : mult(i, j)) {
          u64 add = static_cast<u64>(ci) * cj % p * ck % p;
          acc[k] = static_cast<u32>((acc[k] + add) % p);
        }
    SparseVec out;
    for (const auto& [k, c] : acc)
      if (c % p) out.emplace_back(k, c % p);
    return out;
  };
  for (int i = 0; i < n; ++i) {
    const Path& b = basis[i];
    SparseVec self{{i, 1}};
    ARCAT_CHECK(mult(idempotent[b.to], i) == self, "left unit broken");
    ARCAT_CHECK(mult(i, idempotent[b.from]) == self, "right unit broken");
  }
  if (n <= 40) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
          SparseVec lhs = mult_sparse(mult(i, j), {{k, 1}});
          SparseVec rhs = mult_sparse({{i, 1}}, mult(j, k));
          ARCAT_CHECK(lhs == rhs, "multiplication table not associative");
        }
  }
}

AlgebraPtr make_algebra(u32 p, Quiver quiver, std::vector<Relation> relations, int bound,
                        std::string name) {
  ARCAT_REQUIRE(p >= 2, "p must be a prime >= 2");
  for (u32 d = 2; d * d <= p; ++d) ARCAT_REQUIRE(p % d != 0, "p must be prime");

  auto prim = std::shared_ptr<Algebra>(new Algebra());
  prim->p = p;
  prim->name = name;
  prim->quiver = quiver;
  prim->relations = relations;
  prim->bound = bound;
  prim->build_core();

  auto opp = std::shared_ptr<Algebra>(new Algebra());
  opp->p = p;
  opp->name = name.empty() ? "" : name + "^op";
  Quiver oq = quiver;
  for (Arrow& a : oq.arrows) std::swap(a.from, a.to);
  opp->quiver = oq;
  for (Relation& rel : relations)
    for (RelTerm& t : rel) {
      std::reverse(t.path.arrows.begin(), t.path.arrows.end());
      std::swap(t.path.from, t.path.to);
    }
  opp->relations = relations;
  opp->bound = bound;
  opp->primary_ = false;
  opp->build_core();
  ARCAT_CHECK(opp->dim() == prim->dim(), "opposite algebra dimension mismatch");

  prim->opp_ = opp.get();
  opp->opp_ = prim.get();
  prim->opp_owner_ = opp;
  return prim;
}

AlgebraPtr opposite(const AlgebraPtr& alg) {
  ARCAT_CHECK(alg != nullptr, "null algebra");
  return AlgebraPtr(alg, &alg->op());
}

}  // namespace arcat
