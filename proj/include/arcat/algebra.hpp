#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "arcat/fp_matrix.hpp"

namespace arcat {

struct Arrow {
  std::string name;
  int from = 0;
  int to = 0;
};

struct Quiver {
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;

  int num_vertices() const { return static_cast<int>(vertices.size()); }
  int num_arrows() const { return static_cast<int>(arrows.size()); }
  int vertex_index(const std::string& name) const;
  int arrow_index(const std::string& name) const;
};

// A path is stored in traversal order: arrows[0] leaves `from`. The algebra
// product x*y means "traverse y, then x", so left modules act by a.(m) along
// arrows and compositions read like function composition.
struct Path {
  int from = 0;
  int to = 0;
  std::vector<int> arrows;

  int length() const { return static_cast<int>(arrows.size()); }
  friend bool operator==(const Path& a, const Path& b) {
    return a.from == b.from && a.to == b.to && a.arrows == b.arrows;
  }
};

struct RelTerm {
  u32 coeff = 1;
  Path path;
};
// One relation: a linear combination of parallel paths of equal length >= 2.
using Relation = std::vector<RelTerm>;

// Sparse vector over the algebra basis: (basis index, nonzero coeff), ascending.
using SparseVec = std::vector<std::pair<int, u32>>;

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

// A bound quiver algebra kQ/I over F_p, I generated by homogeneous relations,
// with every path of length >= bound falling into I (verified at construction).
// The basis consists of residue classes of paths picked degreewise by
// deterministic elimination.
class Algebra {
 public:
  u32 p = 2;
  std::string name;
  Quiver quiver;
  std::vector<Relation> relations;
  int bound = 1;

  std::vector<Path> basis;      // sorted by (length, generation order)
  std::vector<int> idempotent;  // basis index of the trivial path, per vertex

  int dim() const { return static_cast<int>(basis.size()); }
  bool is_opposite_copy() const { return !primary_; }

  const Algebra& op() const {
    ARCAT_CHECK(opp_ != nullptr, "opposite algebra not linked");
    return *opp_;
  }

  // Structure constants of basis[i] * basis[j]; zero product -> empty.
  const SparseVec& mult(int i, int j) const { return mult_table_[i * dim() + j]; }

  // Express an arbitrary path in the basis (empty if it reduces to zero).
  SparseVec reduce_path(const Path& path) const;

  int basis_index_of(const Path& path) const;  // -1 if not itself a basis path

  std::string path_to_string(const Path& path) const;

 private:
  const Algebra* opp_ = nullptr;
  bool primary_ = true;
  std::shared_ptr<const Algebra> opp_owner_;  // held by the primary copy only

  // Degreewise reduction data (degrees 0..bound-1).
  std::vector<std::vector<Path>> paths_by_deg_;
  std::vector<std::map<std::pair<int, std::vector<int>>, int>> path_pos_by_deg_;
  std::vector<Mat> red_;                             // path coords -> basis coords
  std::vector<std::vector<int>> basis_global_by_deg_;
  std::vector<SparseVec> mult_table_;

  void build_core();
  void build_mult_table();

  friend AlgebraPtr make_algebra(u32 p, Quiver quiver, std::vector<Relation> relations, int bound,
                                 std::string name);
};

// Builds the algebra together with its opposite; op() works on both sides and
// op().op() returns the original object.
AlgebraPtr make_algebra(u32 p, Quiver quiver, std::vector<Relation> relations, int bound,
                        std::string name = "");

// shared_ptr to the opposite that co-owns the primary allocation.
AlgebraPtr opposite(const AlgebraPtr& alg);

// Compose in function order: `second` after `first` (first.to must equal second.from).
Path compose_paths(const Path& second, const Path& first);

}  // namespace arcat
