#pragma once

#include <map>
#include <optional>
#include <vector>

#include "qhowe/sop.hpp"

namespace qhowe {

// Incremental reduced row echelon form over Q(q).
// Pivots are chosen by minimal entry weight, then by smallest index.
// With tracking enabled every row remembers its expression in the accepted vectors.
class Echelon {
 public:
  explicit Echelon(bool track = false) : track_(track) {}

  // Returns true when v is independent of the current rows (and adds it).
  bool insert(const SVec& v);
  // Residual after eliminating all pivot columns.
  SVec reduce(const SVec& v) const;
  bool contains(const SVec& v) const { return reduce(v).empty(); }
  // Coordinates of v with respect to the accepted vectors, in acceptance order (tracking only).
  std::optional<SVec> express(const SVec& v) const;

  int rank() const { return static_cast<int>(rows_.size()); }
  // Reduced basis rows ordered by pivot column.
  std::vector<SVec> basis() const;
  const std::map<int, SVec>& rows() const { return rows_; }
  int accepted() const { return inserted_; }

 private:
  bool track_;
  int inserted_ = 0;
  std::map<int, SVec> rows_;   // pivot column -> row, pivot entry 1
  std::map<int, SVec> combo_;  // pivot column -> coefficients on inserted vectors
};

// Basis of the solution space of the homogeneous system given by equation rows.
std::vector<SVec> kernel(const std::vector<SVec>& equations, int ncols);

// Exact rank and reduced basis of a family of vectors.
struct SpanResult {
  int dim = 0;
  std::vector<SVec> basis;
};
SpanResult span_dim(const std::vector<SVec>& vectors);
SpanResult span_dim(const std::vector<SOp>& ops);

// Intersection of kernels; all operators share a domain.
std::vector<SVec> joint_kernel(const std::vector<SOp>& ops);

// All X with X a = (-1)^{|X||a|} a X for every a, split into even then odd parts.
struct CommutantResult {
  std::vector<SOp> even, odd;
  int dim() const { return static_cast<int>(even.size() + odd.size()); }
  std::vector<SOp> all() const;
};
CommutantResult graded_commutant(const std::vector<SOp>& ops, const SpacePtr& space);

// Homogeneous maps X: A-space -> B-space with X a_k = (-1)^{|X||a_k|} b_k X.
std::vector<SOp> intertwiners(const std::vector<SOp>& a, const std::vector<SOp>& b, int parity,
                              bool graded = true);

// Span of all words in the generators (including the identity), closed under
// left multiplication.  Returned as operators with an echelon of flattened forms.
struct AlgebraImage {
  std::vector<SOp> ops;
  Echelon echelon{true};
  int dim() const { return static_cast<int>(ops.size()); }
};
AlgebraImage algebra_image(const std::vector<SOp>& gens, const SpacePtr& space);

// Subspace spanned by the columns, as an invariant-subspace helper.
struct Subspace {
  std::vector<SVec> basis;
  Echelon echelon{true};
  int dim() const { return static_cast<int>(basis.size()); }
};
// Closure of the seeds under the generators.
Subspace closure(const std::vector<SOp>& gens, const std::vector<SVec>& seeds);
// Matrix of op restricted to an invariant subspace, in the subspace basis.
SOp restrict_to(const SOp& op, const Subspace& sub, const SpacePtr& subspace_space);

// Inverse of an invertible square operator.
SOp inverse(const SOp& a);

}  // namespace qhowe
