#pragma once

#include <optional>
#include <vector>

#include "hopfcoh/sparse.hpp"

namespace hopfcoh {

/// A subspace of k^n stored in reduced form: basis[i] has a 1 at pivots[i] and
/// every other basis vector vanishes there.  Coordinates of a member are its
/// values at the pivots.
class Subspace {
 public:
  Subspace() = default;
  Subspace(Field field, std::size_t ambient) : field_(field), ambient_(ambient) {}
  /// Spanned by arbitrary vectors (dependent ones are dropped).
  static Subspace span(Field field, std::size_t ambient, const std::vector<SparseVector>& vectors);
  static Subspace whole(Field field, std::size_t ambient);

  Field field() const { return field_; }
  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<SparseVector>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Values at the pivots; meaningful only for members.
  SparseVector coordinates(const SparseVector& v) const;
  SparseVector from_coordinates(const SparseVector& coords) const;
  bool contains(const SparseVector& v) const;
  /// Inclusion matrix (ambient x dim) with the basis as columns.
  SparseMatrix inclusion() const;
  /// Left inverse of inclusion on the subspace: picks out the pivot coordinates.
  SparseMatrix coordinate_map() const;

 private:
  friend class Echelon;
  void index_pivots();

  Field field_;
  std::size_t ambient_ = 0;
  std::vector<SparseVector> basis_;
  std::vector<std::size_t> pivots_;
  std::vector<std::int64_t> pivot_pos_;  // ambient index -> basis index or -1
};

/// Incremental Gaussian elimination.  Rows are kept triangular with respect to
/// insertion order, so reducing a vector eliminates pivots in that order.
class Echelon {
 public:
  Echelon(Field field, std::size_t dim);

  /// Returns true when v was independent of the stored rows.  Pivots are only
  /// chosen among columns below pivot_limit when any such entry remains.
  bool insert(SparseVector v, std::size_t pivot_limit = static_cast<std::size_t>(-1));
  SparseVector reduce(const SparseVector& v) const;
  bool in_span(const SparseVector& v) const { return reduce(v).empty(); }

  std::size_t rank() const { return rows_.size(); }
  std::size_t dim() const { return dim_; }
  /// Back-substitution to reduced row echelon form.
  void fully_reduce();
  bool is_fully_reduced() const { return reduced_; }
  const std::vector<SparseVector>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Row space (requires fully_reduce, called on demand).
  Subspace row_space();
  /// Null space of the stored rows restricted to columns below limit.
  Subspace null_space(std::size_t limit = static_cast<std::size_t>(-1));

 private:
  SparseVector reduce_impl(const SparseVector& v, std::vector<Scalar>& dense) const;

  Field field_;
  std::size_t dim_;
  std::vector<SparseVector> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<std::int64_t> pivot_row_;  // column -> row id or -1
  bool reduced_ = true;
  mutable std::vector<Scalar> scratch_;
};

struct RankKernel {
  std::size_t rank;
  Subspace kernel;
};

RankKernel rank_and_kernel(const SparseMatrix& m);
std::size_t rank(const SparseMatrix& m);

struct Solution {
  SparseVector particular;
  Subspace homogeneous;
};
/// Solves m x = b exactly; nullopt when inconsistent.
std::optional<Solution> solve(const SparseMatrix& m, const SparseVector& b);

struct Quotient {
  SparseMatrix projection;  // (ambient - dim sub) x ambient
  SparseMatrix section;     // ambient x (ambient - dim sub)
};
Quotient quotient(std::size_t ambient_dim, const Subspace& sub);

/// Image of m as a subspace of the target.
Subspace image(const SparseMatrix& m);

}  // namespace hopfcoh
