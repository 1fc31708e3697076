#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "hopfcoh/scalar.hpp"

namespace hopfcoh {

struct Entry {
  std::size_t index;
  Scalar value;
};

/// Sorted by index, no explicit zeros, no duplicates.
class SparseVector {
 public:
  SparseVector() = default;
  explicit SparseVector(std::vector<Entry> sorted_entries) : entries_(std::move(sorted_entries)) {}
  /// Sorts, merges duplicates and drops zeros.
  static SparseVector from_unsorted(std::vector<Entry> entries);
  static SparseVector unit(std::size_t index, Scalar one);

  std::span<const Entry> entries() const { return entries_; }
  std::size_t nnz() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  Scalar at(std::size_t index) const;

  SparseVector& operator+=(const SparseVector& o);
  SparseVector& operator-=(const SparseVector& o);
  /// this += c * o
  void axpy(const Scalar& c, const SparseVector& o);
  SparseVector scaled(const Scalar& c) const;
  friend bool operator==(const SparseVector& a, const SparseVector& b);

  std::vector<Entry>& raw() { return entries_; }

 private:
  std::vector<Entry> entries_;
};

/// Column-compressed exact matrix.
class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(Field field, std::size_t rows, std::size_t cols);

  struct Triplet {
    std::size_t row, col;
    Scalar value;
  };
  static SparseMatrix from_triplets(Field field, std::size_t rows, std::size_t cols, std::vector<Triplet> triplets);
  static SparseMatrix from_columns(Field field, std::size_t rows, std::vector<SparseVector> cols);
  /// Builds column c as col_fn(c) for every c < cols.
  static SparseMatrix from_column_fn(Field field, std::size_t rows, std::size_t cols,
                                     const std::function<SparseVector(std::size_t)>& col_fn);
  static SparseMatrix identity(Field field, std::size_t n);
  static SparseMatrix zero(Field field, std::size_t rows, std::size_t cols) { return {field, rows, cols}; }

  Field field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_.size(); }
  std::size_t nnz() const;
  const SparseVector& col(std::size_t c) const { return cols_[c]; }
  const std::vector<SparseVector>& columns() const { return cols_; }
  Scalar at(std::size_t r, std::size_t c) const { return cols_[c].at(r); }
  bool is_zero() const;

  SparseMatrix transpose() const;
  SparseVector apply(const SparseVector& v) const;
  SparseMatrix operator*(const SparseMatrix& o) const;
  SparseMatrix operator+(const SparseMatrix& o) const;
  SparseMatrix operator-(const SparseMatrix& o) const;
  SparseMatrix scaled(const Scalar& c) const;
  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b);

  /// Columns of the result are the selected columns.
  SparseMatrix select_columns(std::span<const std::size_t> which) const;
  /// Rows of the result are the selected rows (in the given order).
  SparseMatrix select_rows(std::span<const std::size_t> which) const;

  /// Row-major flattening (index r * cols + c) of the matrix.
  SparseVector flatten() const;
  static SparseMatrix unflatten(Field field, std::size_t rows, std::size_t cols, const SparseVector& v);

 private:
  Field field_;
  std::size_t rows_ = 0;
  std::vector<SparseVector> cols_;
};

/// Kronecker product A (x) B under the big-endian index convention.
SparseMatrix kron(const SparseMatrix& a, const SparseMatrix& b);
SparseMatrix kron(std::initializer_list<std::reference_wrapper<const SparseMatrix>> factors);
/// Block matrix [A B] / [A; B] and direct sums.
SparseMatrix hstack(const SparseMatrix& a, const SparseMatrix& b);
SparseMatrix vstack(const SparseMatrix& a, const SparseMatrix& b);
SparseMatrix block_diag(const SparseMatrix& a, const SparseMatrix& b);

/// Dense accumulator for building one sparse vector from many contributions.
class Accumulator {
 public:
  explicit Accumulator(std::size_t dim) : values_(dim), seen_(dim, false) {}
  void add(std::size_t index, const Scalar& v);
  void add_mul(std::size_t index, const Scalar& a, const Scalar& b);
  void add_scaled(const SparseVector& v, const Scalar& c);
  /// Returns the accumulated vector and resets the accumulator.
  SparseVector take();

 private:
  std::vector<Scalar> values_;
  std::vector<bool> seen_;
  std::vector<std::size_t> touched_;
};

}  // namespace hopfcoh
