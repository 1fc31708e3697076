#pragma once

#include <optional>
#include <vector>

#include "hopfcoh/sparse.hpp"

namespace hopfcoh {

/// d^q with overflow detection (throws ResourceError).
std::size_t ipow(std::size_t d, std::size_t q);

/// Big-endian multi-index helpers for a product of slots with the given sizes.
std::vector<std::size_t> decode_index(std::size_t index, const std::vector<std::size_t>& dims);
std::size_t encode_index(const std::vector<std::size_t>& digits, const std::vector<std::size_t>& dims);

/// Reorders tensor slots: output slot j is input slot perm[j].
SparseMatrix permutation_map(Field field, const std::vector<std::size_t>& dims, const std::vector<std::size_t>& perm);
/// a (x) b -> b (x) a.
SparseMatrix swap_map(Field field, std::size_t a, std::size_t b);
/// (x_1..x_p, y_1..y_p) -> (x_1, y_1, ..., x_p, y_p) with all slots of size d.
SparseMatrix interleave_map(Field field, std::size_t d, std::size_t p);
/// (x_1, y_1, ..., x_p, y_p) -> (x_1..x_p, y_1..y_p).
SparseMatrix deinterleave_map(Field field, std::size_t d, std::size_t p);

/// I_a (x) f (x) I_b.
SparseMatrix kron_id(std::size_t a, const SparseMatrix& f, std::size_t b);

/// Linear map on spaces of matrices g : k^in -> k^out of the form
///   g |-> sum_t c_t * A_t (I_{a_t} (x) g (x) I_{b_t}) B_t.
/// A missing A or B stands for the identity.  Cochains are handled either as
/// matrices or as row-major flattened vectors (index row * cols + col).
class CochainOperator {
 public:
  CochainOperator(Field field, std::size_t src_out, std::size_t src_in, std::size_t dst_out, std::size_t dst_in);

  CochainOperator& add(Scalar coef, std::optional<SparseMatrix> A, std::size_t a, std::size_t b,
                       std::optional<SparseMatrix> B);

  Field field() const { return field_; }
  std::size_t src_out() const { return src_out_; }
  std::size_t src_in() const { return src_in_; }
  std::size_t dst_out() const { return dst_out_; }
  std::size_t dst_in() const { return dst_in_; }

  SparseMatrix apply(const SparseMatrix& g) const;
  SparseVector apply_flat(const SparseVector& g) const;
  /// Matrix of the operator on flattened cochains restricted to the given source vectors.
  SparseMatrix matrix_on(const std::vector<SparseVector>& sources) const;

 private:
  struct Term {
    Scalar coef;
    std::optional<SparseMatrix> A;
    std::size_t a, b;
    std::optional<SparseMatrix> Bt;  // transpose of B, for row access
  };
  Field field_;
  std::size_t src_out_, src_in_, dst_out_, dst_in_;
  std::vector<Term> terms_;
};

}  // namespace hopfcoh
