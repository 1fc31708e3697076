#include "hopfcoh/tensor.hpp"

#include <limits>
#include <numeric>

namespace hopfcoh {

std::size_t ipow(std::size_t d, std::size_t q) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < q; ++i) {
    if (d != 0 && r > std::numeric_limits<std::size_t>::max() / d) throw ResourceError("tensor power dimension overflows");
    r *= d;
  }
  return r;
}

std::vector<std::size_t> decode_index(std::size_t index, const std::vector<std::size_t>& dims) {
  std::vector<std::size_t> digits(dims.size());
  for (std::size_t s = dims.size(); s-- > 0;) {
    digits[s] = index % dims[s];
    index /= dims[s];
  }
  return digits;
}

std::size_t encode_index(const std::vector<std::size_t>& digits, const std::vector<std::size_t>& dims) {
  std::size_t index = 0;
  for (std::size_t s = 0; s < dims.size(); ++s) index = index * dims[s] + digits[s];
  return index;
}

SparseMatrix permutation_map(Field field, const std::vector<std::size_t>& dims, const std::vector<std::size_t>& perm) {
  if (perm.size() != dims.size()) throw InputError("permutation length does not match slot count");
  std::vector<std::size_t> out_dims(dims.size());
  std::vector<bool> used(dims.size(), false);
  for (std::size_t j = 0; j < perm.size(); ++j) {
    if (perm[j] >= dims.size() || used[perm[j]]) throw InputError("not a permutation");
    used[perm[j]] = true;
    out_dims[j] = dims[perm[j]];
  }
  std::size_t n = 1;
  for (auto d : dims) n *= d;
  std::vector<SparseVector> cols(n);
  std::vector<std::size_t> out_digits(dims.size());
  for (std::size_t i = 0; i < n; ++i) {
    auto digits = decode_index(i, dims);
    for (std::size_t j = 0; j < perm.size(); ++j) out_digits[j] = digits[perm[j]];
    cols[i] = SparseVector::unit(encode_index(out_digits, out_dims), field.one());
  }
  return SparseMatrix::from_columns(field, n, std::move(cols));
}

SparseMatrix swap_map(Field field, std::size_t a, std::size_t b) { return permutation_map(field, {a, b}, {1, 0}); }

SparseMatrix interleave_map(Field field, std::size_t d, std::size_t p) {
  std::vector<std::size_t> dims(2 * p, d), perm(2 * p);
  for (std::size_t i = 0; i < p; ++i) {
    perm[2 * i] = i;
    perm[2 * i + 1] = p + i;
  }
  return permutation_map(field, dims, perm);
}

SparseMatrix deinterleave_map(Field field, std::size_t d, std::size_t p) {
  std::vector<std::size_t> dims(2 * p, d), perm(2 * p);
  for (std::size_t i = 0; i < p; ++i) {
    perm[i] = 2 * i;
    perm[p + i] = 2 * i + 1;
  }
  return permutation_map(field, dims, perm);
}

SparseMatrix kron_id(std::size_t a, const SparseMatrix& f, std::size_t b) {
  const std::size_t r = f.rows(), c = f.cols();
  std::vector<SparseVector> cols(a * c * b);
  for (std::size_t al = 0; al < a; ++al)
    for (std::size_t x = 0; x < c; ++x)
      for (std::size_t be = 0; be < b; ++be) {
        const auto& src = f.col(x).entries();
        std::vector<Entry> es;
        es.reserve(src.size());
        for (const auto& e : src) es.push_back(Entry{(al * r + e.index) * b + be, e.value});
        cols[(al * c + x) * b + be] = SparseVector(std::move(es));
      }
  return SparseMatrix::from_columns(f.field(), a * r * b, std::move(cols));
}

CochainOperator::CochainOperator(Field field, std::size_t src_out, std::size_t src_in, std::size_t dst_out,
                                 std::size_t dst_in)
    : field_(field), src_out_(src_out), src_in_(src_in), dst_out_(dst_out), dst_in_(dst_in) {}

CochainOperator& CochainOperator::add(Scalar coef, std::optional<SparseMatrix> A, std::size_t a, std::size_t b,
                                      std::optional<SparseMatrix> B) {
  const std::size_t mid_out = a * src_out_ * b, mid_in = a * src_in_ * b;
  if (A ? (A->cols() != mid_out || A->rows() != dst_out_) : mid_out != dst_out_)
    throw InputError("cochain operator: left factor has the wrong shape");
  if (B ? (B->rows() != mid_in || B->cols() != dst_in_) : mid_in != dst_in_)
    throw InputError("cochain operator: right factor has the wrong shape");
  std::optional<SparseMatrix> Bt;
  if (B) Bt = B->transpose();
  terms_.push_back(Term{std::move(coef), std::move(A), a, b, std::move(Bt)});
  return *this;
}

SparseVector CochainOperator::apply_flat(const SparseVector& g) const {
  struct Trip {
    std::size_t col, row;
    Scalar value;
  };
  std::vector<Entry> out;
  std::vector<Trip> mid;
  for (const auto& t : terms_) {
    mid.clear();
    for (const auto& ge : g.entries()) {
      const std::size_t y = ge.index / src_in_, x = ge.index % src_in_;
      for (std::size_t al = 0; al < t.a; ++al)
        for (std::size_t be = 0; be < t.b; ++be) {
          const std::size_t r_in = (al * src_in_ + x) * t.b + be;
          const std::size_t r_out = (al * src_out_ + y) * t.b + be;
          if (t.Bt) {
            for (const auto& be2 : t.Bt->col(r_in).entries()) mid.push_back(Trip{be2.index, r_out, ge.value * be2.value});
          } else {
            mid.push_back(Trip{r_in, r_out, ge.value});
          }
        }
    }
    for (auto& m : mid) {
      if (t.A) {
        for (const auto& ae : t.A->col(m.row).entries()) {
          Scalar v = m.value * ae.value;
          if (!t.coef.is_one()) v *= t.coef;
          out.push_back(Entry{ae.index * dst_in_ + m.col, std::move(v)});
        }
      } else {
        Scalar v = std::move(m.value);
        if (!t.coef.is_one()) v *= t.coef;
        out.push_back(Entry{m.row * dst_in_ + m.col, std::move(v)});
      }
    }
  }
  return SparseVector::from_unsorted(std::move(out));
}

SparseMatrix CochainOperator::apply(const SparseMatrix& g) const {
  if (g.rows() != src_out_ || g.cols() != src_in_) throw InputError("cochain operator: argument has the wrong shape");
  return SparseMatrix::unflatten(field_, dst_out_, dst_in_, apply_flat(g.flatten()));
}

SparseMatrix CochainOperator::matrix_on(const std::vector<SparseVector>& sources) const {
  std::vector<SparseVector> cols;
  cols.reserve(sources.size());
  for (const auto& s : sources) cols.push_back(apply_flat(s));
  return SparseMatrix::from_columns(field_, dst_out_ * dst_in_, std::move(cols));
}

}  // namespace hopfcoh
