#include "hopfcoh/sparse.hpp"

#include <algorithm>

namespace hopfcoh {

SparseVector SparseVector::from_unsorted(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) { return a.index < b.index; });
  std::vector<Entry> out;
  out.reserve(entries.size());
  for (auto& e : entries) {
    if (!out.empty() && out.back().index == e.index) {
      out.back().value += e.value;
    } else {
      if (!out.empty() && out.back().value.is_zero()) out.pop_back();
      out.push_back(std::move(e));
    }
  }
  if (!out.empty() && out.back().value.is_zero()) out.pop_back();
  return SparseVector(std::move(out));
}

SparseVector SparseVector::unit(std::size_t index, Scalar one) { return SparseVector({Entry{index, std::move(one)}}); }

Scalar SparseVector::at(std::size_t index) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), index, [](const Entry& e, std::size_t i) { return e.index < i; });
  if (it != entries_.end() && it->index == index) return it->value;
  return Scalar();
}

void SparseVector::axpy(const Scalar& c, const SparseVector& o) {
  if (c.is_zero() || o.empty()) return;
  std::vector<Entry> out;
  out.reserve(entries_.size() + o.entries_.size());
  auto a = entries_.begin();
  auto b = o.entries_.begin();
  while (a != entries_.end() || b != o.entries_.end()) {
    if (b == o.entries_.end() || (a != entries_.end() && a->index < b->index)) {
      out.push_back(std::move(*a++));
    } else if (a == entries_.end() || b->index < a->index) {
      out.push_back(Entry{b->index, c * b->value});
      ++b;
    } else {
      Scalar v = std::move(a->value);
      v.add_mul(c, b->value);
      if (!v.is_zero()) out.push_back(Entry{a->index, std::move(v)});
      ++a;
      ++b;
    }
  }
  entries_ = std::move(out);
}

SparseVector& SparseVector::operator+=(const SparseVector& o) {
  if (o.empty()) return *this;
  axpy(o.entries_.front().value.field().one(), o);
  return *this;
}

SparseVector& SparseVector::operator-=(const SparseVector& o) {
  if (o.empty()) return *this;
  axpy(-o.entries_.front().value.field().one(), o);
  return *this;
}

SparseVector SparseVector::scaled(const Scalar& c) const {
  if (c.is_zero()) return {};
  std::vector<Entry> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(Entry{e.index, e.value * c});
  return SparseVector(std::move(out));
}

bool operator==(const SparseVector& a, const SparseVector& b) {
  if (a.entries_.size() != b.entries_.size()) return false;
  for (std::size_t i = 0; i < a.entries_.size(); ++i)
    if (a.entries_[i].index != b.entries_[i].index || a.entries_[i].value != b.entries_[i].value) return false;
  return true;
}

SparseMatrix::SparseMatrix(Field field, std::size_t rows, std::size_t cols) : field_(field), rows_(rows), cols_(cols) {}

SparseMatrix SparseMatrix::from_triplets(Field field, std::size_t rows, std::size_t cols, std::vector<Triplet> triplets) {
  std::vector<std::vector<Entry>> buckets(cols);
  for (auto& t : triplets) {
    if (t.row >= rows || t.col >= cols) throw InputError("matrix entry out of range");
    buckets[t.col].push_back(Entry{t.row, std::move(t.value)});
  }
  SparseMatrix m(field, rows, cols);
  for (std::size_t c = 0; c < cols; ++c) m.cols_[c] = SparseVector::from_unsorted(std::move(buckets[c]));
  return m;
}

SparseMatrix SparseMatrix::from_columns(Field field, std::size_t rows, std::vector<SparseVector> cols) {
  SparseMatrix m(field, rows, 0);
  for (const auto& c : cols)
    if (!c.empty() && c.entries().back().index >= rows) throw InputError("column entry out of range");
  m.cols_ = std::move(cols);
  return m;
}

SparseMatrix SparseMatrix::from_column_fn(Field field, std::size_t rows, std::size_t cols,
                                          const std::function<SparseVector(std::size_t)>& col_fn) {
  std::vector<SparseVector> cs(cols);
  for (std::size_t c = 0; c < cols; ++c) cs[c] = col_fn(c);
  return from_columns(field, rows, std::move(cs));
}

SparseMatrix SparseMatrix::identity(Field field, std::size_t n) {
  SparseMatrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.cols_[i] = SparseVector::unit(i, field.one());
  return m;
}

std::size_t SparseMatrix::nnz() const {
  std::size_t n = 0;
  for (const auto& c : cols_) n += c.nnz();
  return n;
}

bool SparseMatrix::is_zero() const {
  return std::all_of(cols_.begin(), cols_.end(), [](const SparseVector& c) { return c.empty(); });
}

SparseMatrix SparseMatrix::transpose() const {
  std::vector<std::vector<Entry>> rows(rows_);
  for (std::size_t c = 0; c < cols_.size(); ++c)
    for (const auto& e : cols_[c].entries()) rows[e.index].push_back(Entry{c, e.value});
  SparseMatrix t(field_, cols_.size(), rows_);
  for (std::size_t r = 0; r < rows_; ++r) t.cols_[r] = SparseVector(std::move(rows[r]));
  return t;
}

SparseVector SparseMatrix::apply(const SparseVector& v) const {
  if (v.empty()) return {};
  if (v.nnz() == 1) return cols_.at(v.entries()[0].index).scaled(v.entries()[0].value);
  std::vector<Entry> acc;
  for (const auto& e : v.entries()) {
    if (e.index >= cols_.size()) throw InputError("vector index out of range in apply");
    for (const auto& f : cols_[e.index].entries()) acc.push_back(Entry{f.index, f.value * e.value});
  }
  return SparseVector::from_unsorted(std::move(acc));
}

SparseMatrix SparseMatrix::operator*(const SparseMatrix& o) const {
  if (cols() != o.rows()) throw InputError("matrix product shape mismatch");
  SparseMatrix m(field_, rows_, o.cols());
  Accumulator acc(rows_);
  for (std::size_t c = 0; c < o.cols(); ++c) {
    for (const auto& e : o.cols_[c].entries()) acc.add_scaled(cols_[e.index], e.value);
    m.cols_[c] = acc.take();
  }
  return m;
}

SparseMatrix SparseMatrix::operator+(const SparseMatrix& o) const {
  if (rows_ != o.rows_ || cols() != o.cols()) throw InputError("matrix sum shape mismatch");
  SparseMatrix m(*this);
  for (std::size_t c = 0; c < cols(); ++c) m.cols_[c] += o.cols_[c];
  return m;
}

SparseMatrix SparseMatrix::operator-(const SparseMatrix& o) const {
  if (rows_ != o.rows_ || cols() != o.cols()) throw InputError("matrix difference shape mismatch");
  SparseMatrix m(*this);
  for (std::size_t c = 0; c < cols(); ++c) m.cols_[c] -= o.cols_[c];
  return m;
}

SparseMatrix SparseMatrix::scaled(const Scalar& c) const {
  SparseMatrix m(field_, rows_, cols());
  for (std::size_t i = 0; i < cols(); ++i) m.cols_[i] = cols_[i].scaled(c);
  return m;
}

bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_;
}

SparseMatrix SparseMatrix::select_columns(std::span<const std::size_t> which) const {
  SparseMatrix m(field_, rows_, which.size());
  for (std::size_t i = 0; i < which.size(); ++i) m.cols_[i] = cols_.at(which[i]);
  return m;
}

SparseMatrix SparseMatrix::select_rows(std::span<const std::size_t> which) const {
  std::vector<std::size_t> where(rows_, static_cast<std::size_t>(-1));
  for (std::size_t i = 0; i < which.size(); ++i) where.at(which[i]) = i;
  SparseMatrix m(field_, which.size(), cols());
  for (std::size_t c = 0; c < cols(); ++c) {
    std::vector<Entry> es;
    for (const auto& e : cols_[c].entries())
      if (where[e.index] != static_cast<std::size_t>(-1)) es.push_back(Entry{where[e.index], e.value});
    m.cols_[c] = SparseVector::from_unsorted(std::move(es));
  }
  return m;
}

SparseVector SparseMatrix::flatten() const {
  std::vector<Entry> es;
  for (std::size_t c = 0; c < cols(); ++c)
    for (const auto& e : cols_[c].entries()) es.push_back(Entry{e.index * cols() + c, e.value});
  return SparseVector::from_unsorted(std::move(es));
}

SparseMatrix SparseMatrix::unflatten(Field field, std::size_t rows, std::size_t cols, const SparseVector& v) {
  std::vector<Triplet> ts;
  for (const auto& e : v.entries()) ts.push_back({e.index / cols, e.index % cols, e.value});
  return from_triplets(field, rows, cols, std::move(ts));
}

SparseMatrix kron(const SparseMatrix& a, const SparseMatrix& b) {
  SparseMatrix m = SparseMatrix::zero(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
  std::vector<SparseVector> cols(a.cols() * b.cols());
  for (std::size_t i = 0; i < a.cols(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      std::vector<Entry> es;
      es.reserve(a.col(i).nnz() * b.col(j).nnz());
      for (const auto& x : a.col(i).entries())
        for (const auto& y : b.col(j).entries()) es.push_back(Entry{x.index * b.rows() + y.index, x.value * y.value});
      cols[i * b.cols() + j] = SparseVector(std::move(es));
    }
  return SparseMatrix::from_columns(a.field(), a.rows() * b.rows(), std::move(cols));
}

SparseMatrix kron(std::initializer_list<std::reference_wrapper<const SparseMatrix>> factors) {
  auto it = factors.begin();
  SparseMatrix m = it->get();
  for (++it; it != factors.end(); ++it) m = kron(m, it->get());
  return m;
}

SparseMatrix hstack(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.rows() != b.rows()) throw InputError("hstack row mismatch");
  std::vector<SparseVector> cols(a.columns());
  cols.insert(cols.end(), b.columns().begin(), b.columns().end());
  return SparseMatrix::from_columns(a.field(), a.rows(), std::move(cols));
}

SparseMatrix vstack(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.cols() != b.cols()) throw InputError("vstack column mismatch");
  std::vector<SparseVector> cols(a.cols());
  for (std::size_t c = 0; c < a.cols(); ++c) {
    std::vector<Entry> es(a.col(c).entries().begin(), a.col(c).entries().end());
    for (const auto& e : b.col(c).entries()) es.push_back(Entry{e.index + a.rows(), e.value});
    cols[c] = SparseVector(std::move(es));
  }
  return SparseMatrix::from_columns(a.field(), a.rows() + b.rows(), std::move(cols));
}

SparseMatrix block_diag(const SparseMatrix& a, const SparseMatrix& b) {
  std::vector<SparseVector> cols(a.columns());
  for (const auto& c : b.columns()) {
    std::vector<Entry> es;
    for (const auto& e : c.entries()) es.push_back(Entry{e.index + a.rows(), e.value});
    cols.emplace_back(std::move(es));
  }
  return SparseMatrix::from_columns(a.field(), a.rows() + b.rows(), std::move(cols));
}

void Accumulator::add(std::size_t index, const Scalar& v) {
  if (v.is_zero()) return;
  if (!seen_[index]) {
    seen_[index] = true;
    touched_.push_back(index);
  }
  values_[index] += v;
}

void Accumulator::add_mul(std::size_t index, const Scalar& a, const Scalar& b) {
  if (a.is_zero() || b.is_zero()) return;
  if (!seen_[index]) {
    seen_[index] = true;
    touched_.push_back(index);
  }
  values_[index].add_mul(a, b);
}

void Accumulator::add_scaled(const SparseVector& v, const Scalar& c) {
  for (const auto& e : v.entries()) add_mul(e.index, e.value, c);
}

SparseVector Accumulator::take() {
  std::sort(touched_.begin(), touched_.end());
  std::vector<Entry> out;
  out.reserve(touched_.size());
  for (auto i : touched_) {
    if (!values_[i].is_zero()) out.push_back(Entry{i, std::move(values_[i])});
    values_[i] = Scalar();
    seen_[i] = false;
  }
  touched_.clear();
  return SparseVector(std::move(out));
}

}  // namespace hopfcoh
