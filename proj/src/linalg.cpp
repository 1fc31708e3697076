#include "hopfcoh/linalg.hpp"

#include <algorithm>
#include <functional>
#include <queue>

namespace hopfcoh {

Subspace Subspace::span(Field field, std::size_t ambient, const std::vector<SparseVector>& vectors) {
  Echelon e(field, ambient);
  for (const auto& v : vectors) e.insert(v);
  return e.row_space();
}

Subspace Subspace::whole(Field field, std::size_t ambient) {
  Subspace s(field, ambient);
  for (std::size_t i = 0; i < ambient; ++i) {
    s.basis_.push_back(SparseVector::unit(i, field.one()));
    s.pivots_.push_back(i);
  }
  s.index_pivots();
  return s;
}

void Subspace::index_pivots() {
  pivot_pos_.assign(ambient_, -1);
  for (std::size_t i = 0; i < pivots_.size(); ++i) pivot_pos_[pivots_[i]] = static_cast<std::int64_t>(i);
}

SparseVector Subspace::coordinates(const SparseVector& v) const {
  std::vector<Entry> out;
  for (const auto& e : v.entries())
    if (e.index < pivot_pos_.size() && pivot_pos_[e.index] >= 0)
      out.push_back(Entry{static_cast<std::size_t>(pivot_pos_[e.index]), e.value});
  return SparseVector::from_unsorted(std::move(out));
}

SparseVector Subspace::from_coordinates(const SparseVector& coords) const {
  if (coords.nnz() == 1) return basis_.at(coords.entries()[0].index).scaled(coords.entries()[0].value);
  std::vector<Entry> all;
  for (const auto& e : coords.entries())
    for (const auto& b : basis_.at(e.index).entries()) all.push_back(Entry{b.index, e.value * b.value});
  return SparseVector::from_unsorted(std::move(all));
}

bool Subspace::contains(const SparseVector& v) const {
  SparseVector r = v;
  r -= from_coordinates(coordinates(v));
  return r.empty();
}

SparseMatrix Subspace::inclusion() const { return SparseMatrix::from_columns(field_, ambient_, basis_); }

SparseMatrix Subspace::coordinate_map() const {
  std::vector<SparseMatrix::Triplet> ts;
  for (std::size_t i = 0; i < pivots_.size(); ++i) ts.push_back({i, pivots_[i], field_.one()});
  return SparseMatrix::from_triplets(field_, pivots_.size(), ambient_, std::move(ts));
}

Echelon::Echelon(Field field, std::size_t dim) : field_(field), dim_(dim), pivot_row_(dim, -1) {}

SparseVector Echelon::reduce_impl(const SparseVector& v, std::vector<Scalar>& dense) const {
  if (dense.size() < dim_) dense.resize(dim_);
  std::vector<std::size_t> touched;
  std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> heap;
  for (const auto& e : v.entries()) {
    dense[e.index] = e.value;
    touched.push_back(e.index);
    if (pivot_row_[e.index] >= 0) heap.push(static_cast<std::size_t>(pivot_row_[e.index]));
  }
  std::size_t last = static_cast<std::size_t>(-1);
  while (!heap.empty()) {
    std::size_t r = heap.top();
    heap.pop();
    if (r == last) continue;
    last = r;
    Scalar coef = dense[pivots_[r]];
    if (coef.is_zero()) continue;
    Scalar neg = -coef;
    for (const auto& f : rows_[r].entries()) {
      if (dense[f.index].is_zero()) touched.push_back(f.index);
      dense[f.index].add_mul(neg, f.value);
      std::int64_t pr = pivot_row_[f.index];
      if (pr > static_cast<std::int64_t>(r)) heap.push(static_cast<std::size_t>(pr));
    }
  }
  std::sort(touched.begin(), touched.end());
  touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
  std::vector<Entry> out;
  for (auto i : touched) {
    if (!dense[i].is_zero()) out.push_back(Entry{i, std::move(dense[i])});
    dense[i] = Scalar();
  }
  return SparseVector(std::move(out));
}

SparseVector Echelon::reduce(const SparseVector& v) const { return reduce_impl(v, scratch_); }

bool Echelon::insert(SparseVector v, std::size_t pivot_limit) {
  if (!v.empty() && v.entries().back().index >= dim_) throw InputError("vector longer than echelon dimension");
  SparseVector r = reduce_impl(v, scratch_);
  if (r.empty()) return false;
  const Entry* best = nullptr;
  for (const auto& e : r.entries()) {
    if (e.index >= pivot_limit) break;
    if (!best || e.value.size_hint() < best->value.size_hint()) best = &e;
    if (best->value.size_hint() <= 2) break;  // +-1 or a residue: can't do better
  }
  if (!best) best = &r.entries().front();
  std::size_t col = best->index;
  Scalar inv = best->value.inverse();
  if (!inv.is_one()) r = r.scaled(inv);
  pivot_row_[col] = static_cast<std::int64_t>(rows_.size());
  pivots_.push_back(col);
  rows_.push_back(std::move(r));
  if (rows_.size() > 1) reduced_ = false;
  return true;
}

void Echelon::fully_reduce() {
  if (reduced_) return;
  Accumulator acc(dim_);
  for (std::size_t k = rows_.size(); k-- > 0;) {
    bool needs = false;
    for (const auto& e : rows_[k].entries())
      if (e.index != pivots_[k] && pivot_row_[e.index] >= 0) {
        needs = true;
        break;
      }
    if (!needs) continue;
    acc.add_scaled(rows_[k], field_.one());
    for (const auto& e : rows_[k].entries()) {
      std::int64_t m = pivot_row_[e.index];
      if (e.index != pivots_[k] && m >= 0) acc.add_scaled(rows_[static_cast<std::size_t>(m)], -e.value);
    }
    rows_[k] = acc.take();
  }
  reduced_ = true;
}

Subspace Echelon::row_space() {
  fully_reduce();
  Subspace s(field_, dim_);
  s.basis_ = rows_;
  s.pivots_ = pivots_;
  s.index_pivots();
  return s;
}

Subspace Echelon::null_space(std::size_t limit) {
  fully_reduce();
  limit = std::min(limit, dim_);
  std::vector<std::int64_t> free_pos(limit, -1);
  std::vector<std::size_t> free_cols;
  for (std::size_t j = 0; j < limit; ++j)
    if (pivot_row_[j] < 0) {
      free_pos[j] = static_cast<std::int64_t>(free_cols.size());
      free_cols.push_back(j);
    }
  std::vector<std::vector<Entry>> vecs(free_cols.size());
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    if (pivots_[k] >= limit) continue;
    for (const auto& e : rows_[k].entries())
      if (e.index < limit && e.index != pivots_[k] && free_pos[e.index] >= 0)
        vecs[static_cast<std::size_t>(free_pos[e.index])].push_back(Entry{pivots_[k], -e.value});
  }
  Subspace s(field_, limit);
  for (std::size_t i = 0; i < free_cols.size(); ++i) {
    vecs[i].push_back(Entry{free_cols[i], field_.one()});
    s.basis_.push_back(SparseVector::from_unsorted(std::move(vecs[i])));
    s.pivots_.push_back(free_cols[i]);
  }
  s.index_pivots();
  return s;
}

RankKernel rank_and_kernel(const SparseMatrix& m) {
  SparseMatrix t = m.transpose();
  Echelon e(m.field(), m.cols());
  for (const auto& row : t.columns()) e.insert(row);
  std::size_t r = e.rank();
  return {r, e.null_space()};
}

std::size_t rank(const SparseMatrix& m) {
  // Eliminate along the shorter side.
  if (m.cols() <= m.rows()) {
    Echelon e(m.field(), m.rows());
    for (const auto& c : m.columns()) e.insert(c);
    return e.rank();
  }
  SparseMatrix t = m.transpose();
  Echelon e(m.field(), m.cols());
  for (const auto& c : t.columns()) e.insert(c);
  return e.rank();
}

std::optional<Solution> solve(const SparseMatrix& m, const SparseVector& b) {
  if (!b.empty() && b.entries().back().index >= m.rows()) throw InputError("right-hand side longer than row count");
  const std::size_t n = m.cols();
  SparseMatrix t = m.transpose();
  Echelon e(m.field(), n + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    std::vector<Entry> row(t.col(r).entries().begin(), t.col(r).entries().end());
    Scalar br = b.at(r);
    if (!br.is_zero()) row.push_back(Entry{n, br});
    e.insert(SparseVector(std::move(row)), n);
  }
  for (auto p : e.pivots())
    if (p == n) return std::nullopt;
  e.fully_reduce();
  std::vector<Entry> x;
  for (std::size_t k = 0; k < e.rank(); ++k) {
    Scalar v = e.rows()[k].at(n);
    if (!v.is_zero()) x.push_back(Entry{e.pivots()[k], v});
  }
  return Solution{SparseVector::from_unsorted(std::move(x)), e.null_space(n)};
}

Quotient quotient(std::size_t ambient_dim, const Subspace& sub) {
  if (sub.ambient() != ambient_dim) throw InputError("subspace ambient dimension mismatch");
  const Field f = sub.field();
  std::vector<std::int64_t> pivot_of(ambient_dim, -1);
  for (std::size_t i = 0; i < sub.pivots().size(); ++i) pivot_of[sub.pivots()[i]] = static_cast<std::int64_t>(i);
  std::vector<std::int64_t> qpos(ambient_dim, -1);
  std::size_t q = 0;
  for (std::size_t a = 0; a < ambient_dim; ++a)
    if (pivot_of[a] < 0) qpos[a] = static_cast<std::int64_t>(q++);
  std::vector<SparseVector> proj_cols(ambient_dim), sec_cols(q);
  for (std::size_t a = 0; a < ambient_dim; ++a) {
    if (pivot_of[a] < 0) {
      proj_cols[a] = SparseVector::unit(static_cast<std::size_t>(qpos[a]), f.one());
      sec_cols[static_cast<std::size_t>(qpos[a])] = SparseVector::unit(a, f.one());
    } else {
      std::vector<Entry> es;
      for (const auto& e : sub.basis()[static_cast<std::size_t>(pivot_of[a])].entries())
        if (qpos[e.index] >= 0) es.push_back(Entry{static_cast<std::size_t>(qpos[e.index]), -e.value});
      proj_cols[a] = SparseVector(std::move(es));
    }
  }
  return {SparseMatrix::from_columns(f, q, std::move(proj_cols)), SparseMatrix::from_columns(f, ambient_dim, std::move(sec_cols))};
}

Subspace image(const SparseMatrix& m) { return Subspace::span(m.field(), m.rows(), m.columns()); }

}  // namespace hopfcoh
