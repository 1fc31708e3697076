#include "hopfcoh/cup.hpp"

namespace hopfcoh {

namespace {

Scalar sign(Field f, std::size_t k) { return k % 2 ? -f.one() : f.one(); }

SparseMatrix eye(Field f, std::size_t n) { return SparseMatrix::identity(f, n); }

// Delta^(k-1) o mu^(j) : H^j -> H^k.
SparseMatrix collapse(const HopfAlgebra& h, std::size_t j, std::size_t k) {
  return iterated_comultiplication(h, static_cast<int>(k) - 1) * iterated_multiplication(h, j);
}

void check_shape(const SparseMatrix& m, std::size_t rows, std::size_t cols, const char* what) {
  if (m.rows() != rows || m.cols() != cols) throw InputError(std::string("cup product: ") + what + " has the wrong shape");
}

}  // namespace

SparseMatrix cup_b(const HopfAlgebra& h, std::size_t p, std::size_t s, const SparseMatrix& f, std::size_t q,
                   std::size_t r, const SparseMatrix& g) {
  if (s > p || r > q) throw InputError("cup product: component out of range");
  const Field fld = h.field();
  const std::size_t d = h.dim(), a = p - s, b = q - r;
  const std::size_t da = ipow(d, a), db = ipow(d, b);
  check_shape(f, ipow(d, s), da, "left factor");
  check_shape(g, ipow(d, r), db, "right factor");
  const SparseMatrix split = kron(split_comultiplication(h, a), split_comultiplication(h, b));
  const SparseMatrix shuffle = permutation_map(fld, {da, da, db, db}, {0, 2, 1, 3});
  const SparseMatrix apply = kron(kron(f, collapse(h, b, s)), kron(collapse(h, a, r), g));
  const SparseMatrix merge = kron(componentwise_product_map(h, s), componentwise_product_map(h, r));
  return (merge * apply * shuffle * split).scaled(sign(fld, s * b));
}

SparseMatrix cup_h4(const HopfAlgebra& h, std::size_t m_dim, std::size_t l_dim, std::size_t n_dim, std::size_t p,
                    std::size_t s, const SparseMatrix& f, std::size_t q, std::size_t r, const SparseMatrix& g) {
  if (s > p || r > q) throw InputError("cup product: component out of range");
  const Field fld = h.field();
  const std::size_t d = h.dim(), a = p - s, b = q - r;
  const std::size_t ds = ipow(d, s), db = ipow(d, b);
  check_shape(f, ds * l_dim, m_dim * ipow(d, a), "left factor");
  check_shape(g, ipow(d, r) * n_dim, l_dim * db, "right factor");
  const SparseMatrix split = kron(eye(fld, m_dim * ipow(d, a)), split_comultiplication(h, b));
  const SparseMatrix apply = kron(kron(f, collapse(h, b, s)), eye(fld, db));
  const SparseMatrix shuffle = permutation_map(fld, {ds, l_dim, ds, db}, {0, 2, 1, 3});
  const SparseMatrix merge = kron(componentwise_product_map(h, s), eye(fld, l_dim * db));
  const SparseMatrix finish = kron(eye(fld, ds), g);
  return (finish * merge * shuffle * apply * split).scaled(sign(fld, s * b));
}

TotalCochain cup(const DoubleComplex& left, const DoubleComplex& right, const TotalCochain& f, const TotalCochain& g) {
  if (!(left.field() == right.field())) throw InputError("cup product: cochains over different fields");
  if (left.reduced() != right.reduced()) throw InputError("cup product: reduced and full cochains mixed");
  if (left.theory() == Theory::GS || right.theory() == Theory::GS)
    throw InputError("cup product: not available on GS cochains");
  if (f.parts.size() != f.degree + 1 || g.parts.size() != g.degree + 1)
    throw InputError("cup product: cochain has the wrong number of components");
  const std::size_t p = f.degree, q = g.degree, n = p + q;
  TotalCochain out{n, std::vector<SparseMatrix>(n + 1)};
  if (left.reduced()) {
    if (!left.algebra()->same_structure(*right.algebra())) throw InputError("cup product: different Hopf algebras");
    const HopfAlgebra& h = *left.algebra();
    for (std::size_t t = 0; t <= n; ++t)
      out.parts[t] = SparseMatrix::zero(h.field(), ipow(h.dim(), t), ipow(h.dim(), n - t));
    for (std::size_t s = 0; s <= p; ++s)
      for (std::size_t r = 0; r <= q; ++r) {
        if (f.parts[s].is_zero() || g.parts[r].is_zero()) continue;
        out.parts[s + r] = out.parts[s + r] + cup_b(h, p, s, f.parts[s], q, r, g.parts[r]);
      }
    return out;
  }
  const HopfBimodule& M = *left.source();
  const HopfBimodule& L = *left.target();
  const HopfBimodule& L2 = *right.source();
  const HopfBimodule& N = *right.target();
  if (!(L == L2)) throw InputError("cup product: middle coefficients differ");
  const HopfAlgebra& h = M.hopf();
  const std::size_t d = h.dim();
  for (std::size_t t = 0; t <= n; ++t)
    out.parts[t] = SparseMatrix::zero(h.field(), ipow(d, t) * N.dim(), M.dim() * ipow(d, n - t));
  for (std::size_t s = 0; s <= p; ++s)
    for (std::size_t r = 0; r <= q; ++r) {
      if (f.parts[s].is_zero() || g.parts[r].is_zero()) continue;
      out.parts[s + r] =
          out.parts[s + r] + cup_h4(h, M.dim(), L.dim(), N.dim(), p, s, f.parts[s], q, r, g.parts[r]);
    }
  return out;
}

namespace {

TotalCochain add_scaled(TotalCochain a, const TotalCochain& b, const Scalar& c) {
  for (std::size_t i = 0; i < a.parts.size(); ++i) a.parts[i] = a.parts[i] + b.parts[i].scaled(c);
  return a;
}

bool equal(const TotalCochain& a, const TotalCochain& b) {
  if (a.degree != b.degree || a.parts.size() != b.parts.size()) return false;
  for (std::size_t i = 0; i < a.parts.size(); ++i)
    if (!(a.parts[i] == b.parts[i])) return false;
  return true;
}

}  // namespace

bool check_leibniz(const DoubleComplex& left, const DoubleComplex& right, const DoubleComplex& product,
                   const TotalCochain& f, const TotalCochain& g) {
  const Field fld = product.field();
  const TotalCochain lhs = product.apply_differential(cup(left, right, f, g));
  TotalCochain rhs = cup(left, right, left.apply_differential(f), g);
  rhs = add_scaled(rhs, cup(left, right, f, right.apply_differential(g)), sign(fld, f.degree));
  return equal(lhs, rhs);
}

CommutatorVerdict graded_commutator_test(const DoubleComplex& dc, const TotalCochain& f, const TotalCochain& g) {
  if (!is_cocycle(dc, f) || !is_cocycle(dc, g)) throw InputError("commutator test needs cocycles");
  CommutatorVerdict v;
  v.commutator = add_scaled(cup(dc, f, g), cup(dc, g, f), -sign(dc.field(), f.degree * g.degree));
  v.witness = is_coboundary(dc, v.commutator);
  v.coboundary = v.witness.has_value();
  return v;
}

std::optional<std::vector<Scalar>> class_coordinates(const DoubleComplex& dc, const CohomologyResult& res,
                                                     const TotalCochain& cocycle) {
  if (!is_cocycle(dc, cocycle)) return std::nullopt;
  const std::size_t n = cocycle.degree;
  const Field f = dc.field();
  std::vector<SparseVector> cols(res.representatives.at(n).begin(), res.representatives.at(n).end());
  const std::size_t k = cols.size();
  SparseMatrix sys = SparseMatrix::from_columns(f, dc.total_dim(n), std::move(cols));
  if (n > 0) sys = hstack(sys, dc.total_differential(n - 1));
  auto sol = solve(sys, dc.coordinates(cocycle));
  if (!sol) throw InternalError("cocycle is not in the span of representatives and coboundaries");
  std::vector<Scalar> out(k, f.zero());
  for (const auto& e : sol->particular.entries())
    if (e.index < k) out[e.index] = e.value;
  return out;
}

std::vector<CupTableEntry> cup_table(const DoubleComplex& dc, const CohomologyResult& res, std::size_t max_degree) {
  std::vector<CupTableEntry> table;
  const std::size_t top = std::min(max_degree, res.representatives.size() - 1);
  for (std::size_t p = 0; p <= top; ++p)
    for (std::size_t q = 0; p + q <= top; ++q)
      for (std::size_t i = 0; i < res.representatives[p].size(); ++i)
        for (std::size_t j = 0; j < res.representatives[q].size(); ++j) {
          const TotalCochain f = dc.from_coordinates(p, res.representatives[p][i]);
          const TotalCochain g = dc.from_coordinates(q, res.representatives[q][j]);
          CupTableEntry e{p, i, q, j, {}, false};
          auto coords = class_coordinates(dc, res, cup(dc, f, g));
          if (!coords) throw InternalError("product of cocycles is not a cocycle");
          e.product = std::move(*coords);
          e.commutator_coboundary = graded_commutator_test(dc, f, g).coboundary;
          table.push_back(std::move(e));
        }
  return table;
}

}  // namespace hopfcoh
