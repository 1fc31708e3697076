#include "hopfcoh/hopf_algebra.hpp"

#include "hopfcoh/tensor.hpp"

namespace hopfcoh {

namespace {

void expect_shape(const SparseMatrix& m, std::size_t r, std::size_t c, const char* what) {
  if (m.rows() != r || m.cols() != c)
    throw InputError(std::string(what) + " has shape " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                     ", expected " + std::to_string(r) + "x" + std::to_string(c));
}

SparseVector tensor_vec(const SparseVector& u, const SparseVector& v, std::size_t dim_v) {
  std::vector<Entry> out;
  out.reserve(u.nnz() * v.nnz());
  for (const auto& a : u.entries())
    for (const auto& b : v.entries()) out.push_back(Entry{a.index * dim_v + b.index, a.value * b.value});
  return SparseVector(std::move(out));
}

}  // namespace

HopfAlgebra::HopfAlgebra(Field field, std::vector<std::string> labels, SparseMatrix mul, SparseMatrix unit,
                         SparseMatrix comul, SparseMatrix counit, SparseMatrix antipode)
    : field_(field),
      labels_(std::move(labels)),
      mul_(std::move(mul)),
      unit_(std::move(unit)),
      comul_(std::move(comul)),
      counit_(std::move(counit)),
      antipode_(std::move(antipode)) {
  const std::size_t d = labels_.size();
  if (d == 0) throw InputError("Hopf algebra must have positive dimension");
  expect_shape(mul_, d, d * d, "multiplication");
  expect_shape(unit_, d, 1, "unit");
  expect_shape(comul_, d * d, d, "comultiplication");
  expect_shape(counit_, 1, d, "counit");
  expect_shape(antipode_, d, d, "antipode");
  for (const SparseMatrix* m : {&mul_, &unit_, &comul_, &counit_, &antipode_})
    if (!(m->field() == field_)) throw InputError("structure matrix over a different field");
}

bool HopfAlgebra::is_commutative() const { return mul_ * swap_map(field_, dim(), dim()) == mul_; }

bool HopfAlgebra::is_cocommutative() const { return swap_map(field_, dim(), dim()) * comul_ == comul_; }

bool HopfAlgebra::same_structure(const HopfAlgebra& o) const {
  return field_ == o.field_ && dim() == o.dim() && mul_ == o.mul_ && unit_ == o.unit_ && comul_ == o.comul_ &&
         counit_ == o.counit_ && antipode_ == o.antipode_;
}

bool AxiomReport::all_passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

std::string AxiomReport::failures() const {
  std::string s;
  for (const auto& c : checks)
    if (!c.passed) s += (s.empty() ? "" : ", ") + c.name;
  return s;
}

AxiomReport check_hopf_axioms(const HopfAlgebra& h) {
  const Field f = h.field();
  const std::size_t d = h.dim();
  const auto I = SparseMatrix::identity(f, d);
  const auto& mu = h.mul();
  const auto& eta = h.unit();
  const auto& delta = h.comul();
  const auto& eps = h.counit();
  const auto& S = h.antipode();
  const auto one = SparseMatrix::identity(f, 1);
  AxiomReport r;
  r.checks.push_back({"associativity", mu * kron(mu, I) == mu * kron(I, mu)});
  r.checks.push_back({"unit", mu * kron(eta, I) == I && mu * kron(I, eta) == I});
  r.checks.push_back({"coassociativity", kron(delta, I) * delta == kron(I, delta) * delta});
  r.checks.push_back({"counit", kron(eps, I) * delta == I && kron(I, eps) * delta == I});
  const auto mid_swap = kron_id(d, swap_map(f, d, d), d);
  r.checks.push_back({"comultiplication_multiplicative",
                      delta * mu == kron(mu, mu) * mid_swap * kron(delta, delta) && delta * eta == kron(eta, eta)});
  r.checks.push_back({"counit_multiplicative", eps * mu == kron(eps, eps) && eps * eta == one});
  const auto ee = eta * eps;
  r.checks.push_back({"antipode", mu * kron(S, I) * delta == ee && mu * kron(I, S) * delta == ee});
  return r;
}

SparseMatrix iterated_comultiplication(const HopfAlgebra& h, int n) {
  if (n < -1) throw InputError("iterated comultiplication needs n >= -1");
  if (n == -1) return h.counit();
  SparseMatrix r = SparseMatrix::identity(h.field(), h.dim());
  for (int k = 1; k <= n; ++k) r = kron_id(1, h.comul(), ipow(h.dim(), static_cast<std::size_t>(k - 1))) * r;
  return r;
}

SparseMatrix iterated_multiplication(const HopfAlgebra& h, std::size_t n) {
  if (n == 0) return h.unit();
  SparseMatrix r = SparseMatrix::identity(h.field(), h.dim());
  for (std::size_t k = 2; k <= n; ++k) r = h.mul() * kron_id(1, r, h.dim());
  return r;
}

SparseMatrix componentwise_product_map(const HopfAlgebra& h, std::size_t p) {
  if (p == 0) return SparseMatrix::identity(h.field(), 1);
  SparseMatrix m = h.mul();
  for (std::size_t k = 1; k < p; ++k) m = kron(m, h.mul());
  return m * interleave_map(h.field(), h.dim(), p);
}

SparseVector componentwise_product(const HopfAlgebra& h, std::size_t p, const SparseVector& u, const SparseVector& v) {
  const std::size_t n = ipow(h.dim(), p);
  for (const SparseVector* w : {&u, &v})
    if (!w->empty() && w->entries().back().index >= n) throw InputError("vector does not lie in the given tensor power");
  return componentwise_product_map(h, p).apply(tensor_vec(u, v, n));
}

SparseMatrix split_comultiplication(const HopfAlgebra& h, std::size_t q) {
  if (q == 0) return SparseMatrix::identity(h.field(), 1);
  SparseMatrix m = h.comul();
  for (std::size_t k = 1; k < q; ++k) m = kron(m, h.comul());
  return deinterleave_map(h.field(), h.dim(), q) * m;
}

SparseMatrix unit_power(const HopfAlgebra& h, std::size_t p) {
  SparseMatrix m = SparseMatrix::identity(h.field(), 1);
  for (std::size_t k = 0; k < p; ++k) m = kron(m, h.unit());
  return m;
}

SparseMatrix counit_power(const HopfAlgebra& h, std::size_t p) {
  SparseMatrix m = SparseMatrix::identity(h.field(), 1);
  for (std::size_t k = 0; k < p; ++k) m = kron(m, h.counit());
  return m;
}

std::vector<std::vector<std::size_t>> cyclic_group_table(std::size_t n) {
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[i][j] = (i + j) % n;
  return t;
}

std::vector<std::vector<std::size_t>> symmetric_group3_table() {
  // Permutations of {0,1,2} as images, in lexicographic order; element 0 is the identity.
  const std::vector<std::vector<std::size_t>> perms = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  std::vector<std::vector<std::size_t>> t(6, std::vector<std::size_t>(6));
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) {
      std::vector<std::size_t> c(3);
      for (std::size_t x = 0; x < 3; ++x) c[x] = perms[i][perms[j][x]];  // (ij)(x) = i(j(x))
      for (std::size_t k = 0; k < 6; ++k)
        if (perms[k] == c) t[i][j] = k;
    }
  return t;
}

HopfAlgebra group_algebra(const std::vector<std::vector<std::size_t>>& table, Field field,
                          std::vector<std::string> labels) {
  const std::size_t n = table.size();
  if (n == 0) throw InputError("empty group table");
  for (const auto& row : table) {
    if (row.size() != n) throw InputError("group table is not square");
    for (auto x : row)
      if (x >= n) throw InputError("group table entry out of range");
  }
  std::size_t e = n;
  for (std::size_t i = 0; i < n && e == n; ++i) {
    bool ok = true;
    for (std::size_t j = 0; j < n && ok; ++j) ok = table[i][j] == j && table[j][i] == j;
    if (ok) e = i;
  }
  if (e == n) throw InputError("group table has no identity");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]]) throw InputError("group table is not associative");
  std::vector<std::size_t> inv(n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (table[a][b] == e && table[b][a] == e) inv[a] = b;
  for (auto x : inv)
    if (x == n) throw InputError("group table has an element without inverse");
  if (labels.empty())
    for (std::size_t i = 0; i < n; ++i) labels.push_back(i == e ? "e" : "g" + std::to_string(i));
  if (labels.size() != n) throw InputError("label count does not match group order");

  std::vector<SparseMatrix::Triplet> mul, comul, counit, anti;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) mul.push_back({table[a][b], a * n + b, field.one()});
    comul.push_back({a * n + a, a, field.one()});
    counit.push_back({0, a, field.one()});
    anti.push_back({inv[a], a, field.one()});
  }
  return HopfAlgebra(field, std::move(labels), SparseMatrix::from_triplets(field, n, n * n, std::move(mul)),
                     SparseMatrix::from_triplets(field, n, 1, {{e, 0, field.one()}}),
                     SparseMatrix::from_triplets(field, n * n, n, std::move(comul)),
                     SparseMatrix::from_triplets(field, 1, n, std::move(counit)),
                     SparseMatrix::from_triplets(field, n, n, std::move(anti)));
}

HopfAlgebra dual_hopf_algebra(const HopfAlgebra& h) {
  std::vector<std::string> labels;
  for (const auto& l : h.labels()) labels.push_back(l.rfind("d:", 0) == 0 ? l.substr(2) : "d:" + l);
  return HopfAlgebra(h.field(), std::move(labels), h.comul().transpose(), h.counit().transpose(), h.mul().transpose(),
                     h.unit().transpose(), h.antipode().transpose());
}

HopfAlgebra taft_algebra(std::size_t n, const Scalar& q, Field field) {
  if (n < 2) throw InputError("Taft algebra needs n >= 2");
  if (!(q.field() == field) && !q.is_zero()) throw InputError("root of unity lies in a different field");
  Scalar pw = field.one();
  for (std::size_t k = 1; k <= n; ++k) {
    pw *= q;
    if (k < n && pw.is_one()) throw InputError("q is not a primitive n-th root of unity");
  }
  if (!pw.is_one()) throw InputError("q is not an n-th root of unity");

  const std::size_t d = n * n;
  auto idx = [n](std::size_t i, std::size_t j) { return (i % n) * n + j; };
  std::vector<Scalar> qpow(n * n);
  qpow[0] = field.one();
  for (std::size_t k = 1; k < n * n; ++k) qpow[k] = qpow[k - 1] * q;

  std::vector<SparseMatrix::Triplet> mul;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t e = 0; e < n; ++e)
          if (b + e < n) mul.push_back({idx(a + c, b + e), idx(a, b) * d + idx(c, e), qpow[(b * c) % n]});
  SparseMatrix mu = SparseMatrix::from_triplets(field, d, d * d, std::move(mul));

  auto one = SparseVector::unit(0, field.one());
  auto gv = SparseVector::unit(idx(1, 0), field.one());
  auto xv = SparseVector::unit(idx(0, 1), field.one());
  auto prod = [&](const SparseVector& u, const SparseVector& v) { return mu.apply(tensor_vec(u, v, d)); };
  // Multiplication in H (x) H.
  const SparseMatrix mu2 = kron(mu, mu) * kron_id(d, swap_map(field, d, d), d);
  auto prod2 = [&](const SparseVector& u, const SparseVector& v) { return mu2.apply(tensor_vec(u, v, d * d)); };

  SparseVector dg = tensor_vec(gv, gv, d);
  SparseVector dx = tensor_vec(xv, one, d);
  dx += tensor_vec(gv, xv, d);
  SparseVector sg = SparseVector::unit(idx(n - 1, 0), field.one());
  SparseVector sx = SparseVector::unit(idx(n - 1, 1), -field.one());

  std::vector<SparseVector> comul_cols(d), anti_cols(d);
  std::vector<SparseMatrix::Triplet> counit;
  std::vector<std::string> labels(d);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      SparseVector c = tensor_vec(one, one, d), s = one;
      for (std::size_t k = 0; k < i; ++k) {
        c = prod2(c, dg);
        s = prod(sg, s);
      }
      SparseVector sxj = one;
      for (std::size_t k = 0; k < j; ++k) {
        c = prod2(c, dx);
        sxj = prod(sxj, sx);
      }
      // S(g^i x^j) = S(x)^j S(g)^i
      comul_cols[idx(i, j)] = std::move(c);
      anti_cols[idx(i, j)] = prod(sxj, s);
      if (j == 0) counit.push_back({0, idx(i, j), field.one()});
      std::string l;
      if (i > 0) l += i == 1 ? "g" : "g^" + std::to_string(i);
      if (j > 0) l += j == 1 ? "x" : "x^" + std::to_string(j);
      labels[idx(i, j)] = l.empty() ? "1" : l;
    }
  return HopfAlgebra(field, std::move(labels), std::move(mu), SparseMatrix::from_triplets(field, d, 1, {{0, 0, field.one()}}),
                     SparseMatrix::from_columns(field, d * d, std::move(comul_cols)),
                     SparseMatrix::from_triplets(field, 1, d, std::move(counit)),
                     SparseMatrix::from_columns(field, d, std::move(anti_cols)));
}

}  // namespace hopfcoh
