#include "hopfcoh/bimodule.hpp"

#include "hopfcoh/tensor.hpp"

namespace hopfcoh {

namespace {

void expect_shape(const SparseMatrix& m, std::size_t r, std::size_t c, const char* what) {
  if (m.rows() != r || m.cols() != c)
    throw InputError(std::string(what) + " has shape " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                     ", expected " + std::to_string(r) + "x" + std::to_string(c));
}

void same_base(const HopfAlgebraPtr& a, const HopfAlgebraPtr& b) {
  if (a != b && !a->same_structure(*b)) throw InputError("objects are defined over different Hopf algebras");
}

SparseMatrix eye(Field f, std::size_t n) { return SparseMatrix::identity(f, n); }

}  // namespace

HopfBimodule::HopfBimodule(HopfAlgebraPtr algebra, std::size_t dim, SparseMatrix left_action, SparseMatrix right_action,
                           SparseMatrix left_coaction, SparseMatrix right_coaction)
    : algebra_(std::move(algebra)),
      dim_(dim),
      la_(std::move(left_action)),
      ra_(std::move(right_action)),
      lc_(std::move(left_coaction)),
      rc_(std::move(right_coaction)) {
  if (!algebra_) throw InputError("Hopf bimodule without base algebra");
  const std::size_t d = algebra_->dim();
  expect_shape(la_, dim_, d * dim_, "left action");
  expect_shape(ra_, dim_, dim_ * d, "right action");
  expect_shape(lc_, d * dim_, dim_, "left coaction");
  expect_shape(rc_, dim_ * d, dim_, "right coaction");
}

bool operator==(const HopfBimodule& a, const HopfBimodule& b) {
  return a.dim_ == b.dim_ && a.la_ == b.la_ && a.ra_ == b.ra_ && a.lc_ == b.lc_ && a.rc_ == b.rc_;
}

AxiomReport check_bimodule(const Bimodule& v) {
  const HopfAlgebra& h = *v.algebra;
  const Field f = h.field();
  const std::size_t d = h.dim(), m = v.dim;
  expect_shape(v.left_action, m, d * m, "left action");
  expect_shape(v.right_action, m, m * d, "right action");
  const auto I = eye(f, m), Id = eye(f, d);
  const auto& la = v.left_action;
  const auto& ra = v.right_action;
  AxiomReport r;
  r.checks.push_back({"left_associativity", la * kron(h.mul(), I) == la * kron(Id, la)});
  r.checks.push_back({"left_unit", la * kron(h.unit(), I) == I});
  r.checks.push_back({"right_associativity", ra * kron(ra, Id) == ra * kron(I, h.mul())});
  r.checks.push_back({"right_unit", ra * kron(I, h.unit()) == I});
  r.checks.push_back({"actions_commute", ra * kron(la, Id) == la * kron(Id, ra)});
  return r;
}

AxiomReport check_hopf_bimodule(const HopfBimodule& mod) {
  const HopfAlgebra& h = mod.hopf();
  const Field f = h.field();
  const std::size_t d = h.dim(), m = mod.dim();
  const auto I = eye(f, m), Id = eye(f, d);
  const auto& la = mod.left_action();
  const auto& ra = mod.right_action();
  const auto& lc = mod.left_coaction();
  const auto& rc = mod.right_coaction();
  AxiomReport r = check_bimodule(mod.underlying_bimodule());
  r.checks.push_back({"left_coassociativity", kron(h.comul(), I) * lc == kron(Id, lc) * lc});
  r.checks.push_back({"left_counit", kron(h.counit(), I) * lc == I});
  r.checks.push_back({"right_coassociativity", kron(rc, Id) * rc == kron(I, h.comul()) * rc});
  r.checks.push_back({"right_counit", kron(I, h.counit()) * rc == I});
  r.checks.push_back({"coactions_commute", kron(lc, Id) * rc == kron(Id, rc) * lc});
  // The coactions are bimodule maps for the diagonal actions on H (x) M and M (x) H.
  r.checks.push_back({"left_coaction_left_linear",
                      lc * la == kron(h.mul(), la) * kron_id(d, swap_map(f, d, d), m) * kron(h.comul(), lc)});
  r.checks.push_back({"left_coaction_right_linear",
                      lc * ra == kron(h.mul(), ra) * kron_id(d, swap_map(f, m, d), d) * kron(lc, h.comul())});
  r.checks.push_back({"right_coaction_left_linear",
                      rc * la == kron(la, h.mul()) * kron_id(d, swap_map(f, d, m), d) * kron(h.comul(), rc)});
  r.checks.push_back({"right_coaction_right_linear",
                      rc * ra == kron(ra, h.mul()) * kron_id(m, swap_map(f, d, d), d) * kron(rc, h.comul())});
  return r;
}

AxiomReport check_morphism(const HopfBimodule& m, const HopfBimodule& n, const SparseMatrix& f, unsigned structures) {
  same_base(m.algebra(), n.algebra());
  expect_shape(f, n.dim(), m.dim(), "morphism");
  const std::size_t d = m.hopf().dim();
  const auto Id = eye(m.field(), d);
  AxiomReport r;
  if (structures & kLeftAction) r.checks.push_back({"left_action", f * m.left_action() == n.left_action() * kron(Id, f)});
  if (structures & kRightAction) r.checks.push_back({"right_action", f * m.right_action() == n.right_action() * kron(f, Id)});
  if (structures & kLeftCoaction)
    r.checks.push_back({"left_coaction", n.left_coaction() * f == kron(Id, f) * m.left_coaction()});
  if (structures & kRightCoaction)
    r.checks.push_back({"right_coaction", n.right_coaction() * f == kron(f, Id) * m.right_coaction()});
  return r;
}

bool is_morphism(const HopfBimodule& m, const HopfBimodule& n, const SparseMatrix& f) {
  return check_morphism(m, n, f).all_passed();
}

HopfBimodule regular_bimodule(const HopfAlgebraPtr& h) {
  return HopfBimodule(h, h->dim(), h->mul(), h->mul(), h->comul(), h->comul());
}

Bimodule regular_plain_bimodule(const HopfAlgebraPtr& h) { return {h, h->dim(), h->mul(), h->mul()}; }

Bimodule trivial_bimodule(const HopfAlgebraPtr& h) { return {h, 1, h->counit(), h->counit()}; }

Bimodule free_bimodule(const HopfAlgebraPtr& h) {
  const std::size_t d = h->dim();
  return {h, d * d, kron(h->mul(), eye(h->field(), d)), kron(eye(h->field(), d), h->mul())};
}

SparseMatrix diagonal_left_action(const HopfAlgebra& h, const std::vector<std::size_t>& dims,
                                  const std::vector<const SparseMatrix*>& actions) {
  const std::size_t k = dims.size(), d = h.dim();
  if (k == 0 || actions.size() != k) throw InputError("diagonal action needs one action per factor");
  std::size_t total = 1;
  for (auto x : dims) total *= x;
  SparseMatrix split = kron(iterated_comultiplication(h, static_cast<int>(k) - 1), eye(h.field(), total));
  std::vector<std::size_t> slot_dims(2 * k), perm(2 * k);
  for (std::size_t i = 0; i < k; ++i) {
    slot_dims[i] = d;
    slot_dims[k + i] = dims[i];
    perm[2 * i] = i;
    perm[2 * i + 1] = k + i;
  }
  SparseMatrix act = *actions[0];
  for (std::size_t i = 1; i < k; ++i) act = kron(act, *actions[i]);
  return act * permutation_map(h.field(), slot_dims, perm) * split;
}

SparseMatrix diagonal_right_action(const HopfAlgebra& h, const std::vector<std::size_t>& dims,
                                   const std::vector<const SparseMatrix*>& actions) {
  const std::size_t k = dims.size(), d = h.dim();
  if (k == 0 || actions.size() != k) throw InputError("diagonal action needs one action per factor");
  std::size_t total = 1;
  for (auto x : dims) total *= x;
  SparseMatrix split = kron(eye(h.field(), total), iterated_comultiplication(h, static_cast<int>(k) - 1));
  std::vector<std::size_t> slot_dims(2 * k), perm(2 * k);
  for (std::size_t i = 0; i < k; ++i) {
    slot_dims[i] = dims[i];
    slot_dims[k + i] = d;
    perm[2 * i] = i;
    perm[2 * i + 1] = k + i;
  }
  SparseMatrix act = *actions[0];
  for (std::size_t i = 1; i < k; ++i) act = kron(act, *actions[i]);
  return act * permutation_map(h.field(), slot_dims, perm) * split;
}

SparseMatrix two_sided_action(const Bimodule& v) {
  const std::size_t d = v.algebra->dim();
  return v.right_action * kron(v.left_action, eye(v.algebra->field(), d));
}

HopfBimodule under_tensor(const HopfBimodule& m, const HopfBimodule& n) {
  same_base(m.algebra(), n.algebra());
  const HopfAlgebra& h = m.hopf();
  const Field f = h.field();
  const std::size_t d = h.dim(), a = m.dim(), b = n.dim();
  SparseMatrix la = kron(m.left_action(), eye(f, b));
  SparseMatrix ra = kron(eye(f, a), n.right_action());
  SparseMatrix lc = kron(h.mul(), eye(f, a * b)) * kron_id(d, swap_map(f, a, d), b) * kron(m.left_coaction(), n.left_coaction());
  SparseMatrix rc = kron(eye(f, a * b), h.mul()) * kron_id(a, swap_map(f, d, b), d) * kron(m.right_coaction(), n.right_coaction());
  return HopfBimodule(m.algebra(), a * b, std::move(la), std::move(ra), std::move(lc), std::move(rc));
}

HopfBimodule bar_tensor(const HopfBimodule& m, const HopfBimodule& n) {
  same_base(m.algebra(), n.algebra());
  const HopfAlgebra& h = m.hopf();
  const Field f = h.field();
  const std::size_t a = m.dim(), b = n.dim();
  SparseMatrix la = diagonal_left_action(h, {a, b}, {&m.left_action(), &n.left_action()});
  SparseMatrix ra = diagonal_right_action(h, {a, b}, {&m.right_action(), &n.right_action()});
  SparseMatrix lc = kron(m.left_coaction(), eye(f, b));
  SparseMatrix rc = kron(eye(f, a), n.right_coaction());
  return HopfBimodule(m.algebra(), a * b, std::move(la), std::move(ra), std::move(lc), std::move(rc));
}

HopfBimodule sandwich(const Bimodule& v) {
  const HopfAlgebra& h = *v.algebra;
  const Field f = h.field();
  const std::size_t d = h.dim(), n = v.dim;
  SparseMatrix la = diagonal_left_action(h, {d, n, d}, {&h.mul(), &v.left_action, &h.mul()});
  SparseMatrix ra = diagonal_right_action(h, {d, n, d}, {&h.mul(), &v.right_action, &h.mul()});
  SparseMatrix lc = kron(h.comul(), eye(f, n * d));
  SparseMatrix rc = kron(eye(f, d * n), h.comul());
  return HopfBimodule(v.algebra, d * n * d, std::move(la), std::move(ra), std::move(lc), std::move(rc));
}

namespace {

// Structure maps of M transported along a projection P : M -> Q with section S : Q -> M.
HopfBimodule transport(const HopfBimodule& m, const SparseMatrix& P, const SparseMatrix& S) {
  const std::size_t d = m.hopf().dim();
  const auto Id = eye(m.field(), d);
  return HopfBimodule(m.algebra(), P.rows(), P * m.left_action() * kron(Id, S), P * m.right_action() * kron(S, Id),
                      kron(Id, P) * m.left_coaction() * S, kron(P, Id) * m.right_coaction() * S);
}

// True when the subspace with inclusion `incl` and annihilator `kill` (kernel = subspace) is stable.
bool is_stable(const HopfBimodule& m, const SparseMatrix& incl, const SparseMatrix& kill) {
  const std::size_t d = m.hopf().dim();
  const auto Id = eye(m.field(), d);
  return (kill * m.left_action() * kron(Id, incl)).is_zero() && (kill * m.right_action() * kron(incl, Id)).is_zero() &&
         (kron(Id, kill) * m.left_coaction() * incl).is_zero() && (kron(kill, Id) * m.right_coaction() * incl).is_zero();
}

}  // namespace

SubQuotient quotient_bimodule(const HopfBimodule& m, const Subspace& sub) {
  auto q = quotient(m.dim(), sub);
  if (!is_stable(m, sub.inclusion(), q.projection)) throw InternalError("subspace is not stable under the structure maps");
  return {transport(m, q.projection, q.section), q.projection, q.section};
}

SubQuotient kernel_bimodule(const HopfBimodule& m, const HopfBimodule& n, const SparseMatrix& f) {
  same_base(m.algebra(), n.algebra());
  expect_shape(f, n.dim(), m.dim(), "morphism");
  auto rk = rank_and_kernel(f);
  SparseMatrix incl = rk.kernel.inclusion();
  if (!is_stable(m, incl, f)) throw InternalError("kernel is not stable under the structure maps");
  SparseMatrix coord = rk.kernel.coordinate_map();
  return {transport(m, coord, incl), incl, coord};
}

SubQuotient cokernel_bimodule(const HopfBimodule& m, const HopfBimodule& n, const SparseMatrix& f) {
  same_base(m.algebra(), n.algebra());
  expect_shape(f, n.dim(), m.dim(), "morphism");
  return quotient_bimodule(n, image(f));
}

SubQuotient tensor_over_H(const HopfBimodule& e, const HopfBimodule& f) {
  same_base(e.algebra(), f.algebra());
  const Field fld = e.field();
  HopfBimodule ef = under_tensor(e, f);
  SparseMatrix rel = kron(e.right_action(), eye(fld, f.dim())) - kron(eye(fld, e.dim()), f.left_action());
  return quotient_bimodule(ef, image(rel));
}

DirectSum direct_sum(const HopfBimodule& m, const HopfBimodule& n) {
  same_base(m.algebra(), n.algebra());
  const Field f = m.field();
  const std::size_t d = m.hopf().dim(), a = m.dim(), b = n.dim(), s = a + b;
  std::vector<SparseMatrix::Triplet> t1, t2, p1, p2;
  for (std::size_t x = 0; x < a; ++x) {
    t1.push_back({x, x, f.one()});
    p1.push_back({x, x, f.one()});
  }
  for (std::size_t y = 0; y < b; ++y) {
    t2.push_back({a + y, y, f.one()});
    p2.push_back({y, a + y, f.one()});
  }
  DirectSum out{HopfBimodule(m.algebra(), 0, SparseMatrix(f, 0, 0), SparseMatrix(f, 0, 0), SparseMatrix(f, 0, 0),
                             SparseMatrix(f, 0, 0)),
                SparseMatrix::from_triplets(f, s, a, std::move(t1)), SparseMatrix::from_triplets(f, s, b, std::move(t2)),
                SparseMatrix::from_triplets(f, a, s, std::move(p1)), SparseMatrix::from_triplets(f, b, s, std::move(p2))};
  const auto Id = eye(f, d);
  // Each structure map is the sum of its two blocks moved into place.
  auto act_l = out.inject1 * m.left_action() * kron(Id, out.project1) + out.inject2 * n.left_action() * kron(Id, out.project2);
  auto act_r = out.inject1 * m.right_action() * kron(out.project1, Id) + out.inject2 * n.right_action() * kron(out.project2, Id);
  auto co_l = kron(Id, out.inject1) * m.left_coaction() * out.project1 + kron(Id, out.inject2) * n.left_coaction() * out.project2;
  auto co_r = kron(out.inject1, Id) * m.right_coaction() * out.project1 + kron(out.inject2, Id) * n.right_coaction() * out.project2;
  out.module = HopfBimodule(m.algebra(), s, std::move(act_l), std::move(act_r), std::move(co_l), std::move(co_r));
  return out;
}

namespace {

struct Maps {
  std::size_t dim;
  const SparseMatrix *la, *ra, *lc, *rc;
};

Subspace hom_space_impl(const HopfAlgebra& h, const Maps& m, const Maps& n, unsigned structures) {
  const Field f = h.field();
  const std::size_t d = h.dim(), a = m.dim, b = n.dim;
  const Scalar one = f.one(), minus = -f.one();
  std::vector<CochainOperator> ops;
  if (structures & kLeftAction) {
    CochainOperator op(f, b, a, b, d * a);
    op.add(one, std::nullopt, 1, 1, *m.la).add(minus, *n.la, d, 1, std::nullopt);
    ops.push_back(std::move(op));
  }
  if (structures & kRightAction) {
    CochainOperator op(f, b, a, b, a * d);
    op.add(one, std::nullopt, 1, 1, *m.ra).add(minus, *n.ra, 1, d, std::nullopt);
    ops.push_back(std::move(op));
  }
  if (structures & kLeftCoaction) {
    CochainOperator op(f, b, a, d * b, a);
    op.add(one, *n.lc, 1, 1, std::nullopt).add(minus, std::nullopt, d, 1, *m.lc);
    ops.push_back(std::move(op));
  }
  if (structures & kRightCoaction) {
    CochainOperator op(f, b, a, b * d, a);
    op.add(one, *n.rc, 1, 1, std::nullopt).add(minus, std::nullopt, 1, d, *m.rc);
    ops.push_back(std::move(op));
  }
  const std::size_t unknowns = a * b;
  if (ops.empty()) return Subspace::whole(f, unknowns);
  // Each unknown contributes one column; rows of the stacked system are
  // concatenated residual coordinates.
  Echelon e(f, unknowns);
  std::vector<std::vector<Entry>> row_bucket;
  for (const auto& op : ops) {
    const std::size_t len = op.dst_out() * op.dst_in();
    row_bucket.assign(len, {});
    for (std::size_t u = 0; u < unknowns; ++u) {
      auto col = op.apply_flat(SparseVector::unit(u, one));
      for (const auto& en : col.entries()) row_bucket[en.index].push_back(Entry{u, en.value});
    }
    for (auto& r : row_bucket)
      if (!r.empty()) e.insert(SparseVector(std::move(r)));
  }
  return e.null_space(unknowns);
}

Maps maps_of(const HopfBimodule& m) {
  return {m.dim(), &m.left_action(), &m.right_action(), &m.left_coaction(), &m.right_coaction()};
}

}  // namespace

Subspace hom_space(const HopfBimodule& m, const HopfBimodule& n, unsigned structures) {
  same_base(m.algebra(), n.algebra());
  return hom_space_impl(m.hopf(), maps_of(m), maps_of(n), structures);
}

Subspace hom_space(const HopfBimodule& m, const Bimodule& v) {
  same_base(m.algebra(), v.algebra);
  Maps target{v.dim, &v.left_action, &v.right_action, nullptr, nullptr};
  return hom_space_impl(m.hopf(), maps_of(m), target, kActions);
}

SparseMatrix hom_element(const Subspace& hom, std::size_t index, std::size_t target_dim, std::size_t source_dim) {
  return SparseMatrix::unflatten(hom.field(), target_dim, source_dim, hom.basis().at(index));
}

SparseMatrix psi_embedding(const HopfBimodule& m) {
  const std::size_t d = m.hopf().dim();
  return kron(m.left_coaction(), eye(m.field(), d)) * m.right_coaction();
}

}  // namespace hopfcoh
