#include "hopfcoh/cohomology.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <sstream>
#include <thread>

namespace hopfcoh {

namespace {

Scalar sign(Field f, std::size_t k) { return k % 2 ? -f.one() : f.one(); }

SparseMatrix eye(Field f, std::size_t n) { return SparseMatrix::identity(f, n); }

void run_parallel(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& task) {
  std::vector<std::exception_ptr> errors(count);
  auto guarded = [&](std::size_t i) {
    try {
      task(i);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  };
  if (threads <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) guarded(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    const unsigned n = std::min<std::size_t>(threads, count);
    for (unsigned t = 0; t < n; ++t)
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < count; i = next++) guarded(i);
      });
    for (auto& th : pool) th.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

void check_budget(std::size_t p, std::size_t q, std::size_t out_dim, std::size_t in_dim, std::size_t budget) {
  const bool overflow = in_dim != 0 && out_dim > static_cast<std::size_t>(-1) / in_dim;
  if (overflow || out_dim * in_dim > budget) {
    std::ostringstream os;
    os << "cell (" << p << "," << q << ") needs a " << out_dim << " x " << in_dim
       << " cochain matrix, over the entry budget " << budget;
    throw ResourceError(os.str());
  }
}

// Coordinates of op applied to the basis of `from`, expressed in `to`.
SparseMatrix restricted_matrix(const CochainOperator& op, const Subspace& from, const Subspace& to,
                               std::size_t p, std::size_t q, const char* kind) {
  const SparseMatrix amb = op.matrix_on(from.basis());
  std::vector<SparseVector> cols;
  cols.reserve(amb.cols());
  for (const auto& c : amb.columns()) {
    if (!to.contains(c)) {
      std::ostringstream os;
      os << kind << " differential at (" << p << "," << q << ") leaves the target cell";
      throw InternalError(os.str());
    }
    cols.push_back(to.coordinates(c));
  }
  return SparseMatrix::from_columns(from.field(), to.dim(), std::move(cols));
}

std::vector<std::pair<std::size_t, std::size_t>> keys_up_to(std::size_t total) {
  std::vector<std::pair<std::size_t, std::size_t>> keys;
  for (std::size_t n = 0; n <= total; ++n)
    for (std::size_t p = 0; p <= n; ++p) keys.emplace_back(p, n - p);
  return keys;
}

}  // namespace

std::string theory_name(Theory t) {
  switch (t) {
    case Theory::GS: return "GS";
    case Theory::H4: return "H4";
    case Theory::B: return "b";
  }
  return "?";
}

Theory parse_theory(const std::string& name) {
  std::string s = name;
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  if (s == "gs") return Theory::GS;
  if (s == "h4") return Theory::H4;
  if (s == "b") return Theory::B;
  throw InputError("unknown theory '" + name + "' (expected GS, H4 or b)");
}

const Cell& DoubleComplex::cell(std::size_t p, std::size_t q) const {
  auto it = cells_.find({p, q});
  if (it == cells_.end()) throw InputError("entry (" + std::to_string(p) + "," + std::to_string(q) + ") not built");
  return it->second;
}

const CochainOperator& DoubleComplex::vertical(std::size_t p, std::size_t q) const {
  auto it = vertical_.find({p, q});
  if (it == vertical_.end()) throw InputError("no vertical differential at this entry");
  return it->second;
}

const CochainOperator& DoubleComplex::horizontal(std::size_t p, std::size_t q) const {
  auto it = horizontal_.find({p, q});
  if (it == horizontal_.end()) throw InputError("no horizontal differential at this entry");
  return it->second;
}

const SparseMatrix& DoubleComplex::vertical_matrix(std::size_t p, std::size_t q) const {
  auto it = vertical_matrix_.find({p, q});
  if (it == vertical_matrix_.end()) throw InputError("no vertical differential at this entry");
  return it->second;
}

const SparseMatrix& DoubleComplex::horizontal_matrix(std::size_t p, std::size_t q) const {
  auto it = horizontal_matrix_.find({p, q});
  if (it == horizontal_matrix_.end()) throw InputError("no horizontal differential at this entry");
  return it->second;
}

std::size_t DoubleComplex::total_dim(std::size_t n) const {
  std::size_t s = 0;
  for (std::size_t p = 0; p <= n; ++p) s += cell(p, n - p).space.dim();
  return s;
}

SparseMatrix DoubleComplex::total_differential(std::size_t n) const {
  if (n > max_degree_) throw InputError("total differential beyond the built range");
  std::vector<std::size_t> src_off(n + 2, 0), dst_off(n + 3, 0);
  for (std::size_t p = 0; p <= n; ++p) src_off[p + 1] = src_off[p] + cell(p, n - p).space.dim();
  for (std::size_t p = 0; p <= n + 1; ++p) dst_off[p + 1] = dst_off[p] + cell(p, n + 1 - p).space.dim();
  std::vector<SparseMatrix::Triplet> trips;
  for (std::size_t p = 0; p <= n; ++p) {
    const std::size_t q = n - p;
    const Scalar cv = sign_ == SignRule::VerticalFirst ? field_.one() : sign(field_, p);
    const Scalar ch = sign_ == SignRule::VerticalFirst ? sign(field_, q) : field_.one();
    const SparseMatrix& v = vertical_matrix(p, q);
    const SparseMatrix& h = horizontal_matrix(p, q);
    for (std::size_t c = 0; c < v.cols(); ++c)
      for (const auto& e : v.col(c).entries()) trips.push_back({dst_off[p] + e.index, src_off[p] + c, cv * e.value});
    for (std::size_t c = 0; c < h.cols(); ++c)
      for (const auto& e : h.col(c).entries())
        trips.push_back({dst_off[p + 1] + e.index, src_off[p] + c, ch * e.value});
  }
  return SparseMatrix::from_triplets(field_, dst_off[n + 2], src_off[n + 1], std::move(trips));
}

TotalCochain DoubleComplex::zero_cochain(std::size_t n) const {
  TotalCochain c{n, {}};
  for (std::size_t p = 0; p <= n; ++p) {
    const Cell& e = cell(p, n - p);
    c.parts.push_back(SparseMatrix::zero(field_, e.out_dim, e.in_dim));
  }
  return c;
}

TotalCochain DoubleComplex::from_coordinates(std::size_t n, const SparseVector& coords) const {
  TotalCochain c{n, {}};
  std::size_t off = 0;
  for (std::size_t p = 0; p <= n; ++p) {
    const Cell& e = cell(p, n - p);
    std::vector<Entry> local;
    for (const auto& en : coords.entries())
      if (en.index >= off && en.index < off + e.space.dim()) local.push_back({en.index - off, en.value});
    off += e.space.dim();
    c.parts.push_back(
        SparseMatrix::unflatten(field_, e.out_dim, e.in_dim, e.space.from_coordinates(SparseVector(std::move(local)))));
  }
  return c;
}

SparseVector DoubleComplex::coordinates(const TotalCochain& c) const {
  std::vector<Entry> out;
  std::size_t off = 0;
  for (std::size_t p = 0; p <= c.degree; ++p) {
    const Cell& e = cell(p, c.degree - p);
    const SparseVector local = e.space.coordinates(c.parts.at(p).flatten());
    for (const auto& en : local.entries()) out.push_back({off + en.index, en.value});
    off += e.space.dim();
  }
  return SparseVector(std::move(out));
}

bool DoubleComplex::admissible(const TotalCochain& c) const {
  if (c.parts.size() != c.degree + 1) return false;
  for (std::size_t p = 0; p <= c.degree; ++p) {
    const Cell& e = cell(p, c.degree - p);
    if (c.parts[p].rows() != e.out_dim || c.parts[p].cols() != e.in_dim) return false;
    if (!e.space.contains(c.parts[p].flatten())) return false;
  }
  return true;
}

TotalCochain DoubleComplex::apply_differential(const TotalCochain& c) const {
  const std::size_t n = c.degree;
  if (n > max_degree_) throw InputError("differential beyond the built range");
  if (c.parts.size() != n + 1) throw InputError("cochain has the wrong number of components");
  TotalCochain out = zero_cochain(n + 1);
  for (std::size_t p = 0; p <= n; ++p) {
    const std::size_t q = n - p;
    const Scalar cv = sign_ == SignRule::VerticalFirst ? field_.one() : sign(field_, p);
    const Scalar ch = sign_ == SignRule::VerticalFirst ? sign(field_, q) : field_.one();
    out.parts[p] = out.parts[p] + vertical(p, q).apply(c.parts[p]).scaled(cv);
    out.parts[p + 1] = out.parts[p + 1] + horizontal(p, q).apply(c.parts[p]).scaled(ch);
  }
  return out;
}

DoubleComplex DoubleComplex::with_sign(SignRule rule) const {
  DoubleComplex copy = *this;
  copy.sign_ = rule;
  return copy;
}

void DoubleComplex::assemble(const Recipe& recipe, const ComplexOptions& options) {
  const auto all = keys_up_to(max_degree_ + 1);
  for (const auto& [p, q] : all) {
    const auto [out, in] = recipe.shape(p, q);
    check_budget(p, q, out, in, options.entry_budget);
  }
  std::vector<Cell> built(all.size());
  run_parallel(all.size(), options.threads, [&](std::size_t i) {
    const auto [p, q] = all[i];
    const auto [out, in] = recipe.shape(p, q);
    built[i] = Cell{p, q, out, in, recipe.space(p, q)};
  });
  for (std::size_t i = 0; i < all.size(); ++i) cells_.emplace(all[i], std::move(built[i]));

  const auto inner = keys_up_to(max_degree_);
  std::vector<std::optional<CochainOperator>> vops(inner.size()), hops(inner.size());
  std::vector<SparseMatrix> vmats(inner.size()), hmats(inner.size());
  run_parallel(inner.size(), options.threads, [&](std::size_t i) {
    const auto [p, q] = inner[i];
    vops[i] = recipe.vertical(p, q);
    hops[i] = recipe.horizontal(p, q);
    const Subspace& src = cells_.at({p, q}).space;
    vmats[i] = restricted_matrix(*vops[i], src, cells_.at({p, q + 1}).space, p, q, "vertical");
    hmats[i] = restricted_matrix(*hops[i], src, cells_.at({p + 1, q}).space, p, q, "horizontal");
  });
  for (std::size_t i = 0; i < inner.size(); ++i) {
    vertical_.emplace(inner[i], std::move(*vops[i]));
    horizontal_.emplace(inner[i], std::move(*hops[i]));
    vertical_matrix_.emplace(inner[i], std::move(vmats[i]));
    horizontal_matrix_.emplace(inner[i], std::move(hmats[i]));
  }
}

namespace {

// Terms of the resolutions indexed as cell factors: X_q = Bar_{q-1}(M), Y_p = Cob^{p-1}(N),
// W_q = B_{q-1}(M), V_p = C^{p-1}(N), with X_0 = W_0 = M and Y_0 = V_0 = N.
std::size_t factor_dim(std::size_t base, std::size_t d, std::size_t k, bool two_sided) {
  return base * ipow(d, two_sided ? 2 * k : k);
}

}  // namespace

DoubleComplex build_double_complex(Theory theory, const HopfBimodule& m_in, const HopfBimodule& n_in,
                                   std::size_t max_degree, const ComplexOptions& options) {
  if (m_in.algebra() != n_in.algebra() && !m_in.hopf().same_structure(n_in.hopf()))
    throw InputError("coefficient modules over different Hopf algebras");
  const HopfBimodule m = theory == Theory::B ? regular_bimodule(m_in.algebra()) : m_in;
  const HopfBimodule n = theory == Theory::B ? regular_bimodule(m_in.algebra()) : n_in;
  const HopfAlgebra& h = m.hopf();
  const Field f = m.field();
  const std::size_t d = h.dim(), dm = m.dim(), dn = n.dim();

  DoubleComplex dc;
  dc.theory_ = theory;
  dc.field_ = f;
  dc.algebra_ = m.algebra();
  dc.sign_ = options.sign;
  dc.max_degree_ = max_degree;
  dc.source_ = m;
  dc.target_ = n;

  const bool two_sided = theory == Theory::GS;
  DoubleComplex::Recipe r;
  r.shape = [=](std::size_t p, std::size_t q) {
    return std::make_pair(factor_dim(dn, d, p, two_sided), factor_dim(dm, d, q, two_sided));
  };
  // Budget check happens in assemble before anything large is built, so
  // estimate the resolutions lazily from the shapes first.
  for (const auto& [p, q] : keys_up_to(max_degree + 1)) {
    const auto [out, in] = r.shape(p, q);
    check_budget(p, q, out, in, options.entry_budget);
  }

  if (!two_sided) {
    auto bar = std::make_shared<BimoduleComplex>(bar_resolution(m, max_degree));
    auto cob = std::make_shared<BimoduleComplex>(cobar_resolution(n, max_degree));
    auto X = [bar](std::size_t q) -> const HopfBimodule& { return bar->at(static_cast<int>(q) - 1); };
    auto Y = [cob](std::size_t p) -> const HopfBimodule& { return cob->at(static_cast<int>(p) - 1); };
    r.space = [=](std::size_t p, std::size_t q) { return hom_space(X(q), Y(p), kLeftAction | kRightCoaction); };
    r.vertical = [=](std::size_t p, std::size_t q) {
      const std::size_t y = Y(p).dim(), x = X(q).dim();
      CochainOperator op(f, y, x, y, x * d);
      op.add(f.one(), std::nullopt, 1, 1, bar->maps[q]);
      op.add(sign(f, q + 1), Y(p).right_action(), 1, d, std::nullopt);
      return op;
    };
    r.horizontal = [=](std::size_t p, std::size_t q) {
      const std::size_t y = Y(p).dim(), x = X(q).dim();
      CochainOperator op(f, y, x, d * y, x);
      op.add(f.one(), std::nullopt, d, 1, X(q).left_coaction());
      op.add(-f.one(), cob->maps[p], 1, 1, std::nullopt);
      return op;
    };
  } else {
    // Structures are needed on W_q, V_p for q, p <= max_degree; beyond that only differentials.
    auto bmaps = std::make_shared<std::vector<SparseMatrix>>(two_sided_bar_differentials(m, max_degree));
    auto cmaps = std::make_shared<std::vector<SparseMatrix>>(two_sided_cobar_differentials(n, max_degree));
    auto W = std::make_shared<std::vector<HopfBimodule>>(std::vector<HopfBimodule>{m});
    auto V = std::make_shared<std::vector<HopfBimodule>>(std::vector<HopfBimodule>{n});
    if (max_degree >= 1) {
      const auto B = two_sided_bar(m, max_degree - 1);
      const auto C = two_sided_cobar(n, max_degree - 1);
      W->insert(W->end(), B.terms.begin(), B.terms.end());
      V->insert(V->end(), C.terms.begin(), C.terms.end());
    }
    r.space = [=](std::size_t p, std::size_t q) {
      const auto [out, in] = r.shape(p, q);
      return Subspace::whole(f, out * in);
    };
    r.vertical = [=](std::size_t p, std::size_t q) {
      const std::size_t v = (*V)[p].dim(), w = (*W)[q].dim();
      CochainOperator op(f, v, w, v, d * w * d);
      op.add(f.one(), two_sided_action((*V)[p].underlying_bimodule()), d, d, std::nullopt);
      op.add(-f.one(), std::nullopt, 1, 1, (*bmaps)[q]);
      return op;
    };
    r.horizontal = [=](std::size_t p, std::size_t q) {
      const std::size_t v = (*V)[p].dim(), w = (*W)[q].dim();
      CochainOperator op(f, v, w, d * v * d, w);
      op.add(f.one(), std::nullopt, d, d, psi_embedding((*W)[q]));
      op.add(-f.one(), (*cmaps)[p], 1, 1, std::nullopt);
      return op;
    };
  }
  dc.assemble(r, options);
  return dc;
}

DoubleComplex reduced_b_complex(const HopfAlgebraPtr& hp, std::size_t max_degree, const ComplexOptions& options) {
  const HopfAlgebra& h = *hp;
  const Field f = h.field();
  const std::size_t d = h.dim();
  DoubleComplex dc;
  dc.theory_ = Theory::B;
  dc.reduced_ = true;
  dc.field_ = f;
  dc.algebra_ = hp;
  dc.sign_ = options.sign;
  dc.max_degree_ = max_degree;

  DoubleComplex::Recipe r;
  r.shape = [=](std::size_t p, std::size_t q) { return std::make_pair(ipow(d, p), ipow(d, q)); };
  r.space = [=](std::size_t p, std::size_t q) { return Subspace::whole(f, ipow(d, p) * ipow(d, q)); };
  r.vertical = [hp, f, d](std::size_t p, std::size_t q) {
    const HopfAlgebra& h = *hp;
    const std::size_t dp = ipow(d, p), dq = ipow(d, q);
    const SparseMatrix cw = componentwise_product_map(h, p);
    const SparseMatrix delta = iterated_comultiplication(h, static_cast<int>(p) - 1);
    CochainOperator op(f, dp, dq, dp, dq * d);
    // a_1 acts on the left through Delta^(p-1), a_{q+1} on the right.
    op.add(f.one(), cw, dp, 1, kron(delta, eye(f, dq)));
    for (std::size_t i = 1; i <= q; ++i)
      op.add(sign(f, i), std::nullopt, 1, 1, kron_id(ipow(d, i - 1), h.mul(), ipow(d, q - i)));
    op.add(sign(f, q + 1), cw, 1, dp, kron(eye(f, dq), delta));
    return op;
  };
  r.horizontal = [hp, f, d](std::size_t p, std::size_t q) {
    const HopfAlgebra& h = *hp;
    const std::size_t dp = ipow(d, p), dq = ipow(d, q);
    const SparseMatrix split = split_comultiplication(h, q);
    const SparseMatrix prod = iterated_multiplication(h, q);
    CochainOperator op(f, dp, dq, d * dp, dq);
    op.add(f.one(), std::nullopt, d, 1, kron(prod, eye(f, dq)) * split);
    for (std::size_t i = 1; i <= p; ++i)
      op.add(sign(f, i), kron_id(ipow(d, i - 1), h.comul(), ipow(d, p - i)), 1, 1, std::nullopt);
    op.add(sign(f, p + 1), std::nullopt, 1, d, kron(eye(f, dq), prod) * split);
    return op;
  };
  dc.assemble(r, options);
  return dc;
}

std::size_t full_cell_dimension(Theory theory, const HopfBimodule& m, const HopfBimodule& n, std::size_t p,
                                std::size_t q) {
  if (theory == Theory::GS) {
    const auto B = two_sided_bar(m, q);
    const auto C = two_sided_cobar(n, p);
    return hom_space(B.terms[q], C.terms[p]).dim();
  }
  const HopfBimodule mm = theory == Theory::B ? regular_bimodule(m.algebra()) : m;
  const HopfBimodule nn = theory == Theory::B ? regular_bimodule(m.algebra()) : n;
  const auto bar = bar_resolution(mm, q);
  const auto cob = cobar_resolution(nn, p);
  return hom_space(bar.terms[q], cob.terms[p]).dim();
}

bool total_squares_to_zero(const DoubleComplex& dc) {
  for (std::size_t n = 1; n <= dc.max_degree(); ++n)
    if (!(dc.total_differential(n) * dc.total_differential(n - 1)).is_zero()) return false;
  return true;
}

bool bicomplex_identities_hold(const DoubleComplex& dc) {
  for (std::size_t n = 0; n + 1 <= dc.max_degree(); ++n)
    for (std::size_t p = 0; p <= n; ++p) {
      const std::size_t q = n - p;
      if (!(dc.vertical_matrix(p, q + 1) * dc.vertical_matrix(p, q)).is_zero()) return false;
      if (!(dc.horizontal_matrix(p + 1, q) * dc.horizontal_matrix(p, q)).is_zero()) return false;
      if (!(dc.vertical_matrix(p + 1, q) * dc.horizontal_matrix(p, q) ==
            dc.horizontal_matrix(p, q + 1) * dc.vertical_matrix(p, q)))
        return false;
    }
  return true;
}

CohomologyResult total_cohomology(const DoubleComplex& dc, bool with_representatives) {
  const std::size_t top = dc.max_degree();
  CohomologyResult res;
  std::vector<SparseMatrix> D;
  for (std::size_t n = 0; n <= top; ++n) D.push_back(dc.total_differential(n));
  std::vector<RankKernel> rk;
  for (std::size_t n = 0; n <= top; ++n) rk.push_back(rank_and_kernel(D[n]));
  for (std::size_t n = 0; n <= top; ++n) {
    const std::size_t prev = n == 0 ? 0 : rk[n - 1].rank;
    res.total_dims.push_back(dc.total_dim(n));
    res.ranks.push_back(rk[n].rank);
    res.dims.push_back(rk[n].kernel.dim() - prev);
    std::vector<SparseVector> reps;
    if (with_representatives) {
      Echelon e(dc.field(), dc.total_dim(n));
      if (n > 0)
        for (const auto& c : D[n - 1].columns()) e.insert(c);
      for (const auto& k : rk[n].kernel.basis())
        if (e.insert(k)) reps.push_back(k);
    }
    res.representatives.push_back(std::move(reps));
  }
  return res;
}

bool is_cocycle(const DoubleComplex& dc, const TotalCochain& c) {
  for (const auto& part : dc.apply_differential(c).parts)
    if (!part.is_zero()) return false;
  return true;
}

std::optional<TotalCochain> is_coboundary(const DoubleComplex& dc, const TotalCochain& c) {
  if (!dc.admissible(c)) throw InputError("cochain does not lie in the complex");
  if (!is_cocycle(dc, c)) throw InputError("cochain is not a cocycle");
  const SparseVector coords = dc.coordinates(c);
  if (c.degree == 0) {
    if (coords.empty()) return TotalCochain{0, {}};  // degree -1 is zero
    return std::nullopt;
  }
  auto sol = solve(dc.total_differential(c.degree - 1), coords);
  if (!sol) return std::nullopt;
  return dc.from_coordinates(c.degree - 1, sol->particular);
}

SparseMatrix adjunction_phi(const HopfAlgebra& h, std::size_t p, std::size_t q, const SparseMatrix& g) {
  const Field f = h.field();
  const SparseMatrix A = kron(eye(f, ipow(h.dim(), p)), h.counit());
  const SparseMatrix B = kron(h.unit(), eye(f, ipow(h.dim(), q)));
  return A * g * B;
}

SparseMatrix adjunction_phi_inverse(const HopfAlgebra& h, std::size_t p, std::size_t q, const SparseMatrix& fr) {
  const Field f = h.field();
  const std::size_t d = h.dim();
  std::vector<std::size_t> dims(p + 1, d);
  std::vector<const SparseMatrix*> acts(p + 1, &h.mul());
  const SparseMatrix act = diagonal_left_action(h, dims, acts);
  const SparseMatrix g0 = kron(eye(f, ipow(d, p)), iterated_multiplication(h, q)) *
                          kron(fr, eye(f, ipow(d, q))) * split_comultiplication(h, q);
  return act * kron(eye(f, d), g0);
}

}  // namespace hopfcoh
