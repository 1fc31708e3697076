#include "hopfcoh/extensions.hpp"

#include <sstream>

namespace hopfcoh {

namespace {

Scalar sign(Field f, std::size_t k) { return k % 2 ? -f.one() : f.one(); }

SparseMatrix eye(Field f, std::size_t n) { return SparseMatrix::identity(f, n); }

struct Blocks {
  HopfBimodule module;
  std::vector<SparseMatrix> inject, project;
};

Blocks direct_sum_all(const HopfAlgebraPtr& h, const std::vector<HopfBimodule>& parts) {
  const Field f = h->field();
  const std::size_t d = h->dim();
  std::size_t total = 0;
  for (const auto& m : parts) total += m.dim();
  Blocks out{HopfBimodule(h, 0, SparseMatrix(f, 0, 0), SparseMatrix(f, 0, 0), SparseMatrix(f, 0, 0),
                          SparseMatrix(f, 0, 0)),
             {},
             {}};
  SparseMatrix la(f, total, d * total), ra(f, total, total * d), lc(f, d * total, total), rc(f, total * d, total);
  const SparseMatrix Id = eye(f, d);
  std::size_t off = 0;
  for (const auto& m : parts) {
    std::vector<SparseMatrix::Triplet> ti, tp;
    for (std::size_t x = 0; x < m.dim(); ++x) {
      ti.push_back({off + x, x, f.one()});
      tp.push_back({x, off + x, f.one()});
    }
    SparseMatrix in = SparseMatrix::from_triplets(f, total, m.dim(), std::move(ti));
    SparseMatrix pr = SparseMatrix::from_triplets(f, m.dim(), total, std::move(tp));
    la = la + in * m.left_action() * kron(Id, pr);
    ra = ra + in * m.right_action() * kron(pr, Id);
    lc = lc + kron(Id, in) * m.left_coaction() * pr;
    rc = rc + kron(in, Id) * m.right_coaction() * pr;
    out.inject.push_back(std::move(in));
    out.project.push_back(std::move(pr));
    off += m.dim();
  }
  out.module = HopfBimodule(h, total, std::move(la), std::move(ra), std::move(lc), std::move(rc));
  return out;
}

void require_regular_ends(const Extension& e, const char* what) {
  const HopfBimodule H = regular_bimodule(e.left_end.algebra());
  if (!(e.left_end == H) || !(e.right_end == H))
    throw InputError(std::string(what) + " needs extensions of H by itself");
}

}  // namespace

const HopfBimodule& Extension::at(int k) const {
  if (k < 0) return right_end;
  if (static_cast<std::size_t>(k) == terms.size()) return left_end;
  return terms.at(static_cast<std::size_t>(k));
}

ExtensionReport check_extension(const Extension& e) {
  ExtensionReport r;
  const std::size_t n = e.length();
  auto fail = [&](const std::string& msg) {
    if (r.failure.empty()) r.failure = msg;
  };
  if (n == 0) {
    r.failure = "extension has length 0";
    return r;
  }
  if (e.maps.size() != n + 1) {
    r.failure = "extension needs length + 1 maps";
    return r;
  }
  for (std::size_t k = 0; k <= n; ++k) {
    const auto& src = e.at(static_cast<int>(k));
    const auto& dst = e.at(static_cast<int>(k) - 1);
    if (e.maps[k].rows() != dst.dim() || e.maps[k].cols() != src.dim()) {
      r.failure = "map " + std::to_string(k) + " has the wrong shape";
      return r;
    }
  }
  for (std::size_t k = 1; k <= n; ++k)
    if (!(e.maps[k - 1] * e.maps[k]).is_zero()) {
      r.composites_vanish = false;
      fail("composite of consecutive maps is nonzero at degree " + std::to_string(k - 1));
    }
  std::vector<std::size_t> ranks(n + 1);
  for (std::size_t k = 0; k <= n; ++k) ranks[k] = rank(e.maps[k]);
  r.homology.push_back(e.right_end.dim() - ranks[0]);
  for (std::size_t k = 0; k <= n; ++k) {
    const std::size_t ker = e.at(static_cast<int>(k)).dim() - ranks[k];
    const std::size_t im = k < n ? ranks[k + 1] : 0;
    r.homology.push_back(ker >= im ? ker - im : 0);
  }
  for (std::size_t j = 0; j < r.homology.size(); ++j)
    if (r.homology[j] != 0) fail("not exact at degree " + std::to_string(static_cast<int>(j) - 1));
  for (std::size_t k = 0; k <= n; ++k)
    if (!is_morphism(e.at(static_cast<int>(k)), e.at(static_cast<int>(k) - 1), e.maps[k])) {
      r.morphisms = false;
      fail("map " + std::to_string(k) + " is not a Hopf bimodule morphism");
    }
  return r;
}

Extension split_extension(const HopfBimodule& m, const HopfBimodule& n) {
  DirectSum s = direct_sum(n, m);
  return Extension{n, m, {s.module}, {s.project2, s.inject1}};
}

Extension extension_from_1cocycle(const DoubleComplex& dc, const TotalCochain& c) {
  if (dc.theory() == Theory::GS || dc.reduced() || !dc.source() || !dc.target())
    throw InputError("extensions are built from cocycles of the H4 complex");
  if (c.degree != 1 || !dc.admissible(c)) throw InputError("expected a degree-1 cochain of the complex");
  if (!is_cocycle(dc, c)) throw InputError("cochain is not a cocycle");
  const HopfBimodule& M = *dc.source();
  const HopfBimodule& N = *dc.target();
  const Field f = dc.field();
  const std::size_t d = M.hopf().dim();
  const SparseMatrix& alpha = c.parts[0];  // N <- M (x) H
  const SparseMatrix& beta = c.parts[1];   // H (x) N <- M
  DirectSum s = direct_sum(N, M);
  const HopfBimodule& X = s.module;
  SparseMatrix ra = X.right_action() + s.inject1 * alpha * kron(s.project2, eye(f, d));
  SparseMatrix lc = X.left_coaction() + kron(eye(f, d), s.inject1) * beta * s.project2;
  HopfBimodule twisted(M.algebra(), X.dim(), X.left_action(), std::move(ra), std::move(lc), X.right_coaction());
  const AxiomReport rep = check_hopf_bimodule(twisted);
  if (!rep.all_passed()) throw InternalError("twisted middle term fails: " + rep.failures());
  return Extension{N, M, {twisted}, {s.project2, s.inject1}};
}

std::optional<SparseMatrix> find_splitting(const Extension& e) {
  if (e.length() != 1) throw InputError("splitting is decided for length-1 extensions only");
  const HopfBimodule& B = e.right_end;
  const HopfBimodule& E0 = e.terms[0];
  const Field f = B.field();
  const Subspace hom = hom_space(B, E0);
  std::vector<SparseVector> cols;
  for (std::size_t i = 0; i < hom.dim(); ++i) cols.push_back((e.maps[0] * hom_element(hom, i, E0.dim(), B.dim())).flatten());
  const SparseMatrix sys = SparseMatrix::from_columns(f, B.dim() * B.dim(), std::move(cols));
  auto sol = solve(sys, eye(f, B.dim()).flatten());
  if (!sol) return std::nullopt;
  return SparseMatrix::unflatten(f, E0.dim(), B.dim(), hom.from_coordinates(sol->particular));
}

Extension splice(const Extension& e, const Extension& f) {
  if (e.length() == 0 || f.length() == 0) throw InputError("splice needs extensions of positive length");
  if (!(e.left_end == f.right_end)) throw InputError("splice: left end of E differs from right end of F");
  Extension out{f.left_end, e.right_end, e.terms, {}};
  out.terms.insert(out.terms.end(), f.terms.begin(), f.terms.end());
  const std::size_t m = e.length(), n = f.length();
  for (std::size_t k = 0; k < m; ++k) out.maps.push_back(e.maps[k]);
  out.maps.push_back(e.maps[m] * f.maps[0]);
  for (std::size_t k = 1; k <= n; ++k) out.maps.push_back(f.maps[k]);
  return out;
}

Extension negate(const Extension& e) {
  Extension out = e;
  out.maps.at(0) = out.maps.at(0).scaled(-e.right_end.field().one());
  return out;
}

Extension negate_power(const Extension& e, std::size_t k) { return k % 2 ? negate(e) : e; }

Extension baer_sum(const Extension& e, const Extension& f) {
  const std::size_t n = e.length();
  if (n == 0 || f.length() != n) throw InputError("Baer sum needs extensions of the same positive length");
  if (!(e.left_end == f.left_end) || !(e.right_end == f.right_end)) throw InputError("Baer sum needs equal end objects");
  const HopfBimodule& A = e.left_end;
  const HopfBimodule& B = e.right_end;
  std::vector<HopfBimodule> terms;
  std::vector<SparseMatrix> maps(n + 1);
  std::vector<DirectSum> sums;
  for (std::size_t k = 0; k < n; ++k) {
    sums.push_back(direct_sum(e.terms[k], f.terms[k]));
    terms.push_back(sums.back().module);
  }
  for (std::size_t k = 1; k < n; ++k)
    maps[k] = sums[k - 1].inject1 * e.maps[k] * sums[k].project1 + sums[k - 1].inject2 * f.maps[k] * sums[k].project2;

  // Pullback: pairs with equal image in B.
  const SparseMatrix diff = e.maps[0] * sums[0].project1 - f.maps[0] * sums[0].project2;
  SubQuotient pb = kernel_bimodule(terms[0], B, diff);
  maps[0] = e.maps[0] * sums[0].project1 * pb.map;
  if (n > 1) maps[1] = pb.section * maps[1];
  terms[0] = pb.module;
  SparseMatrix into_top = sums[n - 1].inject1 * e.maps[n];  // A -> top term before the pushout
  SparseMatrix anti = sums[n - 1].inject1 * e.maps[n] - sums[n - 1].inject2 * f.maps[n];
  if (n == 1) {
    into_top = pb.section * into_top;
    anti = pb.section * anti;
  }

  // Pushout: identify i_E(a) with i_F(a).
  SubQuotient po = cokernel_bimodule(A, terms[n - 1], anti);
  maps[n - 1] = maps[n - 1] * po.section;
  maps[n] = po.map * into_top;
  terms[n - 1] = po.module;
  return Extension{A, B, std::move(terms), std::move(maps)};
}

TensorExtension tensor_extensions(const Extension& e, const Extension& f) {
  require_regular_ends(e, "tensor product");
  require_regular_ends(f, "tensor product");
  const HopfAlgebraPtr& hp = e.left_end.algebra();
  const HopfAlgebra& h = *hp;
  const Field fld = h.field();
  const std::size_t m = e.length(), n = f.length(), top = m + n, d = h.dim();
  const HopfBimodule H = regular_bimodule(hp);
  TensorExtension t{Extension{H, H, {}, {}}, m, n, {}, {}};
  t.summands.assign(top + 1, std::vector<std::optional<SubQuotient>>(m + 1));
  t.offsets.assign(top + 1, std::vector<std::size_t>(m + 1, 0));
  std::vector<Blocks> blocks;
  for (std::size_t r = 0; r <= top; ++r) {
    std::vector<HopfBimodule> parts;
    std::size_t off = 0;
    for (std::size_t s = (r > n ? r - n : 0); s <= std::min(m, r); ++s) {
      t.summands[r][s] = tensor_over_H(e.at(static_cast<int>(s)), f.at(static_cast<int>(r - s)));
      t.offsets[r][s] = off;
      off += t.summands[r][s]->module.dim();
      parts.push_back(t.summands[r][s]->module);
    }
    blocks.push_back(direct_sum_all(hp, parts));
  }
  auto block_index = [&](std::size_t r, std::size_t s) { return s - (r > n ? r - n : 0); };

  // D_r : T_r -> T_{r-1} for r = 1 .. top.
  std::vector<SparseMatrix> D(top + 1);
  for (std::size_t r = 1; r <= top; ++r) {
    SparseMatrix acc(fld, blocks[r - 1].module.dim(), blocks[r].module.dim());
    for (std::size_t s = (r > n ? r - n : 0); s <= std::min(m, r); ++s) {
      const std::size_t tt = r - s;
      const SubQuotient& src = *t.summands[r][s];
      const SparseMatrix from = src.section * blocks[r].project[block_index(r, s)];
      if (s >= 1 && t.summands[r - 1][s - 1]) {
        const SubQuotient& dst = *t.summands[r - 1][s - 1];
        const SparseMatrix piece = dst.map * kron(e.maps[s], eye(fld, f.at(static_cast<int>(tt)).dim())) * from;
        acc = acc + blocks[r - 1].inject[block_index(r - 1, s - 1)] * piece;
      }
      if (tt >= 1 && t.summands[r - 1][s]) {
        const SubQuotient& dst = *t.summands[r - 1][s];
        const SparseMatrix piece = dst.map * kron(eye(fld, e.at(static_cast<int>(s)).dim()), f.maps[tt]) * from;
        acc = acc + (blocks[r - 1].inject[block_index(r - 1, s)] * piece).scaled(sign(fld, s));
      }
    }
    D[r] = std::move(acc);
  }

  Extension& out = t.ext;
  for (std::size_t r = 0; r < top; ++r) out.terms.push_back(blocks[r].module);
  // Augmentation p_E (x) p_F followed by H (x)_H H = H.
  const SubQuotient& base = *t.summands[0][0];
  out.maps.push_back(h.mul() * kron(e.maps[0], f.maps[0]) * base.section * blocks[0].project[0]);
  for (std::size_t r = 1; r < top; ++r) out.maps.push_back(D[r]);
  // H = H (x)_H H at the top, a |-> [1 (x) a].
  const SubQuotient& apex = *t.summands[top][m];
  const SparseMatrix lift = blocks[top].inject[0] * apex.map * kron(h.unit(), eye(fld, d));
  out.maps.push_back(D[top] * lift);
  return t;
}

bool is_chain_map(const Extension& source, const Extension& target, const ChainMap& phi) {
  const std::size_t n = source.length();
  if (target.length() != n || phi.components.size() != n + 2) return false;
  for (std::size_t k = 0; k < n + 2; ++k) {
    const auto& s = source.at(static_cast<int>(k) - 1);
    const auto& t = target.at(static_cast<int>(k) - 1);
    const SparseMatrix& c = phi.components[k];
    if (c.rows() != t.dim() || c.cols() != s.dim()) return false;
    if (!is_morphism(s, t, c)) return false;
  }
  for (std::size_t k = 0; k <= n; ++k)
    if (!(target.maps[k] * phi.components[k + 1] == phi.components[k] * source.maps[k])) return false;
  return true;
}

namespace {

// Component of degree r that reads only the summand s and applies `body` to its representatives.
SparseMatrix from_summand(const TensorExtension& t, std::size_t r, std::size_t s, const SparseMatrix& body) {
  const SubQuotient& sq = *t.summands[r][s];
  const std::size_t total = r == t.m + t.n ? sq.module.dim() : t.ext.terms[r].dim();
  const Field f = body.field();
  std::vector<SparseMatrix::Triplet> tp;
  for (std::size_t x = 0; x < sq.module.dim(); ++x) tp.push_back({x, t.offsets[r][s] + x, f.one()});
  const SparseMatrix pick = SparseMatrix::from_triplets(f, sq.module.dim(), total, std::move(tp));
  return body * sq.section * pick;
}

// The top degree of a tensor extension is H itself; turn a map out of the apex
// summand into a map out of H.
SparseMatrix at_apex(const TensorExtension& t, const HopfAlgebra& h, const SparseMatrix& body) {
  const SubQuotient& apex = *t.summands[t.m + t.n][t.m];
  return body * apex.section * apex.map * kron(h.unit(), eye(h.field(), h.dim()));
}

}  // namespace

ChainMap lambda_map(const TensorExtension& t, const Extension& e, const Extension& f) {
  const HopfAlgebra& h = e.left_end.hopf();
  const Field fld = h.field();
  const std::size_t m = t.m, n = t.n, top = m + n;
  ChainMap phi;
  phi.components.push_back(eye(fld, h.dim()));
  for (std::size_t i = 0; i <= top; ++i) {
    SparseMatrix body;
    std::size_t s;
    if (i < n) {
      s = 0;
      const HopfBimodule& Fi = f.at(static_cast<int>(i));
      body = Fi.left_action() * kron(e.maps[0], eye(fld, Fi.dim()));
    } else {
      s = i - n;
      body = e.at(static_cast<int>(s)).right_action();
    }
    phi.components.push_back(i == top ? at_apex(t, h, body) : from_summand(t, i, s, body));
  }
  return phi;
}

ChainMap rho_map(const TensorExtension& t, const Extension& e, const Extension& f) {
  const HopfAlgebra& h = e.left_end.hopf();
  const Field fld = h.field();
  const std::size_t m = t.m, n = t.n, top = m + n;
  ChainMap phi;
  phi.components.push_back(eye(fld, h.dim()));
  for (std::size_t j = 0; j <= top; ++j) {
    SparseMatrix body;
    std::size_t s;
    if (j < m) {
      s = j;
      const HopfBimodule& Ej = e.at(static_cast<int>(j));
      body = (Ej.right_action() * kron(eye(fld, Ej.dim()), f.maps[0])).scaled(sign(fld, m * n));
    } else {
      s = m;
      body = f.at(static_cast<int>(j - m)).left_action().scaled(sign(fld, m * (n + j - m)));
    }
    phi.components.push_back(j == top ? at_apex(t, h, body) : from_summand(t, j, s, body));
  }
  return phi;
}

}  // namespace hopfcoh
