#include "hopfcoh/resolution.hpp"

#include "hopfcoh/tensor.hpp"

namespace hopfcoh {

namespace {

SparseMatrix eye(Field f, std::size_t n) { return SparseMatrix::identity(f, n); }

SparseMatrix signed_sum(const std::vector<SparseMatrix>& parts) {
  SparseMatrix acc = parts.at(0);
  for (std::size_t i = 1; i < parts.size(); ++i) acc = (i % 2 == 1) ? acc - parts[i] : acc + parts[i];
  return acc;
}

void check_cap(std::size_t dim, std::size_t cap, const char* what, std::size_t degree) {
  if (cap != 0 && dim > cap)
    throw ResourceError(std::string(what) + " term of degree " + std::to_string(degree) + " has dimension " +
                        std::to_string(dim) + " (cap " + std::to_string(cap) + ")");
}

}  // namespace

std::vector<SparseMatrix> bar_differentials(const HopfBimodule& m, std::size_t q_max) {
  const HopfAlgebra& h = m.hopf();
  const std::size_t d = h.dim(), dm = m.dim();
  std::vector<SparseMatrix> maps{m.right_action()};
  for (std::size_t q = 1; q <= q_max; ++q) {
    std::vector<SparseMatrix> faces{kron(m.right_action(), eye(m.field(), ipow(d, q)))};
    for (std::size_t i = 1; i <= q; ++i) faces.push_back(kron_id(dm * ipow(d, i - 1), h.mul(), ipow(d, q - i)));
    maps.push_back(signed_sum(faces));
  }
  return maps;
}

std::vector<SparseMatrix> cobar_differentials(const HopfBimodule& n, std::size_t p_max) {
  const HopfAlgebra& h = n.hopf();
  const std::size_t d = h.dim(), dn = n.dim();
  std::vector<SparseMatrix> maps{n.left_coaction()};
  for (std::size_t p = 0; p < p_max; ++p) {
    std::vector<SparseMatrix> cofaces;
    for (std::size_t i = 0; i <= p; ++i) cofaces.push_back(kron_id(ipow(d, i), h.comul(), ipow(d, p - i) * dn));
    cofaces.push_back(kron_id(ipow(d, p + 1), n.left_coaction(), 1));
    maps.push_back(signed_sum(cofaces));
  }
  return maps;
}

std::vector<SparseMatrix> two_sided_bar_differentials(const HopfBimodule& m, std::size_t q_max) {
  const HopfAlgebra& h = m.hopf();
  const Field f = m.field();
  const std::size_t d = h.dim();
  const SparseMatrix act = two_sided_action(m.underlying_bimodule());
  const SparseMatrix Im = eye(f, m.dim());
  std::vector<SparseMatrix> maps{act};
  for (std::size_t q = 1; q <= q_max; ++q) {
    // Face i merges left factors (i, i+1) and the mirrored right pair; face q acts on M.
    std::vector<SparseMatrix> faces;
    for (std::size_t i = 0; i < q; ++i)
      faces.push_back(kron(kron(kron_id(ipow(d, i), h.mul(), ipow(d, q - 1 - i)), Im),
                           kron_id(ipow(d, q - 1 - i), h.mul(), ipow(d, i))));
    faces.push_back(kron_id(ipow(d, q), act, ipow(d, q)));
    maps.push_back(signed_sum(faces));
  }
  return maps;
}

std::vector<SparseMatrix> two_sided_cobar_differentials(const HopfBimodule& n, std::size_t p_max) {
  const HopfAlgebra& h = n.hopf();
  const Field f = n.field();
  const std::size_t d = h.dim();
  const SparseMatrix psi = psi_embedding(n);
  const SparseMatrix In = eye(f, n.dim());
  std::vector<SparseMatrix> maps{psi};
  for (std::size_t p = 0; p < p_max; ++p) {
    std::vector<SparseMatrix> cofaces;
    for (std::size_t j = 0; j <= p; ++j)
      cofaces.push_back(kron(kron(kron_id(ipow(d, j), h.comul(), ipow(d, p - j)), In),
                             kron_id(ipow(d, p - j), h.comul(), ipow(d, j))));
    cofaces.push_back(kron_id(ipow(d, p + 1), psi, ipow(d, p + 1)));
    maps.push_back(signed_sum(cofaces));
  }
  return maps;
}

BimoduleComplex bar_resolution(const HopfBimodule& m, std::size_t q_max, std::size_t dim_cap) {
  const auto H = regular_bimodule(m.algebra());
  BimoduleComplex c{true, Family::Bar, m, {}, {}};
  for (std::size_t q = 0; q <= q_max; ++q) {
    check_cap(m.dim() * ipow(H.dim(), q + 1), dim_cap, "bar resolution", q);
    c.terms.push_back(under_tensor(q == 0 ? m : c.terms.back(), H));
  }
  c.maps = bar_differentials(m, q_max);
  return c;
}

BimoduleComplex cobar_resolution(const HopfBimodule& n, std::size_t p_max, std::size_t dim_cap) {
  const auto H = regular_bimodule(n.algebra());
  BimoduleComplex c{false, Family::Cobar, n, {}, {}};
  for (std::size_t p = 0; p <= p_max; ++p) {
    check_cap(n.dim() * ipow(H.dim(), p + 1), dim_cap, "cobar resolution", p);
    c.terms.push_back(bar_tensor(H, p == 0 ? n : c.terms.back()));
  }
  c.maps = cobar_differentials(n, p_max);
  return c;
}

BimoduleComplex two_sided_bar(const HopfBimodule& m, std::size_t q_max, std::size_t dim_cap) {
  const auto H = regular_bimodule(m.algebra());
  BimoduleComplex c{true, Family::TwoSidedBar, m, {}, {}};
  for (std::size_t q = 0; q <= q_max; ++q) {
    check_cap(m.dim() * ipow(H.dim(), 2 * q + 2), dim_cap, "two-sided bar resolution", q);
    c.terms.push_back(under_tensor(under_tensor(H, q == 0 ? m : c.terms.back()), H));
  }
  c.maps = two_sided_bar_differentials(m, q_max);
  return c;
}

BimoduleComplex two_sided_cobar(const HopfBimodule& n, std::size_t p_max, std::size_t dim_cap) {
  const auto H = regular_bimodule(n.algebra());
  BimoduleComplex c{false, Family::TwoSidedCobar, n, {}, {}};
  for (std::size_t p = 0; p <= p_max; ++p) {
    check_cap(n.dim() * ipow(H.dim(), 2 * p + 2), dim_cap, "two-sided cobar resolution", p);
    c.terms.push_back(bar_tensor(bar_tensor(H, p == 0 ? n : c.terms.back()), H));
  }
  c.maps = two_sided_cobar_differentials(n, p_max);
  return c;
}

bool squares_to_zero(const std::vector<SparseMatrix>& maps, bool chain) {
  for (std::size_t k = 1; k < maps.size(); ++k) {
    const SparseMatrix prod = chain ? maps[k - 1] * maps[k] : maps[k] * maps[k - 1];
    if (!prod.is_zero()) return false;
  }
  return true;
}

bool maps_are_morphisms(const BimoduleComplex& c) {
  for (std::size_t k = 0; k < c.maps.size(); ++k) {
    const int lo = static_cast<int>(k) - 1, hi = static_cast<int>(k);
    const bool ok = c.chain ? is_morphism(c.at(hi), c.at(lo), c.maps[k]) : is_morphism(c.at(lo), c.at(hi), c.maps[k]);
    if (!ok) return false;
  }
  return true;
}

std::vector<std::optional<std::size_t>> check_exactness(const std::vector<SparseMatrix>& maps, bool chain,
                                                        bool with_augmentation) {
  const std::size_t top = maps.size() - 1;
  std::vector<std::size_t> ranks(maps.size());
  for (std::size_t k = 0; k < maps.size(); ++k)
    if (k > 0 || with_augmentation) ranks[k] = rank(maps[k]);
  auto dim_at = [&](std::size_t k) { return chain ? maps[k].cols() : maps[k].rows(); };
  const std::size_t end_dim = chain ? maps[0].rows() : maps[0].cols();
  std::vector<std::optional<std::size_t>> out(top + 2);
  if (with_augmentation) out[0] = end_dim - ranks[0];
  for (std::size_t k = 0; k < top; ++k) {
    // Chains: outgoing maps[k], incoming maps[k+1]; cochains the other way round.
    const std::size_t r_out = chain ? (k > 0 || with_augmentation ? ranks[k] : 0) : ranks[k + 1];
    const std::size_t r_in = chain ? ranks[k + 1] : (k > 0 || with_augmentation ? ranks[k] : 0);
    out[k + 1] = dim_at(k) - r_out - r_in;
  }
  return out;
}

std::vector<std::optional<std::size_t>> check_exactness(const BimoduleComplex& c, bool with_augmentation) {
  return check_exactness(c.maps, c.chain, with_augmentation);
}

bool is_contracting_homotopy(const std::vector<SparseMatrix>& d, const std::vector<SparseMatrix>& s, bool chain) {
  if (s.size() != d.size()) return false;
  const Field f = d[0].field();
  const std::size_t top = d.size() - 1;
  try {
    if (chain) {
      if (!(d[0] * s[0] == eye(f, d[0].rows()))) return false;
      for (std::size_t q = 0; q < top; ++q)
        if (!(d[q + 1] * s[q + 1] + s[q] * d[q] == eye(f, d[q].cols()))) return false;
    } else {
      if (!(s[0] * d[0] == eye(f, d[0].cols()))) return false;
      for (std::size_t p = 0; p < top; ++p)
        if (!(d[p] * s[p] + s[p + 1] * d[p + 1] == eye(f, d[p].rows()))) return false;
    }
  } catch (const InputError&) {
    return false;  // shape mismatch
  }
  return true;
}

std::vector<SparseMatrix> canonical_homotopy(const BimoduleComplex& c) {
  const HopfAlgebra& h = c.end.hopf();
  const Field f = h.field();
  std::vector<SparseMatrix> s;
  for (std::size_t k = 0; k <= c.top(); ++k) {
    // Both directions act on the term one degree below.
    const auto I = eye(f, c.at(static_cast<int>(k) - 1).dim());
    switch (c.family) {
      case Family::Bar:
        s.push_back(k % 2 == 0 ? kron(I, h.unit()) : kron(I, h.unit()).scaled(-f.one()));
        break;
      case Family::TwoSidedBar:
        s.push_back(kron({h.unit(), I, h.unit()}));
        break;
      case Family::Cobar:
        s.push_back(kron(h.counit(), I));
        break;
      case Family::TwoSidedCobar:
        s.push_back(kron({h.counit(), I, h.counit()}));
        break;
      case Family::Other:
        return {};
    }
  }
  return s;
}

namespace {

bool intertwines(const BimoduleComplex& c, const std::vector<SparseMatrix>& s, unsigned structures) {
  for (std::size_t k = 0; k < s.size(); ++k) {
    const int lo = static_cast<int>(k) - 1, hi = static_cast<int>(k);
    const auto r = c.chain ? check_morphism(c.at(lo), c.at(hi), s[k], structures)
                           : check_morphism(c.at(hi), c.at(lo), s[k], structures);
    if (!r.all_passed()) return false;
  }
  return true;
}

// Finds X in the structured hom space from src to dst with  L X = R  (left = true)
// or  X L = R  (left = false).
std::optional<SparseMatrix> solve_structured(const HopfBimodule& src, const HopfBimodule& dst, unsigned structures,
                                             const SparseMatrix& L, bool left, const SparseMatrix& R) {
  const Subspace hom = hom_space(src, dst, structures);
  std::vector<SparseVector> cols;
  for (std::size_t j = 0; j < hom.dim(); ++j) {
    SparseMatrix b = hom_element(hom, j, dst.dim(), src.dim());
    cols.push_back((left ? L * b : b * L).flatten());
  }
  const SparseMatrix sys = SparseMatrix::from_columns(src.field(), R.rows() * R.cols(), std::move(cols));
  auto sol = solve(sys, R.flatten());
  if (!sol) return std::nullopt;
  SparseVector x = hom.from_coordinates(sol->particular);
  return SparseMatrix::unflatten(src.field(), dst.dim(), src.dim(), x);
}

}  // namespace

std::optional<Splitting> find_relative_splitting(const BimoduleComplex& c, unsigned structures, SplittingMethod method) {
  if (method != SplittingMethod::Solve) {
    auto s = canonical_homotopy(c);
    if (!s.empty() && is_contracting_homotopy(c.maps, s, c.chain) && intertwines(c, s, structures))
      return Splitting{"canonical", std::move(s)};
    if (method == SplittingMethod::Canonical) return std::nullopt;
  }
  const Field f = c.end.field();
  std::vector<SparseMatrix> s;
  for (std::size_t k = 0; k <= c.top(); ++k) {
    const HopfBimodule& lo = c.at(static_cast<int>(k) - 1);
    const HopfBimodule& hi = c.at(static_cast<int>(k));
    std::optional<SparseMatrix> x;
    if (c.chain) {
      // d_k s_k = id - s_{k-1} d_{k-1}
      SparseMatrix rhs = eye(f, lo.dim());
      if (k > 0) rhs = rhs - s[k - 1] * c.maps[k - 1];
      x = solve_structured(lo, hi, structures, c.maps[k], true, rhs);
    } else {
      // t_k d_k = id - d_{k-1} t_{k-1}
      SparseMatrix rhs = eye(f, lo.dim());
      if (k > 0) rhs = rhs - c.maps[k - 1] * s[k - 1];
      x = solve_structured(hi, lo, structures, c.maps[k], false, rhs);
    }
    if (!x) return std::nullopt;
    s.push_back(std::move(*x));
  }
  if (!is_contracting_homotopy(c.maps, s, c.chain)) throw InternalError("solved homotopy fails verification");
  return Splitting{"solve", std::move(s)};
}

}  // namespace hopfcoh
