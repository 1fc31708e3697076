#pragma once

#include <optional>

#include "hopfcoh/cohomology.hpp"

namespace hopfcoh {

/// Reduced product on components: f in Hom_k(H^{p-s}, H^s) of total degree p,
/// g in Hom_k(H^{q-r}, H^r) of total degree q; result in Hom_k(H^{n-t}, H^t),
/// n = p + q, t = s + r:
///   (f u g)(a) = (-1)^{s(q-r)} f(A^(1)) Delta^(s-1)(prod B^(1)) (x) Delta^(r-1)(prod A^(2)) g(B^(2))
/// where a = A (x) B splits into the first p - s and the last q - r factors.
SparseMatrix cup_b(const HopfAlgebra& h, std::size_t p, std::size_t s, const SparseMatrix& f, std::size_t q,
                   std::size_t r, const SparseMatrix& g);

/// Product with coefficients: f : M (x) H^{p-s} -> H^s (x) L, g : L (x) H^{q-r} -> H^r (x) N,
///   (f u g)(m (x) A (x) B) = (-1)^{s(q-r)} (1^s (x) g)[f(m (x) A) . (Delta^(s-1)(prod B^(1)) (x) 1) (x) B^(2)].
SparseMatrix cup_h4(const HopfAlgebra& h, std::size_t m_dim, std::size_t l_dim, std::size_t n_dim, std::size_t p,
                    std::size_t s, const SparseMatrix& f, std::size_t q, std::size_t r, const SparseMatrix& g);

/// Bilinear extension over total-degree cochains.  `left` holds f (M -> L),
/// `right` holds g (L -> N).  Reduced b complexes use cup_b, H4 and b complexes
/// use cup_h4; GS has no cochain-level product here.
TotalCochain cup(const DoubleComplex& left, const DoubleComplex& right, const TotalCochain& f, const TotalCochain& g);
inline TotalCochain cup(const DoubleComplex& dc, const TotalCochain& f, const TotalCochain& g) {
  return cup(dc, dc, f, g);
}

/// D(f u g) = Df u g + (-1)^p f u Dg, evaluated exactly.  `product` is the
/// complex M -> N receiving f u g.
bool check_leibniz(const DoubleComplex& left, const DoubleComplex& right, const DoubleComplex& product,
                   const TotalCochain& f, const TotalCochain& g);
inline bool check_leibniz(const DoubleComplex& dc, const TotalCochain& f, const TotalCochain& g) {
  return check_leibniz(dc, dc, dc, f, g);
}

struct CommutatorVerdict {
  bool coboundary = false;
  TotalCochain commutator;
  std::optional<TotalCochain> witness;  // D(witness) = commutator
};

/// f u g - (-1)^{pq} g u f for cocycles f, g (throws InputError otherwise).
CommutatorVerdict graded_commutator_test(const DoubleComplex& dc, const TotalCochain& f, const TotalCochain& g);

/// Coordinates of the class of a degree-n cocycle in the representative basis
/// of `res`; nullopt when the cochain is not a cocycle.
std::optional<std::vector<Scalar>> class_coordinates(const DoubleComplex& dc, const CohomologyResult& res,
                                                     const TotalCochain& cocycle);

struct CupTableEntry {
  std::size_t left_degree, left_index, right_degree, right_index;
  std::vector<Scalar> product;  // in the representative basis of degree left + right
  bool commutator_coboundary = false;
};

/// Products of all pairs of representatives with total degree <= max_degree.
std::vector<CupTableEntry> cup_table(const DoubleComplex& dc, const CohomologyResult& res, std::size_t max_degree);

}  // namespace hopfcoh
