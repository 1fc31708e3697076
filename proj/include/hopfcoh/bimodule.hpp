#pragma once

#include <memory>

#include "hopfcoh/hopf_algebra.hpp"
#include "hopfcoh/linalg.hpp"

namespace hopfcoh {

/// Structure kinds, usable as a bit mask.
enum Structure : unsigned {
  kLeftAction = 1,
  kRightAction = 2,
  kLeftCoaction = 4,
  kRightCoaction = 8,
  kActions = kLeftAction | kRightAction,
  kCoactions = kLeftCoaction | kRightCoaction,
  kAllStructure = kActions | kCoactions,
};

/// H-bimodule: left action H (x) V -> V (v x dv) and right action V (x) H -> V (v x vd).
struct Bimodule {
  HopfAlgebraPtr algebra;
  std::size_t dim = 0;
  SparseMatrix left_action, right_action;
};

/// Hopf bimodule over H.  Matrices:
///   left_action  m x (d m),  right_action  m x (m d),
///   left_coaction (d m) x m, right_coaction (m d) x m.
class HopfBimodule {
 public:
  HopfBimodule(HopfAlgebraPtr algebra, std::size_t dim, SparseMatrix left_action, SparseMatrix right_action,
               SparseMatrix left_coaction, SparseMatrix right_coaction);

  const HopfAlgebraPtr& algebra() const { return algebra_; }
  const HopfAlgebra& hopf() const { return *algebra_; }
  Field field() const { return algebra_->field(); }
  std::size_t dim() const { return dim_; }
  const SparseMatrix& left_action() const { return la_; }
  const SparseMatrix& right_action() const { return ra_; }
  const SparseMatrix& left_coaction() const { return lc_; }
  const SparseMatrix& right_coaction() const { return rc_; }
  Bimodule underlying_bimodule() const { return {algebra_, dim_, la_, ra_}; }

  friend bool operator==(const HopfBimodule& a, const HopfBimodule& b);

 private:
  HopfAlgebraPtr algebra_;
  std::size_t dim_;
  SparseMatrix la_, ra_, lc_, rc_;
};

AxiomReport check_bimodule(const Bimodule& v);
AxiomReport check_hopf_bimodule(const HopfBimodule& m);
/// Intertwining checks for F : M -> N restricted to the selected structures.
AxiomReport check_morphism(const HopfBimodule& m, const HopfBimodule& n, const SparseMatrix& f,
                           unsigned structures = kAllStructure);
bool is_morphism(const HopfBimodule& m, const HopfBimodule& n, const SparseMatrix& f);

HopfBimodule regular_bimodule(const HopfAlgebraPtr& h);
/// H as an H-bimodule, the trivial bimodule k (actions through the counit),
/// and the free bimodule H (x) H (left action on the first factor, right on the second).
Bimodule regular_plain_bimodule(const HopfAlgebraPtr& h);
Bimodule trivial_bimodule(const HopfAlgebraPtr& h);
Bimodule free_bimodule(const HopfAlgebraPtr& h);

/// Regular actions on the outer factors, codiagonal coactions.
HopfBimodule under_tensor(const HopfBimodule& m, const HopfBimodule& n);
/// Diagonal actions, regular coactions on the outer factors.
HopfBimodule bar_tensor(const HopfBimodule& m, const HopfBimodule& n);
/// H (x) V (x) H with diagonal actions and the coactions of the outer H factors.
HopfBimodule sandwich(const Bimodule& v);

/// Diagonal left action of H on X_1 (x) ... (x) X_k (dims[i], actions[i]).
SparseMatrix diagonal_left_action(const HopfAlgebra& h, const std::vector<std::size_t>& dims,
                                  const std::vector<const SparseMatrix*>& actions);
SparseMatrix diagonal_right_action(const HopfAlgebra& h, const std::vector<std::size_t>& dims,
                                   const std::vector<const SparseMatrix*>& actions);
/// H (x) V (x) H -> V, h (x) v (x) h' |-> h v h'.
SparseMatrix two_sided_action(const Bimodule& v);

struct SubQuotient {
  HopfBimodule module;
  SparseMatrix map;      // inclusion (kernel) or projection (cokernel, tensor over H)
  SparseMatrix section;  // coordinate map (kernel) or section (cokernel)
};

SubQuotient kernel_bimodule(const HopfBimodule& m, const HopfBimodule& n, const SparseMatrix& f);
SubQuotient cokernel_bimodule(const HopfBimodule& m, const HopfBimodule& n, const SparseMatrix& f);
/// E (x)_H F as the quotient of E (x) F (under-tensor structure) by span{eh (x) f - e (x) hf}.
SubQuotient tensor_over_H(const HopfBimodule& e, const HopfBimodule& f);
/// Quotient of m by a subspace stable under all structure maps (checked).
SubQuotient quotient_bimodule(const HopfBimodule& m, const Subspace& sub);

struct DirectSum {
  HopfBimodule module;
  SparseMatrix inject1, inject2, project1, project2;
};
DirectSum direct_sum(const HopfBimodule& m, const HopfBimodule& n);

/// Solutions F : M -> N of the intertwining identities for the selected
/// structures, as flattened n x m matrices (row-major).
Subspace hom_space(const HopfBimodule& m, const HopfBimodule& n, unsigned structures = kAllStructure);
/// Bimodule maps from the underlying bimodule of a Hopf bimodule to a bimodule.
Subspace hom_space(const HopfBimodule& m, const Bimodule& v);
SparseMatrix hom_element(const Subspace& hom, std::size_t index, std::size_t target_dim, std::size_t source_dim);

/// m |-> m_(-1) (x) m_(0) (x) m_(1) into sandwich(underlying bimodule of M).
SparseMatrix psi_embedding(const HopfBimodule& m);

}  // namespace hopfcoh
