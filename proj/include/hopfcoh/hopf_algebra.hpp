#pragma once

#include <memory>
#include <string>
#include <vector>

#include "hopfcoh/sparse.hpp"

namespace hopfcoh {

/// Finite-dimensional Hopf algebra given by structure matrices on a fixed basis.
///   mul: d x d^2, unit: d x 1, comul: d^2 x d, counit: 1 x d, antipode: d x d.
class HopfAlgebra {
 public:
  /// Validates shapes only; call check_hopf_axioms for the axioms.
  HopfAlgebra(Field field, std::vector<std::string> labels, SparseMatrix mul, SparseMatrix unit, SparseMatrix comul,
              SparseMatrix counit, SparseMatrix antipode);

  Field field() const { return field_; }
  std::size_t dim() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const SparseMatrix& mul() const { return mul_; }
  const SparseMatrix& unit() const { return unit_; }
  const SparseMatrix& comul() const { return comul_; }
  const SparseMatrix& counit() const { return counit_; }
  const SparseMatrix& antipode() const { return antipode_; }

  bool is_commutative() const;
  bool is_cocommutative() const;
  /// Structure matrices equal (labels ignored).
  bool same_structure(const HopfAlgebra& o) const;

 private:
  Field field_;
  std::vector<std::string> labels_;
  SparseMatrix mul_, unit_, comul_, counit_, antipode_;
};

using HopfAlgebraPtr = std::shared_ptr<const HopfAlgebra>;

struct AxiomCheck {
  std::string name;
  bool passed;
};

struct AxiomReport {
  std::vector<AxiomCheck> checks;
  bool all_passed() const;
  /// Names of failed checks, comma separated (empty when all pass).
  std::string failures() const;
};

/// associativity, unit, coassociativity, counit, comultiplication_multiplicative,
/// counit_multiplicative, antipode.
AxiomReport check_hopf_axioms(const HopfAlgebra& h);

/// H -> H^{(x) n+1}; n = 0 is the identity and n = -1 the counit.
SparseMatrix iterated_comultiplication(const HopfAlgebra& h, int n);
/// H^{(x) n} -> H; n = 0 is the unit and n = 1 the identity.
SparseMatrix iterated_multiplication(const HopfAlgebra& h, std::size_t n);
/// Slotwise product H^{(x)p} (x) H^{(x)p} -> H^{(x)p}; p = 0 is multiplication in k.
SparseMatrix componentwise_product_map(const HopfAlgebra& h, std::size_t p);
SparseVector componentwise_product(const HopfAlgebra& h, std::size_t p, const SparseVector& u, const SparseVector& v);
/// H^{(x)q} -> H^{(x)q} (x) H^{(x)q}: a_1..a_q |-> (a_1' .. a_q') (x) (a_1'' .. a_q'').
SparseMatrix split_comultiplication(const HopfAlgebra& h, std::size_t q);
/// 1^{(x)p} as a column in H^{(x)p}.
SparseMatrix unit_power(const HopfAlgebra& h, std::size_t p);
/// epsilon^{(x)p} as a row.
SparseMatrix counit_power(const HopfAlgebra& h, std::size_t p);

/// Group algebra from a Cayley table (table[i][j] = index of g_i g_j).
HopfAlgebra group_algebra(const std::vector<std::vector<std::size_t>>& table, Field field,
                          std::vector<std::string> labels = {});
HopfAlgebra dual_hopf_algebra(const HopfAlgebra& h);
/// Basis g^i x^j (index i*n + j); g^n = 1, x^n = 0, xg = q gx, g grouplike, x (1,g)-skew primitive.
HopfAlgebra taft_algebra(std::size_t n, const Scalar& q, Field field);

/// Cayley tables of the cyclic group C_n and the symmetric group S_3.
std::vector<std::vector<std::size_t>> cyclic_group_table(std::size_t n);
std::vector<std::vector<std::size_t>> symmetric_group3_table();

}  // namespace hopfcoh
