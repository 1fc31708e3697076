#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hopfcoh/bimodule.hpp"
#include "hopfcoh/resolution.hpp"
#include "hopfcoh/tensor.hpp"

namespace hopfcoh {

enum class Theory { GS, H4, B };
std::string theory_name(Theory t);
Theory parse_theory(const std::string& name);

/// Placement of the sign on the total differential at entry (p, q):
///   VerticalFirst:   D = d_v + (-1)^q d_h
///   HorizontalFirst: D = d_h + (-1)^p d_v
enum class SignRule { VerticalFirst, HorizontalFirst };

struct ComplexOptions {
  /// Refuse any cell whose cochain matrix has more potential entries.
  std::size_t entry_budget = 100'000'000;
  unsigned threads = 1;
  SignRule sign = SignRule::VerticalFirst;
};

/// Entry (p, q) of a double complex: p is the cobar degree, q the bar degree.
/// Cochains are out_dim x in_dim matrices; admissible ones form `space`
/// (flattened row-major).
///
/// The full entries Hom(Bar_q(M), Cob^p(N)) and Hom(B_q(M), C^p(N)) are
/// stored through the free/cofree adjunctions:
///   H4, B: Hom_{H-}^{-H}(M (x) H^q, H^p (x) N)   (left-linear, right-colinear)
///   GS:    Hom_k(W_q, V_p) with W_q = B_{q-1}(M), V_p = C^{p-1}(N)
///   reduced B: Hom_k(H^q, H^p)
struct Cell {
  std::size_t p = 0, q = 0;
  std::size_t out_dim = 0, in_dim = 0;
  Subspace space;
};

/// Total-degree cochain: parts[p] is the (p, degree - p) component as a matrix.
struct TotalCochain {
  std::size_t degree = 0;
  std::vector<SparseMatrix> parts;
};

class DoubleComplex {
 public:
  Theory theory() const { return theory_; }
  bool reduced() const { return reduced_; }
  Field field() const { return field_; }
  const HopfAlgebraPtr& algebra() const { return algebra_; }
  SignRule sign_rule() const { return sign_; }
  /// Differentials D^n are available for n <= max_degree.
  std::size_t max_degree() const { return max_degree_; }
  const std::optional<HopfBimodule>& source() const { return source_; }
  const std::optional<HopfBimodule>& target() const { return target_; }

  /// Defined for p + q <= max_degree + 1.
  const Cell& cell(std::size_t p, std::size_t q) const;
  /// (p, q) -> (p, q + 1) and (p, q) -> (p + 1, q) on ambient cochains, p + q <= max_degree.
  const CochainOperator& vertical(std::size_t p, std::size_t q) const;
  const CochainOperator& horizontal(std::size_t p, std::size_t q) const;
  /// The same maps in cell coordinates.
  const SparseMatrix& vertical_matrix(std::size_t p, std::size_t q) const;
  const SparseMatrix& horizontal_matrix(std::size_t p, std::size_t q) const;

  std::size_t total_dim(std::size_t n) const;
  /// T^n -> T^{n+1} in cell coordinates, cells ordered by p.
  SparseMatrix total_differential(std::size_t n) const;

  TotalCochain zero_cochain(std::size_t n) const;
  TotalCochain from_coordinates(std::size_t n, const SparseVector& coords) const;
  SparseVector coordinates(const TotalCochain& c) const;
  /// Every part lies in its cell space.
  bool admissible(const TotalCochain& c) const;
  /// D on ambient matrices.
  TotalCochain apply_differential(const TotalCochain& c) const;
  /// Copy with a different sign placement (cells and maps are shared).
  DoubleComplex with_sign(SignRule rule) const;

 private:
  friend DoubleComplex build_double_complex(Theory, const HopfBimodule&, const HopfBimodule&, std::size_t,
                                            const ComplexOptions&);
  friend DoubleComplex reduced_b_complex(const HopfAlgebraPtr&, std::size_t, const ComplexOptions&);
  using Key = std::pair<std::size_t, std::size_t>;
  struct Recipe {
    std::function<std::pair<std::size_t, std::size_t>(std::size_t, std::size_t)> shape;  // (out, in)
    std::function<Subspace(std::size_t, std::size_t)> space;
    std::function<CochainOperator(std::size_t, std::size_t)> vertical, horizontal;
  };
  void assemble(const Recipe& recipe, const ComplexOptions& options);

  Theory theory_ = Theory::B;
  bool reduced_ = false;
  Field field_;
  HopfAlgebraPtr algebra_;
  SignRule sign_ = SignRule::VerticalFirst;
  std::size_t max_degree_ = 0;
  std::optional<HopfBimodule> source_, target_;
  std::map<Key, Cell> cells_;
  std::map<Key, CochainOperator> vertical_, horizontal_;
  std::map<Key, SparseMatrix> vertical_matrix_, horizontal_matrix_;
};

/// Double complex of the given theory up to total degree max_degree + 1.
/// Theory B ignores m and n and uses the regular Hopf bimodule of m's algebra.
DoubleComplex build_double_complex(Theory theory, const HopfBimodule& m, const HopfBimodule& n,
                                   std::size_t max_degree, const ComplexOptions& options = {});
/// Entries Hom_k(H^q, H^p) with the reduced b-differentials.
DoubleComplex reduced_b_complex(const HopfAlgebraPtr& h, std::size_t max_degree, const ComplexOptions& options = {});

/// Dimension of the entry computed directly as Hopf-bimodule maps between the
/// resolution terms, without the adjunction.
std::size_t full_cell_dimension(Theory theory, const HopfBimodule& m, const HopfBimodule& n, std::size_t p,
                                std::size_t q);

/// D^{n-1} D^n vanishes for every available n.
bool total_squares_to_zero(const DoubleComplex& dc);
/// d_v^2 = d_h^2 = 0 and d_v d_h = d_h d_v on every available entry.
bool bicomplex_identities_hold(const DoubleComplex& dc);

struct CohomologyResult {
  std::vector<std::size_t> dims;          // degrees 0 .. max_degree
  std::vector<std::size_t> total_dims;    // dim T^n
  std::vector<std::size_t> ranks;         // rank D^n
  std::vector<std::vector<SparseVector>> representatives;  // cocycle coordinates, complementary to the image
};

CohomologyResult total_cohomology(const DoubleComplex& dc, bool with_representatives = true);

bool is_cocycle(const DoubleComplex& dc, const TotalCochain& c);
/// Preimage under D when c is a coboundary; throws InputError if c is not a cocycle.
/// In degree 0 only c = 0 qualifies and the preimage has no components.
std::optional<TotalCochain> is_coboundary(const DoubleComplex& dc, const TotalCochain& c);

/// Full (M = N = H, theory H4 or B) cochain at (p, q) to a reduced one:
///   f(a) = (id^p (x) eps) g(1 (x) a).
SparseMatrix adjunction_phi(const HopfAlgebra& h, std::size_t p, std::size_t q, const SparseMatrix& g);
/// Inverse, g(x (x) a) = x . (f(a^(1)) (x) a^(2)_1 ... a^(2)_q) with the diagonal action.
SparseMatrix adjunction_phi_inverse(const HopfAlgebra& h, std::size_t p, std::size_t q, const SparseMatrix& f);

}  // namespace hopfcoh
