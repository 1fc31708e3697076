#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hopfcoh/bimodule.hpp"

namespace hopfcoh {

enum class Family { Bar, Cobar, TwoSidedBar, TwoSidedCobar, Other };

/// Truncated (co)resolution of Hopf bimodules.  Degree -1 is the end object
/// (the resolved module for chains, the coresolved one for cochains) and
/// maps[k] connects degrees k-1 and k:
///   chain:   maps[0] = augmentation C_0 -> end,  maps[q] = boundary C_q -> C_{q-1};
///   cochain: maps[0] = coaugmentation end -> C^0, maps[p+1] = C^p -> C^{p+1}.
struct BimoduleComplex {
  bool chain = true;
  Family family = Family::Other;
  HopfBimodule end;
  std::vector<HopfBimodule> terms;
  std::vector<SparseMatrix> maps;

  std::size_t top() const { return terms.size() - 1; }
  /// Term at degree k >= -1.
  const HopfBimodule& at(int k) const { return k < 0 ? end : terms.at(static_cast<std::size_t>(k)); }
};

/// Optional cap on the dimension of any single term (0 = none); exceeding it
/// throws ResourceError.
BimoduleComplex bar_resolution(const HopfBimodule& m, std::size_t q_max, std::size_t dim_cap = 0);
BimoduleComplex cobar_resolution(const HopfBimodule& n, std::size_t p_max, std::size_t dim_cap = 0);
BimoduleComplex two_sided_bar(const HopfBimodule& m, std::size_t q_max, std::size_t dim_cap = 0);
BimoduleComplex two_sided_cobar(const HopfBimodule& n, std::size_t p_max, std::size_t dim_cap = 0);

/// Differentials alone (no Hopf-bimodule structure on the terms), for large
/// truncations where only the linear algebra is needed.  Same indexing as maps.
std::vector<SparseMatrix> bar_differentials(const HopfBimodule& m, std::size_t q_max);
std::vector<SparseMatrix> cobar_differentials(const HopfBimodule& n, std::size_t p_max);
std::vector<SparseMatrix> two_sided_bar_differentials(const HopfBimodule& m, std::size_t q_max);
std::vector<SparseMatrix> two_sided_cobar_differentials(const HopfBimodule& n, std::size_t p_max);

/// Consecutive maps compose to zero (including the (co)augmentation).
bool squares_to_zero(const std::vector<SparseMatrix>& maps, bool chain);
/// Every map is a Hopf-bimodule morphism.
bool maps_are_morphisms(const BimoduleComplex& c);

/// Homology dimension at degrees -1 .. top; nullopt marks the unchecked
/// truncation degree.  Without augmentation degree -1 is unchecked and degree 0
/// is computed against the zero map.
std::vector<std::optional<std::size_t>> check_exactness(const std::vector<SparseMatrix>& maps, bool chain,
                                                        bool with_augmentation = true);
std::vector<std::optional<std::size_t>> check_exactness(const BimoduleComplex& c, bool with_augmentation = true);

/// Contracting homotopy.  chain: maps[k] : degree k-1 -> k with
/// d s + s d = id in degrees -1 .. top-1; cochain: maps[k] : degree k -> k-1.
struct Splitting {
  std::string method;  // "canonical" or "solve"
  std::vector<SparseMatrix> maps;
};

/// Verifies a candidate homotopy against the differentials.
bool is_contracting_homotopy(const std::vector<SparseMatrix>& d, const std::vector<SparseMatrix>& s, bool chain);
/// Canonical homotopy of the four standard families (appending/prepending units
/// or applying counits on the outer factors).
std::vector<SparseMatrix> canonical_homotopy(const BimoduleComplex& c);

enum class SplittingMethod { Auto, Canonical, Solve };
/// Searches for a homotopy whose components intertwine the selected structures.
std::optional<Splitting> find_relative_splitting(const BimoduleComplex& c, unsigned structures,
                                                 SplittingMethod method = SplittingMethod::Auto);

}  // namespace hopfcoh
