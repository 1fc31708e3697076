#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hopfcoh/cohomology.hpp"

namespace hopfcoh {

/// 0 -> left_end -i-> E_{n-1} -> ... -> E_0 -p-> right_end -> 0, read as a chain
/// complex C_n = left_end, C_k = E_k, C_{-1} = right_end:
///   maps[0] = p : E_0 -> right_end, maps[k] : E_k -> E_{k-1}, maps[n] = i : left_end -> E_{n-1}.
struct Extension {
  HopfBimodule left_end, right_end;
  std::vector<HopfBimodule> terms;
  std::vector<SparseMatrix> maps;

  std::size_t length() const { return terms.size(); }
  /// Object at chain degree k in -1 .. n.
  const HopfBimodule& at(int k) const;
};

struct ExtensionReport {
  std::vector<std::size_t> homology;  // chain degrees -1 .. n
  bool composites_vanish = true;
  bool morphisms = true;
  std::string failure;  // first failing position, empty when valid
  bool valid() const { return failure.empty(); }
};

ExtensionReport check_extension(const Extension& e);

/// 0 -> N -> N (+) M -> M -> 0.
Extension split_extension(const HopfBimodule& m, const HopfBimodule& n);
/// Middle term N (+) M with the right action twisted by the (0,1) component and
/// the left coaction twisted by the (1,0) component of a degree-1 cocycle of
/// the H4 complex for (M, N).
Extension extension_from_1cocycle(const DoubleComplex& dc, const TotalCochain& f);

/// Hopf-bimodule section s of p with p s = id (length-1 extensions only).
std::optional<SparseMatrix> find_splitting(const Extension& e);

/// E at the low degrees, F above, joined by i_E p_F : F_0 -> E_{m-1}.
Extension splice(const Extension& e, const Extension& f);
/// p replaced by -p.
Extension negate(const Extension& e);
Extension negate_power(const Extension& e, std::size_t k);
/// Pullback along the diagonal at the right end, pushout along the codiagonal at the left end.
Extension baer_sum(const Extension& e, const Extension& f);

/// Terms (E (x)_H F)_r = sum_{s+t=r} E_s (x)_H F_t with E_m, F_n the left ends,
/// differential d_E (x) id + (-1)^s id (x) d_F, augmented by p_E (x) p_F.
/// Both extensions must have the regular bimodule H at both ends.
struct TensorExtension {
  Extension ext;
  std::size_t m = 0, n = 0;
  /// summands[r][s] = quotient data of E_s (x)_H F_{r-s} (absent outside the range).
  std::vector<std::vector<std::optional<SubQuotient>>> summands;
  /// offsets[r][s] = position of that summand inside degree r.
  std::vector<std::vector<std::size_t>> offsets;
};
TensorExtension tensor_extensions(const Extension& e, const Extension& f);

/// Degreewise maps between extensions; components[k + 1] acts at chain degree k (-1 .. n).
struct ChainMap {
  std::vector<SparseMatrix> components;
};
/// Squares commute at every degree and every component is a Hopf-bimodule map.
bool is_chain_map(const Extension& source, const Extension& target, const ChainMap& phi);

/// E (x)_H F -> splice(F, E): p_E (x) id on E_0 (x) F_i below degree n, the
/// identification E_{i-n} (x)_H H = E_{i-n} from degree n on.
ChainMap lambda_map(const TensorExtension& t, const Extension& e, const Extension& f);
/// E (x)_H F -> negate^{mn}(splice(E, F)): (-1)^{mn} id (x) p_F on E_j (x) F_0
/// below degree m, (-1)^{m(n+j-m)} times H (x)_H F_{j-m} = F_{j-m} from degree m on
/// (for odd m this is (-1)^{m+n-j}).
ChainMap rho_map(const TensorExtension& t, const Extension& e, const Extension& f);

}  // namespace hopfcoh
