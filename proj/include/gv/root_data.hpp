#pragma once

#include <string>
#include <vector>

#include "gv/multiform.hpp"

namespace gv {

/// One u^ ^ v^ pairing slot of the projected differential: the coefficient of
/// u_index^ ^ v_index^ in d(lambda) is -lambda([E_u, E_v]) for any Cartan
/// covector lambda, and c1_value stores S([E_u, E_v]) for S = sum of the
/// positive roots dual to v.
struct RootUnit {
  int u_index = -1;
  int v_index = -1;
  Rat c1_value;
};

struct RootSystemData {
  int rank = 0;
  int ambient = 0;  // ambient dimension of the form space
  std::vector<std::vector<Rat>> positive_roots;  // coordinate vectors
  std::vector<int> phi_subset;                   // Levi roots
  std::vector<int> psi;                          // complement, |psi| = q
  /// Cartan pairing: <lambda, mu> = scale * sum_i lambda_i mu_i in these
  /// coordinates (diagonal pairing; the scale is 18 for the F4 family).
  Rat pairing_scale = Rat(0);
  /// Sum of the psi roots, realized as a 1-form on the ambient space.
  MultiForm h1_sum_form;
  std::vector<RootUnit> units;
};

/// -(1/2pi) * sum of the psi roots, as a 1-form.
MultiForm delta_h1_root(const RootSystemData& data);

/// (1/2pi) * sum over units of S([E_u, E_v]) u^ ^ v^.
MultiForm delta_c1_root(const RootSystemData& data);

}  // namespace gv
