#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gv/exterior.hpp"
#include "gv/lie_algebra.hpp"

namespace gv {

/// Connection form of the Pittie connection on v, indexed by the v basis:
/// theta[i][j](X) = eta_i([X, Y_j]).
using ConnectionMatrix = std::vector<std::vector<MultiForm>>;

ConnectionMatrix pittie_connection(const LieAlgebra& L);

/// Omega = d Theta - Theta ^ Theta. Verifies Omega = hat_d Theta entrywise
/// and throws InternalConsistencyError on a mismatch.
ConnectionMatrix curvature(const ConnectionMatrix& theta, const LieAlgebra& L);

/// (1/2pi) tr Theta.
MultiForm delta_h1(const ConnectionMatrix& theta, const LieAlgebra& L);

/// prod_k c_k(Omega)^{J_k}; J[k-1] is the exponent of c_k.
MultiForm delta_cJ(const ConnectionMatrix& omega, const std::vector<int>& J,
                   const LieAlgebra& L);

/// The monomial the printed top coefficient is measured against.
MultiForm canonical_top_monomial(const LieAlgebra& L);

struct CharacteristicResult {
  FamilySpec spec;
  MultiForm delta_h1;
  MultiForm delta_c1;
  MultiForm delta_gv;            // degree 2q+1
  ExactScalar gv_coefficient;    // against canonical_top_monomial
  std::optional<ExactScalar> c_g;
  std::optional<ExactScalar> r_g;
  std::vector<std::string> notes;
};

/// Full pipeline: Delta(h1), Delta(c1) = d Delta(h1), Delta(h1 c1^q), and the
/// coefficient against the canonical top monomial. c_g / r_g are not filled
/// here (see fiber and proportionality).
CharacteristicResult delta_gv(const LieAlgebra& L);

struct RoussarieForms {
  MultiForm omega, eta, theta;
};

/// The distinguished sl(2) coframe with d omega = eta ^ omega,
/// d eta = omega ^ theta, d theta = -eta ^ theta.
RoussarieForms roussarie_forms(const LieAlgebra& L);

}  // namespace gv
