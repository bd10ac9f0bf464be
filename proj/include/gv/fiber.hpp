#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gv/chern_weil.hpp"
#include "gv/lie_algebra.hpp"

namespace gv {

/// The +/- rewriting basis of the top form: the distinguished K_G-basic
/// covector, the Hermitian (plus) covectors spanning the base directions and
/// the skew (minus) covectors spanning the fiber directions.
struct SplitBasisData {
  FamilySpec spec;
  MultiForm distinguished;
  std::vector<MultiForm> plus_covectors;
  std::vector<MultiForm> minus_covectors;
  /// Integral of the minus wedge over the unit fiber, divided by vol(S^q).
  ExactScalar fiber_factor;
  /// Metric duals of [distinguished, plus...] for the Gram computation
  /// (MATRIX families).
  std::vector<RatVec> base_vectors;
  /// Stored dual pairing Gram (F4 only).
  std::optional<RatMat> dual_gram;
};

SplitBasisData split_basis(const LieAlgebra& L);

struct SplitResult {
  ExactScalar coefficient;  // gv against dist ^ plus-wedge ^ minus-wedge
  ExactScalar base_factor;  // norm of dist ^ plus-wedge (the printed factors)
  ExactScalar fiber_factor;
};

/// Factorizes gv over the +/- basis; throws when gv is not a multiple of the
/// split wedge.
SplitResult split_form(const MultiForm& gv, const LieAlgebra& L,
                       const SplitBasisData& split);

/// Exact volume of the unit sphere in R^{q+1}.
ExactScalar sphere_volume(int q);

/// Fiber integration constant of Delta(h1 c1^q) against the unit-norm volume
/// form of the base. Defined for the SO, SU, SP and F4 families.
ExactScalar compute_cG(const LieAlgebra& L, const CharacteristicResult& result);
ExactScalar compute_cG(const FamilySpec& spec);

struct VanishingCertificate {
  int q = 0;
  RatMat antipodal;        // the antipodal representative in SO(q+1)
  std::string factor;      // rendering of the base factor that flips
  int sign = 0;            // the verified pullback sign (-1)
};

/// The antipodal sign-flip certificate for the SL family in even codimension.
VanishingCertificate even_sl_vanishing(int q);

ExactScalar factorial_scalar(long k);

}  // namespace gv
