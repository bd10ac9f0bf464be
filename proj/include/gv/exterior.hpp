#pragma once

#include "gv/lie_algebra.hpp"
#include "gv/multiform.hpp"

namespace gv {

/// Chevalley-Eilenberg differential, with the sign convention
/// (d alpha)(x, y) = -alpha([x, y]) on 1-forms.
///
/// For the ROOT_DATA backend only Cartan-supported 1-forms are
/// differentiable and the result is the u^*v^* component.
MultiForm ce_d(const MultiForm& f, const LieAlgebra& L);

/// d followed by the projection to u^* ^ v^*. Defined on 1-forms.
MultiForm hat_d(const MultiForm& f, const LieAlgebra& L);

/// Lie derivative along the coordinate vector x, via Cartan's formula.
MultiForm lie_derivative(const MultiForm& f, const LieAlgebra& L, const RatVec& x);

enum class CompactSubspace { KP, KG };

/// Identity-component basicness: i_X f = 0 and L_X f = 0 for every generator
/// X of the chosen compact subalgebra.
bool basic_check(const MultiForm& f, const LieAlgebra& L, CompactSubspace which);

/// Dimension of the space of k_P-basic forms of the given degree.
int basic_subspace_dimension(const LieAlgebra& L, int degree);

}  // namespace gv
