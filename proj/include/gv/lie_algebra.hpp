#pragma once

#include <string>
#include <vector>

#include "gv/linalg.hpp"
#include "gv/multiform.hpp"
#include "gv/root_data.hpp"

namespace gv {

enum class Family { SL, SO, SU, SP, F4 };
enum class Backend { MATRIX, ROOT_DATA };

struct FamilySpec {
  Family family = Family::SL;
  int n = 0;  // q for SL; n for SO/SU/SP; ignored for F4

  int codimension() const;
  std::string name() const;
};

FamilySpec make_spec(Family f, int n);
Family family_from_string(const std::string& s);

/// Default parameter budgets keeping top-degree forms tractable.
int default_n_max(Family f);

struct ValidationReport {
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// A complexified Lie algebra with a fixed rational basis, its structure
/// constants, Killing form, and the distinguished subspaces of the parabolic
/// decomposition g = r + u + v. The F4 family carries root data only.
struct LieAlgebra {
  FamilySpec spec;
  Backend backend = Backend::MATRIX;
  int dim = 0;  // basis size, also the ambient dimension for forms
  int q = 0;    // codimension = dim v
  std::vector<std::string> labels;

  // MATRIX backend only.
  int matrix_size = 0;
  std::vector<RatMat> basis_matrices;
  std::vector<std::vector<std::vector<std::pair<int, Rat>>>> bracket;
  RatMat killing;  // ad-trace Killing form
  Rat metric_scale = Rat(0);  // B_theta(X,Y) = metric_scale * tr(X Y^t)

  std::vector<int> idx_h, idx_u, idx_v, idx_p, idx_r;
  std::vector<RatVec> kg_gens, kp_gens, m_gens;

  RootSystemData roots;

  int label_index(const std::string& name) const;
  MultiForm covector(int index) const;
  MultiForm covector(const std::string& name) const;
  RatVec basis_vector(int index) const;
  RatVec bracket_vectors(const RatVec& x, const RatVec& y) const;
  /// Coefficient functional X -> X_{ii} of the matrix realization, as a 1-form
  /// supported on the Cartan coordinates.
  MultiForm diagonal_weight(int i) const;
};

LieAlgebra build_family(const FamilySpec& spec);

ValidationReport validate_lie(const LieAlgebra& L);

/// Killing matrix from structure constants; MATRIX backend only.
const RatMat& killing_form(const LieAlgebra& L);

/// The constant c with B(X,Y) = c * tr(XY) on the matrix realization.
Rat killing_trace_scale(const LieAlgebra& L);

/// Coordinate matrix of X -> g X g^{-1} on the chosen basis.
RatMat conjugation_matrix(const LieAlgebra& L, const RatMat& g);

/// Evaluates a 1-form with rational prefactor on a coordinate vector.
Rat eval_oneform(const MultiForm& f, const RatVec& x);

}  // namespace gv
