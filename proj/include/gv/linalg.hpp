#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

namespace gv {

using Rat = mpq_class;
using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;

RatMat identity_matrix(std::size_t n);

/// In-place reduced row echelon form. Returns the pivot columns.
std::vector<std::size_t> rref(RatMat& m);

std::size_t rank(RatMat m);

/// Basis of the right nullspace of m (vectors of length = #columns).
std::vector<RatVec> nullspace(const RatMat& m, std::size_t cols);

Rat determinant(RatMat m);

/// Solves a x = b; nullopt when inconsistent. Free variables are set to 0.
std::optional<RatVec> solve_linear(RatMat a, RatVec b);

/// Expands vectors in a fixed spanning set: factorizes the (dim x n) matrix
/// whose rows are the spanning vectors, then answers coordinate queries.
class CoordSolver {
 public:
  /// rows: the spanning vectors (each of length n).
  CoordSolver(const std::vector<RatVec>& rows, std::size_t n);

  /// Coordinates x with sum_i x_i rows_i = target; nullopt if not in the span.
  std::optional<RatVec> coordinates(const RatVec& target) const;

 private:
  std::size_t n_;
  RatMat echelon_;                  // rref of the row matrix
  RatMat transform_;                // transform * rows == echelon
  std::vector<std::size_t> pivots_;
};

}  // namespace gv
