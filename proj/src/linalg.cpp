#include "gv/linalg.hpp"

#include <cassert>

namespace gv {

RatMat identity_matrix(std::size_t n) {
  RatMat m(n, RatVec(n, Rat(0)));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

std::vector<std::size_t> rref(RatMat& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pr = r;
    while (pr < rows && m[pr][c] == 0) ++pr;
    if (pr == rows) continue;
    std::swap(m[pr], m[r]);
    const Rat inv = 1 / m[r][c];
    for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Rat f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank(RatMat m) { return rref(m).size(); }

std::vector<RatVec> nullspace(const RatMat& m, std::size_t cols) {
  RatMat e = m;
  for (auto& row : e) row.resize(cols, Rat(0));
  const auto pivots = rref(e);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<RatVec> basis;
  for (std::size_t c = 0; c < cols; ++c) {
    if (is_pivot[c]) continue;
    RatVec v(cols, Rat(0));
    v[c] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -e[i][c];
    basis.push_back(std::move(v));
  }
  return basis;
}

Rat determinant(RatMat m) {
  const std::size_t n = m.size();
  Rat det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pr = c;
    while (pr < n && m[pr][c] == 0) ++pr;
    if (pr == n) return Rat(0);
    if (pr != c) {
      std::swap(m[pr], m[c]);
      det = -det;
    }
    det *= m[c][c];
    const Rat inv = 1 / m[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m[i][c] == 0) continue;
      const Rat f = m[i][c] * inv;
      for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  return det;
}

std::optional<RatVec> solve_linear(RatMat a, RatVec b) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  for (std::size_t i = 0; i < rows; ++i) a[i].push_back(b[i]);
  const auto pivots = rref(a);
  RatVec x(cols, Rat(0));
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    if (pivots[i] == cols) return std::nullopt;  // pivot in the rhs column
    x[pivots[i]] = a[i][cols];
  }
  return x;
}

CoordSolver::CoordSolver(const std::vector<RatVec>& rows, std::size_t n) : n_(n) {
  const std::size_t d = rows.size();
  echelon_ = rows;
  for (auto& row : echelon_) row.resize(n_, Rat(0));
  transform_ = identity_matrix(d);
  // rref on [rows | I], tracking the transform.
  std::size_t r = 0;
  for (std::size_t c = 0; c < n_ && r < d; ++c) {
    std::size_t pr = r;
    while (pr < d && echelon_[pr][c] == 0) ++pr;
    if (pr == d) continue;
    std::swap(echelon_[pr], echelon_[r]);
    std::swap(transform_[pr], transform_[r]);
    const Rat inv = 1 / echelon_[r][c];
    for (auto& v : echelon_[r]) v *= inv;
    for (auto& v : transform_[r]) v *= inv;
    for (std::size_t i = 0; i < d; ++i) {
      if (i == r || echelon_[i][c] == 0) continue;
      const Rat f = echelon_[i][c];
      for (std::size_t j = 0; j < n_; ++j) echelon_[i][j] -= f * echelon_[r][j];
      for (std::size_t j = 0; j < d; ++j) transform_[i][j] -= f * transform_[r][j];
    }
    pivots_.push_back(c);
    ++r;
  }
}

std::optional<RatVec> CoordSolver::coordinates(const RatVec& target) const {
  const std::size_t d = transform_.size();
  RatVec y(d, Rat(0));
  for (std::size_t i = 0; i < pivots_.size(); ++i) y[i] = target[pivots_[i]];
  // Verify y * echelon == target.
  for (std::size_t j = 0; j < n_; ++j) {
    Rat s(0);
    for (std::size_t i = 0; i < pivots_.size(); ++i) s += y[i] * echelon_[i][j];
    if (s != target[j]) return std::nullopt;
  }
  RatVec x(d, Rat(0));
  for (std::size_t j = 0; j < d; ++j) {
    Rat s(0);
    for (std::size_t i = 0; i < d; ++i) s += y[i] * transform_[i][j];
    x[j] = s;
  }
  return x;
}

}  // namespace gv
