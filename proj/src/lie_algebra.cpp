#include "gv/lie_algebra.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <sstream>

#include "gv/errors.hpp"

namespace gv {

namespace {

RatMat zmat(int n) { return RatMat(n, RatVec(n, Rat(0))); }

RatMat eunit(int n, int i, int j) {  // 1-based
  RatMat m = zmat(n);
  m[i - 1][j - 1] = 1;
  return m;
}

RatMat madd(const RatMat& a, const RatMat& b) {
  RatMat c = a;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) c[i][j] += b[i][j];
  return c;
}

RatMat msub(const RatMat& a, const RatMat& b) {
  RatMat c = a;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) c[i][j] -= b[i][j];
  return c;
}

RatMat mmul(const RatMat& a, const RatMat& b) {
  const std::size_t n = a.size();
  RatMat c = zmat((int)n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (b[k][j] != 0) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

RatMat mtrans(const RatMat& a) {
  const std::size_t n = a.size();
  RatMat c = zmat((int)n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) c[i][j] = a[j][i];
  return c;
}

RatMat mneg(const RatMat& a) {
  RatMat c = a;
  for (auto& row : c)
    for (auto& v : row) v = -v;
  return c;
}

RatMat commutator(const RatMat& a, const RatMat& b) {
  return msub(mmul(a, b), mmul(b, a));
}

Rat trace_product(const RatMat& a, const RatMat& b) {
  Rat t(0);
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t += a[i][j] * b[j][i];
  return t;
}

RatVec flatten(const RatMat& m) {
  RatVec v;
  v.reserve(m.size() * m.size());
  for (auto& row : m)
    for (auto& x : row) v.push_back(x);
  return v;
}

struct Builder {
  LieAlgebra L;
  std::vector<RatMat> mats;

  int add(const std::string& label, RatMat m) {
    L.labels.push_back(label);
    mats.push_back(std::move(m));
    return (int)mats.size() - 1;
  }
};

/// Fills structure constants, Killing form and the tau-fixed subalgebras.
void finish_matrix_build(Builder& b, int expected_kg_dim, int expected_kp_dim,
                         const std::function<RatMat(const RatMat&)>& tau) {
  LieAlgebra& L = b.L;
  L.backend = Backend::MATRIX;
  L.dim = (int)b.mats.size();
  if (L.dim > 64) throw UsageError("family parameter too large for the mask encoding");
  L.matrix_size = (int)b.mats[0].size();
  L.basis_matrices = b.mats;

  std::vector<RatVec> rows;
  rows.reserve(L.dim);
  for (auto& m : b.mats) rows.push_back(flatten(m));
  CoordSolver solver(rows, (std::size_t)L.matrix_size * L.matrix_size);

  L.bracket.assign(L.dim, std::vector<std::vector<std::pair<int, Rat>>>(L.dim));
  for (int i = 0; i < L.dim; ++i) {
    for (int j = i + 1; j < L.dim; ++j) {
      const RatMat c = commutator(b.mats[i], b.mats[j]);
      auto coords = solver.coordinates(flatten(c));
      if (!coords)
        throw InternalConsistencyError("bracket leaves the chosen basis span at " +
                                       L.labels[i] + "," + L.labels[j]);
      for (int k = 0; k < L.dim; ++k) {
        if ((*coords)[k] == 0) continue;
        L.bracket[i][j].push_back({k, (*coords)[k]});
        L.bracket[j][i].push_back({k, -(*coords)[k]});
      }
    }
  }

  L.killing = zmat(L.dim);
  for (int i = 0; i < L.dim; ++i)
    for (int j = i; j < L.dim; ++j) {
      Rat s(0);
      for (int k = 0; k < L.dim; ++k)
        for (auto& [l, a] : L.bracket[i][k])
          for (auto& [k2, c] : L.bracket[j][l])
            if (k2 == k) s += a * c;
      L.killing[i][j] = s;
      L.killing[j][i] = s;
    }

  // Coordinate matrix of the complexified Cartan involution; its fixed
  // points span the complexified maximal compact subalgebras.
  RatMat T = zmat(L.dim);
  for (int i = 0; i < L.dim; ++i) {
    auto coords = solver.coordinates(flatten(tau(b.mats[i])));
    if (!coords)
      throw InternalConsistencyError("involution does not preserve the algebra");
    for (int r = 0; r < L.dim; ++r) T[r][i] = (*coords)[r];
  }
  RatMat TmI = T;
  for (int i = 0; i < L.dim; ++i) TmI[i][i] -= 1;
  L.kg_gens = nullspace(TmI, L.dim);
  if ((int)L.kg_gens.size() != expected_kg_dim)
    throw InternalConsistencyError("unexpected dim of the compact subalgebra");

  RatMat TmI_p(L.dim, RatVec(L.idx_p.size(), Rat(0)));
  for (int r = 0; r < L.dim; ++r)
    for (std::size_t t = 0; t < L.idx_p.size(); ++t) TmI_p[r][t] = TmI[r][L.idx_p[t]];
  L.kp_gens.clear();
  for (auto& v : nullspace(TmI_p, L.idx_p.size())) {
    RatVec full(L.dim, Rat(0));
    for (std::size_t t = 0; t < L.idx_p.size(); ++t) full[L.idx_p[t]] = v[t];
    L.kp_gens.push_back(std::move(full));
  }
  if ((int)L.kp_gens.size() != expected_kp_dim)
    throw InternalConsistencyError("unexpected dim of k_P");

  // Fiber directions: B-orthocomplement of k_P inside k_G.
  if (!L.kp_gens.empty()) {
    RatMat M(L.kp_gens.size(), RatVec(L.kg_gens.size(), Rat(0)));
    for (std::size_t j = 0; j < L.kp_gens.size(); ++j)
      for (std::size_t i = 0; i < L.kg_gens.size(); ++i) {
        Rat s(0);
        for (int a = 0; a < L.dim; ++a) {
          if (L.kg_gens[i][a] == 0) continue;
          for (int c = 0; c < L.dim; ++c)
            if (L.kp_gens[j][c] != 0) s += L.kg_gens[i][a] * L.kp_gens[j][c] * L.killing[a][c];
        }
        M[j][i] = s;
      }
    L.m_gens.clear();
    for (auto& comb : nullspace(M, L.kg_gens.size())) {
      RatVec full(L.dim, Rat(0));
      for (std::size_t i = 0; i < L.kg_gens.size(); ++i)
        for (int a = 0; a < L.dim; ++a) full[a] += comb[i] * L.kg_gens[i][a];
      L.m_gens.push_back(std::move(full));
    }
  } else {
    L.m_gens = L.kg_gens;
  }
}

void fill_complement_indices(LieAlgebra& L) {
  std::vector<bool> in_v(L.dim, false), in_u(L.dim, false);
  for (int i : L.idx_v) in_v[i] = true;
  for (int i : L.idx_u) in_u[i] = true;
  L.idx_p.clear();
  L.idx_r.clear();
  for (int i = 0; i < L.dim; ++i) {
    if (!in_v[i]) L.idx_p.push_back(i);
    if (!in_v[i] && !in_u[i]) L.idx_r.push_back(i);
  }
}

// --- sl(m): shared by the SL and SU families -------------------------------

void build_sl_basis(Builder& b, int m) {
  for (int i = 1; i < m; ++i)
    b.add("H" + std::to_string(i), msub(eunit(m, i, i), eunit(m, i + 1, i + 1)));
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= m; ++j)
      if (i != j) b.add("E" + std::to_string(i) + std::to_string(j), eunit(m, i, j));
}

MultiForm sl_diagonal_weight(const LieAlgebra& L, int m, int i) {
  MultiForm f(L.dim, 1);
  if (i <= m - 1) f.add_term(uint64_t(1) << (i - 1), Rat(1));
  if (i >= 2) f.add_term(uint64_t(1) << (i - 2), Rat(-1));
  return f;
}

LieAlgebra build_sl_family(int q) {
  if (q < 1) throw UsageError("SL family requires q >= 1");
  const int m = q + 1;
  Builder b;
  b.L.spec = {Family::SL, q};
  b.L.q = q;
  build_sl_basis(b, m);
  LieAlgebra& L = b.L;
  L.dim = (int)b.mats.size();
  for (int i = 1; i < m; ++i) L.idx_h.push_back(i - 1);
  auto eidx = [&](int i, int j) {
    std::string lab = "E" + std::to_string(i) + std::to_string(j);
    for (int k = 0; k < (int)L.labels.size(); ++k)
      if (L.labels[k] == lab) return k;
    throw InternalConsistencyError("missing label " + lab);
  };
  for (int j = 2; j <= m; ++j) L.idx_v.push_back(eidx(j, 1));
  for (int j = 2; j <= m; ++j) L.idx_u.push_back(eidx(1, j));
  fill_complement_indices(L);
  L.metric_scale = Rat(2 * m);

  finish_matrix_build(b, m * (m - 1) / 2, q * (q - 1) / 2,
                      [](const RatMat& x) { return mneg(mtrans(x)); });

  // Root data: coordinates eps_1..eps_m, psi = { eps_1 - eps_k }.
  RootSystemData& R = L.roots;
  R.rank = m;
  R.ambient = L.dim;
  R.pairing_scale = Rat(1, 2 * m);
  for (int k = 2; k <= m; ++k) {
    RatVec r(m, Rat(0));
    r[0] = 1;
    r[k - 1] = -1;
    R.positive_roots.push_back(std::move(r));
    R.psi.push_back((int)R.positive_roots.size() - 1);
  }
  for (int i = 2; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j) {
      RatVec r(m, Rat(0));
      r[i - 1] = 1;
      r[j - 1] = -1;
      R.positive_roots.push_back(std::move(r));
      R.phi_subset.push_back((int)R.positive_roots.size() - 1);
    }
  R.h1_sum_form = sl_diagonal_weight(L, m, 1).scaled(Rat(m));
  for (int k = 2; k <= m; ++k) {
    RootUnit unit;
    unit.u_index = eidx(1, k);
    unit.v_index = eidx(k, 1);
    unit.c1_value = eval_oneform(
        R.h1_sum_form, L.bracket_vectors(L.basis_vector(unit.u_index),
                                         L.basis_vector(unit.v_index)));
    R.units.push_back(unit);
  }
  return L;
}

LieAlgebra build_su_family(int n) {
  if (n < 0) throw UsageError("SU family requires n >= 0");
  const int m = n + 2;
  const int np = n + 1;
  Builder b;
  b.L.spec = {Family::SU, n};
  b.L.q = 2 * n + 1;
  build_sl_basis(b, m);
  LieAlgebra& L = b.L;
  L.dim = (int)b.mats.size();
  for (int i = 1; i < m; ++i) L.idx_h.push_back(i - 1);
  auto eidx = [&](int i, int j) {
    std::string lab = "E" + std::to_string(i) + std::to_string(j);
    for (int k = 0; k < (int)L.labels.size(); ++k)
      if (L.labels[k] == lab) return k;
    throw InternalConsistencyError("missing label " + lab);
  };
  // v in the order E_{k1} (k=2..n+1), E_{m1}, E_{mk} (k=2..n+1).
  for (int k = 2; k <= np; ++k) L.idx_v.push_back(eidx(k, 1));
  L.idx_v.push_back(eidx(m, 1));
  for (int k = 2; k <= np; ++k) L.idx_v.push_back(eidx(m, k));
  for (int k = 2; k <= np; ++k) L.idx_u.push_back(eidx(1, k));
  L.idx_u.push_back(eidx(1, m));
  for (int k = 2; k <= np; ++k) L.idx_u.push_back(eidx(k, m));
  fill_complement_indices(L);
  L.metric_scale = Rat(2 * m);

  const RatMat iprime = [&] {
    RatMat s = zmat(m);
    s[0][m - 1] = -1;
    s[m - 1][0] = -1;
    for (int k = 2; k <= np; ++k) s[k - 1][k - 1] = 1;
    return s;
  }();
  finish_matrix_build(b, np * np, n * n,
                      [iprime](const RatMat& x) { return mmul(iprime, mmul(x, iprime)); });

  RootSystemData& R = L.roots;
  R.rank = m;
  R.ambient = L.dim;
  R.pairing_scale = Rat(1, 2 * m);
  auto push_root = [&](int i, int j, bool is_psi) {  // eps_i - eps_j
    RatVec r(m, Rat(0));
    r[i - 1] = 1;
    r[j - 1] = -1;
    R.positive_roots.push_back(std::move(r));
    (is_psi ? R.psi : R.phi_subset).push_back((int)R.positive_roots.size() - 1);
  };
  for (int k = 2; k <= np; ++k) push_root(1, k, true);
  push_root(1, m, true);
  for (int k = 2; k <= np; ++k) push_root(k, m, true);
  for (int i = 2; i <= np; ++i)
    for (int j = i + 1; j <= np; ++j) push_root(i, j, false);

  R.h1_sum_form = form_sub(sl_diagonal_weight(L, m, 1), sl_diagonal_weight(L, m, m))
                      .scaled(Rat(np));
  auto add_unit = [&](int ui, int uj, int vi, int vj) {
    RootUnit unit;
    unit.u_index = eidx(ui, uj);
    unit.v_index = eidx(vi, vj);
    unit.c1_value = eval_oneform(
        R.h1_sum_form, L.bracket_vectors(L.basis_vector(unit.u_index),
                                         L.basis_vector(unit.v_index)));
    R.units.push_back(unit);
  };
  for (int k = 2; k <= np; ++k) add_unit(1, k, k, 1);
  add_unit(1, m, m, 1);
  for (int k = 2; k <= np; ++k) add_unit(k, m, m, k);
  return L;
}

// --- so(n+2) ----------------------------------------------------------------

LieAlgebra build_so_family(int n) {
  if (n < 1) throw UsageError("SO family requires n >= 1");
  const int N = n + 2;
  Builder b;
  b.L.spec = {Family::SO, n};
  b.L.q = n;
  b.add("a", msub(eunit(N, 1, 1), eunit(N, N, N)));
  for (int j = 2; j <= n + 1; ++j)
    b.add("v" + std::to_string(j), madd(eunit(N, j, 1), eunit(N, N, j)));
  for (int j = 2; j <= n + 1; ++j)
    b.add("tv" + std::to_string(j), madd(eunit(N, 1, j), eunit(N, j, N)));
  for (int k = 2; k <= n + 1; ++k)
    for (int h = k + 1; h <= n + 1; ++h)
      b.add("A" + std::to_string(k) + std::to_string(h),
            msub(eunit(N, k, h), eunit(N, h, k)));

  LieAlgebra& L = b.L;
  L.dim = (int)b.mats.size();
  L.idx_h.push_back(0);
  for (int t = 0; 2 * t + 3 <= n + 1; ++t)
    L.idx_h.push_back(L.label_index("A" + std::to_string(2 * t + 2) +
                                    std::to_string(2 * t + 3)));
  for (int j = 0; j < n; ++j) L.idx_v.push_back(1 + j);
  for (int j = 0; j < n; ++j) L.idx_u.push_back(1 + n + j);
  fill_complement_indices(L);
  L.metric_scale = Rat(n);

  finish_matrix_build(b, (n + 1) * n / 2, n * (n - 1) / 2,
                      [](const RatMat& x) { return mneg(mtrans(x)); });

  RootSystemData& R = L.roots;
  const int rk = 1 + n / 2;
  R.rank = rk;
  R.ambient = L.dim;
  R.pairing_scale = Rat(1, 2 * n);
  // psi roots eps_0 +- w_t (and eps_0 alone for odd n), listed per v vector.
  for (int t = 0; t < n / 2; ++t) {
    for (int s = 0; s < 2; ++s) {
      RatVec r(rk, Rat(0));
      r[0] = 1;
      r[1 + t] = s == 0 ? 1 : -1;
      R.positive_roots.push_back(std::move(r));
      R.psi.push_back((int)R.positive_roots.size() - 1);
    }
  }
  if (n % 2 == 1) {
    RatVec r(rk, Rat(0));
    r[0] = 1;
    R.positive_roots.push_back(std::move(r));
    R.psi.push_back((int)R.positive_roots.size() - 1);
  }
  // Levi roots: the positive so(n) roots w_i +- w_j (and w_i for odd n).
  for (int i = 0; i < n / 2; ++i) {
    for (int j = i + 1; j < n / 2; ++j)
      for (int s = 0; s < 2; ++s) {
        RatVec r(rk, Rat(0));
        r[1 + i] = 1;
        r[1 + j] = s == 0 ? 1 : -1;
        R.positive_roots.push_back(std::move(r));
        R.phi_subset.push_back((int)R.positive_roots.size() - 1);
      }
    if (n % 2 == 1) {
      RatVec r(rk, Rat(0));
      r[1 + i] = 1;
      R.positive_roots.push_back(std::move(r));
      R.phi_subset.push_back((int)R.positive_roots.size() - 1);
    }
  }
  R.h1_sum_form = L.covector(0).scaled(Rat(n));  // n * a^
  for (int j = 0; j < n; ++j) {
    RootUnit unit;
    unit.u_index = 1 + n + j;
    unit.v_index = 1 + j;
    unit.c1_value = eval_oneform(
        R.h1_sum_form, L.bracket_vectors(L.basis_vector(unit.u_index),
                                         L.basis_vector(unit.v_index)));
    R.units.push_back(unit);
  }
  return L;
}

// --- sp(2(n+2)) --------------------------------------------------------------

LieAlgebra build_sp_family(int n) {
  if (n < 0) throw UsageError("Sp family requires n >= 0");
  const int m = n + 2;   // n''
  const int N = 2 * m;
  const int np = n + 1;  // n'
  Builder b;
  b.L.spec = {Family::SP, n};
  b.L.q = 4 * n + 3;

  b.add("H1", msub(eunit(N, 1, 1), eunit(N, N, N)));
  for (int k = 2; k <= np; ++k)
    b.add("H" + std::to_string(k), msub(eunit(N, k, k), eunit(N, m + k, m + k)));
  b.add("H" + std::to_string(m), msub(eunit(N, m, m), eunit(N, m + 1, m + 1)));

  struct VDef {
    std::string name;
    RatMat mat;
    RatMat tmat;
  };
  std::vector<VDef> vlist;
  auto vpush = [&](const std::string& name, RatMat mat) {
    vlist.push_back({name, mat, mtrans(mat)});
  };
  for (int k = 2; k <= np; ++k)
    vpush("u1_" + std::to_string(k), madd(eunit(N, k, 1), eunit(N, N, m + k)));
  for (int k = 2; k <= np; ++k)
    vpush("u2_" + std::to_string(k), madd(eunit(N, m, k), eunit(N, m + k, m + 1)));
  vpush("v", msub(eunit(N, m, 1), eunit(N, N, m + 1)));
  for (int k = 2; k <= np; ++k)
    vpush("x1_" + std::to_string(k), madd(mneg(eunit(N, k, m + 1)), eunit(N, m, m + k)));
  vpush("y1", eunit(N, m, m + 1));
  for (int k = 2; k <= np; ++k)
    vpush("x2_" + std::to_string(k), madd(mneg(eunit(N, m + k, 1)), eunit(N, N, k)));
  vpush("y2", eunit(N, N, 1));

  LieAlgebra& L = b.L;
  for (auto& vd : vlist) L.idx_v.push_back(b.add(vd.name, vd.mat));
  for (auto& vd : vlist) L.idx_u.push_back(b.add("t" + vd.name, vd.tmat));

  // Levi complement: gl(n) block, the two symmetric blocks, and the
  // sl(2)-type pair D1, D2.
  for (int k = 2; k <= np; ++k)
    for (int h = 2; h <= np; ++h)
      if (k != h)
        b.add("A" + std::to_string(k) + std::to_string(h),
              msub(eunit(N, k, h), eunit(N, m + h, m + k)));
  for (int k = 2; k <= np; ++k)
    for (int h = k; h <= np; ++h)
      b.add("B1_" + std::to_string(k) + std::to_string(h),
            madd(eunit(N, k, m + h), eunit(N, h, m + k)));
  for (int k = 2; k <= np; ++k)
    for (int h = k; h <= np; ++h)
      b.add("B2_" + std::to_string(k) + std::to_string(h),
            madd(eunit(N, m + k, h), eunit(N, m + h, k)));
  b.add("D1", madd(eunit(N, 1, m + 1), eunit(N, m, N)));
  b.add("D2", madd(eunit(N, m + 1, 1), eunit(N, N, m)));

  L.dim = (int)b.mats.size();
  for (int i = 0; i < m; ++i) L.idx_h.push_back(i);
  fill_complement_indices(L);
  L.metric_scale = Rat(4 * (n + 3));

  if (L.dim != m * (2 * m + 1))
    throw InternalConsistencyError("sp basis has the wrong size");

  const RatMat j0 = [&] {
    RatMat s = zmat(N);
    for (int i = 1; i <= m; ++i) {
      s[i - 1][m + i - 1] = 1;
      s[m + i - 1][i - 1] = -1;
    }
    return s;
  }();
  finish_matrix_build(b, np * (2 * np + 1) + 3, n * (2 * n + 1) + 3,
                      [j0](const RatMat& x) { return mmul(j0, mmul(mtrans(x), j0)); });

  RootSystemData& R = L.roots;
  R.rank = m;
  R.ambient = L.dim;
  R.pairing_scale = Rat(1, 4 * (n + 3));
  auto gamma_root = [&](std::initializer_list<std::pair<int, int>> coeffs) {
    RatVec r(m, Rat(0));
    for (auto& [idx, c] : coeffs) r[idx - 1] = c;
    return r;
  };
  // psi roots: negatives of the weights of the v list, in the v-list order.
  for (int k = 2; k <= np; ++k)
    R.positive_roots.push_back(gamma_root({{1, 1}, {k, -1}}));
  for (int k = 2; k <= np; ++k)
    R.positive_roots.push_back(gamma_root({{k, 1}, {m, -1}}));
  R.positive_roots.push_back(gamma_root({{1, 1}, {m, -1}}));
  for (int k = 2; k <= np; ++k)
    R.positive_roots.push_back(gamma_root({{k, -1}, {m, -1}}));
  R.positive_roots.push_back(gamma_root({{m, -2}}));
  for (int k = 2; k <= np; ++k)
    R.positive_roots.push_back(gamma_root({{1, 1}, {k, 1}}));
  R.positive_roots.push_back(gamma_root({{1, 2}}));
  for (int i = 0; i < (int)R.positive_roots.size(); ++i) R.psi.push_back(i);
  // Levi roots (one per opposite pair): gl(n) block, symmetric blocks, D1.
  for (int k = 2; k <= np; ++k)
    for (int h = k + 1; h <= np; ++h) {
      R.positive_roots.push_back(gamma_root({{k, 1}, {h, -1}}));
      R.phi_subset.push_back((int)R.positive_roots.size() - 1);
    }
  for (int k = 2; k <= np; ++k)
    for (int h = k; h <= np; ++h) {
      R.positive_roots.push_back(gamma_root({{k, 1}, {h, 1}}));
      R.phi_subset.push_back((int)R.positive_roots.size() - 1);
    }
  R.positive_roots.push_back(gamma_root({{1, 1}, {m, 1}}));
  R.phi_subset.push_back((int)R.positive_roots.size() - 1);

  R.h1_sum_form =
      form_sub(L.covector(0), L.covector(m - 1)).scaled(Rat(2 * n + 3));
  for (int j = 0; j < L.q; ++j) {
    RootUnit unit;
    unit.u_index = L.idx_u[j];
    unit.v_index = L.idx_v[j];
    unit.c1_value = eval_oneform(
        R.h1_sum_form, L.bracket_vectors(L.basis_vector(unit.u_index),
                                         L.basis_vector(unit.v_index)));
    R.units.push_back(unit);
  }
  return L;
}

// --- f4 (root data only) ------------------------------------------------------

LieAlgebra build_f4_family() {
  LieAlgebra L;
  L.spec = {Family::F4, 0};
  L.backend = Backend::ROOT_DATA;
  L.q = 15;

  // The 24 positive roots in lambda coordinates, in the printed order.
  const std::vector<std::array<Rat, 4>> roots = {
      {Rat(1), Rat(0), Rat(0), Rat(0)},   {Rat(0), Rat(1), Rat(0), Rat(0)},
      {Rat(0), Rat(0), Rat(1), Rat(0)},   {Rat(0), Rat(0), Rat(0), Rat(1)},
      {Rat(1), Rat(-1), Rat(0), Rat(0)},  {Rat(1), Rat(0), Rat(-1), Rat(0)},
      {Rat(-1), Rat(0), Rat(0), Rat(1)},  {Rat(0), Rat(1), Rat(-1), Rat(0)},
      {Rat(0), Rat(-1), Rat(0), Rat(1)},  {Rat(0), Rat(0), Rat(-1), Rat(1)},
      {Rat(1), Rat(1), Rat(0), Rat(0)},   {Rat(1), Rat(0), Rat(1), Rat(0)},
      {Rat(1), Rat(0), Rat(0), Rat(1)},   {Rat(0), Rat(1), Rat(1), Rat(0)},
      {Rat(0), Rat(1), Rat(0), Rat(1)},   {Rat(0), Rat(0), Rat(1), Rat(1)},
      {Rat(1, 2), Rat(1, 2), Rat(1, 2), Rat(1, 2)},
      {Rat(-1, 2), Rat(-1, 2), Rat(-1, 2), Rat(1, 2)},
      {Rat(1, 2), Rat(1, 2), Rat(-1, 2), Rat(1, 2)},
      {Rat(1, 2), Rat(-1, 2), Rat(1, 2), Rat(1, 2)},
      {Rat(-1, 2), Rat(-1, 2), Rat(1, 2), Rat(1, 2)},
      {Rat(-1, 2), Rat(1, 2), Rat(-1, 2), Rat(1, 2)},
      {Rat(1, 2), Rat(-1, 2), Rat(-1, 2), Rat(1, 2)},
      {Rat(-1, 2), Rat(1, 2), Rat(1, 2), Rat(1, 2)}};

  RootSystemData& R = L.roots;
  R.rank = 4;
  R.pairing_scale = Rat(18);
  for (auto& r : roots) R.positive_roots.push_back(RatVec(r.begin(), r.end()));
  for (int i = 0; i < 24; ++i) {
    if (R.positive_roots[i][3] != 0)
      R.psi.push_back(i);
    else
      R.phi_subset.push_back(i);
  }
  if ((int)R.psi.size() != 15)
    throw InternalConsistencyError("F4 psi root count is off");

  for (int i = 0; i < 4; ++i) L.labels.push_back("lam" + std::to_string(i));
  for (int j = 0; j < 15; ++j) {
    L.labels.push_back("Ep" + std::to_string(j + 1));
    L.labels.push_back("Em" + std::to_string(j + 1));
  }
  L.dim = (int)L.labels.size();
  R.ambient = L.dim;
  for (int i = 0; i < 4; ++i) L.idx_h.push_back(i);
  for (int j = 0; j < 15; ++j) {
    L.idx_u.push_back(4 + 2 * j);
    L.idx_v.push_back(4 + 2 * j + 1);
  }
  fill_complement_indices(L);

  // Sum of the psi roots is 11 * lam3.
  RatVec sum(4, Rat(0));
  for (int i : R.psi)
    for (int c = 0; c < 4; ++c) sum[c] += R.positive_roots[i][c];
  if (!(sum[0] == 0 && sum[1] == 0 && sum[2] == 0 && sum[3] == 11))
    throw InternalConsistencyError("F4 psi root sum is not 11*lam3");
  MultiForm h1(L.dim, 1);
  h1.add_term(uint64_t(1) << 3, Rat(11));
  R.h1_sum_form = h1;

  // With B(E_a, E_-a) = 1, the unit value is S(H_a) = 18 * <S, alpha>.
  for (int j = 0; j < 15; ++j) {
    RootUnit unit;
    unit.u_index = 4 + 2 * j;
    unit.v_index = 4 + 2 * j + 1;
    Rat dot(0);
    for (int c = 0; c < 4; ++c) dot += sum[c] * R.positive_roots[R.psi[j]][c];
    unit.c1_value = R.pairing_scale * dot;
    R.units.push_back(unit);
  }
  return L;
}

}  // namespace

int FamilySpec::codimension() const {
  switch (family) {
    case Family::SL: return n;
    case Family::SO: return n;
    case Family::SU: return 2 * n + 1;
    case Family::SP: return 4 * n + 3;
    case Family::F4: return 15;
  }
  throw UsageError("unknown family");
}

std::string FamilySpec::name() const {
  switch (family) {
    case Family::SL: return "sl(q=" + std::to_string(n) + ")";
    case Family::SO: return "so(n=" + std::to_string(n) + ")";
    case Family::SU: return "su(n=" + std::to_string(n) + ")";
    case Family::SP: return "sp(n=" + std::to_string(n) + ")";
    case Family::F4: return "f4";
  }
  throw UsageError("unknown family");
}

FamilySpec make_spec(Family f, int n) { return FamilySpec{f, n}; }

Family family_from_string(const std::string& s) {
  if (s == "sl") return Family::SL;
  if (s == "so") return Family::SO;
  if (s == "su") return Family::SU;
  if (s == "sp") return Family::SP;
  if (s == "f4") return Family::F4;
  throw UsageError("unknown family '" + s + "' (expected sl|so|su|sp|f4)");
}

int default_n_max(Family f) {
  switch (f) {
    case Family::SL: return 6;
    case Family::SO: return 6;
    case Family::SU: return 3;
    case Family::SP: return 2;
    case Family::F4: return 0;
  }
  return 0;
}

int LieAlgebra::label_index(const std::string& name) const {
  for (int i = 0; i < dim; ++i)
    if (labels[i] == name) return i;
  throw UsageError("unknown basis label " + name);
}

MultiForm LieAlgebra::covector(int index) const {
  return MultiForm::basis_covector(dim, index);
}

MultiForm LieAlgebra::covector(const std::string& name) const {
  return covector(label_index(name));
}

RatVec LieAlgebra::basis_vector(int index) const {
  RatVec v(dim, Rat(0));
  v[index] = 1;
  return v;
}

RatVec LieAlgebra::bracket_vectors(const RatVec& x, const RatVec& y) const {
  if (backend != Backend::MATRIX)
    throw UsageError("bracket requires the MATRIX backend");
  RatVec z(dim, Rat(0));
  for (int i = 0; i < dim; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < dim; ++j) {
      if (y[j] == 0) continue;
      for (auto& [k, c] : bracket[i][j]) z[k] += x[i] * y[j] * c;
    }
  }
  return z;
}

MultiForm LieAlgebra::diagonal_weight(int i) const {
  if (spec.family != Family::SL && spec.family != Family::SU)
    throw UsageError("diagonal weights are defined for the sl realizations");
  return sl_diagonal_weight(*this, matrix_size, i);
}

LieAlgebra build_family(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::SL: return build_sl_family(spec.n);
    case Family::SO: return build_so_family(spec.n);
    case Family::SU: return build_su_family(spec.n);
    case Family::SP: return build_sp_family(spec.n);
    case Family::F4: return build_f4_family();
  }
  throw UsageError("unknown family");
}

ValidationReport validate_lie(const LieAlgebra& L) {
  ValidationReport rep;
  if (L.backend != Backend::MATRIX) {
    if ((int)L.roots.psi.size() != L.q)
      rep.failures.push_back("psi size differs from the codimension");
    return rep;
  }
  auto fail = [&](const std::string& s) { rep.failures.push_back(s); };

  // [e_l, e_k] accumulated into a dense scratch row.
  auto add_bracket_of = [&](RatVec& acc, int l, int k, const Rat& c) {
    for (auto& [t, v] : L.bracket[l][k]) acc[t] += c * v;
  };

  for (int i = 0; i < L.dim; ++i)
    for (int j = 0; j < L.dim; ++j) {
      RatVec acc(L.dim, Rat(0));
      for (auto& [k, c] : L.bracket[i][j]) acc[k] += c;
      for (auto& [k, c] : L.bracket[j][i]) acc[k] += c;
      for (int k = 0; k < L.dim; ++k)
        if (acc[k] != 0) {
          fail("antisymmetry fails at (" + L.labels[i] + "," + L.labels[j] + ")");
          j = L.dim;
          break;
        }
    }

  bool jacobi_ok = true;
  for (int i = 0; i < L.dim && jacobi_ok; ++i)
    for (int j = i + 1; j < L.dim && jacobi_ok; ++j)
      for (int k = j + 1; k < L.dim && jacobi_ok; ++k) {
        RatVec acc(L.dim, Rat(0));
        for (auto& [l, c] : L.bracket[i][j]) add_bracket_of(acc, l, k, c);
        for (auto& [l, c] : L.bracket[j][k]) add_bracket_of(acc, l, i, c);
        for (auto& [l, c] : L.bracket[k][i]) add_bracket_of(acc, l, j, c);
        for (int a = 0; a < L.dim; ++a)
          if (acc[a] != 0) {
            fail("Jacobi fails at (" + L.labels[i] + "," + L.labels[j] + "," +
                 L.labels[k] + ")");
            jacobi_ok = false;
            break;
          }
      }

  auto closed_under_bracket = [&](const std::vector<int>& idx, const std::string& name) {
    std::vector<bool> member(L.dim, false);
    for (int i : idx) member[i] = true;
    for (int i : idx)
      for (int j : idx) {
        for (auto& [k, c] : L.bracket[i][j])
          if (!member[k]) {
            fail(name + " is not closed under the bracket at (" + L.labels[i] + "," +
                 L.labels[j] + ")");
            return;
          }
      }
  };
  closed_under_bracket(L.idx_p, "p");
  closed_under_bracket(L.idx_r, "r");
  closed_under_bracket(L.idx_h, "h");
  closed_under_bracket(L.idx_u, "u");
  closed_under_bracket(L.idx_v, "v");

  auto closed_span = [&](const std::vector<RatVec>& gens, const std::string& name) {
    if (gens.empty()) return;
    RatMat echelon = gens;
    const auto pivots = rref(echelon);
    auto in_span = [&](RatVec v) {
      for (std::size_t r = 0; r < pivots.size(); ++r) {
        const Rat f = v[pivots[r]];
        if (f == 0) continue;
        for (int c = 0; c < L.dim; ++c) v[c] -= f * echelon[r][c];
      }
      for (auto& x : v)
        if (x != 0) return false;
      return true;
    };
    for (std::size_t i = 0; i < gens.size(); ++i)
      for (std::size_t j = i + 1; j < gens.size(); ++j)
        if (!in_span(L.bracket_vectors(gens[i], gens[j]))) {
          fail(name + " is not closed under the bracket");
          return;
        }
  };
  closed_span(L.kg_gens, "k_G");
  closed_span(L.kp_gens, "k_P");

  for (int i = 0; i < L.dim && rep.ok(); ++i)
    for (int j = 0; j < L.dim; ++j)
      for (int k = 0; k < L.dim; ++k) {
        // B([x_i,x_j],x_k) + B(x_j,[x_i,x_k]) = 0
        Rat s(0);
        for (auto& [l, c] : L.bracket[i][j]) s += c * L.killing[l][k];
        for (auto& [l, c] : L.bracket[i][k]) s += c * L.killing[j][l];
        if (s != 0) {
          fail("Killing form is not ad-invariant at (" + L.labels[i] + "," +
               L.labels[j] + "," + L.labels[k] + ")");
          j = k = L.dim;
        }
      }

  if ((int)(L.idx_p.size() + L.idx_v.size()) != L.dim)
    fail("p and v do not partition the basis");
  if ((int)L.idx_v.size() != L.q) fail("dim v differs from the codimension");
  if ((int)L.roots.psi.size() != L.q) fail("psi size differs from the codimension");
  return rep;
}

const RatMat& killing_form(const LieAlgebra& L) {
  if (L.backend != Backend::MATRIX)
    throw UsageError("killing_form requires the MATRIX backend");
  return L.killing;
}

Rat killing_trace_scale(const LieAlgebra& L) {
  if (L.backend != Backend::MATRIX)
    throw UsageError("killing_trace_scale requires the MATRIX backend");
  Rat scale(0);
  bool have = false;
  for (int i = 0; i < L.dim; ++i)
    for (int j = 0; j < L.dim; ++j) {
      const Rat t = trace_product(L.basis_matrices[i], L.basis_matrices[j]);
      if (!have && t != 0) {
        scale = L.killing[i][j] / t;
        have = true;
      }
      if (L.killing[i][j] != scale * t)
        throw InternalConsistencyError(
            "Killing form is not proportional to the trace form");
    }
  return scale;
}

RatMat conjugation_matrix(const LieAlgebra& L, const RatMat& g) {
  if (L.backend != Backend::MATRIX)
    throw UsageError("conjugation requires the MATRIX backend");
  // g^{-1} via adjugate-free elimination.
  const int N = L.matrix_size;
  RatMat aug = g;
  for (int i = 0; i < N; ++i) {
    for (int j = 0; j < N; ++j) aug[i].push_back(i == j ? Rat(1) : Rat(0));
  }
  if (rref(aug).size() != (std::size_t)N) throw UsageError("singular matrix");
  RatMat ginv(N, RatVec(N));
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) ginv[i][j] = aug[i][N + j];

  std::vector<RatVec> rows;
  rows.reserve(L.dim);
  for (auto& m : L.basis_matrices) rows.push_back(flatten(m));
  CoordSolver solver(rows, (std::size_t)N * N);
  RatMat T = zmat(L.dim);
  for (int i = 0; i < L.dim; ++i) {
    auto coords = solver.coordinates(flatten(mmul(g, mmul(L.basis_matrices[i], ginv))));
    if (!coords)
      throw InternalConsistencyError("conjugation leaves the basis span");
    for (int r = 0; r < L.dim; ++r) T[r][i] = (*coords)[r];
  }
  return T;
}

Rat eval_oneform(const MultiForm& f, const RatVec& x) {
  if (f.degree() != 1) throw UsageError("eval_oneform: degree must be 1");
  if (!f.prefactor().is_rational())
    throw UsageError("eval_oneform: irrational prefactor");
  Rat s(0);
  for (auto& [m, v] : f.terms()) {
    uint64_t mask = m;
    int i = 0;
    while (!(mask & 1)) {
      mask >>= 1;
      ++i;
    }
    s += v * x[i];
  }
  return s * f.prefactor().rational_value();
}

}  // namespace gv
