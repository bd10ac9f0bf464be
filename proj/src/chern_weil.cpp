#include "gv/chern_weil.hpp"

#include <algorithm>
#include <functional>

#include "gv/errors.hpp"

namespace gv {

namespace {

const ExactScalar kHalfOverPi =
    ExactScalar::from_rational(Rat(1, 2)) * ExactScalar::pi_power(-1);

MultiForm pair_monomial(const LieAlgebra& L, int u, int v) {
  return wedge(L.covector(u), L.covector(v));
}

/// Sum over k-subsets of principal minors, with commuting 2-form entries.
MultiForm elementary_symmetric(const ConnectionMatrix& omega, int k,
                               const LieAlgebra& L) {
  const int q = (int)omega.size();
  MultiForm total(L.dim, 2 * k);
  bool any = false;
  std::vector<int> subset(k);
  std::function<void(int, int)> rec = [&](int start, int depth) {
    if (depth == k) {
      // Leibniz determinant of the principal minor on `subset`.
      std::vector<int> cols = subset;
      do {
        int sign = 1;
        for (int i = 0; i < k; ++i)
          for (int j = i + 1; j < k; ++j)
            if (cols[i] > cols[j]) sign = -sign;
        MultiForm prod = MultiForm::monomial(L.dim, 0, Rat(1));
        bool zero = false;
        for (int i = 0; i < k && !zero; ++i) {
          prod = wedge(prod, omega[subset[i]][cols[i]]);
          zero = prod.is_zero();
        }
        if (!zero) {
          if (sign < 0) prod = prod.scaled(Rat(-1));
          total = any ? form_add(total, prod) : prod;
          any = true;
        }
      } while (std::next_permutation(cols.begin(), cols.end()));
      return;
    }
    for (int i = start; i < q; ++i) {
      subset[depth] = i;
      rec(i + 1, depth + 1);
    }
  };
  if (k == 0) return MultiForm::monomial(L.dim, 0, Rat(1));
  rec(0, 0);
  if (!any) return MultiForm::zero_form(L.dim, 2 * k);
  return total;
}

}  // namespace

ConnectionMatrix pittie_connection(const LieAlgebra& L) {
  if (L.backend != Backend::MATRIX)
    throw UsageError("pittie_connection requires the MATRIX backend");
  if (L.idx_v.empty()) throw UsageError("missing v decomposition");
  const int q = (int)L.idx_v.size();
  // theta(X) is the adjoint action of the p-component of X on v, so the
  // connection form vanishes on the v directions.
  ConnectionMatrix theta(q, std::vector<MultiForm>(q, MultiForm(L.dim, 1)));
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j) {
      MultiForm f(L.dim, 1);
      for (int b : L.idx_p)
        for (auto& [k, c] : L.bracket[b][L.idx_v[j]])
          if (k == L.idx_v[i] && c != 0) f.add_term(uint64_t(1) << b, c);
      theta[i][j] = f;
    }
  return theta;
}

ConnectionMatrix curvature(const ConnectionMatrix& theta, const LieAlgebra& L) {
  const int q = (int)theta.size();
  ConnectionMatrix omega(q, std::vector<MultiForm>(q, MultiForm(L.dim, 2)));
  // Omega = d Theta + Theta ^ Theta: the quadratic term's sign pairs with
  // the differential convention (d alpha)(x,y) = -alpha([x,y]) pinned by the
  // sl(2) structure equations.
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j) {
      MultiForm val = ce_d(theta[i][j], L);
      for (int k = 0; k < q; ++k)
        val = form_add(val, wedge(theta[i][k], theta[k][j]));
      if (!val.equals(hat_d(theta[i][j], L)))
        throw InternalConsistencyError(
            "curvature differs from the projected differential of the "
            "connection at entry (" +
            std::to_string(i) + "," + std::to_string(j) + ")");
      omega[i][j] = val;
    }
  return omega;
}

MultiForm delta_h1(const ConnectionMatrix& theta, const LieAlgebra& L) {
  MultiForm tr(L.dim, 1);
  bool any = false;
  for (std::size_t i = 0; i < theta.size(); ++i) {
    tr = any ? form_add(tr, theta[i][i]) : theta[i][i];
    any = true;
  }
  return tr.scaled(kHalfOverPi);
}

MultiForm delta_cJ(const ConnectionMatrix& omega, const std::vector<int>& J,
                   const LieAlgebra& L) {
  MultiForm out = MultiForm::monomial(L.dim, 0, Rat(1));
  for (std::size_t k = 0; k < J.size(); ++k) {
    if (J[k] == 0) continue;
    const MultiForm ck =
        elementary_symmetric(omega, (int)k + 1, L).scaled(kHalfOverPi.pow((long)k + 1));
    out = wedge(out, wedge_power(ck, J[k]));
  }
  return out;
}

MultiForm canonical_top_monomial(const LieAlgebra& L) {
  switch (L.spec.family) {
    case Family::SL: {
      // E11^ ^ (E1k^ ^ Ek1^), k = 2..q+1
      const int m = L.matrix_size;
      MultiForm w = L.diagonal_weight(1);
      for (int k = 2; k <= m; ++k)
        w = wedge(w, pair_monomial(L, L.label_index("E1" + std::to_string(k)),
                                   L.label_index("E" + std::to_string(k) + "1")));
      return w;
    }
    case Family::SO: {
      MultiForm w = L.covector("a");
      for (int k = 2; k <= L.spec.n + 1; ++k)
        w = wedge(w, pair_monomial(L, L.label_index("tv" + std::to_string(k)),
                                   L.label_index("v" + std::to_string(k))));
      return w;
    }
    case Family::SU: {
      const int m = L.matrix_size;
      MultiForm w = form_sub(L.diagonal_weight(1), L.diagonal_weight(m));
      for (int k = 2; k <= m; ++k)
        w = wedge(w, pair_monomial(L, L.label_index("E1" + std::to_string(k)),
                                   L.label_index("E" + std::to_string(k) + "1")));
      for (int k = 2; k <= m - 1; ++k)
        w = wedge(w,
                  pair_monomial(L, L.label_index("E" + std::to_string(k) + std::to_string(m)),
                                L.label_index("E" + std::to_string(m) + std::to_string(k))));
      return w;
    }
    case Family::SP: {
      // (gamma_1 - gamma_n'') ^ zeta^q with the printed zeta coefficients.
      const int np = L.spec.n + 1;
      MultiForm zeta(L.dim, 2);
      auto add_pair = [&](const std::string& z, const Rat& c) {
        const int u = L.label_index("t" + z), v = L.label_index(z);
        const int sign = merge_sign(uint64_t(1) << u, uint64_t(1) << v);
        zeta.add_term((uint64_t(1) << u) | (uint64_t(1) << v), sign > 0 ? c : Rat(-c));
      };
      for (int k = 2; k <= np; ++k) add_pair("u1_" + std::to_string(k), Rat(1));
      add_pair("v", Rat(2));
      for (int k = 2; k <= np; ++k) add_pair("x2_" + std::to_string(k), Rat(1));
      add_pair("y2", Rat(1));
      for (int k = 2; k <= np; ++k) add_pair("u2_" + std::to_string(k), Rat(1));
      add_pair("y1", Rat(1));
      for (int k = 2; k <= np; ++k) add_pair("x1_" + std::to_string(k), Rat(1));
      MultiForm w = form_sub(L.covector(0), L.covector("H" + std::to_string(L.spec.n + 2)));
      return wedge(w, wedge_power(zeta, L.q));
    }
    case Family::F4: {
      MultiForm w = L.covector("lam3");
      for (int j = 1; j <= 15; ++j)
        w = wedge(w, pair_monomial(L, L.label_index("Ep" + std::to_string(j)),
                                   L.label_index("Em" + std::to_string(j))));
      return w;
    }
  }
  throw UsageError("unknown family");
}

CharacteristicResult delta_gv(const LieAlgebra& L) {
  CharacteristicResult res;
  res.spec = L.spec;

  const MultiForm h1_root = delta_h1_root(L.roots);
  if (L.backend == Backend::MATRIX) {
    const ConnectionMatrix theta = pittie_connection(L);
    const ConnectionMatrix omega = curvature(theta, L);
    res.delta_h1 = delta_h1(theta, L);
    if (!res.delta_h1.equals(h1_root))
      throw InternalConsistencyError(
          "trace and root-sum evaluations of Delta(h1) disagree");
    res.delta_c1 = ce_d(res.delta_h1, L);
    const MultiForm c1_via_omega = delta_cJ(omega, {1}, L);
    if (!res.delta_c1.equals(c1_via_omega))
      throw InternalConsistencyError("Delta(c1) differs from c1(Omega)");
    res.notes.push_back("matrix backend; curvature check passed");
  } else {
    res.delta_h1 = h1_root;
    res.delta_c1 = delta_c1_root(L.roots);
    res.notes.push_back("root-data backend");
  }

  res.delta_gv = wedge(res.delta_h1, wedge_power(res.delta_c1, L.q));
  const MultiForm mono = canonical_top_monomial(L);
  auto ratio = ratio_if_multiple(res.delta_gv, mono);
  if (!ratio)
    throw InternalConsistencyError(
        "the top form is not a multiple of the canonical monomial");
  res.gv_coefficient = *ratio;
  return res;
}

RoussarieForms roussarie_forms(const LieAlgebra& L) {
  if (L.spec.family != Family::SL || L.spec.n != 1)
    throw UsageError("the Roussarie coframe lives on sl(2)");
  RoussarieForms f;
  f.omega = L.covector("E21");
  f.eta = L.covector("H1").scaled(Rat(2));
  f.theta = L.covector("E12").scaled(Rat(2));
  return f;
}

}  // namespace gv
