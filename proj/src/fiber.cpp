#include "gv/fiber.hpp"

#include "gv/errors.hpp"

namespace gv {

namespace {

MultiForm plus_cov(const LieAlgebra& L, const std::string& u, const std::string& v) {
  return form_add(L.covector(u), L.covector(v));
}

MultiForm minus_cov(const LieAlgebra& L, const std::string& a, const std::string& b) {
  return form_sub(L.covector(a), L.covector(b));
}

RatVec sum_basis(const LieAlgebra& L, const std::vector<std::string>& names) {
  RatVec v(L.dim, Rat(0));
  for (auto& n : names) v[L.label_index(n)] += 1;
  return v;
}

}  // namespace

ExactScalar factorial_scalar(long k) {
  Int f;
  mpz_fac_ui(f.get_mpz_t(), (unsigned long)k);
  return ExactScalar::from_rational(Rat(f));
}

SplitBasisData split_basis(const LieAlgebra& L) {
  SplitBasisData s;
  s.spec = L.spec;
  const int n = L.spec.n;
  switch (L.spec.family) {
    case Family::SL: {
      const int m = L.matrix_size;
      s.distinguished = L.diagonal_weight(1);
      for (int k = 2; k <= m; ++k) {
        const std::string a = "E1" + std::to_string(k), b = "E" + std::to_string(k) + "1";
        s.plus_covectors.push_back(plus_cov(L, a, b));
        s.minus_covectors.push_back(minus_cov(L, a, b));
      }
      s.fiber_factor = ExactScalar::zero();  // no fiber table row for SL
      break;
    }
    case Family::SO: {
      s.distinguished = L.covector("a");
      s.base_vectors.push_back(sum_basis(L, {"a"}));
      for (int k = 2; k <= n + 1; ++k) {
        const std::string tv = "tv" + std::to_string(k), v = "v" + std::to_string(k);
        s.plus_covectors.push_back(plus_cov(L, tv, v));
        s.minus_covectors.push_back(minus_cov(L, v, tv));
        s.base_vectors.push_back(sum_basis(L, {tv, v}));
      }
      s.fiber_factor = ExactScalar::prime_power(2, n);  // 2^(n/2)
      break;
    }
    case Family::SU: {
      const int m = L.matrix_size;
      s.distinguished = form_sub(L.diagonal_weight(1), L.diagonal_weight(m));
      RatVec x0(L.dim, Rat(0));
      for (int i = 0; i < m - 1; ++i) x0[i] = 1;  // H1+..+H_{m-1} = E11 - Emm
      s.base_vectors.push_back(x0);
      auto push_pair = [&](const std::string& a, const std::string& b) {
        s.plus_covectors.push_back(plus_cov(L, a, b));
        s.base_vectors.push_back(sum_basis(L, {a, b}));
      };
      for (int k = 2; k <= m; ++k)
        push_pair("E1" + std::to_string(k), "E" + std::to_string(k) + "1");
      for (int k = 2; k <= m - 1; ++k)
        push_pair("E" + std::to_string(k) + std::to_string(m),
                  "E" + std::to_string(m) + std::to_string(k));
      for (int k = 2; k <= m; ++k)
        s.minus_covectors.push_back(minus_cov(L, "E" + std::to_string(k) + "1",
                                              "E1" + std::to_string(k)));
      for (int k = 2; k <= m - 1; ++k)
        s.minus_covectors.push_back(minus_cov(L, "E" + std::to_string(m) + std::to_string(k),
                                              "E" + std::to_string(k) + std::to_string(m)));
      s.fiber_factor = ExactScalar::prime_power(2, 2 * (3 * n + 1));
      break;
    }
    case Family::SP: {
      s.distinguished =
          form_sub(L.covector("H1"), L.covector("H" + std::to_string(n + 2)));
      RatVec x0(L.dim, Rat(0));
      x0[0] = 1;
      x0[n + 1] = -1;  // H1 - H_{n''}
      s.base_vectors.push_back(x0);
      std::vector<std::string> zs;
      for (int k = 2; k <= n + 1; ++k) zs.push_back("u1_" + std::to_string(k));
      for (int k = 2; k <= n + 1; ++k) zs.push_back("u2_" + std::to_string(k));
      for (int k = 2; k <= n + 1; ++k) zs.push_back("x1_" + std::to_string(k));
      for (int k = 2; k <= n + 1; ++k) zs.push_back("x2_" + std::to_string(k));
      zs.push_back("y1");
      zs.push_back("y2");
      zs.push_back("v");
      for (auto& z : zs) {
        s.plus_covectors.push_back(plus_cov(L, "t" + z, z));
        s.minus_covectors.push_back(minus_cov(L, z, "t" + z));
        s.base_vectors.push_back(sum_basis(L, {"t" + z, z}));
      }
      s.fiber_factor = ExactScalar::prime_power(2, 12 * n + 7);  // 2^(6n+7/2)
      break;
    }
    case Family::F4: {
      s.distinguished = L.covector("lam3");
      for (int j = 1; j <= 15; ++j) {
        const std::string p = "Ep" + std::to_string(j), m = "Em" + std::to_string(j);
        s.plus_covectors.push_back(plus_cov(L, p, m));
        s.minus_covectors.push_back(minus_cov(L, m, p));
      }
      // Stored dual pairing: <lam3, lam3>* = 1/18 and <P_a, P_a>* = 2 from
      // B(E_a, E_-a) = 1; the Cartan direction is orthogonal to the pairs.
      RatMat gram(16, RatVec(16, Rat(0)));
      gram[0][0] = Rat(1, 18);
      for (int j = 1; j <= 15; ++j) gram[j][j] = 2;
      s.dual_gram = gram;
      // Fiber split into the 7-root and 8-root blocks with the so(8)/so(9)
      // rescalings: (4/3)^(7/2) * 7^4 2^4 / 3^8 = 2^11 * 7^4 * 3^(-23/2).
      s.fiber_factor = ExactScalar::prime_power(2, 22) *
                       ExactScalar::prime_power(7, 8) *
                       ExactScalar::prime_power(3, -23);
      break;
    }
  }
  return s;
}

SplitResult split_form(const MultiForm& gv, const LieAlgebra& L,
                       const SplitBasisData& split) {
  MultiForm w = split.distinguished;
  for (const auto& p : split.plus_covectors) w = wedge(w, p);
  for (const auto& m : split.minus_covectors) w = wedge(w, m);
  auto ratio = ratio_if_multiple(gv, w);
  if (!ratio)
    throw UsageError("split_form: the form is not expressible in the split basis");

  SplitResult out;
  out.coefficient = *ratio;
  out.fiber_factor = split.fiber_factor;

  if (split.dual_gram) {
    out.base_factor = ExactScalar::sqrt_rational(determinant(*split.dual_gram));
    return out;
  }
  if (L.backend != Backend::MATRIX)
    throw UsageError("split_form: missing metric data");
  // |det P| / sqrt(det G) over the base vectors, with the metric
  // B(X, Y) = metric_scale * tr(X Y^t) of the family.
  const std::size_t m = split.base_vectors.size();
  std::vector<MultiForm> covs;
  covs.push_back(split.distinguished);
  for (auto& p : split.plus_covectors) covs.push_back(p);
  if (covs.size() != m) throw InternalConsistencyError("split basis size mismatch");
  RatMat P(m, RatVec(m, Rat(0))), G(m, RatVec(m, Rat(0)));
  std::vector<RatMat> mats;
  for (auto& x : split.base_vectors) {
    RatMat acc(L.matrix_size, RatVec(L.matrix_size, Rat(0)));
    for (int i = 0; i < L.dim; ++i) {
      if (x[i] == 0) continue;
      for (int r = 0; r < L.matrix_size; ++r)
        for (int c = 0; c < L.matrix_size; ++c)
          acc[r][c] += x[i] * L.basis_matrices[i][r][c];
    }
    mats.push_back(std::move(acc));
  }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      P[i][j] = eval_oneform(covs[i], split.base_vectors[j]);
      Rat tr(0);
      for (int r = 0; r < L.matrix_size; ++r)
        for (int c = 0; c < L.matrix_size; ++c) tr += mats[i][r][c] * mats[j][r][c];
      G[i][j] = L.metric_scale * tr;
    }
  const Rat detP = determinant(P);
  const Rat detG = determinant(G);
  if (detG <= 0) throw InternalConsistencyError("split Gram is not positive");
  out.base_factor = ExactScalar::from_rational(::abs(detP)) /
                    ExactScalar::sqrt_rational(detG);
  return out;
}

ExactScalar sphere_volume(int q) {
  if (q < 1) throw UsageError("sphere_volume: q >= 1 required");
  const ExactScalar two_pi = ExactScalar::integer(2) * ExactScalar::pi_power(1);
  if (q % 2 == 1) {
    Rat denom(1);
    for (int k = 2; k <= q - 1; k += 2) denom *= k;
    return two_pi.pow((q + 1) / 2) / ExactScalar::from_rational(denom);
  }
  Rat denom(1);
  for (int k = 1; k <= q - 1; k += 2) denom *= k;
  return ExactScalar::integer(2) * two_pi.pow(q / 2) /
         ExactScalar::from_rational(denom);
}

ExactScalar compute_cG(const LieAlgebra& L, const CharacteristicResult& result) {
  if (L.spec.family == Family::SL)
    throw UsageError("the SL family has no fiber volume constant");
  const SplitBasisData split = split_basis(L);
  const SplitResult r = split_form(result.delta_gv, L, split);
  return r.coefficient * r.base_factor * r.fiber_factor * sphere_volume(L.q);
}

ExactScalar compute_cG(const FamilySpec& spec) {
  const LieAlgebra L = build_family(spec);
  return compute_cG(L, delta_gv(L));
}

VanishingCertificate even_sl_vanishing(int q) {
  if (q < 2 || q % 2 != 0)
    throw UsageError("even_sl_vanishing: q must be even and >= 2");
  const LieAlgebra L = build_family({Family::SL, q});
  const SplitBasisData split = split_basis(L);
  MultiForm factor = split.distinguished;
  for (const auto& p : split.plus_covectors) factor = wedge(factor, p);

  // Antipodal representative in SO(q+1): e_1 -> -e_1, e_2 -> -e_2.
  RatMat g(L.matrix_size, RatVec(L.matrix_size, Rat(0)));
  for (int i = 0; i < L.matrix_size; ++i) g[i][i] = (i < 2) ? Rat(-1) : Rat(1);
  const RatMat T = conjugation_matrix(L, g);
  const MultiForm pulled = pullback(factor, T);
  if (!pulled.equals(factor.scaled(Rat(-1))))
    throw InternalConsistencyError("antipodal pullback did not flip the sign");

  VanishingCertificate cert;
  cert.q = q;
  cert.antipodal = g;
  cert.factor = factor.str(L.labels);
  cert.sign = -1;
  return cert;
}

}  // namespace gv
