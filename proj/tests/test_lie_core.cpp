#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gv/exterior.hpp"
#include "gv/lie_algebra.hpp"

using namespace gv;

TEST_CASE("sl2 reproduces the Roussarie structure equations") {
  const LieAlgebra L = build_family({Family::SL, 1});
  CHECK(L.dim == 3);
  const MultiForm omega = L.covector("E21");
  const MultiForm eta = L.covector("H1").scaled(Rat(2));
  const MultiForm theta = L.covector("E12").scaled(Rat(2));
  CHECK(ce_d(omega, L).equals(wedge(eta, omega)));
  CHECK(ce_d(eta, L).equals(wedge(omega, theta)));
  CHECK(ce_d(theta, L).equals(wedge(eta, theta).scaled(Rat(-1))));
  // eta ^ omega ^ theta is a volume form
  CHECK(!wedge(eta, wedge(omega, theta)).is_zero());
}

TEST_CASE("dimensions match the closed forms") {
  for (int q = 1; q <= 4; ++q)
    CHECK(build_family({Family::SL, q}).dim == (q + 1) * (q + 1) - 1);
  for (int n = 1; n <= 4; ++n)
    CHECK(build_family({Family::SO, n}).dim == (n + 2) * (n + 1) / 2);
  for (int n = 0; n <= 2; ++n)
    CHECK(build_family({Family::SU, n}).dim == (n + 2) * (n + 2) - 1);
  for (int n = 0; n <= 1; ++n)
    CHECK(build_family({Family::SP, n}).dim == (n + 2) * (2 * n + 5));
}

TEST_CASE("SO n=1 matches the block dimension count with one normal direction") {
  const LieAlgebra L = build_family({Family::SO, 1});
  CHECK(L.dim == (1 + 2) * (1 + 1) / 2);  // complex dim of so(3)
  CHECK(L.idx_v.size() == 1);
  CHECK(validate_lie(L).ok());
}

TEST_CASE("validation is clean for every family in range") {
  for (int q = 1; q <= 4; ++q)
    CHECK(validate_lie(build_family({Family::SL, q})).ok());
  for (int n = 1; n <= 4; ++n)
    CHECK(validate_lie(build_family({Family::SO, n})).ok());
  for (int n = 0; n <= 2; ++n)
    CHECK(validate_lie(build_family({Family::SU, n})).ok());
  for (int n = 0; n <= 1; ++n)
    CHECK(validate_lie(build_family({Family::SP, n})).ok());
  CHECK(validate_lie(build_family({Family::F4, 0})).ok());
}

TEST_CASE("a perturbed structure constant breaks Jacobi with a witness") {
  LieAlgebra L = build_family({Family::SL, 1});
  // poke [H1, E12] by +1 on the E12 coordinate: 2 E12 becomes 3 E12
  const int i = L.label_index("H1"), j = L.label_index("E12");
  L.bracket[i][j].push_back({j, Rat(1)});
  L.bracket[j][i].push_back({j, Rat(-1)});
  const ValidationReport rep = validate_lie(L);
  CHECK(!rep.ok());
  bool has_jacobi = false;
  for (auto& f : rep.failures)
    if (f.find("Jacobi") != std::string::npos) has_jacobi = true;
  CHECK(has_jacobi);
}

TEST_CASE("Killing form is the expected multiple of the trace form") {
  CHECK(killing_trace_scale(build_family({Family::SL, 2})) == Rat(6));   // 2m, m=3
  CHECK(killing_trace_scale(build_family({Family::SL, 4})) == Rat(10));
  CHECK(killing_trace_scale(build_family({Family::SO, 3})) == Rat(3));   // n
  CHECK(killing_trace_scale(build_family({Family::SO, 4})) == Rat(4));
  CHECK(killing_trace_scale(build_family({Family::SU, 1})) == Rat(6));   // 2(n+2)
  CHECK(killing_trace_scale(build_family({Family::SP, 0})) == Rat(6));   // 2n''+2
  CHECK(killing_trace_scale(build_family({Family::SP, 1})) == Rat(8));
}

TEST_CASE("Killing Cartan blocks match the stated normalizations") {
  // SO: B(a, a) = n tr(a^2) = 2n
  for (int n = 1; n <= 4; ++n) {
    const LieAlgebra L = build_family({Family::SO, n});
    const int a = L.label_index("a");
    CHECK(L.killing[a][a] == Rat(2 * n));
  }
  // F4 stores the Cartan pairing scale 18 as root data
  const LieAlgebra f4 = build_family({Family::F4, 0});
  CHECK(f4.roots.pairing_scale == Rat(18));
}

TEST_CASE("F4 root data") {
  const LieAlgebra L = build_family({Family::F4, 0});
  CHECK(L.roots.positive_roots.size() == 24);
  CHECK(L.roots.psi.size() == 15);
  CHECK(L.roots.phi_subset.size() == 9);
  // the psi sum is 11 lam3, realized as a covector
  MultiForm expected(L.dim, 1);
  expected.add_term(uint64_t(1) << 3, Rat(11));
  CHECK(L.roots.h1_sum_form.equals(expected));
  // 7 long psi roots with integral lam3 part, 8 short halves
  int integral = 0, halves = 0;
  for (int i : L.roots.psi) {
    const Rat a3 = L.roots.positive_roots[i][3];
    if (a3 == 1) ++integral;
    if (a3 == Rat(1, 2)) ++halves;
  }
  CHECK(integral == 7);
  CHECK(halves == 8);
}

TEST_CASE("subspace bookkeeping") {
  const LieAlgebra L = build_family({Family::SP, 1});
  CHECK((int)L.idx_v.size() == L.q);
  CHECK(L.idx_u.size() == L.idx_v.size());
  CHECK(L.idx_p.size() + L.idx_v.size() == (std::size_t)L.dim);
  // k_P inside p
  for (const auto& g : L.kp_gens)
    for (int i : L.idx_v) CHECK(g[i] == 0);
}

TEST_CASE("Bott property: the v block of ad(X) for X in p is the connection action") {
  const LieAlgebra L = build_family({Family::SO, 2});
  for (int x : L.idx_p)
    for (std::size_t j = 0; j < L.idx_v.size(); ++j) {
      // [X, Y_j] has no u component for X in p
      const RatVec br =
          L.bracket_vectors(L.basis_vector(x), L.basis_vector(L.idx_v[j]));
      for (int ui : L.idx_u) CHECK(br[ui] == 0);
    }
}
