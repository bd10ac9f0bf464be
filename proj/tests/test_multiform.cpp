#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gv/multiform.hpp"

using gv::ExactScalar;
using gv::MultiForm;
using gv::Rat;

namespace {

MultiForm e(int ambient, int i) { return MultiForm::basis_covector(ambient, i); }

Rat factorial(int k) {
  Rat f(1);
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

}  // namespace

TEST_CASE("anticommutativity and squares") {
  const int d = 6;
  CHECK(wedge(e(d, 0), e(d, 1)).equals(wedge(e(d, 1), e(d, 0)).scaled(Rat(-1))));
  const MultiForm f = form_add(e(d, 0), e(d, 3).scaled(Rat(2)));
  CHECK(wedge(f, f).is_zero());
  const MultiForm mixed = form_add(wedge(e(d, 0), e(d, 1)),
                                   wedge(e(d, 2), e(d, 3)).scaled(Rat(5)));
  CHECK(!wedge(mixed, mixed).is_zero());  // even degree squares need not die
}

TEST_CASE("contraction") {
  const int d = 5;
  const MultiForm f = wedge(e(d, 0), e(d, 1));
  CHECK(contract_index(f, 0).equals(e(d, 1)));
  CHECK(contract_index(f, 1).equals(e(d, 0).scaled(Rat(-1))));
  CHECK(contract_index(contract_index(f, 0), 0).is_zero());
}

TEST_CASE("power of a sum of disjoint 2-forms picks up a factorial") {
  // Oracle: for q commuting square-zero terms, (sum)^q = q! * product.
  for (int q = 2; q <= 4; ++q) {
    const int d = 2 * q;
    MultiForm sum(d, 2);
    MultiForm prod = MultiForm::monomial(d, 0, Rat(1));
    for (int t = 0; t < q; ++t) {
      const MultiForm pair = wedge(e(d, 2 * t), e(d, 2 * t + 1));
      sum = t == 0 ? pair : form_add(sum, pair);
      prod = wedge(prod, pair);
    }
    CHECK(wedge_power(sum, q).equals(prod.scaled(factorial(q))));
  }
}

TEST_CASE("interleaved to split reordering sign") {
  // The permutation (1,2,...,2m) -> (1,3,...,2m-1,2,4,...,2m) has sign
  // (-1)^{m(m-1)/2}; realized here by comparing the two wedge orders.
  for (int m = 1; m <= 6; ++m) {
    const int d = 2 * m;
    MultiForm interleaved = MultiForm::monomial(d, 0, Rat(1));
    for (int t = 0; t < m; ++t)
      interleaved = wedge(interleaved, wedge(e(d, 2 * t), e(d, 2 * t + 1)));
    MultiForm split = MultiForm::monomial(d, 0, Rat(1));
    for (int t = 0; t < m; ++t) split = wedge(split, e(d, 2 * t));
    for (int t = 0; t < m; ++t) split = wedge(split, e(d, 2 * t + 1));
    const int expected = (m * (m - 1) / 2) % 2 == 0 ? 1 : -1;
    CHECK(interleaved.equals(split.scaled(Rat(expected))));
  }
}

TEST_CASE("prefactors multiply through wedges") {
  const int d = 4;
  MultiForm f = e(d, 0).scaled(ExactScalar::pi_power(-1));
  MultiForm g = e(d, 1).scaled(ExactScalar::prime_power(2, 1));
  const MultiForm w = wedge(f, g);
  CHECK(w.prefactor() == ExactScalar::pi_power(-1) * ExactScalar::prime_power(2, 1));
  auto r = ratio_if_multiple(w, wedge(e(d, 0), e(d, 1)));
  REQUIRE(r.has_value());
  CHECK(*r == ExactScalar::pi_power(-1) * ExactScalar::prime_power(2, 1));
}

TEST_CASE("ratio detection") {
  const int d = 6;
  const MultiForm g = form_add(wedge(e(d, 0), e(d, 1)),
                               wedge(e(d, 2), e(d, 3)).scaled(Rat(3)));
  const MultiForm f = g.scaled(Rat(-7, 2)).scaled(ExactScalar::pi_power(2));
  auto r = ratio_if_multiple(f, g);
  REQUIRE(r.has_value());
  CHECK(*r == ExactScalar::from_rational(Rat(-7, 2)) * ExactScalar::pi_power(2));
  const MultiForm h = form_add(g, wedge(e(d, 4), e(d, 5)));
  CHECK(!ratio_if_multiple(h, g).has_value());
}

TEST_CASE("substitution expands binomial covectors") {
  // Rewrite e0^ ^ e1^ through e0 -> (x+y)/1, e1 -> (x-y): the 2x2 change of
  // basis with determinant -2.
  const int d = 2;
  std::vector<MultiForm> images;
  images.push_back(form_add(e(d, 0), e(d, 1)));
  images.push_back(form_sub(e(d, 0), e(d, 1)));
  const MultiForm out = substitute(wedge(e(d, 0), e(d, 1)), images);
  CHECK(out.equals(wedge(e(d, 0), e(d, 1)).scaled(Rat(-2))));
}

TEST_CASE("random associativity and graded commutativity") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coeff(-3, 3);
  const int d = 8;
  auto random_form = [&](int degree, int nterms) {
    MultiForm f(d, degree);
    for (int t = 0; t < nterms; ++t) {
      uint64_t mask = 0;
      while (std::popcount(mask) < degree)
        mask |= uint64_t(1) << (rng() % d);
      if (std::popcount(mask) == degree) f.add_term(mask, Rat(coeff(rng)));
    }
    return f;
  };
  for (int iter = 0; iter < 50; ++iter) {
    const MultiForm a = random_form(1 + (int)(rng() % 2), 3);
    const MultiForm b = random_form(1 + (int)(rng() % 2), 3);
    const MultiForm c = random_form(2, 3);
    CHECK(wedge(wedge(a, b), c).equals(wedge(a, wedge(b, c))));
    const int s = (a.degree() * b.degree()) % 2 == 0 ? 1 : -1;
    CHECK(wedge(a, b).equals(wedge(b, a).scaled(Rat(s))));
  }
}
