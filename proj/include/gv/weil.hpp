#pragma once

#include <map>
#include <string>
#include <vector>

#include "gv/multiform.hpp"
#include "gv/rat.hpp"

namespace gv {

/// Monomial h_I c_J of WO_q: I is a set of odd indices <= [q] (bitmask over
/// the index value), J is the exponent vector of c_1..c_q.
struct WOMonomial {
  uint32_t h_set = 0;           // bit i set <=> h_i present (i odd)
  std::vector<int> c_exp;       // length q

  bool operator<(const WOMonomial& o) const {
    if (h_set != o.h_set) return h_set < o.h_set;
    return c_exp < o.c_exp;
  }
  bool operator==(const WOMonomial& o) const {
    return h_set == o.h_set && c_exp == o.c_exp;
  }
};

struct WOElement {
  int q = 0;
  std::map<WOMonomial, Rat> terms;

  bool is_zero() const { return terms.empty(); }
  void add(const WOMonomial& m, const Rat& c);
  bool operator==(const WOElement& o) const { return q == o.q && terms == o.terms; }
};

int wo_degree(const WOMonomial& m);
int wo_c_degree(const WOMonomial& m);
std::string wo_str(const WOMonomial& m);

WOElement wo_monomial(int q, uint32_t h_set, std::vector<int> c_exp);

/// dh_i = c_i, dc_i = 0, extended as an antiderivation, then truncated.
WOElement wo_differential(const WOElement& e);

WOElement wo_product(const WOElement& a, const WOElement& b);

struct VeyMonomial {
  WOMonomial monomial;
  int degree = 0;
  bool exotic = false;  // false: Pontryagin
};

struct VeyBasis {
  int q = 0;
  std::vector<VeyMonomial> monomials;  // sorted by degree
};

/// Enumerates the distinguished cocycle basis of H*(WO_q).
VeyBasis vey_basis(int q);

/// Exact Betti numbers of WO_q by rational rank computations. q <= 3.
std::map<int, int> wo_cohomology(int q);

/// All monomials of WO_q, optionally restricted to one degree.
std::vector<WOMonomial> wo_monomial_basis(int q, int degree);

/// Multiplies by (2 pi)^(q+1), the Godbillon-Vey normalization.
MultiForm gv_normalize(const MultiForm& f, int q);

}  // namespace gv
