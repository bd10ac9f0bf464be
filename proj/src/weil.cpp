#include "gv/weil.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <sstream>

#include "gv/errors.hpp"
#include "gv/linalg.hpp"

namespace gv {

namespace {

int largest_odd_leq(int q) { return q % 2 == 0 ? q - 1 : q; }

/// Enumerates all c-exponent vectors with weighted c-degree <= q.
void enumerate_c_exponents(int q, std::vector<std::vector<int>>& out) {
  std::vector<int> cur(q, 0);
  // Depth-first over indices with remaining weighted budget (in units of 2).
  std::function<void(int, int)> rec = [&](int idx, int budget) {
    if (idx == q) {
      out.push_back(cur);
      return;
    }
    for (int e = 0; e * (idx + 1) <= budget; ++e) {
      cur[idx] = e;
      rec(idx + 1, budget - e * (idx + 1));
    }
    cur[idx] = 0;
  };
  rec(0, q);
}

}  // namespace

void WOElement::add(const WOMonomial& m, const Rat& c) {
  auto it = terms.find(m);
  if (it == terms.end()) {
    if (c != 0) terms[m] = c;
  } else {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

int wo_degree(const WOMonomial& m) {
  int d = 0;
  for (uint32_t rest = m.h_set; rest; rest &= rest - 1)
    d += 2 * std::countr_zero(rest) - 1;
  for (int k = 0; k < (int)m.c_exp.size(); ++k) d += 2 * (k + 1) * m.c_exp[k];
  return d;
}

int wo_c_degree(const WOMonomial& m) {
  int d = 0;
  for (int k = 0; k < (int)m.c_exp.size(); ++k) d += 2 * (k + 1) * m.c_exp[k];
  return d;
}

std::string wo_str(const WOMonomial& m) {
  std::ostringstream os;
  bool any = false;
  for (uint32_t rest = m.h_set; rest; rest &= rest - 1) {
    os << "h" << std::countr_zero(rest);
    any = true;
  }
  for (int k = 0; k < (int)m.c_exp.size(); ++k) {
    if (m.c_exp[k] == 0) continue;
    os << "c" << (k + 1);
    if (m.c_exp[k] > 1) os << "^" << m.c_exp[k];
    any = true;
  }
  if (!any) os << "1";
  return os.str();
}

WOElement wo_monomial(int q, uint32_t h_set, std::vector<int> c_exp) {
  WOElement e;
  e.q = q;
  c_exp.resize(q, 0);
  WOMonomial m{h_set, std::move(c_exp)};
  if (wo_c_degree(m) <= 2 * q) e.add(m, Rat(1));
  return e;
}

WOElement wo_differential(const WOElement& e) {
  WOElement out;
  out.q = e.q;
  for (auto& [m, coeff] : e.terms) {
    int pos = 0;
    for (uint32_t rest = m.h_set; rest; rest &= rest - 1, ++pos) {
      const int i = std::countr_zero(rest);  // h_i, contributes c_i
      WOMonomial n = m;
      n.h_set &= ~(uint32_t(1) << i);
      n.c_exp[i - 1] += 1;
      if (wo_c_degree(n) > 2 * e.q) continue;  // truncation
      out.add(n, pos % 2 == 0 ? coeff : -coeff);
    }
  }
  return out;
}

WOElement wo_product(const WOElement& a, const WOElement& b) {
  if (a.q != b.q) throw UsageError("wo_product: mixed truncation degrees");
  WOElement out;
  out.q = a.q;
  for (auto& [ma, ca] : a.terms)
    for (auto& [mb, cb] : b.terms) {
      if (ma.h_set & mb.h_set) continue;
      const int sign = merge_sign(ma.h_set, mb.h_set);
      WOMonomial m;
      m.h_set = ma.h_set | mb.h_set;
      m.c_exp.resize(a.q);
      for (int k = 0; k < a.q; ++k) m.c_exp[k] = ma.c_exp[k] + mb.c_exp[k];
      if (wo_c_degree(m) > 2 * a.q) continue;
      out.add(m, sign > 0 ? Rat(ca * cb) : Rat(-(ca * cb)));
    }
  return out;
}

std::vector<WOMonomial> wo_monomial_basis(int q, int degree) {
  std::vector<std::vector<int>> cs;
  enumerate_c_exponents(q, cs);
  std::vector<int> odds;
  for (int i = 1; i <= largest_odd_leq(q); i += 2) odds.push_back(i);
  std::vector<WOMonomial> out;
  for (uint32_t sub = 0; sub < (uint32_t(1) << odds.size()); ++sub) {
    uint32_t h_set = 0;
    for (std::size_t t = 0; t < odds.size(); ++t)
      if (sub & (uint32_t(1) << t)) h_set |= uint32_t(1) << odds[t];
    for (auto& ce : cs) {
      WOMonomial m{h_set, ce};
      if (degree < 0 || wo_degree(m) == degree) out.push_back(m);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

VeyBasis vey_basis(int q) {
  if (q < 1) throw UsageError("vey_basis: q >= 1 required");
  VeyBasis basis;
  basis.q = q;
  std::vector<std::vector<int>> cs;
  enumerate_c_exponents(q, cs);

  // (Pontryagin part) c_J with every index even, including the constant.
  for (auto& ce : cs) {
    bool even_only = true;
    for (int k = 0; k < q; ++k)
      if (ce[k] > 0 && (k + 1) % 2 != 0) even_only = false;
    if (!even_only) continue;
    WOMonomial m{0, ce};
    basis.monomials.push_back({m, wo_degree(m), false});
  }

  // (exotic part) h_I c_J with i1 + |J| >= q+1 and i1 <= j for odd j in J,
  // where |J| is the weighted degree sum k J_k.
  std::vector<int> odds;
  for (int i = 1; i <= largest_odd_leq(q); i += 2) odds.push_back(i);
  for (uint32_t sub = 1; sub < (uint32_t(1) << odds.size()); ++sub) {
    uint32_t h_set = 0;
    int i1 = 0;
    for (std::size_t t = 0; t < odds.size(); ++t)
      if (sub & (uint32_t(1) << t)) {
        h_set |= uint32_t(1) << odds[t];
        if (i1 == 0) i1 = odds[t];
      }
    for (auto& ce : cs) {
      int weighted = 0;
      bool odd_ok = true;
      for (int k = 0; k < q; ++k) {
        weighted += (k + 1) * ce[k];
        if (ce[k] > 0 && (k + 1) % 2 != 0 && i1 > k + 1) odd_ok = false;
      }
      if (!odd_ok || i1 + weighted < q + 1) continue;
      WOMonomial m{h_set, ce};
      basis.monomials.push_back({m, wo_degree(m), true});
    }
  }
  std::stable_sort(basis.monomials.begin(), basis.monomials.end(),
                   [](const VeyMonomial& a, const VeyMonomial& b) {
                     return a.degree < b.degree;
                   });
  return basis;
}

std::map<int, int> wo_cohomology(int q) {
  if (q < 1 || q > 3) throw UsageError("wo_cohomology: supported for q in 1..3");
  const auto all = wo_monomial_basis(q, -1);
  int max_degree = 0;
  for (auto& m : all) max_degree = std::max(max_degree, wo_degree(m));

  std::vector<std::vector<WOMonomial>> by_degree(max_degree + 2);
  for (auto& m : all) by_degree[wo_degree(m)].push_back(m);

  auto d_matrix = [&](int deg) {
    // rows: target monomials of degree deg+1; cols: sources of degree deg
    const auto& src = by_degree[deg];
    const auto& dst = by_degree[deg + 1];
    std::map<WOMonomial, int> row_of;
    for (std::size_t i = 0; i < dst.size(); ++i) row_of[dst[i]] = (int)i;
    RatMat m(dst.size(), RatVec(src.size(), Rat(0)));
    for (std::size_t j = 0; j < src.size(); ++j) {
      WOElement e = wo_monomial(q, src[j].h_set, src[j].c_exp);
      for (auto& [t, c] : wo_differential(e).terms) m[row_of.at(t)][j] = c;
    }
    return m;
  };

  std::map<int, int> betti;
  for (int deg = 0; deg <= max_degree; ++deg) {
    const std::size_t n = by_degree[deg].size();
    if (n == 0) continue;
    const std::size_t rank_out = rank(d_matrix(deg));
    const std::size_t rank_in = deg == 0 ? 0 : rank(d_matrix(deg - 1));
    const int b = (int)(n - rank_out - rank_in);
    if (b != 0) betti[deg] = b;
  }
  return betti;
}

MultiForm gv_normalize(const MultiForm& f, int q) {
  const ExactScalar two_pi =
      ExactScalar::integer(2) * ExactScalar::pi_power(1);
  return f.scaled(two_pi.pow(q + 1));
}

}  // namespace gv
