#include "gv/exterior.hpp"

#include <bit>

#include "gv/errors.hpp"

namespace gv {

namespace {

MultiForm d_basis_covector(const LieAlgebra& L, int k) {
  MultiForm out(L.dim, 2);
  for (int i = 0; i < L.dim; ++i)
    for (int j = i + 1; j < L.dim; ++j)
      for (auto& [t, c] : L.bracket[i][j])
        if (t == k) out.add_term((uint64_t(1) << i) | (uint64_t(1) << j), -c);
  return out;
}

MultiForm d_root_backend(const MultiForm& f, const LieAlgebra& L) {
  // Only the Cartan block of the differential is modeled: for a Cartan
  // covector lambda, (d lambda)(E_a, E_-a) = -lambda(H_a) with
  // [E_a, E_-a] = H_a under the B(E_a, E_-a) = 1 normalization, and
  // lambda(H_a) = pairing_scale * <lambda, alpha> in coordinates.
  uint64_t h_mask = 0;
  for (int i : L.idx_h) h_mask |= uint64_t(1) << i;
  for (auto& [m, v] : f.terms())
    if (m & ~h_mask)
      throw UsageError("ROOT_DATA backend differentiates Cartan covectors only");
  MultiForm out(L.dim, 2);
  for (std::size_t t = 0; t < L.roots.units.size(); ++t) {
    const RootUnit& unit = L.roots.units[t];
    const auto& alpha = L.roots.positive_roots[L.roots.psi[t]];
    Rat lam_h(0);
    for (auto& [m, v] : f.terms())
      lam_h += v * L.roots.pairing_scale * alpha[std::countr_zero(m)];
    if (lam_h == 0) continue;
    const uint64_t mask =
        (uint64_t(1) << unit.u_index) | (uint64_t(1) << unit.v_index);
    const int sign =
        merge_sign(uint64_t(1) << unit.u_index, uint64_t(1) << unit.v_index);
    out.add_term(mask, sign > 0 ? Rat(-lam_h) : lam_h);
  }
  return out.scaled(f.prefactor());
}

}  // namespace

MultiForm ce_d(const MultiForm& f, const LieAlgebra& L) {
  if (L.backend == Backend::ROOT_DATA) {
    if (f.degree() != 1)
      throw UsageError("ROOT_DATA backend differentiates 1-forms only");
    return d_root_backend(f, L);
  }
  if (f.degree() >= L.dim) throw UsageError("ce_d: degree too large");
  std::vector<MultiForm> d_cache(L.dim);
  std::vector<bool> cached(L.dim, false);
  MultiForm out(L.dim, f.degree() + 1);
  bool first = true;
  for (auto& [m, v] : f.terms()) {
    uint64_t rest = m;
    int pos = 0;
    while (rest) {
      const int k = std::countr_zero(rest);
      rest &= rest - 1;
      if (!cached[k]) {
        d_cache[k] = d_basis_covector(L, k);
        cached[k] = true;
      }
      if (!d_cache[k].is_zero()) {
        MultiForm part = wedge(
            d_cache[k], MultiForm::monomial(L.dim, m & ~(uint64_t(1) << k), v));
        if (pos % 2 != 0) part = part.scaled(Rat(-1));
        out = first ? part : form_add(out, part);
        first = false;
      }
      ++pos;
    }
  }
  if (first) return MultiForm::zero_form(L.dim, f.degree() + 1);
  return out.scaled(f.prefactor());
}

MultiForm hat_d(const MultiForm& f, const LieAlgebra& L) {
  if (f.degree() != 1) throw UsageError("hat_d expects a 1-form");
  const MultiForm d = ce_d(f, L);
  uint64_t u_mask = 0, v_mask = 0;
  for (int i : L.idx_u) u_mask |= uint64_t(1) << i;
  for (int i : L.idx_v) v_mask |= uint64_t(1) << i;
  MultiForm out(L.dim, 2);
  for (auto& [m, v] : d.terms())
    if (std::popcount(m & u_mask) == 1 && std::popcount(m & v_mask) == 1)
      out.add_term(m, v);
  out.set_prefactor(d.prefactor());
  return out;
}

MultiForm lie_derivative(const MultiForm& f, const LieAlgebra& L, const RatVec& x) {
  MultiForm a = contract_vector(ce_d(f, L), x);
  if (f.degree() == 0) return a;
  MultiForm b = ce_d(contract_vector(f, x), L);
  return form_add(a, b);
}

bool basic_check(const MultiForm& f, const LieAlgebra& L, CompactSubspace which) {
  if (L.backend == Backend::ROOT_DATA)
    throw UsageError("basicness checks need the MATRIX backend");
  const auto& gens = which == CompactSubspace::KP ? L.kp_gens : L.kg_gens;
  for (const auto& x : gens) {
    if (!contract_vector(f, x).is_zero()) return false;
    if (!lie_derivative(f, L, x).is_zero()) return false;
  }
  return true;
}

int basic_subspace_dimension(const LieAlgebra& L, int degree) {
  if (L.backend == Backend::ROOT_DATA)
    throw UsageError("basicness checks need the MATRIX backend");
  // Enumerate the degree-monomials annihilated by all contractions first:
  // those supported away from k_P would be basis-dependent, so work with the
  // full monomial basis and impose i_X and L_X linearly.
  std::vector<uint64_t> monomials;
  const uint64_t full = (L.dim == 64) ? ~uint64_t(0) : ((uint64_t(1) << L.dim) - 1);
  uint64_t m = (uint64_t(1) << degree) - 1;
  while (m <= full) {
    monomials.push_back(m);
    // Gosper's next subset of the same popcount.
    const uint64_t c = m & -m, r = m + c;
    if (r > full || r < m) break;
    m = (((r ^ m) >> 2) / c) | r;
  }
  std::map<uint64_t, int> col_of;
  for (std::size_t i = 0; i < monomials.size(); ++i) col_of[monomials[i]] = (int)i;

  RatMat rows;
  auto add_constraint_rows = [&](const std::vector<MultiForm>& images) {
    // images[i] = operator applied to the i-th monomial; one row per output
    // monomial across all columns.
    std::map<uint64_t, RatVec> by_output;
    for (std::size_t i = 0; i < images.size(); ++i)
      for (auto& [om, c] : images[i].terms()) {
        auto& row = by_output[om];
        row.resize(monomials.size(), Rat(0));
        row[i] = c;
      }
    for (auto& [om, row] : by_output) {
      RatVec r = row;
      r.resize(monomials.size(), Rat(0));
      rows.push_back(std::move(r));
    }
  };

  for (const auto& x : L.kp_gens) {
    std::vector<MultiForm> contr, lied;
    contr.reserve(monomials.size());
    lied.reserve(monomials.size());
    for (uint64_t mono : monomials) {
      const MultiForm f = MultiForm::monomial(L.dim, mono, Rat(1));
      contr.push_back(contract_vector(f, x));
      lied.push_back(lie_derivative(f, L, x));
    }
    add_constraint_rows(contr);
    add_constraint_rows(lied);
  }
  if (rows.empty()) return (int)monomials.size();
  return (int)(monomials.size() - rank(rows));
}

}  // namespace gv
