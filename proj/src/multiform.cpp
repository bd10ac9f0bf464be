#include "gv/multiform.hpp"

#include <bit>
#include <sstream>

namespace gv {

namespace {

void check_same_space(const MultiForm& f, const MultiForm& g) {
  if (f.ambient() != g.ambient())
    throw UsageError("MultiForm: ambient dimension mismatch");
}

}  // namespace

MultiForm MultiForm::zero_form(int ambient, int degree) {
  return MultiForm(ambient, degree);
}

MultiForm MultiForm::basis_covector(int ambient, int index) {
  MultiForm f(ambient, 1);
  f.add_term(uint64_t(1) << index, Rat(1));
  return f;
}

MultiForm MultiForm::monomial(int ambient, uint64_t mask, const Rat& coeff) {
  MultiForm f(ambient, std::popcount(mask));
  f.add_term(mask, coeff);
  return f;
}

Rat MultiForm::coefficient(uint64_t mask) const {
  auto it = terms_.find(mask);
  return it == terms_.end() ? Rat(0) : it->second;
}

void MultiForm::set_prefactor(const ExactScalar& p) {
  if (p.is_zero()) {
    terms_.clear();
    prefactor_ = ExactScalar::one();
    return;
  }
  prefactor_ = p;
}

void MultiForm::add_term(uint64_t mask, const Rat& coeff) {
  if (std::popcount(mask) != degree_)
    throw UsageError("MultiForm: term degree mismatch");
  if (ambient_ < 64 && (mask >> ambient_) != 0)
    throw UsageError("MultiForm: index out of ambient range");
  auto it = terms_.find(mask);
  if (it == terms_.end()) {
    if (coeff != 0) terms_[mask] = coeff;
  } else {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiForm MultiForm::scaled(const Rat& c) const {
  MultiForm f(ambient_, degree_);
  f.prefactor_ = prefactor_;
  if (c == 0) return f;
  for (auto& [m, v] : terms_) f.terms_[m] = v * c;
  return f;
}

MultiForm MultiForm::scaled(const ExactScalar& c) const {
  MultiForm f = *this;
  if (c.is_zero()) return MultiForm(ambient_, degree_);
  f.prefactor_ = prefactor_ * c;
  return f;
}

bool MultiForm::equals(const MultiForm& o) const {
  if (ambient_ != o.ambient_) return false;
  if (is_zero() && o.is_zero()) return true;
  if (is_zero() != o.is_zero() || degree_ != o.degree_) return false;
  const ExactScalar r = prefactor_ / o.prefactor_;
  if (!r.is_rational()) return false;
  const Rat rr = r.rational_value();
  if (terms_.size() != o.terms_.size()) return false;
  for (auto& [m, v] : o.terms_) {
    auto it = terms_.find(m);
    if (it == terms_.end() || it->second != v * rr) return false;
  }
  return true;
}

std::string MultiForm::str(const std::vector<std::string>& labels) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  const std::string pre = prefactor_.str();
  for (auto& [m, v] : terms_) {
    if (!first) os << " + ";
    os << "(" << v.get_str();
    if (pre != "1") os << "*" << pre;
    os << ")";
    if (m != 0) os << "*";
    uint64_t rest = m;
    bool fl = true;
    while (rest) {
      int i = std::countr_zero(rest);
      rest &= rest - 1;
      if (!fl) os << "^";
      os << labels[i] << "'";
      fl = false;
    }
    first = false;
  }
  return os.str();
}

int merge_sign(uint64_t a, uint64_t b) {
  // Inversions between a and b: for each bit j of b, count bits of a above j.
  int parity = 0;
  uint64_t rest = b;
  while (rest) {
    int j = std::countr_zero(rest);
    rest &= rest - 1;
    uint64_t above = (j == 63) ? 0 : (a >> (j + 1));
    parity ^= std::popcount(above) & 1;
  }
  return parity ? -1 : 1;
}

MultiForm wedge(const MultiForm& f, const MultiForm& g) {
  check_same_space(f, g);
  MultiForm out(f.ambient(), f.degree() + g.degree());
  out.set_prefactor(f.prefactor() * g.prefactor());
  for (auto& [ma, ca] : f.terms()) {
    for (auto& [mb, cb] : g.terms()) {
      if (ma & mb) continue;
      const int s = merge_sign(ma, mb);
      out.add_term(ma | mb, s > 0 ? Rat(ca * cb) : Rat(-(ca * cb)));
    }
  }
  if (out.is_zero()) return MultiForm::zero_form(f.ambient(), out.degree());
  return out;
}

MultiForm wedge_power(const MultiForm& f, int k) {
  if (k < 0) throw UsageError("wedge_power: negative exponent");
  MultiForm out = MultiForm::monomial(f.ambient(), 0, Rat(1));
  for (int i = 0; i < k; ++i) out = wedge(out, f);
  return out;
}

MultiForm wedge_all(const std::vector<MultiForm>& fs) {
  if (fs.empty()) throw UsageError("wedge_all: empty product");
  MultiForm out = fs[0];
  for (std::size_t i = 1; i < fs.size(); ++i) out = wedge(out, fs[i]);
  return out;
}

MultiForm form_add(const MultiForm& f, const MultiForm& g) {
  check_same_space(f, g);
  if (f.is_zero()) return g;
  if (g.is_zero()) return f;
  if (f.degree() != g.degree()) throw UsageError("form_add: degree mismatch");
  const ExactScalar r = g.prefactor() / f.prefactor();
  if (!r.is_rational())
    throw UsageError("form_add: incompatible irrational prefactors");
  const Rat rr = r.rational_value();
  MultiForm out = f;
  for (auto& [m, v] : g.terms()) out.add_term(m, v * rr);
  return out;
}

MultiForm form_sub(const MultiForm& f, const MultiForm& g) {
  return form_add(f, g.scaled(Rat(-1)));
}

MultiForm contract_index(const MultiForm& f, int index) {
  if (f.degree() < 1) throw UsageError("contract: degree must be >= 1");
  MultiForm out(f.ambient(), f.degree() - 1);
  out.set_prefactor(f.prefactor());
  const uint64_t bit = uint64_t(1) << index;
  for (auto& [m, v] : f.terms()) {
    if (!(m & bit)) continue;
    const int below = std::popcount(m & (bit - 1));
    out.add_term(m & ~bit, (below & 1) ? -v : v);
  }
  return out;
}

MultiForm contract_vector(const MultiForm& f, const std::vector<Rat>& x) {
  MultiForm out(f.ambient(), f.degree() - 1);
  out.set_prefactor(f.prefactor());
  for (auto& [m, v] : f.terms()) {
    uint64_t rest = m;
    while (rest) {
      int i = std::countr_zero(rest);
      rest &= rest - 1;
      if (x[i] == 0) continue;
      const uint64_t bit = uint64_t(1) << i;
      const int below = std::popcount(m & (bit - 1));
      out.add_term(m & ~bit, (below & 1) ? Rat(-(v * x[i])) : Rat(v * x[i]));
    }
  }
  return out;
}

MultiForm substitute(const MultiForm& f, const std::vector<MultiForm>& images) {
  if (images.empty()) throw UsageError("substitute: no images");
  const int ambient = images[0].ambient();
  MultiForm out(ambient, f.degree());
  bool first_term = true;
  for (auto& [m, v] : f.terms()) {
    MultiForm prod = MultiForm::monomial(ambient, 0, Rat(1));
    uint64_t rest = m;
    while (rest) {
      int i = std::countr_zero(rest);
      rest &= rest - 1;
      prod = wedge(prod, images[i]);
    }
    prod = prod.scaled(v);
    out = first_term ? prod : form_add(out, prod);
    first_term = false;
  }
  if (first_term) return MultiForm::zero_form(ambient, f.degree());
  return out.scaled(f.prefactor());
}

MultiForm pullback(const MultiForm& f, const std::vector<std::vector<Rat>>& m) {
  // (phi^* e^j) = sum_i m[j][i] e^i  -- row j of the matrix of phi.
  std::vector<MultiForm> images;
  const int d = (int)m.size();
  images.reserve(d);
  for (int j = 0; j < d; ++j) {
    MultiForm im(d, 1);
    for (int i = 0; i < d; ++i)
      if (m[j][i] != 0) im.add_term(uint64_t(1) << i, m[j][i]);
    images.push_back(im);
  }
  return substitute(f, images);
}

std::optional<ExactScalar> ratio_if_multiple(const MultiForm& f, const MultiForm& g) {
  if (f.ambient() != g.ambient()) return std::nullopt;
  if (g.is_zero()) return std::nullopt;
  if (f.is_zero()) return ExactScalar::zero();
  if (f.degree() != g.degree() || f.terms().size() != g.terms().size())
    return std::nullopt;
  const auto& [m0, c0] = *g.terms().begin();
  auto it = f.terms().find(m0);
  if (it == f.terms().end()) return std::nullopt;
  const Rat r = it->second / c0;
  for (auto& [m, v] : g.terms()) {
    auto jt = f.terms().find(m);
    if (jt == f.terms().end() || jt->second != v * r) return std::nullopt;
  }
  return ExactScalar::from_rational(r) * (f.prefactor() / g.prefactor());
}

}  // namespace gv
