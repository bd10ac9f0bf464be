#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gv/exact_scalar.hpp"
#include "gv/rat.hpp"

namespace gv {

/// Sparse exterior form over a fixed dual basis e_0^, ..., e_{d-1}^ (d <= 64).
///
/// A monomial is the bitmask of its (strictly increasing) index tuple. Each
/// stored coefficient is rational; an optional global prefactor carries the
/// shared surd/pi part, so coefficient comparison never leaves Q.
class MultiForm {
 public:
  MultiForm() = default;
  MultiForm(int ambient, int degree)
      : ambient_(ambient), degree_(degree) {}

  static MultiForm zero_form(int ambient, int degree);
  static MultiForm basis_covector(int ambient, int index);
  static MultiForm monomial(int ambient, uint64_t mask, const Rat& coeff);

  int ambient() const { return ambient_; }
  int degree() const { return degree_; }
  bool is_zero() const { return terms_.empty(); }
  const ExactScalar& prefactor() const { return prefactor_; }
  const std::map<uint64_t, Rat>& terms() const { return terms_; }

  Rat coefficient(uint64_t mask) const;

  void set_prefactor(const ExactScalar& p);
  void add_term(uint64_t mask, const Rat& coeff);

  MultiForm scaled(const Rat& c) const;
  MultiForm scaled(const ExactScalar& c) const;

  bool equals(const MultiForm& o) const;
  bool operator==(const MultiForm& o) const { return equals(o); }

  std::string str(const std::vector<std::string>& labels) const;

 private:
  int ambient_ = 0;
  int degree_ = 0;
  ExactScalar prefactor_ = ExactScalar::one();
  std::map<uint64_t, Rat> terms_;
};

/// Sign of sorting the concatenation (a-tuple, b-tuple); masks must be disjoint.
int merge_sign(uint64_t a, uint64_t b);

MultiForm wedge(const MultiForm& f, const MultiForm& g);
MultiForm wedge_power(const MultiForm& f, int k);
MultiForm wedge_all(const std::vector<MultiForm>& fs);

/// f + g. The prefactors must agree up to a rational ratio.
MultiForm form_add(const MultiForm& f, const MultiForm& g);
MultiForm form_sub(const MultiForm& f, const MultiForm& g);

/// Interior product with the basis vector e_index.
MultiForm contract_index(const MultiForm& f, int index);
/// Interior product with sum_i x_i e_i.
MultiForm contract_vector(const MultiForm& f, const std::vector<Rat>& x);

/// Rewrites f through images[j] = image 1-form of e_j^ (all in one ambient).
MultiForm substitute(const MultiForm& f, const std::vector<MultiForm>& images);

/// Pullback along the linear map with matrix m (columns = images of e_i).
MultiForm pullback(const MultiForm& f, const std::vector<std::vector<Rat>>& m);

/// c with f == c * g, when it exists.
std::optional<ExactScalar> ratio_if_multiple(const MultiForm& f, const MultiForm& g);

}  // namespace gv
