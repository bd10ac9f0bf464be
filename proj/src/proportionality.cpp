#include "gv/proportionality.hpp"

#include "gv/errors.hpp"

namespace gv {

namespace {

ExactScalar int_pow(long base, long k) {
  return ExactScalar::from_rational(Rat(base)).pow(k);
}

ExactScalar int_pow_half(long base, long k) {  // base^(k/2)
  return ExactScalar::from_rational(Rat(base)).pow_half(k);
}

ExactScalar sign_pm(long exponent) {
  return exponent % 2 == 0 ? ExactScalar::one() : -ExactScalar::one();
}

}  // namespace

CompactDualData compact_dual(const FamilySpec& spec) {
  CompactDualData d;
  d.spec = spec;
  const long n = spec.n;
  switch (spec.family) {
    case Family::SL:
      throw UsageError("no Euler proportionality row for the SL family");
    case Family::SO:
      if (n % 2 == 0)
        throw UsageError(
            "no Euler proportionality: Euler classes of even sphere bundles "
            "are trivial with real coefficients");
      d.dual_name = "RP^" + std::to_string(n + 1);
      d.euler_number = 1;
      d.volume = int_pow_half(2, n - 1) * int_pow_half(n, n + 1) * sphere_volume((int)n + 1);
      return d;
    case Family::SU:
      d.dual_name = "CP^" + std::to_string(n + 1);
      d.euler_number = (int)n + 2;
      d.volume = int_pow(2, n + 1) * int_pow(n + 2, n + 1) *
                 ExactScalar::pi_power(n + 1) / factorial_scalar(n + 1);
      return d;
    case Family::SP:
      d.dual_name = "HP^" + std::to_string(n + 1);
      d.euler_number = (int)n + 2;
      d.volume = int_pow(2, 6 * (n + 1)) * int_pow(n + 3, n + 1) *
                 ExactScalar::pi_power(2 * (n + 1)) / factorial_scalar(2 * n + 3);
      return d;
    case Family::F4:
      d.dual_name = "OP^2";
      d.euler_number = 3;
      d.volume = int_pow(72, 8) * ExactScalar::integer(6) *
                 ExactScalar::pi_power(8) / factorial_scalar(11);
      return d;
  }
  throw UsageError("unknown family");
}

ExactScalar compute_rG(const FamilySpec& spec) {
  const CompactDualData dual = compact_dual(spec);
  const int q = spec.codimension();
  if ((q + 1) % 2 != 0)
    throw InternalConsistencyError("odd q+1 in the proportionality step");
  const ExactScalar cg = compute_cG(spec);
  // The sign of c_G records the orientation conventions of the split; the
  // proportionality constant is orientation-free and positive.
  return cg.abs() * dual.volume / ExactScalar::integer(dual.euler_number);
}

ExactScalar cg_table_row(const FamilySpec& spec) {
  const long n = spec.n;
  switch (spec.family) {
    case Family::SL:
      throw UsageError("no fiber volume row for the SL family");
    case Family::SO:
      return sign_pm(n * (n - 1) / 2 + 1) * int_pow_half(n, n + 1) *
             factorial_scalar(n) * sphere_volume((int)n) /
             (int_pow_half(2, 3 * n + 3) * ExactScalar::pi_power(n + 1));
    case Family::SU:
      return sign_pm(n + 1) * int_pow(n + 1, 2 * n + 2) *
             factorial_scalar(2 * n + 1) * sphere_volume(2 * (int)n + 1) /
             (int_pow(2, n + 1) * ExactScalar::pi_power(2 * n + 2) *
              int_pow(n + 2, n + 1));
    case Family::SP:
      return int_pow(2 * n + 3, 4 * n + 4) * factorial_scalar(4 * n + 3) *
             sphere_volume(4 * (int)n + 3) /
             (int_pow_half(2, 12 * n + 11) * ExactScalar::pi_power(4 * n + 4) *
              int_pow(n + 3, 2 * n + 2));
    case Family::F4:
      return int_pow_half(3, 35) * int_pow(7, 4) * int_pow(11, 16) *
             factorial_scalar(15) * sphere_volume(15) /
             (int_pow(2, 6) * ExactScalar::pi_power(16));
  }
  throw UsageError("unknown family");
}

ExactScalar rg_table_row(const FamilySpec& spec) {
  const long n = spec.n;
  switch (spec.family) {
    case Family::SL:
      throw UsageError("no proportionality row for the SL family");
    case Family::SO:
      if (n % 2 == 0) throw UsageError("no row for even n");
      return int_pow(n, n + 1);
    case Family::SU:
      return ExactScalar::integer(2) * int_pow(n + 1, 2 * n + 2) /
             ExactScalar::integer(n + 2) * factorial_scalar(2 * n + 1) /
             (factorial_scalar(n) * factorial_scalar(n + 1));
    case Family::SP:
      return int_pow_half(2, 3) * int_pow(2 * n + 3, 4 * n + 3) /
             (ExactScalar::integer(n + 2) * int_pow(n + 3, n + 1)) *
             factorial_scalar(4 * n + 3) /
             (factorial_scalar(2 * n + 1) * factorial_scalar(2 * n + 2));
    case Family::F4:
      return int_pow(2, 19) * int_pow_half(3, 69) * int_pow(7, 4) *
             int_pow(11, 16) * ExactScalar::integer(13);
  }
  throw UsageError("unknown family");
}

CharacteristicResult full_result(const FamilySpec& spec) {
  const LieAlgebra L = build_family(spec);
  CharacteristicResult res = delta_gv(L);
  if (spec.family != Family::SL) {
    res.c_g = compute_cG(L, res);
    bool rg_defined = spec.family != Family::SO || spec.n % 2 == 1;
    if (rg_defined) res.r_g = compute_rG(spec);
  }
  return res;
}

}  // namespace gv
