#include "gv/root_data.hpp"

namespace gv {

namespace {

const ExactScalar kHalfOverPi =
    ExactScalar::from_rational(Rat(1, 2)) * ExactScalar::pi_power(-1);

}  // namespace

MultiForm delta_h1_root(const RootSystemData& data) {
  return data.h1_sum_form.scaled(-kHalfOverPi);
}

MultiForm delta_c1_root(const RootSystemData& data) {
  MultiForm out(data.ambient, 2);
  for (const auto& unit : data.units) {
    const uint64_t mask = (uint64_t(1) << unit.u_index) | (uint64_t(1) << unit.v_index);
    const int sign = merge_sign(uint64_t(1) << unit.u_index, uint64_t(1) << unit.v_index);
    out.add_term(mask, sign > 0 ? unit.c1_value : Rat(-unit.c1_value));
  }
  out.set_prefactor(kHalfOverPi);
  return out;
}

}  // namespace gv
