#pragma once

#include <string>

#include "gv/fiber.hpp"

namespace gv {

struct CompactDualData {
  FamilySpec spec;
  std::string dual_name;  // RP^{n+1}, CP^{n+1}, HP^{n+1}, OP^2
  int euler_number = 0;
  ExactScalar volume;  // Killing-metric volume
};

/// The compact dual row for the family. Errors: the SL family has no row and
/// the even-n SO family has no rational Euler proportionality.
CompactDualData compact_dual(const FamilySpec& spec);

/// Proportionality constant: |c_G| * vol(dual) / e(dual).
ExactScalar compute_rG(const FamilySpec& spec);

/// Closed-form table rows, evaluated independently of the pipeline.
ExactScalar cg_table_row(const FamilySpec& spec);
ExactScalar rg_table_row(const FamilySpec& spec);

/// Full bundle: forms, coefficient, and both constants where defined.
CharacteristicResult full_result(const FamilySpec& spec);

}  // namespace gv
