#pragma once

#include <gmpxx.h>

namespace gv {

using Rat = mpq_class;
using Int = mpz_class;

}  // namespace gv
