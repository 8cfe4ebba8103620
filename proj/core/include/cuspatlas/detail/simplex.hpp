#pragma once

#include <vector>

#include "cuspatlas/numtheory.hpp"

namespace cuspatlas::detail {

// Is {x >= 0 : A x >= b} nonempty? Phase one simplex with Bland's rule over
// exact rationals.
bool lp_feasible(const std::vector<std::vector<Rational>>& A, const std::vector<Rational>& b);

}  // namespace cuspatlas::detail
