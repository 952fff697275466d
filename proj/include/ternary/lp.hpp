#pragma once

#include <optional>

#include "ternary/numeric.hpp"

namespace ternary::lp {

/**
 * Phase-one simplex with Bland's rule over exact rationals: returns some
 * x >= 0 with a x = b, or nullopt when no such x exists. `cols` is the
 * number of variables (needed when `a` has no rows).
 */
std::optional<RatVector> nonnegative_solution(const RatMatrix& a, const RatVector& b, std::size_t cols);

}  // namespace ternary::lp
