// lp.hpp
//
// Exact feasibility for A x <= b over the rationals (free x), by a two-phase
// tableau simplex with Bland's rule.

#pragma once

#include <optional>
#include <vector>

#include "permtri/numfield.hpp"

namespace permtri {

std::optional<std::vector<Rational>> lp_feasible(const std::vector<std::vector<Rational>>& A,
                                                 const std::vector<Rational>& b);

}  // namespace permtri
