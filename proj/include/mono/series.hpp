// Decides whether all power-series coefficients of p(t)/(1-t)^j are >= 0,
// for a polynomial p given by its coefficient list.
#pragma once

#include "mono/rational.hpp"

#include <vector>

namespace mono {

// p[i] is the coefficient of t^i. Total: never fails.
bool series_nonneg(const std::vector<Rat>& p, int j);

} // namespace mono
