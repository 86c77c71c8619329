// Engine C: the standard-Young-tableau formula
//   F_{b,eps} = sum_{T in SYT(m)} wt(T;eps) z_1^{b_1}..z_m^{b_m} nabla^{-1} H~_{sh(T)},
// with z_i = q^{c-1} t^{r-1} the (q,t)-content of the box holding i, and
// identically-zero factors omitted from both sides of the weight.
#pragma once

#include "mono/calibration.hpp"
#include "mono/curve.hpp"
#include "mono/symfunc.hpp"

namespace mono {

// wt(T; eps); throws if a denominator factor vanishes after the
// omit-zero-factors convention has been applied
Ratio magic_weight(const Tableau& T, const std::vector<int>& eps);

SymF magic_F_beps(const SymRing& ring, const std::vector<int>& b, const std::vector<int>& eps);

// F_C through the calibrated convention
SymF magic_F(const SymRing& ring, const Calibration& calib, const CurveSpec& c);

} // namespace mono
