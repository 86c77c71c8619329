// Braid words and the Coxeter braids attached to curves.
#pragma once

#include "mono/curve.hpp"

#include <vector>

namespace mono {

struct BraidWord {
    int strands = 1;
    std::vector<std::pair<int, int>> letters; // (generator 1..strands-1, sign +-1)

    long writhe() const {
        long w = 0;
        for (auto [i, s] : letters) w += s;
        return w;
    }
    BraidWord conjugated(int gen, int sign) const;  // g b g^{-1}
    BraidWord stabilized(int sign = 1) const;       // b sigma_{strands}^{sign} on strands+1
    std::vector<int> closure_permutation() const;   // 0-based, bottom to top
    int components() const;
    std::string str() const;
};

// beta^cox = l_1^{b_1} .. l_m^{b_m} cox(eps), with l_i = s_{i-1}..s_1 s_1..s_{i-1}
BraidWord coxeter_braid(const std::vector<int>& b, const std::vector<int>& eps);
BraidWord coxeter_braid(const CurveSpec& c);

} // namespace mono
