// Engine A: the finite-N polynomial representation of the double affine
// Hecke algebra, and the curve operators built from it. This is the ground
// truth the faster engines are calibrated against.
//
// Conventions: T_i acts by t^{-1/2} s_i + (t^{-1/2}-t^{1/2}) x_{i+1} d_i with
// the divided difference d_i computed termwise in closed form; X_i is
// multiplication by q^{-1} x_i; Y_i = t^{(N-1)/2} T_i..T_{N-1} rho
// T_1^{-1}..T_{i-1}^{-1} with (rho f)(x_1..x_N) = f(q x_N, x_1, .., x_{N-1}).
#pragma once

#include "mono/curve.hpp"
#include "mono/npoly.hpp"

namespace mono {

class Daha {
public:
    explicit Daha(int N) : N_(N) {}
    int N() const { return N_; }

    NPoly one() const { return NPoly::one(N_); }
    NPoly apply_s(int i, const NPoly& f) const { return f.swap_vars(i); }
    NPoly apply_T(int i, const NPoly& f, bool inverse = false) const;
    NPoly apply_rho(const NPoly& f, bool inverse = false) const;
    NPoly apply_X(int i, const NPoly& f, bool inverse = false) const;
    NPoly apply_Y(int i, const NPoly& f, bool inverse = false) const;
    NPoly apply_Y1(const NPoly& f, bool inverse = false) const { return apply_Y(1, f, inverse); }
    // Y_1 X_1 Y_1^{-1} as q T_1..T_{N-2} T_{N-1}^2 T_{N-2}..T_1 X_1
    NPoly apply_R_step(const NPoly& f) const;

    // e_{[1,k]} via the partial-symmetrizer recursion; normalization factors
    // accumulate in the scale
    void symmetrize(ScaledNPoly& f, int k) const;
    ScaledNPoly symmetrize(const NPoly& f, int k) const;
    // gamma_{N;t} e_N applied in place
    void gamma_e(ScaledNPoly& f) const;

    // brute-force symmetrizer over all of S_k (test oracle)
    ScaledNPoly symmetrize_bruteforce(const NPoly& f, int k) const;

    Poly gamma() const { return Poly(1) - Poly::qt(0, N_); } // 1 - t^N

private:
    int N_;
};

// D_C^{(N)} applied to f, factors acting right to left along the word
ScaledNPoly D_apply(const CurveSpec& c, int N, const NPoly& f);
ScaledNPoly D_apply(const CurveSpec& c, const Daha& H, const NPoly& f);

// F_C = (D_C . 1)[X/(1-t)] in the Schur basis, computed at N = m (or a
// caller-chosen larger N for stability tests)
SymF daha_F(const SymRing& ring, const CurveSpec& c, int N = -1);
// D_C . 1 lifted to the symmetric function ring, before the plethysm
SymF daha_D1(const SymRing& ring, const CurveSpec& c, int N = -1);

// census evaluation over many words sharing suffixes: the rightmost factors
// act first, so words are walked as a trie keyed from the end, each node
// carrying its intermediate state; parallelized by subtree
std::vector<SymF> daha_F_many(SymRing& ring, const std::vector<CurveSpec>& curves,
                              int jobs = 1);

} // namespace mono
