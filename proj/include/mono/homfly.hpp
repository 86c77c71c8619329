// HOMFLY polynomials of curve links via the Hecke trace, EHA
// superpolynomials, the t = q^{-1} comparison between the two routes, the
// annulus power-sum identity, a recursive skein-resolution oracle, and
// splice diagrams of coaxial almost torus links.
#pragma once

#include "mono/braid.hpp"
#include "mono/calibration.hpp"
#include "mono/curve.hpp"
#include "mono/hecke.hpp"
#include "mono/symfunc.hpp"

namespace mono {

// (-q^{1/2})^{-m} omega Tr(T_beta) in the Schur basis
SymF phi_annulus(const SymRing& ring, const BraidWord& b);

// P^HOMFLY of the closure of b: a^{-w} phi[( a - a^{-1} ) / (1 - q^{-1})],
// normalized so the unknot maps to (a - a^{-1})/(q^{-1/2} - q^{1/2})
Ratio homfly_of_braid(const SymRing& ring, const BraidWord& b);
Ratio homfly(const SymRing& ring, const CurveSpec& c);

// independent oracle: resolves crossings recursively toward descending
// diagrams; exponential in the crossing number
Ratio homfly_skein_oracle(const BraidWord& b);

// P^E_C = F_C[a - a^{-1}]; F may come from any engine
Poly superpoly(const SymRing& ring, const SymF& F);
// P^E / (a - a^{-1})
Poly superpoly_normalized(const SymRing& ring, const SymF& F);

struct Prop119Report {
    bool pass = false;
    long writhe_used = 0;
    std::string lhs, rhs;
};
// delta_{q,q^{-1}}^{k} P^E(a,q,t=q^{-1}) == a^{w} P^HOMFLY, both sides from
// disjoint code paths
Prop119Report verify_prop_1_19(const SymRing& ring, const CurveSpec& c, const SymF& F);

// F_C|_{t=q^{-1}} == (q^{-1/2}-q^{1/2})^k Tr(T_C)[X/(q^{-1/2}-q^{1/2})]
bool verify_trace_specialization(const SymRing& ring, const CurveSpec& c, const SymF& F);

// Tr of the normalized annular power-sum element equals p_N
bool annulus_powersum_check(const SymRing& ring, int N);

struct SpliceDiagram {
    struct Group {
        int p = 1, q = 1;            // reduced slope
        std::vector<int> d;          // cable multiplicities, in input order
    };
    std::vector<Group> groups;
    bool algebraic = false;
    std::string str() const;
};

// splice diagram of the coaxial almost torus link T_{(m_1,n_1),..}, and the
// edge-determinant algebraicity test
SpliceDiagram splice(const std::vector<std::pair<int, int>>& pairs);

} // namespace mono
