// The Hecke algebra H_{m;q^{-1}} in the T_w basis, its seminormal
// irreducible matrix representations at generic q, and the character trace
//   Tr: H_m -> Lambda_q,  x -> sum_{la |- m} Tr(x; V_la) s_la.
// Braid generators map in via sigma_i -> T_i^{-1}.
#pragma once

#include "mono/braid.hpp"
#include "mono/partition.hpp"
#include "mono/poly.hpp"
#include "mono/symfunc.hpp"

#include <map>
#include <vector>

namespace mono {

using PermKey = std::vector<uint8_t>; // one-line, 0-based

struct HeckeElt {
    int m = 1;
    std::map<PermKey, Poly> terms; // coefficients are Laurent in q^{1/2}

    static HeckeElt identity(int m);
    void add_term(const PermKey& w, const Poly& c);
    bool is_zero() const { return terms.empty(); }
    HeckeElt& operator+=(const HeckeElt& o);
    HeckeElt& operator-=(const HeckeElt& o);
    HeckeElt operator*(const Poly& c) const;
    friend bool operator==(const HeckeElt& a, const HeckeElt& b) {
        return a.m == b.m && a.terms == b.terms;
    }

    HeckeElt right_T(int i, bool inverse = false) const; // x * T_i^{+-1}
    HeckeElt multiply(const HeckeElt& o) const;
};

// image of a braid word under sigma_i -> T_i^{-1}
HeckeElt hecke_normal_form(const BraidWord& b);

// seminormal matrices of the generators on V_la; cached per (m, shape)
class Seminormal {
public:
    using Matrix = std::vector<std::vector<Ratio>>;

    // matrix of T_i (or its inverse) on V_la, basis indexed by syt_of_shape
    static const Matrix& generator(const Partition& la, int i);
    static Matrix inverse_generator(const Partition& la, int i);
    static Matrix mat_mul(const Matrix& a, const Matrix& b);
    static Ratio trace(const Matrix& a);
};

// Tr(x; V_la) for every la |- m, assembled into a Schur-basis element
SymF char_trace(const SymRing& ring, const HeckeElt& x);
// trace of a braid image, multiplying generator matrices directly
SymF char_trace_braid(const SymRing& ring, const BraidWord& b);

} // namespace mono
