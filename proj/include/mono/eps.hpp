// Formal-infinitesimal scalars c0 + c1*eps + c2*eps^2 for exact convex hull
// predicates at eps -> 0+. Degree is capped at 2: orientation determinants of
// points with eps-degree-1 coordinates never exceed it, and any operation
// that would is an internal error rather than a silent truncation.
#pragma once

#include "mono/rational.hpp"

#include <array>
#include <stdexcept>

namespace mono {

struct EpsScalar {
    Rat c0, c1, c2;

    EpsScalar() : c0(0), c1(0), c2(0) {}
    EpsScalar(Rat a, Rat b = Rat(0), Rat c = Rat(0))
        : c0(std::move(a)), c1(std::move(b)), c2(std::move(c)) {}
    static EpsScalar eps() { return EpsScalar(Rat(0), Rat(1)); }

    int degree() const { return c2 != 0 ? 2 : (c1 != 0 ? 1 : 0); }
    bool is_zero() const { return c0 == 0 && c1 == 0 && c2 == 0; }
    // sign of the value for infinitesimal eps > 0
    int sign() const {
        if (c0 != 0) return c0 > 0 ? 1 : -1;
        if (c1 != 0) return c1 > 0 ? 1 : -1;
        if (c2 != 0) return c2 > 0 ? 1 : -1;
        return 0;
    }

    EpsScalar operator+(const EpsScalar& o) const { return {c0 + o.c0, c1 + o.c1, c2 + o.c2}; }
    EpsScalar operator-(const EpsScalar& o) const { return {c0 - o.c0, c1 - o.c1, c2 - o.c2}; }
    EpsScalar operator*(const EpsScalar& o) const {
        if (c2 * o.c1 != 0 || c1 * o.c2 != 0 || c2 * o.c2 != 0 || (c2 != 0 && o.c1 != 0) ||
            (c1 != 0 && o.c2 != 0))
            throw std::logic_error("EpsScalar: product exceeds degree 2");
        return {c0 * o.c0, c0 * o.c1 + c1 * o.c0, c0 * o.c2 + c1 * o.c1 + c2 * o.c0};
    }
    bool operator==(const EpsScalar& o) const { return (*this - o).is_zero(); }
    bool operator<(const EpsScalar& o) const { return (*this - o).sign() < 0; }

    // evaluate at a concrete rational eps (test oracle)
    Rat at(const Rat& e) const { return c0 + c1 * e + c2 * e * e; }
};

struct EpsPoint {
    EpsScalar x, y;
};

// sign of the 2x2 orientation determinant of (p1,p2,p3); coordinates must
// have eps-degree <= 1
int eps_orient(const EpsPoint& p1, const EpsPoint& p2, const EpsPoint& p3);

} // namespace mono
