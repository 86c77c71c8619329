// Laurent polynomials in x_1..x_N with LaurentQT coefficients: the carrier
// of the DAHA polynomial representation.
#pragma once

#include "mono/poly.hpp"
#include "mono/symfunc.hpp"

#include <map>
#include <vector>

namespace mono {

struct NPoly {
    int N = 0;
    std::map<std::vector<int>, Poly> terms; // exponent vector -> coefficient

    explicit NPoly(int n = 0) : N(n) {}
    static NPoly one(int n) {
        NPoly p(n);
        p.terms.emplace(std::vector<int>(size_t(n), 0), Poly(1));
        return p;
    }

    void add_term(const std::vector<int>& e, const Poly& c);
    bool is_zero() const { return terms.empty(); }
    NPoly& operator+=(const NPoly& o);
    NPoly& operator-=(const NPoly& o);
    NPoly operator*(const Poly& c) const;
    friend bool operator==(const NPoly& a, const NPoly& b) {
        return a.N == b.N && a.terms == b.terms;
    }

    NPoly swap_vars(int i) const;           // x_i <-> x_{i+1} (1-based i)
    NPoly mult_x(int i, int power) const;   // multiply by x_i^power
    bool symmetric() const;
    bool homogeneous(long* degree = nullptr) const;
    long total_degree() const;
};

// value = scale * poly; the scale carries symmetrizer normalizations so the
// polynomial part stays in Laurent coefficients
struct ScaledNPoly {
    NPoly poly;
    Ratio scale{Rat(1)};

    void compress(); // cancel scale denominators against the whole polynomial
    bool value_equals(const ScaledNPoly& o) const;
};

// expand a symmetric function into N variables; denominators of the
// coefficients are pulled into the common scale
ScaledNPoly to_npoly(const SymRing& ring, const SymF& f, int N);

// lift a symmetric homogeneous polynomial back to the symmetric function
// ring (valid when N >= degree); result in the power basis
SymF lift_to_symf(const SymRing& ring, const ScaledNPoly& p);

} // namespace mono
