// Sparse Laurent polynomials in a, Q = q^{1/2}, T = t^{1/2} over the
// rationals, and ratios with factored denominators.
//
// Exponents are stored in HALF powers of q and t: a term with eq = 2 is q^1.
// The same type carries both the two-variable coefficients (ea = 0
// throughout) and superpolynomials; call sites that promise integer powers
// of q,t assert evenness of eq,et at the boundary.
//
// Ratio keeps its denominator as a list of (factor, multiplicity) pairs and
// never computes multivariate GCDs: addition brings terms to a common
// factored denominator, equality is decided by cross-multiplication, and
// simplify() only cancels a factor when the numerator is exactly divisible.
#pragma once

#include "mono/rational.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mono {

struct Mono {
    int32_t ea = 0; // exponent of a
    int32_t eq = 0; // exponent of Q = q^{1/2}
    int32_t et = 0; // exponent of T = t^{1/2}

    friend bool operator==(const Mono&, const Mono&) = default;
    friend auto operator<=>(const Mono&, const Mono&) = default;
    Mono operator+(const Mono& o) const { return {ea + o.ea, eq + o.eq, et + o.et}; }
    Mono operator-(const Mono& o) const { return {ea - o.ea, eq - o.eq, et - o.et}; }
};

class Poly {
public:
    std::map<Mono, Rat> terms; // no zero coefficients stored

    Poly() = default;
    explicit Poly(const Rat& c) { add_term(Mono{}, c); }
    explicit Poly(long c) { add_term(Mono{}, Rat(c)); }
    static Poly monomial(const Rat& c, Mono m) { Poly p; p.add_term(m, c); return p; }
    // q^i t^j with integer i, j
    static Poly qt(long i, long j, const Rat& c = Rat(1)) {
        return monomial(c, Mono{0, int32_t(2 * i), int32_t(2 * j)});
    }
    static Poly a_pow(long i, const Rat& c = Rat(1)) {
        return monomial(c, Mono{int32_t(i), 0, 0});
    }

    void add_term(Mono m, const Rat& c);
    bool is_zero() const { return terms.empty(); }
    bool is_one() const;
    bool is_rational() const { return terms.empty() || (terms.size() == 1 && terms.begin()->first == Mono{}); }
    // the single term of a monomial, or throws
    std::pair<Mono, Rat> single_term() const;
    bool is_monomial() const { return terms.size() == 1; }

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly operator+(const Poly& o) const { Poly r = *this; r += o; return r; }
    Poly operator-(const Poly& o) const { Poly r = *this; r -= o; return r; }
    Poly operator*(const Poly& o) const;
    Poly& operator*=(const Poly& o) { *this = *this * o; return *this; }
    Poly operator-() const;
    Poly& operator*=(const Rat& c);
    Poly shifted(Mono m) const; // multiply by a monomial
    friend bool operator==(const Poly& x, const Poly& y) { return x.terms == y.terms; }

    // exact division; returns false if the remainder is nonzero
    bool divide_exact(const Poly& divisor, Poly& quotient) const;

    // substitutions on exponents
    Poly swap_qt() const;             // q <-> t
    Poly subst_t_to_qinv() const;     // t^{1/2} -> q^{-1/2}
    Poly subst_t_one() const;         // t -> 1
    Poly subst_t_inv() const;         // t -> t^{-1}

    bool integer_qt_powers() const;   // all eq, et even
    bool has_a() const;
    bool is_qt_symmetric() const { return swap_qt() == *this; }

    long min_exp_a() const;
    long max_exp_a() const;

    std::string str() const;          // paper-style text, integer powers when even
    std::string str_vars(const char* qname, const char* tname) const;
};

// A ratio num / prod_i factor_i^mult_i. Factors are canonicalized so that
// their lexicographically smallest monomial is the constant 1 with positive
// coefficient; unit monomials move into num. Value semantics, exact.
class Ratio {
public:
    Poly num;
    std::vector<std::pair<Poly, int>> den; // canonical factors, sorted

    Ratio() : num() {}
    explicit Ratio(const Rat& c) : num(c) {}
    explicit Ratio(long c) : num(c) {}
    explicit Ratio(Poly p) : num(std::move(p)) {}
    Ratio(Poly n, std::vector<std::pair<Poly, int>> d);

    static Ratio frac(const Poly& n, const Poly& d);

    bool is_zero() const { return num.is_zero(); }

    Ratio operator+(const Ratio& o) const;
    Ratio operator-(const Ratio& o) const;
    Ratio operator*(const Ratio& o) const;
    Ratio operator/(const Ratio& o) const;
    Ratio operator-() const;
    Ratio& operator+=(const Ratio& o) { *this = *this + o; return *this; }
    Ratio& operator-=(const Ratio& o) { *this = *this - o; return *this; }
    Ratio& operator*=(const Ratio& o) { *this = *this * o; return *this; }
    Ratio& operator/=(const Ratio& o) { *this = *this / o; return *this; }

    bool equals(const Ratio& o) const; // cross-multiplication
    friend bool operator==(const Ratio& x, const Ratio& y) { return x.equals(y); }

    void push_den(const Poly& f, int mult = 1); // canonicalizes
    void simplify();                            // cancel factors dividing num
    // clears the denominator exactly; throws if a factor does not divide
    Poly as_poly() const;
    bool is_poly() const;

    Ratio swap_qt() const;
    Ratio subst_t_inv() const;

    std::string str() const;
};

// canonicalize f = unit * g with g canonical; returns g and sets unit
Poly canonical_factor(const Poly& f, Poly& unit);

std::string exp_str(const char* var, long half_exp); // "q", "q^2", "q^{1/2}"...

} // namespace mono
