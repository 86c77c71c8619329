#include "mono/homfly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace mono {

SymF phi_annulus(const SymRing& ring, const BraidWord& b) {
    SymF tr = char_trace_braid(ring, b);
    SymF r = ring.omega(tr);
    // (-q^{1/2})^{-m} = (-1)^m q^{-m/2}
    Rat sign(b.strands % 2 ? -1 : 1);
    return r * Ratio{Poly::monomial(sign, Mono{0, -b.strands, 0})};
}

Ratio homfly_of_braid(const SymRing& ring, const BraidWord& b) {
    SymF phi = phi_annulus(ring, b);
    Ratio val = ring.plethysm_scalar(phi, [](int k) {
        // p_k[(a - a^{-1})/(1 - q^{-1})] = (a^k - a^{-k})/(1 - q^{-k})
        Ratio r{Poly::a_pow(k) - Poly::a_pow(-k)};
        r.push_den(Poly(1) - Poly::qt(-k, 0));
        return r;
    });
    val *= Ratio{Poly::a_pow(-b.writhe())};
    val.simplify();
    return val;
}

Ratio homfly(const SymRing& ring, const CurveSpec& c) {
    return homfly_of_braid(ring, coxeter_braid(c));
}

namespace {

// one crossing pass during closure traversal
struct Pass {
    size_t letter;
    bool over;
    long time;
};

// traversal times of both passes of every letter, walking the closure
// component by component; positive letters have the strand coming from the
// lower column on top
std::vector<std::pair<Pass, Pass>> traverse(const BraidWord& b) {
    size_t L = b.letters.size();
    std::vector<std::pair<Pass, Pass>> passes(L, {Pass{0, false, -1}, Pass{0, false, -1}});
    std::vector<int> perm = b.closure_permutation();
    std::vector<bool> started(size_t(b.strands), false);
    long time = 0;
    for (int start = 0; start < b.strands; start++) {
        if (started[size_t(start)]) continue;
        int col = start;
        do {
            started[size_t(col)] = true;
            for (size_t j = 0; j < L; j++) {
                auto [i, sign] = b.letters[j];
                if (col == i - 1) {
                    bool over = sign > 0; // lower-column strand on top at sigma_i
                    Pass p{j, over, time++};
                    (passes[j].first.time < 0 ? passes[j].first : passes[j].second) = p;
                    col = i;
                } else if (col == i) {
                    bool over = sign < 0;
                    Pass p{j, over, time++};
                    (passes[j].first.time < 0 ? passes[j].first : passes[j].second) = p;
                    col = i - 1;
                }
            }
        } while (col != start);
    }
    return passes;
}

Ratio skein_rec(const BraidWord& b) {
    auto passes = traverse(b);
    // first letter (in traversal order of its first pass) that is visited
    // under before over
    size_t bad = SIZE_MAX;
    long bad_time = -1;
    for (size_t j = 0; j < b.letters.size(); j++) {
        const auto& [p1, p2] = passes[j];
        const Pass& first = p1.time < p2.time ? p1 : p2;
        if (!first.over) {
            if (bad == SIZE_MAX || first.time < bad_time) {
                bad = j;
                bad_time = first.time;
            }
        }
    }
    if (bad == SIZE_MAX) {
        // descending: an unlink with one unknot per component
        Ratio u{Poly::a_pow(1) - Poly::a_pow(-1)};
        u.push_den(Poly::monomial(Rat(1), Mono{0, -1, 0}) - Poly::monomial(Rat(1), Mono{0, 1, 0}));
        Ratio r(1);
        for (int i = 0; i < b.components(); i++) r *= u;
        return r;
    }
    BraidWord switched = b, smoothed = b;
    switched.letters[bad].second = -switched.letters[bad].second;
    smoothed.letters.erase(smoothed.letters.begin() + long(bad));
    int sign = b.letters[bad].second;
    // a P_+ - a^{-1} P_- = (q^{-1/2} - q^{1/2}) P_0
    Ratio qdiff{Poly::monomial(Rat(1), Mono{0, -1, 0}) - Poly::monomial(Rat(1), Mono{0, 1, 0})};
    if (sign > 0) {
        // P_+ = a^{-2} P_- + a^{-1} (q^{-1/2}-q^{1/2}) P_0
        return skein_rec(switched) * Ratio{Poly::a_pow(-2)} +
               skein_rec(smoothed) * (qdiff * Ratio{Poly::a_pow(-1)});
    }
    // P_- = a^{2} P_+ - a (q^{-1/2}-q^{1/2}) P_0
    return skein_rec(switched) * Ratio{Poly::a_pow(2)} -
           skein_rec(smoothed) * (qdiff * Ratio{Poly::a_pow(1)});
}

} // namespace

Ratio homfly_skein_oracle(const BraidWord& b) {
    Ratio r = skein_rec(b);
    r.simplify();
    return r;
}

Poly superpoly(const SymRing& ring, const SymF& F) {
    Ratio v = ring.plethysm_scalar(F, [](int k) {
        return Ratio{Poly::a_pow(k) - Poly::a_pow(-k)};
    });
    return v.as_poly();
}

Poly superpoly_normalized(const SymRing& ring, const SymF& F) {
    Poly p = superpoly(ring, F);
    Poly q;
    if (!p.divide_exact(Poly::a_pow(1) - Poly::a_pow(-1), q))
        throw std::logic_error("superpoly is not divisible by a - a^{-1}");
    return q;
}

Prop119Report verify_prop_1_19(const SymRing& ring, const CurveSpec& c, const SymF& F) {
    Prop119Report rep;
    CurveStats st = curve_stats(c);
    rep.writhe_used = st.writhe;
    Poly P = superpoly(ring, F).subst_t_to_qinv();
    // delta_{q,q^{-1}}^k = (q^{-1/2} - q^{1/2})^{-k}
    Ratio lhs{P};
    Poly delta_den = Poly::monomial(Rat(1), Mono{0, -1, 0}) - Poly::monomial(Rat(1), Mono{0, 1, 0});
    for (int i = 0; i < st.k; i++) lhs.push_den(delta_den);
    Ratio rhs = homfly(ring, c) * Ratio{Poly::a_pow(st.writhe)};
    rep.pass = lhs.equals(rhs);
    rep.lhs = lhs.str();
    rep.rhs = rhs.str();
    return rep;
}

bool verify_trace_specialization(const SymRing& ring, const CurveSpec& c, const SymF& F) {
    CurveStats st = curve_stats(c);
    SymF lhs = ring.subst(ring.to_power(F), &Poly::subst_t_to_qinv);
    SymF tr = char_trace_braid(ring, coxeter_braid(c));
    SymF rhs = ring.plethysm_pk_scale(tr, [](int k) {
        Ratio r(1);
        r.push_den(Poly::monomial(Rat(1), Mono{0, -k, 0}) - Poly::monomial(Rat(1), Mono{0, k, 0}));
        return r;
    });
    Poly delta = Poly::monomial(Rat(1), Mono{0, -1, 0}) - Poly::monomial(Rat(1), Mono{0, 1, 0});
    Poly dk(1);
    for (int i = 0; i < st.k; i++) dk *= delta;
    rhs = rhs * Ratio{dk};
    return ring.equal(lhs, rhs);
}

bool annulus_powersum_check(const SymRing& ring, int N) {
    // W_N = (q^{1/2}-q^{-1/2})/(q^{N/2}-q^{-N/2}) sum_i A_{i,N-1-i},
    // A_{i,N-1-i} the closure of s_1..s_i s_{i+1}^{-1}..s_{N-1}^{-1}
    SymF acc{Basis::schur, {}};
    for (int i = 0; i <= N - 1; i++) {
        BraidWord b;
        b.strands = N;
        for (int j = 1; j <= i; j++) b.letters.push_back({j, 1});
        for (int j = i + 1; j <= N - 1; j++) b.letters.push_back({j, -1});
        acc += char_trace_braid(ring, b);
    }
    Ratio pref{Poly::monomial(Rat(1), Mono{0, 1, 0}) - Poly::monomial(Rat(1), Mono{0, -1, 0})};
    pref.push_den(Poly::monomial(Rat(1), Mono{0, N, 0}) - Poly::monomial(Rat(1), Mono{0, -N, 0}));
    SymF w = acc * pref;
    return ring.equal(w, ring.p(Partition{{N}}));
}

std::string SpliceDiagram::str() const {
    std::ostringstream os;
    for (size_t g = 0; g < groups.size(); g++) {
        if (g) os << " | ";
        os << "node(p=" << groups[g].p << ",q=" << groups[g].q << ";d=[";
        for (size_t i = 0; i < groups[g].d.size(); i++) {
            if (i) os << ",";
            os << groups[g].d[i];
        }
        os << "])";
    }
    os << (algebraic ? " algebraic" : " not-algebraic");
    return os.str();
}

SpliceDiagram splice(const std::vector<std::pair<int, int>>& pairs) {
    SpliceDiagram d;
    for (auto [m, n] : pairs) {
        if (m < 1 || n < 1) throw std::invalid_argument("splice: pairs must be positive");
        int g = std::gcd(m, n);
        int p = m / g, q = n / g;
        if (!d.groups.empty() && d.groups.back().p == p && d.groups.back().q == q) {
            d.groups.back().d.push_back(g);
        } else {
            d.groups.push_back({p, q, {g}});
        }
    }
    d.algebraic = true;
    // group node <-> cable node edges: (d p q + 1) * 1 > q * p * d, always true
    for (const auto& grp : d.groups)
        for (int dd : grp.d)
            if (dd > 1 && !(long(dd) * grp.p * grp.q + 1 > long(grp.q) * grp.p * dd))
                d.algebraic = false;
    // consecutive group nodes: p_j * q_{j+1} > q_j * p_{j+1}
    for (size_t g = 0; g + 1 < d.groups.size(); g++) {
        long lhs = long(d.groups[g].p) * d.groups[g + 1].q;
        long rhs = long(d.groups[g].q) * d.groups[g + 1].p;
        if (!(lhs > rhs)) d.algebraic = false;
    }
    return d;
}

} // namespace mono
