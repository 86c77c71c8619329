#include "mono/eha.hpp"
#include "mono/daha.hpp"

#include <omp.h>

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace mono {

SymF apply_Dk(const SymRing& ring, int k, const SymF& F) {
    SymF fp = ring.to_power(F);
    int degF = fp.max_degree();
    // G_j: z^j coefficient of F[X + z M], M = (1-t)(1-q)
    std::vector<SymF> G(size_t(degF) + 1, ring.zero());
    for (const auto& [la, c] : fp.terms) {
        int l = la.length();
        for (unsigned mask = 0; mask < (1u << l); mask++) {
            Ratio coef = c;
            std::vector<int> kept;
            int zdeg = 0;
            for (int i = 0; i < l; i++) {
                int part = la.parts[size_t(i)];
                if (mask & (1u << i)) {
                    // p_r -> z^r (1-q^r)(1-t^r)
                    zdeg += part;
                    coef *= Ratio{(Poly(1) - Poly::qt(part, 0)) * (Poly(1) - Poly::qt(0, part))};
                } else {
                    kept.push_back(part);
                }
            }
            std::sort(kept.rbegin(), kept.rend());
            G[size_t(zdeg)].add(Partition(kept), coef);
        }
    }
    // D_k F = sum_j (-1)^j e_{k+j} G_j
    SymF out = ring.zero();
    for (int j = 0; j <= degF; j++) {
        if (k + j < 0 || G[size_t(j)].is_zero()) continue;
        SymF term = ring.multiply(ring.e(k + j), G[size_t(j)]);
        if (j % 2) term = term * Ratio(-1);
        out += term;
    }
    return out;
}

SymF D_beps_one(const SymRing& ring, const std::vector<int>& b, const std::vector<int>& eps) {
    int m = int(b.size());
    if (int(eps.size()) != std::max(0, m - 1))
        throw std::invalid_argument("D_beps_one: eps must have length m-1");
    // suffix degrees bound the geometric shifts: after the cut at position i
    // the intermediate degree is sum_{r>i} b_r - s_i, which must stay >= 0
    std::vector<long> suffix(size_t(m) + 1, 0);
    for (int i = m - 1; i >= 0; i--) suffix[size_t(i)] = suffix[size_t(i) + 1] + b[size_t(i)];
    // V_i(s): partial composition from stage i inward, given left shift s
    std::map<int, SymF> V;
    V[0] = ring.one();
    for (int i = m; i >= 1; i--) {
        std::map<int, SymF> next;
        int smax = 0;
        if (i >= 2) {
            smax = eps[size_t(i - 2)] == 1 ? int(suffix[size_t(i - 1)]) : 0;
        }
        for (int s = 0; s <= smax; s++) {
            SymF acc = ring.zero();
            for (const auto& [si, Vi] : V) {
                if (Vi.is_zero()) continue;
                int a = b[size_t(i - 1)] + si - s;
                if (a + Vi.max_degree() < 0) continue;
                SymF term = apply_Dk(ring, a, Vi);
                if (si > 0) term = term * Ratio{Poly::qt(si, si)};
                acc += term;
            }
            if (!acc.is_zero()) next[s] = std::move(acc);
        }
        V = std::move(next);
        if (V.empty()) return ring.zero();
    }
    auto it = V.find(0);
    return it == V.end() ? ring.zero() : it->second;
}

SymF EhaEngine::F_primitive(const CurveSpec& c) const {
    CurveSpec use = calib_.b_transpose ? transpose_curve(c) : c;
    CurveStats st = curve_stats(use);
    SymF f = D_beps_one(ring_, st.b, st.eps);
    if (calib_.b_omega) f = ring_.omega(f);
    if (calib_.b_segment_sign) {
        int g = std::gcd(c.m, c.n);
        if ((c.m + g) % 2) f = f * Ratio(-1);
    }
    return f;
}

SymF EhaEngine::F(const CurveSpec& c) const {
    calib_.require();
    SymF out = ring_.zero();
    for (const auto& [coef, prim] : skein_expand(c)) {
        std::string key = prim.render();
        const SymF* fp = nullptr;
        {
            auto it = memo_.find(key);
            if (it != memo_.end()) fp = &it->second;
        }
        SymF f = fp ? *fp : F_primitive(prim);
        out += f * Ratio{coef};
    }
    return out;
}

void EhaEngine::warm(const std::vector<CurveSpec>& curves, int jobs) {
    calib_.require();
    int maxm = 0;
    for (const CurveSpec& c : curves) maxm = std::max(maxm, c.m);
    ring_.warm_up(std::min(ring_.degree_bound(), maxm)); // caches are read-only afterwards
    std::set<std::string> want;
    std::vector<CurveSpec> prims;
    for (const CurveSpec& c : curves)
        for (const auto& [coef, prim] : skein_expand(c)) {
            std::string key = prim.render();
            if (want.insert(key).second && !memo_.count(key)) prims.push_back(prim);
        }
    std::vector<SymF> vals(prims.size());
#pragma omp parallel for schedule(dynamic) num_threads(std::max(1, jobs))
    for (size_t i = 0; i < prims.size(); i++) vals[i] = F_primitive(prims[i]);
    for (size_t i = 0; i < prims.size(); i++) memo_.emplace(prims[i].render(), std::move(vals[i]));
}

EhaExpr& EhaExpr::operator+=(const EhaExpr& o) {
    terms.insert(terms.end(), o.terms.begin(), o.terms.end());
    return *this;
}

EhaExpr EhaExpr::operator*(const EhaExpr& o) const {
    EhaExpr r;
    for (const auto& t1 : terms)
        for (const auto& t2 : o.terms) {
            EhaTerm t{t1.coeff * t2.coeff, t1.factors};
            t.factors.insert(t.factors.end(), t2.factors.begin(), t2.factors.end());
            r.terms.push_back(std::move(t));
        }
    return r;
}

EhaExpr EhaExpr::operator*(const Ratio& c) const {
    EhaExpr r = *this;
    for (auto& t : r.terms) t.coeff *= c;
    return r;
}

EhaExpr EhaExpr::normalized() const {
    std::map<std::vector<std::pair<std::pair<int, int>, int>>, Ratio> acc;
    for (const auto& t : terms) {
        // merge powers of equal vectors, then sort
        std::map<std::pair<int, int>, int> pw;
        for (const auto& [x, p] : t.factors) pw[x] += p;
        std::vector<std::pair<std::pair<int, int>, int>> key(pw.begin(), pw.end());
        auto it = acc.find(key);
        if (it == acc.end())
            acc.emplace(std::move(key), t.coeff);
        else
            it->second += t.coeff;
    }
    EhaExpr r;
    for (auto& [k, c] : acc) {
        if (c.is_zero()) continue;
        c.simplify();
        r.terms.push_back(EhaTerm{c, k});
    }
    return r;
}

bool EhaExpr::equals(const EhaExpr& o) const {
    EhaExpr a = normalized(), b = o.normalized();
    if (a.terms.size() != b.terms.size()) return false;
    for (size_t i = 0; i < a.terms.size(); i++) {
        if (!(a.terms[i].factors == b.terms[i].factors)) return false;
        if (!a.terms[i].coeff.equals(b.terms[i].coeff)) return false;
    }
    return true;
}

std::string EhaExpr::str() const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    for (size_t i = 0; i < terms.size(); i++) {
        if (i) os << " + ";
        os << "(" << terms[i].coeff.str() << ")";
        for (const auto& [x, p] : terms[i].factors) {
            os << " u_{" << x.first << "," << x.second << "}";
            if (p != 1) os << "^" << p;
        }
    }
    return os.str();
}

std::string EhaExpr::json() const {
    std::ostringstream os;
    os << "{\"terms\":[";
    for (size_t i = 0; i < terms.size(); i++) {
        if (i) os << ",";
        os << "{\"coeff\":\"" << terms[i].coeff.str() << "\",\"factors\":[";
        for (size_t j = 0; j < terms[i].factors.size(); j++) {
            if (j) os << ",";
            os << "[" << terms[i].factors[j].first.first << ","
               << terms[i].factors[j].first.second << "," << terms[i].factors[j].second << "]";
        }
        os << "]}";
    }
    os << "]}";
    return os.str();
}

EhaExpr almost_linear_expansion(int m, int n) {
    int d = std::gcd(m, n);
    int m0 = m / d, n0 = n / d;
    EhaExpr out;
    for (const Partition& la : partitions_of(d)) {
        // c^d_la = (-t)^d eps_la z_la^{-1} prod_i (1 - t^{-la_i})
        Ratio c{Poly::qt(0, d, Rat(la.eps() * (d % 2 ? -1 : 1)))};
        c /= Ratio{Poly(la.z())};
        EhaTerm term;
        for (int part : la.parts) {
            c *= Ratio{Poly(1) - Poly::qt(0, -part)};
            // P^E_{part*(m0,n0)} = (q^{part} - 1) u_{part*(m0,n0)}
            c *= Ratio{Poly::qt(part, 0) - Poly(1)};
            term.factors.push_back({{part * m0, part * n0}, 1});
        }
        c.simplify();
        term.coeff = c;
        out.terms.push_back(std::move(term));
    }
    return out.normalized();
}

SymF apply_u(SymRing& ring, std::pair<int, int> x, const SymF& f) {
    auto [a, bcomp] = x;
    if (a == 1 && bcomp == 0) {
        // multiplication by p_1/(q-1)
        SymF r = ring.multiply(ring.p(Partition{{1}}), f);
        return r * Ratio::frac(Poly(1), Poly::qt(1, 0) - Poly(1));
    }
    if (a <= 0) throw std::invalid_argument("apply_u: first coordinate must be positive");
    int d = std::gcd(a, std::abs(bcomp));
    if (d == 1) {
        if (bcomp < 0) throw std::invalid_argument("apply_u: negative components unsupported");
        // u_x = D_x / ((1-t)(q-1)) with D_x realized by the DAHA engine
        int deg = ring.to_power(f).max_degree();
        int N = deg + a;
        ScaledNPoly fx = to_npoly(ring, f, N);
        CurveSpec cx = almost_linear_curve(a, bcomp);
        Daha H(N);
        ScaledNPoly res = D_apply(cx, H, fx.poly);
        res.scale *= fx.scale;
        res.compress();
        SymF lifted = lift_to_symf(ring, res);
        return lifted * (Ratio(1) / Ratio{(Poly(1) - Poly::qt(0, 1)) * (Poly::qt(1, 0) - Poly(1))});
    }
    if (x == std::make_pair(2, 2)) {
        // invert D_{2,2} = 1/2 (1-t^2)(q^2-1) u_{2,2} + 1/2 (1-t)^2 (q-1)^2 u_{1,1}^2
        int deg = ring.to_power(f).max_degree();
        int N = deg + 2;
        ScaledNPoly fx = to_npoly(ring, f, N);
        CurveSpec c22 = almost_linear_curve(2, 2);
        Daha H(N);
        ScaledNPoly res = D_apply(c22, H, fx.poly);
        res.scale *= fx.scale;
        res.compress();
        SymF d22 = lift_to_symf(ring, res);
        SymF u11sq = apply_u(ring, {1, 1}, apply_u(ring, {1, 1}, f));
        Ratio half{Poly(Rat(1, 2))};
        SymF rest = u11sq * (half * Ratio{(Poly(1) - Poly::qt(0, 1)) * (Poly(1) - Poly::qt(0, 1)) *
                                          (Poly::qt(1, 0) - Poly(1)) * (Poly::qt(1, 0) - Poly(1))});
        SymF num = d22;
        num -= rest;
        return num * (Ratio(1) / (half * Ratio{(Poly(1) - Poly::qt(0, 2)) * (Poly::qt(2, 0) - Poly(1))}));
    }
    throw std::invalid_argument("apply_u: unsupported vector");
}

std::vector<RelationReport> verify_relations(SymRing& ring, int D) {
    std::vector<RelationReport> out;
    auto spanning = [&](int maxdeg) {
        std::vector<SymF> fs;
        for (int d = 0; d <= maxdeg; d++)
            for (const Partition& la : partitions_of(d)) fs.push_back(ring.s(la));
        return fs;
    };
    auto commutator_check = [&](std::pair<int, int> x, std::pair<int, int> y, int sign,
                                std::pair<int, int> xy, const std::string& name) {
        int raise = x.first + y.first;
        bool pass = true;
        std::string detail;
        for (const SymF& f : spanning(D - raise)) {
            SymF lhs = apply_u(ring, y, apply_u(ring, x, f));
            lhs -= apply_u(ring, x, apply_u(ring, y, f));
            SymF rhs = apply_u(ring, xy, f) * Ratio(sign);
            if (!ring.equal(lhs, rhs)) {
                pass = false;
                detail = "fails on a spanning element";
                break;
            }
        }
        out.push_back({name, pass, detail});
    };
    // [u_y, u_x] = eps_{x,y} u_{x+y}, eps = sign det(x y), on primitive sums
    commutator_check({1, 1}, {1, 2}, 1, {2, 3}, "[u_{1,2},u_{1,1}] = u_{2,3}");
    commutator_check({1, 0}, {1, 1}, 1, {2, 1}, "[u_{1,1},u_{1,0}] = u_{2,1}");
    commutator_check({2, 1}, {1, 1}, 1, {3, 2}, "[u_{1,1},u_{2,1}] = u_{3,2}");
    {
        // u_{2,2} = 2qt/((1+q)(1+t)(1+qt)) [u_{1,2}, u_{1,0}]
        //           - (1-q)(1-t)(1-qt)/((1+q)(1+t)(1+qt)) u_{1,1}^2
        bool pass = true;
        Poly onep_q = Poly(1) + Poly::qt(1, 0), onep_t = Poly(1) + Poly::qt(0, 1),
             onep_qt = Poly(1) + Poly::qt(1, 1);
        Ratio cbr = Ratio{Poly::qt(1, 1, Rat(2))} / Ratio{onep_q * onep_t * onep_qt};
        Ratio csq = Ratio{(Poly(1) - Poly::qt(1, 0)) * (Poly(1) - Poly::qt(0, 1)) *
                          (Poly(1) - Poly::qt(1, 1))} /
                    Ratio{onep_q * onep_t * onep_qt};
        for (const SymF& f : spanning(D - 4)) {
            SymF br = apply_u(ring, {1, 0}, apply_u(ring, {1, 2}, f));
            br -= apply_u(ring, {1, 2}, apply_u(ring, {1, 0}, f));
            SymF rhs = br * cbr;
            rhs -= apply_u(ring, {1, 1}, apply_u(ring, {1, 1}, f)) * csq;
            SymF lhs = apply_u(ring, {2, 2}, f);
            if (!ring.equal(lhs, rhs)) { pass = false; break; }
        }
        out.push_back({"u_{2,2} bracket relation", pass, ""});
    }
    {
        // collinear commutativity
        bool pass = true;
        for (const SymF& f : spanning(D - 3)) {
            SymF lhs = apply_u(ring, {2, 2}, apply_u(ring, {1, 1}, f));
            SymF rhs = apply_u(ring, {1, 1}, apply_u(ring, {2, 2}, f));
            if (!ring.equal(lhs, rhs)) { pass = false; break; }
        }
        out.push_back({"[u_{1,1},u_{2,2}] = 0", pass, ""});
    }
    return out;
}

} // namespace mono
