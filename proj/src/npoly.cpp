#include "mono/npoly.hpp"

#include <algorithm>
#include <numeric>

namespace mono {

void NPoly::add_term(const std::vector<int>& e, const Poly& c) {
    if (c.is_zero()) return;
    auto it = terms.find(e);
    if (it == terms.end()) {
        terms.emplace(e, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

NPoly& NPoly::operator+=(const NPoly& o) {
    for (const auto& [e, c] : o.terms) add_term(e, c);
    return *this;
}

NPoly& NPoly::operator-=(const NPoly& o) {
    for (const auto& [e, c] : o.terms) add_term(e, -c);
    return *this;
}

NPoly NPoly::operator*(const Poly& c) const {
    NPoly r(N);
    if (c.is_zero()) return r;
    for (const auto& [e, v] : terms) {
        Poly p = v * c;
        if (!p.is_zero()) r.terms.emplace(e, std::move(p));
    }
    return r;
}

NPoly NPoly::swap_vars(int i) const {
    NPoly r(N);
    for (const auto& [e, c] : terms) {
        std::vector<int> e2 = e;
        std::swap(e2[size_t(i - 1)], e2[size_t(i)]);
        r.add_term(e2, c);
    }
    return r;
}

NPoly NPoly::mult_x(int i, int power) const {
    NPoly r(N);
    for (const auto& [e, c] : terms) {
        std::vector<int> e2 = e;
        e2[size_t(i - 1)] += power;
        r.terms.emplace(std::move(e2), c);
    }
    return r;
}

bool NPoly::symmetric() const {
    for (int i = 1; i < N; i++)
        if (!(swap_vars(i) == *this)) return false;
    return true;
}

bool NPoly::homogeneous(long* degree) const {
    bool first = true;
    long d = 0;
    for (const auto& [e, c] : terms) {
        long s = std::accumulate(e.begin(), e.end(), 0L);
        if (first) {
            d = s;
            first = false;
        } else if (s != d) {
            return false;
        }
    }
    if (degree) *degree = d;
    return true;
}

long NPoly::total_degree() const {
    long d = 0;
    for (const auto& [e, c] : terms)
        d = std::max(d, std::accumulate(e.begin(), e.end(), 0L));
    return d;
}

void ScaledNPoly::compress() {
    scale.simplify();
    for (auto& [f, mult] : scale.den) {
        while (mult > 0) {
            std::map<std::vector<int>, Poly> divided;
            bool ok = true;
            for (const auto& [e, c] : poly.terms) {
                Poly q;
                if (!c.divide_exact(f, q)) { ok = false; break; }
                divided.emplace(e, std::move(q));
            }
            if (!ok) break;
            poly.terms = std::move(divided);
            mult--;
        }
    }
    scale.den.erase(std::remove_if(scale.den.begin(), scale.den.end(),
                                   [](const auto& p) { return p.second == 0; }),
                    scale.den.end());
}

bool ScaledNPoly::value_equals(const ScaledNPoly& o) const {
    if (poly.N != o.poly.N) return false;
    // scale*poly == o.scale*o.poly  <=>  r.num*poly == r.den*o.poly, r = scale/o.scale
    Ratio r = scale / o.scale;
    Poly denprod(1);
    for (const auto& [f, m] : r.den)
        for (int i = 0; i < m; i++) denprod *= f;
    NPoly lhs = poly * r.num;
    NPoly rhs = o.poly * denprod;
    return lhs == rhs;
}

ScaledNPoly to_npoly(const SymRing& ring, const SymF& f, int N) {
    SymF fm = ring.convert(f, Basis::monomial);
    // common denominator across coefficients
    Ratio common(1);
    for (const auto& [la, c] : fm.terms)
        for (const auto& [fac, m] : c.den) {
            int have = 0;
            for (auto& [g, k] : common.den)
                if (g == fac) { have = k; break; }
            if (m > have) {
                // extend
                bool found = false;
                for (auto& [g, k] : common.den)
                    if (g == fac) { k = m; found = true; break; }
                if (!found) common.den.emplace_back(fac, m);
            }
        }
    ScaledNPoly out;
    out.poly = NPoly(N);
    out.scale = Ratio(1);
    for (const auto& [fac, m] : common.den) out.scale.push_den(fac, m);
    for (const auto& [la, c] : fm.terms) {
        if (la.length() > N) continue; // truncation: x_{N+1} = x_{N+2} = .. = 0
        // coefficient times the missing denominator factors
        Ratio cc = c;
        Poly mul(1);
        for (const auto& [fac, m] : common.den) {
            int have = 0;
            for (const auto& [g, k] : cc.den)
                if (g == fac) { have = k; break; }
            for (int i = 0; i < m - have; i++) mul *= fac;
        }
        Poly coeff = (cc * Ratio{mul}).as_poly();
        // all distinct permutations of the padded part vector
        std::vector<int> e(size_t(N), 0);
        for (int i = 0; i < la.length(); i++) e[size_t(i)] = la.parts[size_t(i)];
        std::sort(e.begin(), e.end());
        do {
            out.poly.add_term(e, coeff);
        } while (std::next_permutation(e.begin(), e.end()));
    }
    return out;
}

SymF lift_to_symf(const SymRing& ring, const ScaledNPoly& p) {
    SymF fm{Basis::monomial, {}};
    for (const auto& [e, c] : p.poly.terms) {
        bool decreasing = true;
        for (size_t i = 0; i + 1 < e.size(); i++)
            if (e[i] < e[i + 1]) { decreasing = false; break; }
        if (!decreasing) continue;
        std::vector<int> parts;
        for (int x : e) {
            if (x < 0) throw std::logic_error("lift_to_symf: negative exponent");
            if (x > 0) parts.push_back(x);
        }
        fm.add(Partition(parts), p.scale * Ratio{c});
    }
    return ring.to_power(fm);
}

} // namespace mono
