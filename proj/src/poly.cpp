#include "mono/poly.hpp"

#include <algorithm>
#include <sstream>

namespace mono {

void Poly::add_term(Mono m, const Rat& c) {
    if (c == 0) return;
    auto it = terms.find(m);
    if (it == terms.end()) {
        terms.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
}

bool Poly::is_one() const {
    return terms.size() == 1 && terms.begin()->first == Mono{} && terms.begin()->second == 1;
}

std::pair<Mono, Rat> Poly::single_term() const {
    if (terms.size() != 1) throw std::logic_error("Poly::single_term: not a monomial");
    return *terms.begin();
}

Poly& Poly::operator+=(const Poly& o) {
    for (const auto& [m, c] : o.terms) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    for (const auto& [m, c] : o.terms) add_term(m, -c);
    return *this;
}

Poly Poly::operator*(const Poly& o) const {
    Poly r;
    for (const auto& [m1, c1] : terms)
        for (const auto& [m2, c2] : o.terms)
            r.add_term(m1 + m2, c1 * c2);
    return r;
}

Poly Poly::operator-() const {
    Poly r;
    for (const auto& [m, c] : terms) r.terms.emplace(m, -c);
    return r;
}

Poly& Poly::operator*=(const Rat& c) {
    if (c == 0) { terms.clear(); return *this; }
    for (auto& [m, v] : terms) v *= c;
    return *this;
}

Poly Poly::shifted(Mono s) const {
    Poly r;
    for (const auto& [m, c] : terms) r.terms.emplace(m + s, c);
    return r;
}

static void mono_box(const Poly& p, Mono& lo, Mono& hi) {
    lo = hi = p.terms.begin()->first;
    for (const auto& [m, c] : p.terms) {
        lo.ea = std::min(lo.ea, m.ea); hi.ea = std::max(hi.ea, m.ea);
        lo.eq = std::min(lo.eq, m.eq); hi.eq = std::max(hi.eq, m.eq);
        lo.et = std::min(lo.et, m.et); hi.et = std::max(hi.et, m.et);
    }
}

bool Poly::divide_exact(const Poly& divisor, Poly& quotient) const {
    if (divisor.is_zero()) throw std::logic_error("Poly: division by zero");
    quotient = Poly();
    if (is_zero()) return true;
    // Newton polytopes add under multiplication, so an exact quotient has all
    // exponents in the coordinate box [lo(this)-lo(div), hi(this)-hi(div)].
    // Inside the box only finitely many quotient monomials exist and the lex
    // lead of the remainder strictly decreases, so the loop terminates.
    Mono tlo, thi, dlo, dhi;
    mono_box(*this, tlo, thi);
    mono_box(divisor, dlo, dhi);
    const auto& dlead = *divisor.terms.rbegin(); // lex-largest monomial
    Poly rem = *this;
    while (!rem.is_zero()) {
        const auto& rlead = *rem.terms.rbegin();
        Mono qm = rlead.first - dlead.first;
        if (qm.ea < tlo.ea - dlo.ea || qm.ea > thi.ea - dhi.ea ||
            qm.eq < tlo.eq - dlo.eq || qm.eq > thi.eq - dhi.eq ||
            qm.et < tlo.et - dlo.et || qm.et > thi.et - dhi.et)
            return false;
        Rat qc = rlead.second / dlead.second;
        quotient.add_term(qm, qc);
        Poly sub = divisor.shifted(qm);
        sub *= qc;
        rem -= sub;
    }
    return true;
}

Poly Poly::swap_qt() const {
    Poly r;
    for (const auto& [m, c] : terms) r.terms.emplace(Mono{m.ea, m.et, m.eq}, c);
    return r;
}

Poly Poly::subst_t_to_qinv() const {
    Poly r;
    for (const auto& [m, c] : terms) r.add_term(Mono{m.ea, m.eq - m.et, 0}, c);
    return r;
}

Poly Poly::subst_t_one() const {
    Poly r;
    for (const auto& [m, c] : terms) r.add_term(Mono{m.ea, m.eq, 0}, c);
    return r;
}

Poly Poly::subst_t_inv() const {
    Poly r;
    for (const auto& [m, c] : terms) r.terms.emplace(Mono{m.ea, m.eq, -m.et}, c);
    return r;
}

bool Poly::integer_qt_powers() const {
    for (const auto& [m, c] : terms)
        if ((m.eq & 1) || (m.et & 1)) return false;
    return true;
}

bool Poly::has_a() const {
    for (const auto& [m, c] : terms)
        if (m.ea != 0) return true;
    return false;
}

long Poly::min_exp_a() const {
    long r = 0;
    bool first = true;
    for (const auto& [m, c] : terms) {
        if (first || m.ea < r) r = m.ea;
        first = false;
    }
    return r;
}

long Poly::max_exp_a() const {
    long r = 0;
    bool first = true;
    for (const auto& [m, c] : terms) {
        if (first || m.ea > r) r = m.ea;
        first = false;
    }
    return r;
}

std::string exp_str(const char* var, long half_exp) {
    std::ostringstream os;
    if (half_exp == 0) return "";
    os << var;
    if (half_exp == 2) return os.str();
    if (half_exp % 2 == 0)
        os << "^" << half_exp / 2;
    else
        os << "^(" << half_exp << "/2)";
    return os.str();
}

std::string Poly::str() const { return str_vars("q", "t"); }

std::string Poly::str_vars(const char* qname, const char* tname) const {
    if (terms.empty()) return "0";
    // sort: total qt degree descending, then q-exponent descending, then a
    std::vector<std::pair<Mono, Rat>> v(terms.begin(), terms.end());
    std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) {
        long dx = x.first.eq + x.first.et, dy = y.first.eq + y.first.et;
        if (dx != dy) return dx > dy;
        if (x.first.eq != y.first.eq) return x.first.eq > y.first.eq;
        return x.first.ea > y.first.ea;
    });
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : v) {
        Rat ac = abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        std::string vars;
        if (m.ea != 0) {
            vars += "a";
            if (m.ea != 1) vars += "^" + std::to_string(m.ea);
        }
        std::string qs = exp_str(qname, m.eq), ts = exp_str(tname, m.et);
        if (!qs.empty()) { if (!vars.empty()) vars += "*"; vars += qs; }
        if (!ts.empty()) { if (!vars.empty()) vars += "*"; vars += ts; }
        if (vars.empty()) {
            os << ac.get_str();
        } else {
            if (ac != 1) os << ac.get_str() << "*";
            os << vars;
        }
    }
    return os.str();
}

Poly canonical_factor(const Poly& f, Poly& unit) {
    if (f.is_zero()) throw std::logic_error("canonical_factor: zero factor");
    auto [m, c] = *f.terms.begin(); // lex-smallest monomial
    unit = Poly::monomial(c, m);
    Poly g;
    for (const auto& [mm, cc] : f.terms) g.terms.emplace(mm - m, cc / c);
    return g;
}

Ratio::Ratio(Poly n, std::vector<std::pair<Poly, int>> d) : num(std::move(n)) {
    for (auto& [f, mult] : d)
        for (int i = 0; i < mult; i++) push_den(f);
}

Ratio Ratio::frac(const Poly& n, const Poly& d) {
    Ratio r(n);
    r.push_den(d);
    r.simplify();
    return r;
}

void Ratio::push_den(const Poly& f, int mult) {
    if (mult == 0) return;
    Poly unit;
    Poly g = canonical_factor(f, unit);
    // num / (unit*g)^mult = num * unit^{-mult} / g^mult
    auto [um, uc] = unit.single_term();
    Mono inv{-um.ea * mult, -um.eq * mult, -um.et * mult};
    Rat invc = 1 / uc;
    Rat invp = 1;
    for (int i = 0; i < mult; i++) invp *= invc;
    num = num.shifted(inv);
    num *= invp;
    if (g.is_one()) return;
    for (auto& [h, m] : den) {
        if (h == g) { m += mult; return; }
    }
    den.emplace_back(g, mult);
    std::sort(den.begin(), den.end(), [](const auto& x, const auto& y) {
        return x.first.terms < y.first.terms;
    });
}

void Ratio::simplify() {
    if (num.is_zero()) { den.clear(); return; }
    for (auto& [f, mult] : den) {
        while (mult > 0) {
            Poly q;
            if (!num.divide_exact(f, q)) break;
            num = q;
            mult--;
        }
    }
    den.erase(std::remove_if(den.begin(), den.end(),
                             [](const auto& p) { return p.second == 0; }),
              den.end());
}

static Poly den_product(const std::vector<std::pair<Poly, int>>& den) {
    Poly r(1);
    for (const auto& [f, m] : den)
        for (int i = 0; i < m; i++) r *= f;
    return r;
}

Ratio Ratio::operator+(const Ratio& o) const {
    // common denominator: multiset max per canonical factor
    Ratio r;
    r.den = den;
    for (const auto& [f, m] : o.den) {
        bool found = false;
        for (auto& [g, k] : r.den)
            if (g == f) { k = std::max(k, m); found = true; break; }
        if (!found) r.den.emplace_back(f, m);
    }
    std::sort(r.den.begin(), r.den.end(), [](const auto& x, const auto& y) {
        return x.first.terms < y.first.terms;
    });
    auto missing = [&](const std::vector<std::pair<Poly, int>>& have) {
        Poly prod(1);
        for (const auto& [f, m] : r.den) {
            int hm = 0;
            for (const auto& [g, k] : have)
                if (g == f) { hm = k; break; }
            for (int i = 0; i < m - hm; i++) prod *= f;
        }
        return prod;
    };
    r.num = num * missing(den) + o.num * missing(o.den);
    if (r.num.is_zero()) r.den.clear();
    return r;
}

Ratio Ratio::operator-(const Ratio& o) const { return *this + (-o); }

Ratio Ratio::operator-() const {
    Ratio r = *this;
    r.num = -r.num;
    return r;
}

Ratio Ratio::operator*(const Ratio& o) const {
    Ratio r(num * o.num);
    if (r.num.is_zero()) return r;
    for (const auto& [f, m] : den) r.push_den(f, m);
    for (const auto& [f, m] : o.den) r.push_den(f, m);
    return r;
}

Ratio Ratio::operator/(const Ratio& o) const {
    if (o.num.is_zero()) throw std::logic_error("Ratio: division by zero");
    Ratio r(num * den_product(o.den));
    if (r.num.is_zero()) return r;
    for (const auto& [f, m] : den) r.push_den(f, m);
    r.push_den(o.num);
    r.simplify();
    return r;
}

bool Ratio::equals(const Ratio& o) const {
    return num * den_product(o.den) == o.num * den_product(den);
}

bool Ratio::is_poly() const {
    Ratio r = *this;
    r.simplify();
    return r.den.empty();
}

Poly Ratio::as_poly() const {
    Ratio r = *this;
    r.simplify();
    if (!r.den.empty())
        throw std::logic_error("Ratio::as_poly: nontrivial denominator " + r.str());
    return r.num;
}

Ratio Ratio::swap_qt() const {
    Ratio r(num.swap_qt());
    for (const auto& [f, m] : den) r.push_den(f.swap_qt(), m);
    return r;
}

Ratio Ratio::subst_t_inv() const {
    Ratio r(num.subst_t_inv());
    for (const auto& [f, m] : den) r.push_den(f.subst_t_inv(), m);
    return r;
}

std::string Ratio::str() const {
    if (den.empty()) return num.str();
    std::ostringstream os;
    os << "(" << num.str() << ")/(";
    bool first = true;
    for (const auto& [f, m] : den) {
        if (!first) os << "*";
        first = false;
        os << "(" << f.str() << ")";
        if (m > 1) os << "^" << m;
    }
    os << ")";
    return os.str();
}

} // namespace mono
