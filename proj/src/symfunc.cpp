#include "mono/symfunc.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace mono {

const char* basis_name(Basis b) {
    switch (b) {
        case Basis::monomial: return "monomial";
        case Basis::elementary: return "elementary";
        case Basis::homogeneous: return "homogeneous";
        case Basis::power: return "power";
        case Basis::schur: return "schur";
        case Basis::macdonaldP: return "macdonaldP";
        case Basis::modifiedMacdonald: return "modifiedMacdonald";
    }
    return "?";
}

std::optional<Basis> basis_from_name(const std::string& s) {
    for (Basis b : {Basis::monomial, Basis::elementary, Basis::homogeneous, Basis::power,
                    Basis::schur, Basis::macdonaldP, Basis::modifiedMacdonald})
        if (s == basis_name(b)) return b;
    return std::nullopt;
}

bool SymF::is_zero() const {
    for (const auto& [p, c] : terms)
        if (!c.is_zero()) return false;
    return true;
}

int SymF::max_degree() const {
    int d = 0;
    for (const auto& [p, c] : terms)
        if (!c.is_zero()) d = std::max(d, p.size());
    return d;
}

void SymF::add(const Partition& p, const Ratio& c) {
    if (c.is_zero()) return;
    auto it = terms.find(p);
    if (it == terms.end()) {
        terms.emplace(p, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

SymF& SymF::operator+=(const SymF& o) {
    assert(basis == o.basis);
    for (const auto& [p, c] : o.terms) add(p, c);
    return *this;
}

SymF& SymF::operator-=(const SymF& o) {
    assert(basis == o.basis);
    for (const auto& [p, c] : o.terms) add(p, -c);
    return *this;
}

SymF SymF::operator*(const Ratio& c) const {
    SymF r{basis, {}};
    for (const auto& [p, v] : terms) r.add(p, v * c);
    return r;
}

SymF SymF::graded_part(int d) const {
    SymF r{basis, {}};
    for (const auto& [p, c] : terms)
        if (p.size() == d) r.add(p, c);
    return r;
}

Alphabet Alphabet::X() {
    AlphabetTerm t;
    t.hasX = true;
    return Alphabet{{t}};
}

Alphabet Alphabet::X_over_one_minus_t() {
    AlphabetTerm t;
    t.hasX = true;
    t.geom = {1};
    return Alphabet{{t}};
}

Alphabet Alphabet::X_times(Mono scale) {
    AlphabetTerm t;
    t.hasX = true;
    t.mono = scale;
    return Alphabet{{t}};
}

Alphabet Alphabet::a_minus_ainv() {
    AlphabetTerm u, v;
    u.mono = Mono{1, 0, 0};
    v.mono = Mono{-1, 0, 0};
    v.coeff = Rat(-1);
    return Alphabet{{u, v}};
}

Alphabet Alphabet::a_minus_ainv_over(int geom_t) {
    Alphabet A = a_minus_ainv();
    for (auto& t : A.terms) t.geom.push_back(geom_t);
    return A;
}

Alphabet Alphabet::operator+(const Alphabet& o) const {
    Alphabet r = *this;
    r.terms.insert(r.terms.end(), o.terms.begin(), o.terms.end());
    return r;
}

Alphabet Alphabet::operator-() const {
    Alphabet r = *this;
    for (auto& t : r.terms) t.coeff = -t.coeff;
    return r;
}

Alphabet Alphabet::scaled_z(int dz) const {
    Alphabet r = *this;
    for (auto& t : r.terms) t.zexp += dz;
    return r;
}

SymRing::SymRing(int degree_bound) : bound_(degree_bound) {
    cache_.resize(size_t(bound_) + 1);
}

void SymRing::require_degree(int d) const {
    if (d > bound_)
        throw degree_error("degree " + std::to_string(d) + " exceeds bound " +
                           std::to_string(bound_));
}

SymRing::DegreeCache& SymRing::grade(int d) const {
    require_degree(d);
    DegreeCache& g = cache_[size_t(d)];
    if (g.parts.empty() && d >= 0) {
        g.parts = partitions_of(d);
        for (size_t i = 0; i < g.parts.size(); i++) g.index.emplace(g.parts[i], int(i));
    }
    return g;
}

void SymRing::warm_up(int degree) {
    for (int d = 0; d <= degree; d++) {
        DegreeCache& g = grade(d);
        build_classical(g, d);
        build_macdonald(g, d);
        build_hinv(g, d);
    }
}

// ---- characters (Murnaghan-Nakayama) ----

static Rat chi_rec(const std::vector<int>& la, const std::vector<int>& mu,
                   std::map<std::pair<std::vector<int>, std::vector<int>>, Rat>& memo) {
    if (mu.empty()) return la.empty() ? Rat(1) : Rat(0);
    auto key = std::make_pair(la, mu);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    int r = mu[0];
    std::vector<int> mu2(mu.begin() + 1, mu.end());
    int l = int(la.size());
    std::vector<long> beta(la.size());
    for (int i = 0; i < l; i++) beta[size_t(i)] = la[size_t(i)] + (l - 1 - i);
    Rat sum(0);
    for (int i = 0; i < l; i++) {
        long b = beta[size_t(i)] - r;
        if (b < 0) continue;
        bool clash = false;
        int cross = 0;
        for (int j = 0; j < l; j++) {
            if (j == i) continue;
            if (beta[size_t(j)] == b) { clash = true; break; }
            if (beta[size_t(j)] > b && beta[size_t(j)] < beta[size_t(i)]) cross++;
        }
        if (clash) continue;
        std::vector<long> nb = beta;
        nb[size_t(i)] = b;
        std::sort(nb.rbegin(), nb.rend());
        std::vector<int> la2;
        for (int k = 0; k < l; k++) {
            long part = nb[size_t(k)] - (l - 1 - k);
            if (part > 0) la2.push_back(int(part));
        }
        Rat term = chi_rec(la2, mu2, memo);
        if (cross % 2) term = -term;
        sum += term;
    }
    memo.emplace(key, sum);
    return sum;
}

Rat SymRing::character(const Partition& la, const Partition& mu) const {
    static std::map<std::pair<std::vector<int>, std::vector<int>>, Rat> memo;
    return chi_rec(la.parts, mu.parts, memo);
}

// exact Gaussian inversion over the rationals
static std::vector<std::vector<Rat>> invert_rat(std::vector<std::vector<Rat>> a) {
    size_t n = a.size();
    std::vector<std::vector<Rat>> inv(n, std::vector<Rat>(n, Rat(0)));
    for (size_t i = 0; i < n; i++) inv[i][i] = 1;
    for (size_t col = 0; col < n; col++) {
        size_t piv = col;
        while (piv < n && a[piv][col] == 0) piv++;
        if (piv == n) throw std::logic_error("invert_rat: singular matrix");
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        Rat d = a[col][col];
        for (size_t j = 0; j < n; j++) { a[col][j] /= d; inv[col][j] /= d; }
        for (size_t r = 0; r < n; r++) {
            if (r == col || a[r][col] == 0) continue;
            Rat f = a[r][col];
            for (size_t j = 0; j < n; j++) {
                a[r][j] -= f * a[col][j];
                inv[r][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

void SymRing::build_classical(DegreeCache& g, int d) const {
    if (g.classical_done) return;
    size_t n = g.parts.size();
    g.chi.assign(n, std::vector<Rat>(n, Rat(0)));
    for (size_t i = 0; i < n; i++)
        for (size_t j = 0; j < n; j++) g.chi[i][j] = character(g.parts[i], g.parts[j]);

    // h_n and e_n in p, then products by convolution over sub-degrees
    auto one_row = [&](int k, bool sign) {
        // h_k (sign=false) or e_k (sign=true) expanded over partitions_of(k)
        std::map<Partition, Rat> row;
        for (const Partition& la : partitions_of(k)) {
            Rat c = 1 / la.z();
            if (sign && la.eps() < 0) c = -c;
            row.emplace(la, c);
        }
        return row;
    };
    auto product_in_p = [&](const Partition& mu, bool sign) {
        std::map<Partition, Rat> acc;
        acc.emplace(Partition{}, Rat(1));
        for (int part : mu.parts) {
            std::map<Partition, Rat> next;
            for (const auto& [la1, c1] : acc)
                for (const auto& [la2, c2] : one_row(part, sign)) {
                    Partition u = union_parts(la1, la2);
                    next[u] += c1 * c2;
                }
            acc = std::move(next);
        }
        std::vector<Rat> v(n, Rat(0));
        for (const auto& [la, c] : acc) v[size_t(g.index.at(la))] = c;
        return v;
    };
    g.h_in_p.resize(n);
    g.e_in_p.resize(n);
    for (size_t i = 0; i < n; i++) {
        g.h_in_p[i] = product_in_p(g.parts[i], false);
        g.e_in_p[i] = product_in_p(g.parts[i], true);
    }
    // Kostka K[mu][nu] = <s_mu, h_nu>, then m = K^{-1} s
    std::vector<std::vector<Rat>> K(n, std::vector<Rat>(n, Rat(0)));
    for (size_t mu = 0; mu < n; mu++)
        for (size_t nu = 0; nu < n; nu++) {
            Rat v(0);
            for (size_t la = 0; la < n; la++)
                v += (g.chi[mu][la] / g.parts[la].z()) * g.h_in_p[nu][la] * g.parts[la].z();
            K[mu][nu] = v;
        }
    auto Kinv = invert_rat(K);
    g.m_in_p.assign(n, std::vector<Rat>(n, Rat(0)));
    for (size_t nu = 0; nu < n; nu++)
        for (size_t mu = 0; mu < n; mu++) {
            if (Kinv[nu][mu] == 0) continue;
            for (size_t la = 0; la < n; la++)
                g.m_in_p[nu][la] += Kinv[nu][mu] * g.chi[mu][la] / g.parts[la].z();
        }
    g.classical_done = true;
}

// <p_la, p_la>_{q,t} = z_la prod (1-q^{la_i})/(1-t^{la_i})
static Ratio p_norm_qt(const Partition& la) {
    Ratio r{Poly(la.z())};
    for (int part : la.parts) {
        r.num *= Poly(1) - Poly::qt(part, 0);
        r.push_den(Poly(1) - Poly::qt(0, part));
    }
    return r;
}

void SymRing::build_macdonald(DegreeCache& g, int d) const {
    if (g.macdonald_done) return;
    build_classical(g, d);
    size_t n = g.parts.size();
    // Gram-Schmidt against the (q,t) inner product, in increasing dominance
    // order (our partition list is lex-descending, which refines dominance)
    std::vector<std::vector<Ratio>> P(n);
    std::vector<Ratio> norms(n);
    auto dot_qt = [&](const std::vector<Ratio>& u, const std::vector<Ratio>& v) {
        Ratio acc;
        for (size_t la = 0; la < n; la++) {
            if (u[la].is_zero() || v[la].is_zero()) continue;
            acc += u[la] * v[la] * p_norm_qt(g.parts[la]);
        }
        acc.simplify();
        return acc;
    };
    for (size_t ii = n; ii-- > 0;) {
        std::vector<Ratio> v(n);
        for (size_t la = 0; la < n; la++) v[la] = Ratio{Poly(g.m_in_p[ii][la])};
        for (size_t jj = ii + 1; jj < n; jj++) {
            Ratio c = dot_qt(v, P[jj]) / norms[jj];
            if (c.is_zero()) continue;
            for (size_t la = 0; la < n; la++) v[la] -= c * P[jj][la];
        }
        for (auto& x : v) x.simplify();
        P[ii] = std::move(v);
        norms[ii] = dot_qt(P[ii], P[ii]);
    }
    g.P_in_p = std::move(P);
    g.P_norm = std::move(norms);

    // modified Macdonald: H~_la = t^{n(la)} J_la[X/(1-t^{-1}); q, t^{-1}],
    // J_la = prod_{boxes}(1 - q^{arm} t^{leg+1}) P_la
    g.H_in_p.assign(n, std::vector<Ratio>(n));
    for (size_t i = 0; i < n; i++) {
        const Partition& la = g.parts[i];
        Poly c(1);
        Partition conj = la.conjugate();
        for (size_t r = 0; r < la.parts.size(); r++)
            for (int col = 0; col < la.parts[r]; col++) {
                long arm = la.parts[r] - col - 1;
                long leg = conj.parts[size_t(col)] - long(r) - 1;
                c *= Poly(1) - Poly::qt(arm, leg + 1);
            }
        for (size_t la2 = 0; la2 < n; la2++) {
            Ratio v = g.P_in_p[i][la2] * Ratio{c};
            v = v.subst_t_inv();
            for (int part : g.parts[la2].parts)
                v.push_den(Poly(1) - Poly::qt(0, -part)); // 1 - t^{-part}
            v *= Ratio{Poly::qt(0, la.n_stat())};
            v.simplify();
            g.H_in_p[i][la2] = v;
        }
    }
    g.macdonald_done = true;
}

void SymRing::build_hinv(DegreeCache& g, int d) const {
    if (g.hinv_done) return;
    build_macdonald(g, d);
    size_t n = g.parts.size();
    // invert the (H~ in p) matrix over exact ratios
    std::vector<std::vector<Ratio>> a(n, std::vector<Ratio>(n));
    std::vector<std::vector<Ratio>> inv(n, std::vector<Ratio>(n));
    for (size_t i = 0; i < n; i++) {
        for (size_t j = 0; j < n; j++) a[i][j] = g.H_in_p[i][j];
        inv[i][i] = Ratio(1);
    }
    for (size_t col = 0; col < n; col++) {
        size_t piv = col;
        while (piv < n && a[piv][col].is_zero()) piv++;
        if (piv == n) throw std::logic_error("modified Macdonald basis: singular matrix");
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        Ratio dd = a[col][col];
        for (size_t j = 0; j < n; j++) { a[col][j] /= dd; inv[col][j] /= dd; a[col][j].simplify(); inv[col][j].simplify(); }
        for (size_t r = 0; r < n; r++) {
            if (r == col || a[r][col].is_zero()) continue;
            Ratio f = a[r][col];
            for (size_t j = 0; j < n; j++) {
                a[r][j] -= f * a[col][j];
                inv[r][j] -= f * inv[col][j];
                a[r][j].simplify();
                inv[r][j].simplify();
            }
        }
    }
    // columns of inv give p-coords -> H~ coefficients: f_H[i] = sum_j inv[i][j] f_p[j]
    g.H_inv = std::move(inv);
    g.hinv_done = true;
}

std::vector<Ratio> SymRing::power_coords(const SymF& f, int d) const {
    DegreeCache& g = grade(d);
    std::vector<Ratio> v(g.parts.size());
    for (const auto& [p, c] : f.terms) {
        if (p.size() != d) continue;
        v[size_t(g.index.at(p))] += c;
    }
    return v;
}

SymF SymRing::from_power_coords(const std::vector<Ratio>& v, int d, Basis tag) const {
    DegreeCache& g = grade(d);
    SymF r{tag, {}};
    for (size_t i = 0; i < v.size(); i++)
        if (!v[i].is_zero()) {
            Ratio c = v[i];
            c.simplify();
            r.add(g.parts[i], c);
        }
    return r;
}

SymF SymRing::to_power(const SymF& f) const {
    if (f.basis == Basis::power) return f;
    SymF r{Basis::power, {}};
    for (const auto& [mu, c] : f.terms) {
        int d = mu.size();
        DegreeCache& g = grade(d);
        size_t mi = size_t(g.index.at(mu));
        switch (f.basis) {
            case Basis::schur: {
                build_classical(g, d);
                for (size_t la = 0; la < g.parts.size(); la++) {
                    Rat coef = g.chi[mi][la] / g.parts[la].z();
                    if (coef != 0) r.add(g.parts[la], c * Ratio{Poly(coef)});
                }
                break;
            }
            case Basis::homogeneous:
            case Basis::elementary:
            case Basis::monomial: {
                build_classical(g, d);
                const auto& row = f.basis == Basis::homogeneous ? g.h_in_p[mi]
                                 : f.basis == Basis::elementary ? g.e_in_p[mi]
                                                                : g.m_in_p[mi];
                for (size_t la = 0; la < g.parts.size(); la++)
                    if (row[la] != 0) r.add(g.parts[la], c * Ratio{Poly(row[la])});
                break;
            }
            case Basis::macdonaldP: {
                build_macdonald(g, d);
                for (size_t la = 0; la < g.parts.size(); la++)
                    if (!g.P_in_p[mi][la].is_zero()) r.add(g.parts[la], c * g.P_in_p[mi][la]);
                break;
            }
            case Basis::modifiedMacdonald: {
                build_macdonald(g, d);
                for (size_t la = 0; la < g.parts.size(); la++)
                    if (!g.H_in_p[mi][la].is_zero()) r.add(g.parts[la], c * g.H_in_p[mi][la]);
                break;
            }
            case Basis::power:
                r.add(mu, c);
                break;
        }
    }
    return r;
}

SymF SymRing::convert(const SymF& f, Basis target) const {
    SymF fp = to_power(f);
    if (target == Basis::power) return fp;
    SymF r{target, {}};
    int dmax = fp.max_degree();
    for (int d = 0; d <= dmax; d++) {
        SymF part = fp.graded_part(d);
        if (part.is_zero()) continue;
        DegreeCache& g = grade(d);
        build_classical(g, d);
        std::vector<Ratio> a = power_coords(part, d);
        size_t n = g.parts.size();
        switch (target) {
            case Basis::schur: {
                for (size_t mu = 0; mu < n; mu++) {
                    Ratio b;
                    for (size_t la = 0; la < n; la++)
                        if (!a[la].is_zero() && g.chi[mu][la] != 0)
                            b += a[la] * Ratio{Poly(g.chi[mu][la])};
                    b.simplify();
                    r.add(g.parts[mu], b);
                }
                break;
            }
            case Basis::monomial:
            case Basis::homogeneous: {
                // <f, h_mu> gives m-coefficients; <f, m_mu> gives h-coefficients
                const auto& dual = target == Basis::monomial ? g.h_in_p : g.m_in_p;
                for (size_t mu = 0; mu < n; mu++) {
                    Ratio b;
                    for (size_t la = 0; la < n; la++)
                        if (!a[la].is_zero() && dual[mu][la] != 0)
                            b += a[la] * Ratio{Poly(dual[mu][la] * g.parts[la].z())};
                    b.simplify();
                    r.add(g.parts[mu], b);
                }
                break;
            }
            case Basis::elementary: {
                SymF om = omega(part);
                SymF hh = convert(om, Basis::homogeneous);
                for (const auto& [p, c] : hh.terms) r.add(p, c);
                break;
            }
            case Basis::macdonaldP: {
                build_macdonald(g, d);
                for (size_t mu = 0; mu < n; mu++) {
                    Ratio b;
                    for (size_t la = 0; la < n; la++)
                        if (!a[la].is_zero() && !g.P_in_p[mu][la].is_zero())
                            b += a[la] * g.P_in_p[mu][la] * p_norm_qt(g.parts[la]);
                    b = b / g.P_norm[mu];
                    b.simplify();
                    r.add(g.parts[mu], b);
                }
                break;
            }
            case Basis::modifiedMacdonald: {
                build_hinv(g, d);
                for (size_t mu = 0; mu < n; mu++) {
                    Ratio b;
                    for (size_t la = 0; la < n; la++)
                        if (!a[la].is_zero() && !g.H_inv[mu][la].is_zero())
                            b += g.H_inv[mu][la] * a[la];
                    b.simplify();
                    r.add(g.parts[mu], b);
                }
                break;
            }
            case Basis::power:
                break;
        }
    }
    return r;
}

SymF SymRing::one() const {
    SymF r{Basis::power, {}};
    r.add(Partition{}, Ratio(1));
    return r;
}

SymF SymRing::p(const Partition& la) const {
    require_degree(la.size());
    SymF r{Basis::power, {}};
    r.add(la, Ratio(1));
    return r;
}

SymF SymRing::e(int n) const {
    SymF r{Basis::elementary, {}};
    if (n == 0) return one();
    if (n < 0) return zero();
    require_degree(n);
    r.add(Partition{{n}}, Ratio(1));
    return to_power(r);
}

SymF SymRing::h(int n) const {
    SymF r{Basis::homogeneous, {}};
    if (n == 0) return one();
    if (n < 0) return zero();
    require_degree(n);
    r.add(Partition{{n}}, Ratio(1));
    return to_power(r);
}

SymF SymRing::s(const Partition& la) const {
    SymF r{Basis::schur, {}};
    r.add(la, Ratio(1));
    return to_power(r);
}

SymF SymRing::multiply(const SymF& f, const SymF& g) const {
    SymF a = to_power(f), b = to_power(g);
    SymF r{Basis::power, {}};
    for (const auto& [la, c1] : a.terms)
        for (const auto& [mu, c2] : b.terms) {
            Partition u = union_parts(la, mu);
            require_degree(u.size());
            r.add(u, c1 * c2);
        }
    return r;
}

SymF SymRing::omega(const SymF& f) const {
    SymF a = to_power(f);
    SymF r{Basis::power, {}};
    for (const auto& [la, c] : a.terms)
        r.add(la, la.eps() > 0 ? c : -c);
    return r;
}

SymF SymRing::scale(const SymF& f, const Ratio& c) const {
    SymF a = to_power(f);
    return a * c;
}

Ratio SymRing::hall(const SymF& f, const SymF& g) const {
    SymF a = to_power(f), b = to_power(g);
    Ratio r;
    for (const auto& [la, c] : a.terms) {
        auto it = b.terms.find(la);
        if (it == b.terms.end()) continue;
        r += c * it->second * Ratio{Poly(la.z())};
    }
    r.simplify();
    return r;
}

Ratio SymRing::hall_qt(const SymF& f, const SymF& g) const {
    SymF a = to_power(f), b = to_power(g);
    Ratio r;
    for (const auto& [la, c] : a.terms) {
        auto it = b.terms.find(la);
        if (it == b.terms.end()) continue;
        r += c * it->second * p_norm_qt(la);
    }
    r.simplify();
    return r;
}

SymF SymRing::plethysm_pk_scale(const SymF& f, const std::function<Ratio(int)>& sc) const {
    SymF a = to_power(f);
    SymF r{Basis::power, {}};
    for (const auto& [la, c] : a.terms) {
        Ratio v = c;
        for (int part : la.parts) v *= sc(part);
        v.simplify();
        r.add(la, v);
    }
    return r;
}

Ratio SymRing::plethysm_scalar(const SymF& f, const std::function<Ratio(int)>& val) const {
    SymF a = to_power(f);
    Ratio r;
    for (const auto& [la, c] : a.terms) {
        Ratio v = c;
        for (int part : la.parts) v *= val(part);
        r += v;
    }
    r.simplify();
    return r;
}

SymF SymRing::plethysm(const SymF& f, const Alphabet& A) const {
    for (const auto& t : A.terms)
        if (t.zexp != 0) throw std::logic_error("plethysm: z is only supported in omega_exp");
    // p_k[A] = alpha_k p_k + beta_k
    auto pk_parts = [&](int k) {
        Ratio alpha, beta;
        for (const auto& t : A.terms) {
            Ratio v{Poly::monomial(t.coeff, Mono{t.mono.ea * k, t.mono.eq * k, t.mono.et * k})};
            for (int gfac : t.geom) v.push_den(Poly(1) - Poly::qt(0, long(gfac) * k));
            if (t.hasX) alpha += v; else beta += v;
        }
        return std::make_pair(alpha, beta);
    };
    SymF a = to_power(f);
    SymF r{Basis::power, {}};
    std::map<int, std::pair<Ratio, Ratio>> parts_cache;
    auto get_parts = [&](int k) -> const std::pair<Ratio, Ratio>& {
        auto it = parts_cache.find(k);
        if (it == parts_cache.end()) it = parts_cache.emplace(k, pk_parts(k)).first;
        return it->second;
    };
    for (const auto& [la, c] : a.terms) {
        int l = la.length();
        for (unsigned mask = 0; mask < (1u << l); mask++) {
            Ratio coef = c;
            std::vector<int> kept;
            for (int i = 0; i < l && !coef.is_zero(); i++) {
                const auto& [alpha, beta] = get_parts(la.parts[size_t(i)]);
                if (mask & (1u << i)) {
                    coef *= alpha;
                    kept.push_back(la.parts[size_t(i)]);
                } else {
                    coef *= beta;
                }
            }
            if (coef.is_zero()) continue;
            coef.simplify();
            std::sort(kept.rbegin(), kept.rend());
            r.add(Partition(kept), coef);
        }
    }
    return r;
}

SymF SymRing::swap_qt(const SymF& f) const {
    SymF r{f.basis, {}};
    for (const auto& [la, c] : f.terms) r.add(la, c.swap_qt());
    return r;
}

SymF SymRing::subst(const SymF& f, Poly (Poly::*fn)() const) const {
    SymF r{f.basis, {}};
    for (const auto& [la, c] : f.terms) {
        Poly p = c.as_poly();
        r.add(la, Ratio{(p.*fn)()});
    }
    return r;
}

SymF SymRing::macdonaldP(const Partition& la) const {
    int d = la.size();
    DegreeCache& g = grade(d);
    build_macdonald(g, d);
    SymF r{Basis::power, {}};
    size_t i = size_t(g.index.at(la));
    for (size_t j = 0; j < g.parts.size(); j++)
        if (!g.P_in_p[i][j].is_zero()) r.add(g.parts[j], g.P_in_p[i][j]);
    return r;
}

SymF SymRing::macdonaldJ(const Partition& la) const {
    Poly c(1);
    Partition conj = la.conjugate();
    for (size_t r = 0; r < la.parts.size(); r++)
        for (int col = 0; col < la.parts[r]; col++) {
            long arm = la.parts[r] - col - 1;
            long leg = conj.parts[size_t(col)] - long(r) - 1;
            c *= Poly(1) - Poly::qt(arm, leg + 1);
        }
    return scale(macdonaldP(la), Ratio{c});
}

SymF SymRing::modifiedMacdonald(const Partition& la) const {
    int d = la.size();
    DegreeCache& g = grade(d);
    build_macdonald(g, d);
    SymF r{Basis::power, {}};
    size_t i = size_t(g.index.at(la));
    for (size_t j = 0; j < g.parts.size(); j++)
        if (!g.H_in_p[i][j].is_zero()) r.add(g.parts[j], g.H_in_p[i][j]);
    return r;
}

Poly SymRing::nabla_eigenvalue(const Partition& la, int power) const {
    long nq = la.conjugate().n_stat(), nt = la.n_stat();
    return Poly::qt(power * nq, power * nt);
}

SymF SymRing::nabla(const SymF& f, int power) const {
    SymF fh = convert(f, Basis::modifiedMacdonald);
    SymF r{Basis::power, {}};
    for (const auto& [la, c] : fh.terms) {
        SymF h = modifiedMacdonald(la);
        r += h * (c * Ratio{nabla_eigenvalue(la, power)});
    }
    return r;
}

std::vector<SymF> SymRing::omega_exp(const Alphabet& A, int order) const {
    for (const auto& t : A.terms)
        if (t.zexp < 1) throw std::logic_error("omega_exp: alphabet terms must have z-degree >= 1");
    // arg = sum_{k >= 1} p_k[A]/k as a z-series of symmetric functions
    std::vector<SymF> arg(size_t(order) + 1, zero());
    for (int k = 1; k <= order; k++) {
        for (const auto& t : A.terms) {
            int zd = t.zexp * k;
            if (zd > order) continue;
            Ratio v{Poly::monomial(t.coeff / k, Mono{t.mono.ea * k, t.mono.eq * k, t.mono.et * k})};
            for (int gfac : t.geom) v.push_den(Poly(1) - Poly::qt(0, long(gfac) * k));
            if (t.hasX) {
                if (k <= bound_) arg[size_t(zd)] += p(Partition{{k}}) * v;
            } else {
                arg[size_t(zd)] += one() * v;
            }
        }
    }
    auto mul_series = [&](const std::vector<SymF>& x, const std::vector<SymF>& y) {
        std::vector<SymF> r(size_t(order) + 1, zero());
        for (int i = 0; i <= order; i++)
            for (int j = 0; i + j <= order; j++) {
                if (x[size_t(i)].is_zero() || y[size_t(j)].is_zero()) continue;
                r[size_t(i + j)] += multiply(x[size_t(i)], y[size_t(j)]);
            }
        return r;
    };
    std::vector<SymF> result(size_t(order) + 1, zero());
    result[0] = one();
    std::vector<SymF> pow = result;
    Rat fact(1);
    for (int n = 1; n <= order; n++) {
        pow = mul_series(pow, arg);
        fact *= n;
        bool allzero = true;
        for (int zd = 0; zd <= order; zd++) {
            if (pow[size_t(zd)].is_zero()) continue;
            allzero = false;
            result[size_t(zd)] += pow[size_t(zd)] * Ratio{Poly(1 / fact)};
        }
        if (allzero) break;
    }
    return result;
}

bool SymRing::equal(const SymF& f, const SymF& g) const {
    SymF d = to_power(f);
    d -= to_power(g);
    return d.is_zero();
}

std::string SymRing::schur_str(const SymF& f) const {
    SymF fs = convert(f, Basis::schur);
    if (fs.terms.empty()) return "0";
    std::vector<std::pair<Partition, Ratio>> v(fs.terms.begin(), fs.terms.end());
    std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) {
        if (x.first.size() != y.first.size()) return x.first.size() < y.first.size();
        if (x.first.length() != y.first.length()) return x.first.length() > y.first.length();
        return x.first.parts < y.first.parts;
    });
    std::ostringstream os;
    bool first = true;
    for (const auto& [la, c] : v) {
        std::string cs = c.is_poly() ? c.as_poly().str() : c.str();
        if (!first) os << " + ";
        first = false;
        std::string sub;
        bool small = true;
        for (int p : la.parts)
            if (p > 9) small = false;
        for (size_t i = 0; i < la.parts.size(); i++) {
            if (i && !small) sub += ",";
            sub += std::to_string(la.parts[i]);
        }
        if (sub.empty()) sub = "0";
        if (cs == "1")
            os << "s_{" << sub << "}";
        else if (cs.find(' ') != std::string::npos || cs.find('/') != std::string::npos)
            os << "(" << cs << ")s_{" << sub << "}";
        else
            os << cs << "*s_{" << sub << "}";
    }
    return os.str();
}

} // namespace mono
