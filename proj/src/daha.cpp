#include "mono/daha.hpp"

#include <omp.h>

#include <algorithm>
#include <numeric>

namespace mono {

NPoly Daha::apply_T(int i, const NPoly& f, bool inverse) const {
    if (i < 1 || i >= N_) throw std::out_of_range("apply_T: index out of range");
    const Poly t_mhalf = Poly::monomial(Rat(1), Mono{0, 0, -1});
    const Poly coef = Poly::monomial(Rat(1), Mono{0, 0, -1}) - Poly::monomial(Rat(1), Mono{0, 0, 1});
    NPoly r(N_);
    size_t ia = size_t(i - 1), ib = size_t(i);
    for (const auto& [e, c] : f.terms) {
        // t^{-1/2} * s_i(monomial)
        std::vector<int> es = e;
        std::swap(es[ia], es[ib]);
        r.add_term(es, c * t_mhalf);
        // (t^{-1/2}-t^{1/2}) x_{i+1} (s_i m - m)/(x_i - x_{i+1}), telescoped
        int a = e[ia], b = e[ib];
        if (a == b) continue;
        Poly cc = c * coef;
        if (a > b) {
            for (int j = 0; j < a - b; j++) {
                std::vector<int> e2 = e;
                e2[ia] = b + j;
                e2[ib] = a - 1 - j + 1; // extra x_{i+1}
                r.add_term(e2, -cc);
            }
        } else {
            for (int j = 0; j < b - a; j++) {
                std::vector<int> e2 = e;
                e2[ia] = a + j;
                e2[ib] = b - 1 - j + 1;
                r.add_term(e2, cc);
            }
        }
    }
    if (inverse) {
        // T_i^{-1} = T_i + (t^{1/2} - t^{-1/2})
        const Poly shift = Poly::monomial(Rat(1), Mono{0, 0, 1}) - Poly::monomial(Rat(1), Mono{0, 0, -1});
        r += f * shift;
    }
    return r;
}

NPoly Daha::apply_rho(const NPoly& f, bool inverse) const {
    NPoly r(N_);
    for (const auto& [e, c] : f.terms) {
        std::vector<int> e2(e.size());
        if (!inverse) {
            // f(q x_N, x_1, .., x_{N-1}): first slot exponent moves to x_N
            for (size_t j = 1; j < e.size(); j++) e2[j - 1] = e[j];
            e2[e.size() - 1] = e[0];
            r.add_term(e2, c * Poly::qt(e[0], 0));
        } else {
            // f(x_2, .., x_N, q^{-1} x_1)
            for (size_t j = 1; j < e.size(); j++) e2[j] = e[j - 1];
            e2[0] = e[e.size() - 1];
            r.add_term(e2, c * Poly::qt(-e[e.size() - 1], 0));
        }
    }
    return r;
}

NPoly Daha::apply_X(int i, const NPoly& f, bool inverse) const {
    // X_i is multiplication by q^{-1} x_i
    NPoly r = f.mult_x(i, inverse ? -1 : 1);
    return r * Poly::qt(inverse ? 1 : -1, 0);
}

NPoly Daha::apply_Y(int i, const NPoly& f, bool inverse) const {
    NPoly g = f;
    if (!inverse) {
        for (int j = i - 1; j >= 1; j--) g = apply_T(j, g, true);
        g = apply_rho(g);
        for (int j = N_ - 1; j >= i; j--) g = apply_T(j, g);
        return g * Poly::monomial(Rat(1), Mono{0, 0, N_ - 1});
    }
    for (int j = i; j <= N_ - 1; j++) g = apply_T(j, g, true);
    g = apply_rho(g, true);
    for (int j = 1; j <= i - 1; j++) g = apply_T(j, g);
    return g * Poly::monomial(Rat(1), Mono{0, 0, -(N_ - 1)});
}

NPoly Daha::apply_R_step(const NPoly& f) const {
    NPoly g = apply_X(1, f);
    for (int j = 1; j <= N_ - 2; j++) g = apply_T(j, g);
    if (N_ >= 2) {
        g = apply_T(N_ - 1, g);
        g = apply_T(N_ - 1, g);
    }
    for (int j = N_ - 2; j >= 1; j--) g = apply_T(j, g);
    return g * Poly::qt(1, 0);
}

void Daha::symmetrize(ScaledNPoly& f, int k) const {
    if (k < 1 || k > N_) throw std::out_of_range("symmetrize: bad range");
    if (f.poly.symmetric()) return; // e_N fixes symmetric polynomials
    for (int j = 2; j <= k; j++) {
        // S_j = sum_{i=1}^{j} t^{-(j-i)/2} T_i .. T_{j-1}, chained from the right
        NPoly cur = f.poly;
        NPoly sum = cur; // i = j term, empty product
        for (int i = j - 1; i >= 1; i--) {
            cur = apply_T(i, cur);
            sum += cur * Poly::monomial(Rat(1), Mono{0, 0, -(j - i)});
        }
        f.poly = std::move(sum);
        // c_j = (1 - t^{-1}) / (1 - t^{-j})
        f.scale.num *= Poly(1) - Poly::qt(0, -1);
        f.scale.push_den(Poly(1) - Poly::qt(0, -j));
    }
}

ScaledNPoly Daha::symmetrize(const NPoly& f, int k) const {
    ScaledNPoly r{f, Ratio(1)};
    symmetrize(r, k);
    return r;
}

void Daha::gamma_e(ScaledNPoly& f) const {
    symmetrize(f, N_);
    f.scale.num *= gamma();
    f.scale.simplify();
    f.compress();
}

ScaledNPoly Daha::symmetrize_bruteforce(const NPoly& f, int k) const {
    // e_k = sum_w t^{-l(w)/2} T_w / sum_w t^{-l(w)}, over S_k embedded in S_N
    std::vector<int> perm(static_cast<size_t>(k));
    std::iota(perm.begin(), perm.end(), 0);
    NPoly num(N_);
    Poly den;
    do {
        // bubble-sorting the one-line with right multiplications by s_j
        // collects a1..ak with w = s_{ak}..s_{a1}, so T_w f applies the
        // rightmost factor T_{a1} first: forward order
        std::vector<int> word;
        std::vector<int> p = perm;
        for (size_t pass = 0; pass + 1 < p.size(); pass++)
            for (size_t j = 0; j + 1 < p.size(); j++)
                if (p[j] > p[j + 1]) {
                    std::swap(p[j], p[j + 1]);
                    word.push_back(int(j) + 1);
                }
        NPoly g = f;
        for (int letter : word) g = apply_T(letter, g);
        num += g * Poly::monomial(Rat(1), Mono{0, 0, -int(word.size())});
        den += Poly::qt(0, -int(word.size()));
    } while (std::next_permutation(perm.begin(), perm.end()));
    ScaledNPoly r{std::move(num), Ratio(1)};
    r.scale.push_den(den);
    return r;
}

ScaledNPoly D_apply(const CurveSpec& c, const Daha& H, const NPoly& f) {
    ScaledNPoly state{f, Ratio(1)};
    H.symmetrize(state, H.N()); // e_N at the endpoint (m,n)
    for (auto it = c.word.rbegin(); it != c.word.rend(); ++it) {
        switch (*it) {
            case Step::R: state.poly = H.apply_R_step(state.poly); break;
            case Step::U: state.poly = H.apply_Y(1, state.poly); break;
            case Step::STAR: H.gamma_e(state); break;
        }
    }
    H.gamma_e(state); // gamma e_N at the origin
    return state;
}

ScaledNPoly D_apply(const CurveSpec& c, int N, const NPoly& f) {
    Daha H(N);
    return D_apply(c, H, f);
}

SymF daha_D1(const SymRing& ring, const CurveSpec& c, int N) {
    if (N < 0) N = c.m;
    Daha H(N);
    ScaledNPoly r = D_apply(c, H, H.one());
    long deg = 0;
    if (!r.poly.symmetric()) throw std::logic_error("daha: D_C . 1 is not symmetric");
    if (!r.poly.homogeneous(&deg) || (deg != c.m && !r.poly.is_zero()))
        throw std::logic_error("daha: D_C . 1 is not homogeneous of degree m");
    return lift_to_symf(ring, r);
}

SymF daha_F(const SymRing& ring, const CurveSpec& c, int N) {
    SymF d1 = daha_D1(ring, c, N);
    SymF f = ring.plethysm_pk_scale(d1, [](int k) {
        return Ratio::frac(Poly(1), Poly(1) - Poly::qt(0, k));
    });
    SymF fs = ring.convert(f, Basis::schur);
    for (auto& [la, coef] : fs.terms) {
        Poly p = coef.as_poly(); // throws if a denominator survived
        if (!p.integer_qt_powers())
            throw std::logic_error("daha: F_C has non-integer q,t powers");
        coef = Ratio{p};
    }
    return fs;
}

namespace {

struct SuffixJob {
    size_t index;    // position in the input curve list
    std::string rev; // word read from the end
};

void suffix_walk(const SymRing& ring, const Daha& H, const std::vector<SuffixJob>& jobs,
                 size_t lo, size_t hi, size_t depth, const ScaledNPoly& state,
                 std::vector<SymF>& out, int par_depth) {
    // jobs[lo, hi) share the first `depth` reversed symbols, already applied
    size_t i = lo;
    while (i < hi) {
        if (jobs[i].rev.size() == depth) {
            // word complete: origin gamma e_N, lift, plethysm
            ScaledNPoly fin = state;
            H.gamma_e(fin);
            SymF d1 = lift_to_symf(ring, fin);
            SymF f = ring.plethysm_pk_scale(d1, [](int k) {
                return Ratio::frac(Poly(1), Poly(1) - Poly::qt(0, k));
            });
            SymF fs = ring.convert(f, Basis::schur);
            for (auto& [la, coef] : fs.terms) coef = Ratio{coef.as_poly()};
            out[jobs[i].index] = std::move(fs); // distinct slot per word
            i++;
            continue;
        }
        size_t j = i;
        char sym = jobs[i].rev[depth];
        while (j < hi && jobs[j].rev.size() > depth && jobs[j].rev[depth] == sym) j++;
        ScaledNPoly next = state;
        switch (sym) {
            case 'R': next.poly = H.apply_R_step(next.poly); break;
            case 'U': next.poly = H.apply_Y(1, next.poly); break;
            case '*': H.gamma_e(next); break;
        }
        if (par_depth > 0) {
#pragma omp task firstprivate(i, j, depth) shared(ring, H, jobs, out)
            suffix_walk(ring, H, jobs, i, j, depth + 1, next, out, par_depth - 1);
        } else {
            suffix_walk(ring, H, jobs, i, j, depth + 1, next, out, 0);
        }
        i = j;
    }
}

} // namespace

std::vector<SymF> daha_F_many(SymRing& ring, const std::vector<CurveSpec>& curves,
                              int jobs) {
    int maxm = 0;
    for (const CurveSpec& c : curves) maxm = std::max(maxm, c.m);
    ring.warm_up(std::min(ring.degree_bound(), maxm));
    std::vector<SymF> result(curves.size());
    // group by m (the representation size)
    std::map<int, std::vector<size_t>> by_m;
    for (size_t i = 0; i < curves.size(); i++) by_m[curves[i].m].push_back(i);
    for (const auto& [m, idxs] : by_m) {
        Daha H(m);
        std::vector<SuffixJob> sj;
        sj.reserve(idxs.size());
        for (size_t i : idxs) {
            std::string r = curves[i].render();
            std::reverse(r.begin(), r.end());
            sj.push_back(SuffixJob{i, std::move(r)});
        }
        std::sort(sj.begin(), sj.end(),
                  [](const SuffixJob& a, const SuffixJob& b) { return a.rev < b.rev; });
        ScaledNPoly start{H.one(), Ratio(1)};
#pragma omp parallel num_threads(std::max(1, jobs))
        {
#pragma omp single
            suffix_walk(ring, H, sj, 0, sj.size(), 0, start, result, jobs > 1 ? 4 : 0);
        }
    }
    return result;
}

} // namespace mono
