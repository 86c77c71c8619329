#include "mono/hecke.hpp"

#include <algorithm>
#include <numeric>

namespace mono {

HeckeElt HeckeElt::identity(int m) {
    HeckeElt x;
    x.m = m;
    PermKey id(static_cast<size_t>(m));
    std::iota(id.begin(), id.end(), uint8_t(0));
    x.terms.emplace(id, Poly(1));
    return x;
}

void HeckeElt::add_term(const PermKey& w, const Poly& c) {
    if (c.is_zero()) return;
    auto it = terms.find(w);
    if (it == terms.end()) {
        terms.emplace(w, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

HeckeElt& HeckeElt::operator+=(const HeckeElt& o) {
    for (const auto& [w, c] : o.terms) add_term(w, c);
    return *this;
}

HeckeElt& HeckeElt::operator-=(const HeckeElt& o) {
    for (const auto& [w, c] : o.terms) add_term(w, -c);
    return *this;
}

HeckeElt HeckeElt::operator*(const Poly& c) const {
    HeckeElt r;
    r.m = m;
    if (c.is_zero()) return r;
    for (const auto& [w, v] : terms) r.terms.emplace(w, v * c);
    return r;
}

HeckeElt HeckeElt::right_T(int i, bool inverse) const {
    // T_w T_i = T_{w s_i}                        if l(w s_i) > l(w)
    //         = T_{w s_i} + (q^{1/2}-q^{-1/2}) T_w   otherwise
    const Poly s = Poly::monomial(Rat(1), Mono{0, 1, 0}) - Poly::monomial(Rat(1), Mono{0, -1, 0});
    HeckeElt r;
    r.m = m;
    for (const auto& [w, c] : terms) {
        PermKey ws = w;
        std::swap(ws[size_t(i - 1)], ws[size_t(i)]);
        if (w[size_t(i - 1)] < w[size_t(i)]) {
            r.add_term(ws, c);
        } else {
            r.add_term(ws, c);
            r.add_term(w, c * s);
        }
    }
    if (inverse) {
        // T_i^{-1} = T_i - (q^{1/2} - q^{-1/2})
        for (const auto& [w, c] : terms) r.add_term(w, -(c * s));
    }
    return r;
}

HeckeElt HeckeElt::multiply(const HeckeElt& o) const {
    HeckeElt out;
    out.m = m;
    for (const auto& [w, c] : o.terms) {
        // reduced word for w via bubble sort
        std::vector<int> word;
        PermKey p = w;
        for (size_t pass = 0; pass + 1 < p.size(); pass++)
            for (size_t j = 0; j + 1 < p.size(); j++)
                if (p[j] > p[j + 1]) {
                    std::swap(p[j], p[j + 1]);
                    word.push_back(int(j) + 1);
                }
        std::reverse(word.begin(), word.end()); // left-to-right reduced word of w
        HeckeElt cur = *this;
        for (int letter : word) cur = cur.right_T(letter);
        out += cur * c;
    }
    return out;
}

HeckeElt hecke_normal_form(const BraidWord& b) {
    HeckeElt x = HeckeElt::identity(b.strands);
    for (auto [i, sign] : b.letters) x = x.right_T(i, sign > 0);
    return x;
}

namespace {

// content c - r (0-based) of the box holding a given entry
int content_of(const Tableau& T, int entry) {
    auto [c, r] = T.box_of(entry);
    return c - r;
}

// diagonal coefficient s q^{gamma} / (q^{gamma} - q^{beta}) with
// s = q^{1/2} - q^{-1/2}, beta = content(i), gamma = content(i+1)
Ratio diag_coef(int beta, int gamma) {
    Poly s = Poly::monomial(Rat(1), Mono{0, 1, 0}) - Poly::monomial(Rat(1), Mono{0, -1, 0});
    Ratio r{s * Poly::qt(gamma, 0)};
    r.push_den(Poly::qt(gamma, 0) - Poly::qt(beta, 0));
    r.simplify();
    return r;
}

} // namespace

const Seminormal::Matrix& Seminormal::generator(const Partition& la, int i) {
    static std::map<std::pair<Partition, int>, Matrix> cache;
    auto key = std::make_pair(la, i);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    const auto& tabs = syt_of_shape(la);
    size_t n = tabs.size();
    std::map<std::vector<std::vector<int>>, size_t> index;
    for (size_t a = 0; a < n; a++) index.emplace(tabs[a].rows, a);
    Matrix M(n, std::vector<Ratio>(n));
    const Poly qh = Poly::monomial(Rat(1), Mono{0, 1, 0});
    const Poly qmh = Poly::monomial(Rat(1), Mono{0, -1, 0});
    for (size_t a = 0; a < n; a++) {
        const Tableau& T = tabs[a];
        auto [ci, ri] = T.box_of(i);
        auto [cj, rj] = T.box_of(i + 1);
        if (ri == rj) {
            M[a][a] = Ratio{qh}; // same row: eigenvalue q^{1/2}
            continue;
        }
        if (ci == cj) {
            M[a][a] = Ratio{-qmh}; // same column: eigenvalue -q^{-1/2}
            continue;
        }
        // swap entries i, i+1
        std::vector<std::vector<int>> rows2 = T.rows;
        rows2[size_t(ri)][size_t(ci)] = i + 1;
        rows2[size_t(rj)][size_t(cj)] = i;
        size_t bidx = index.at(rows2);
        if (bidx < a) continue; // pair handled when bidx was the representative
        int beta = ci - ri, gamma = cj - rj;
        Ratio x = diag_coef(beta, gamma);  // coefficient on v_T
        Ratio w = diag_coef(gamma, beta);  // coefficient on v_{T'}
        Ratio z = x * w + Ratio(1);
        z.simplify();
        // T_i v_T = x v_T + z v_{T'},  T_i v_{T'} = v_T + w v_{T'}
        M[a][a] = x;
        M[bidx][a] = z;
        M[a][bidx] = Ratio(1);
        M[bidx][bidx] = w;
    }
    return cache.emplace(std::move(key), std::move(M)).first->second;
}

Seminormal::Matrix Seminormal::inverse_generator(const Partition& la, int i) {
    // T_i^{-1} = T_i - (q^{1/2} - q^{-1/2}) id
    Matrix M = generator(la, i);
    Ratio s{Poly::monomial(Rat(1), Mono{0, 1, 0}) - Poly::monomial(Rat(1), Mono{0, -1, 0})};
    for (size_t a = 0; a < M.size(); a++) M[a][a] -= s;
    return M;
}

Seminormal::Matrix Seminormal::mat_mul(const Matrix& a, const Matrix& b) {
    size_t n = a.size();
    Matrix r(n, std::vector<Ratio>(n));
    for (size_t i = 0; i < n; i++)
        for (size_t k = 0; k < n; k++) {
            if (a[i][k].is_zero()) continue;
            for (size_t j = 0; j < n; j++) {
                if (b[k][j].is_zero()) continue;
                r[i][j] += a[i][k] * b[k][j];
            }
        }
    for (auto& row : r)
        for (auto& x : row) x.simplify();
    return r;
}

Ratio Seminormal::trace(const Matrix& a) {
    Ratio t;
    for (size_t i = 0; i < a.size(); i++) t += a[i][i];
    t.simplify();
    return t;
}

SymF char_trace(const SymRing& ring, const HeckeElt& x) {
    ring.require_degree(x.m);
    SymF out{Basis::schur, {}};
    for (const Partition& la : partitions_of(x.m)) {
        Ratio tr;
        std::map<PermKey, Ratio> memo;
        for (const auto& [w, c] : x.terms) {
            auto it = memo.find(w);
            if (it == memo.end()) {
                std::vector<int> word;
                PermKey p = w;
                for (size_t pass = 0; pass + 1 < p.size(); pass++)
                    for (size_t j = 0; j + 1 < p.size(); j++)
                        if (p[j] > p[j + 1]) {
                            std::swap(p[j], p[j + 1]);
                            word.push_back(int(j) + 1);
                        }
                std::reverse(word.begin(), word.end());
                size_t dim = syt_of_shape(la).size();
                Seminormal::Matrix M(dim, std::vector<Ratio>(dim));
                for (size_t d = 0; d < dim; d++) M[d][d] = Ratio(1);
                for (int letter : word) M = Seminormal::mat_mul(M, Seminormal::generator(la, letter));
                it = memo.emplace(w, Seminormal::trace(M)).first;
            }
            tr += it->second * Ratio{c};
        }
        tr.simplify();
        out.add(la, tr);
    }
    return out;
}

SymF char_trace_braid(const SymRing& ring, const BraidWord& b) {
    ring.require_degree(b.strands);
    SymF out{Basis::schur, {}};
    for (const Partition& la : partitions_of(b.strands)) {
        size_t dim = syt_of_shape(la).size();
        Seminormal::Matrix M(dim, std::vector<Ratio>(dim));
        for (size_t d = 0; d < dim; d++) M[d][d] = Ratio(1);
        for (auto [i, sign] : b.letters) {
            // sigma_i maps to T_i^{-1}
            M = Seminormal::mat_mul(M, sign > 0 ? Seminormal::inverse_generator(la, i)
                                                : Seminormal::generator(la, i));
        }
        out.add(la, Seminormal::trace(M));
    }
    return out;
}

} // namespace mono
