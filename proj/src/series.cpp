#include "mono/series.hpp"

#include <algorithm>

namespace mono {

// The series coefficients at level r are the r-fold iterated partial sums of
// p's coefficients. If the whole table is nonnegative, the tails stay
// nonnegative by induction (each level grows by nonnegative increments of the
// level below). A negative top-level entry settles the answer immediately.
// Otherwise the top-level tail is the polynomial
//   g(n) = sum_i p_i * binom(n-i+j-1, j-1)
// of degree <= j-1 in n, and it suffices to test integer points up to a
// Cauchy bound on its roots.
bool series_nonneg(const std::vector<Rat>& p, int j) {
    int deg = int(p.size()) - 1;
    while (deg >= 0 && p[size_t(deg)] == 0) deg--;
    if (deg < 0) return true; // zero polynomial
    std::vector<Rat> level(p.begin(), p.begin() + deg + 1);
    bool all_nonneg = std::all_of(level.begin(), level.end(), [](const Rat& c) { return c >= 0; });
    for (int r = 1; r <= j; r++) {
        for (size_t n = 1; n < level.size(); n++) level[n] += level[n - 1];
        for (const Rat& c : level)
            if (c < 0) {
                if (r == j) return false;
                all_nonneg = false;
            }
    }
    if (all_nonneg) return true;
    if (j == 0) return false; // some p_i < 0 and no smoothing

    // exact tail check: g(n) in the monomial basis of n
    std::vector<Rat> g(size_t(j), Rat(0)); // degree <= j-1
    for (int i = 0; i <= deg; i++) {
        if (p[size_t(i)] == 0) continue;
        // binom(n-i+j-1, j-1) = prod_{s=1}^{j-1} (n-i+j-1-s+1)/s, poly in n
        std::vector<Rat> b{Rat(1)};
        for (int s = 1; s <= j - 1; s++) {
            // multiply by (n + (j - i - s)) / s
            std::vector<Rat> nb(b.size() + 1, Rat(0));
            Rat shift(j - i - s);
            for (size_t d = 0; d < b.size(); d++) {
                nb[d + 1] += b[d];
                nb[d] += b[d] * shift;
            }
            for (Rat& c : nb) c /= s;
            b = std::move(nb);
        }
        for (size_t d = 0; d < b.size(); d++) g[d] += p[size_t(i)] * b[d];
    }
    int gdeg = int(g.size()) - 1;
    while (gdeg >= 0 && g[size_t(gdeg)] == 0) gdeg--;
    if (gdeg < 0) return true;     // tail identically zero
    if (g[size_t(gdeg)] < 0) return false; // eventually negative
    // Cauchy bound on |roots|: 1 + max |g_i| / |g_lead|
    Rat bound(1);
    for (int d = 0; d < gdeg; d++) { Rat cand(abs(g[size_t(d)] / g[size_t(gdeg)])); if (cand > bound) bound = cand; }
    bound += 1;
    long nmax = deg + 1 + long(mpz_class(bound.get_num() / bound.get_den()).get_si()) + 1;
    for (long n = deg + 1; n <= nmax; n++) {
        Rat v(0), np(1);
        for (int d = 0; d <= gdeg; d++) {
            v += g[size_t(d)] * np;
            np *= n;
        }
        if (v < 0) return false;
    }
    return true;
}

} // namespace mono
