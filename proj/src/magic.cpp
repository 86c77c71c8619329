#include "mono/magic.hpp"

#include <stdexcept>

namespace mono {

Ratio magic_weight(const Tableau& T, const std::vector<int>& eps) {
    int m = T.shape.size();
    if (int(eps.size()) != std::max(0, m - 1))
        throw std::invalid_argument("magic_weight: |sh(T)| must equal len(eps)+1");
    // z_i = q^{qc} t^{qr} with (qc, qr) = (c-1, r-1)
    std::vector<std::pair<int, int>> z(size_t(m) + 1);
    for (int i = 1; i <= m; i++) z[size_t(i)] = T.box_of(i);
    auto factor = [](int dq, int dt) { return Poly(1) - Poly::qt(dq, dt); };
    Ratio wt(1);
    auto push_den_checked = [&](int dq, int dt) {
        Poly f = factor(dq, dt);
        if (f.is_zero())
            throw std::logic_error("magic_weight: denominator vanishes after the zero-factor convention");
        wt.push_den(f);
    };
    for (int i = 2; i <= m; i++) {
        auto [ci, ri] = z[size_t(i)];
        push_den_checked(-ci, -ri); // 1 - z_i^{-1}; never identically zero for i >= 2
        if (eps[size_t(i - 2)] == 1) {
            auto [cp, rp] = z[size_t(i - 1)];
            int dq = 1 + cp - ci, dt = 1 + rp - ri;
            if (!(dq == 0 && dt == 0)) push_den_checked(dq, dt); // 1 - qt z_{i-1}/z_i
        }
    }
    for (int i = 1; i <= m; i++)
        for (int j = i + 1; j <= m; j++) {
            auto [ci, ri] = z[size_t(i)];
            auto [cj, rj] = z[size_t(j)];
            int dc = ci - cj, dr = ri - rj;
            wt.num *= factor(dc, dr); // 1 - z_i/z_j; distinct boxes, never zero
            if (!(1 + dc == 0 && 1 + dr == 0)) wt.num *= factor(1 + dc, 1 + dr); // 1 - qt z_i/z_j
            if (!(1 + dc == 0 && dr == 0)) push_den_checked(1 + dc, dr);         // 1 - q z_i/z_j
            if (!(dc == 0 && 1 + dr == 0)) push_den_checked(dc, 1 + dr);         // 1 - t z_i/z_j
        }
    wt.simplify();
    return wt;
}

SymF magic_F_beps(const SymRing& ring, const std::vector<int>& b, const std::vector<int>& eps) {
    int m = int(b.size());
    ring.require_degree(m);
    SymF out = ring.zero();
    for (const Partition& sh : partitions_of(m)) {
        SymF base = ring.modifiedMacdonald(sh);
        Ratio eig{ring.nabla_eigenvalue(sh, -1)};
        for (const Tableau& T : syt_of_shape(sh)) {
            Ratio w = magic_weight(T, eps);
            long zq = 0, zt = 0;
            for (int i = 1; i <= m; i++) {
                auto [c, r] = T.box_of(i);
                zq += long(b[size_t(i - 1)]) * c;
                zt += long(b[size_t(i - 1)]) * r;
            }
            out += base * (w * Ratio{Poly::qt(zq, zt)} * eig);
        }
    }
    return out;
}

SymF magic_F(const SymRing& ring, const Calibration& calib, const CurveSpec& c) {
    calib.require();
    CurveSpec use = calib.c_transpose ? transpose_curve(c) : c;
    CurveStats st = curve_stats(use);
    SymF f = magic_F_beps(ring, st.b, st.eps);
    if (calib.c_omega) f = ring.omega(f);
    return f;
}

} // namespace mono
