#include "mono/verify.hpp"
#include "mono/daha.hpp"
#include "mono/eha.hpp"
#include "mono/eps.hpp"
#include "mono/homfly.hpp"
#include "mono/magic.hpp"
#include "mono/positivity.hpp"
#include "mono/series.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <tuple>

namespace mono {

namespace {

Poly qt_sum(std::initializer_list<std::tuple<int, int, int>> terms) {
    Poly p;
    for (auto [i, j, c] : terms) p += Poly::qt(i, j, Rat(c));
    return p;
}

SymF schur_combo(const SymRing& ring, std::initializer_list<std::pair<Partition, Poly>> parts) {
    SymF f{Basis::schur, {}};
    for (const auto& [la, c] : parts) f.add(la, Ratio{c});
    return ring.to_power(f);
}

std::vector<CurveSpec> curves_upto(int m_max, int n_max) {
    std::vector<CurveSpec> out;
    for (int m = 1; m <= m_max; m++)
        for (int n = 1; n <= n_max; n++)
            for (CurveSpec& c : enumerate_curves(m, n)) out.push_back(std::move(c));
    return out;
}

// skein triples (C_+, C_-, C_0) with both curves within the box
std::vector<std::array<CurveSpec, 3>> skein_triples(int m_max, int n_max) {
    std::vector<std::array<CurveSpec, 3>> out;
    for (const CurveSpec& c0 : curves_upto(m_max, n_max)) {
        if (c0.primitive()) continue;
        auto [cp, cm] = skein_triple_at_leftmost_star(c0);
        out.push_back({cp, cm, c0});
    }
    return out;
}

// ---- Table 1 anchors (legible rows, keyed by family) ----

// the (2,2) row values
SymF table_rr(const SymRing& g) { return schur_combo(g, {{Partition{{2}}, Poly(1)}}); }

std::vector<SymF> table_family_22(const SymRing& g) {
    Poly qpt = qt_sum({{1, 0, 1}, {0, 1, 1}});
    Poly qpt_mqt = qt_sum({{1, 0, 1}, {0, 1, 1}, {1, 1, -1}});
    return {
        schur_combo(g, {{Partition{{1, 1}}, Poly(1)}, {Partition{{2}}, qpt}}),      // RURU
        table_rr(g),                                                                 // RRUU
        schur_combo(g, {{Partition{{1, 1}}, Poly(1)}, {Partition{{2}}, qpt_mqt}}),  // RU*RU
    };
}

std::vector<SymF> table_family_23(const SymRing& g) {
    Poly qpt = qt_sum({{1, 0, 1}, {0, 1, 1}});
    Poly qpt_mqt = qt_sum({{1, 0, 1}, {0, 1, 1}, {1, 1, -1}});
    Poly deg2 = qt_sum({{2, 0, 1}, {1, 1, 1}, {0, 2, 1}});
    Poly deg2m = qt_sum({{2, 0, 1}, {1, 1, 1}, {0, 2, 1}, {2, 1, -1}, {1, 2, -1}});
    return {
        table_rr(g),
        schur_combo(g, {{Partition{{1, 1}}, Poly(1)}, {Partition{{2}}, qpt}}),
        schur_combo(g, {{Partition{{1, 1}}, Poly(1)}, {Partition{{2}}, qpt_mqt}}),
        schur_combo(g, {{Partition{{1, 1}}, qpt}, {Partition{{2}}, deg2}}),
        schur_combo(g, {{Partition{{1, 1}}, qpt_mqt}, {Partition{{2}}, deg2m}}),
    };
}

std::vector<SymF> table_family_32(const SymRing& g) {
    Poly qpt = qt_sum({{1, 0, 1}, {0, 1, 1}});
    Poly qpt_mqt = qt_sum({{1, 0, 1}, {0, 1, 1}, {1, 1, -1}});
    Poly deg2 = qt_sum({{2, 0, 1}, {1, 1, 1}, {0, 2, 1}});
    Poly deg2m = qt_sum({{2, 0, 1}, {1, 1, 1}, {0, 2, 1}, {2, 1, -1}, {1, 2, -1}});
    return {
        schur_combo(g, {{Partition{{3}}, Poly(1)}}),
        schur_combo(g, {{Partition{{2, 1}}, Poly(1)}, {Partition{{3}}, qpt}}),
        schur_combo(g, {{Partition{{2, 1}}, Poly(1)}, {Partition{{3}}, qpt_mqt}}),
        schur_combo(g, {{Partition{{2, 1}}, qpt}, {Partition{{3}}, deg2}}),
        schur_combo(g, {{Partition{{2, 1}}, qpt_mqt}, {Partition{{3}}, deg2m}}),
    };
}

// anchored (3,3) rows
SymF table_33_almost_linear(const SymRing& g) {
    return schur_combo(g, {{Partition{{1, 1, 1}}, Poly(1)},
                           {Partition{{2, 1}}, qt_sum({{2, 0, 1}, {1, 1, 1}, {0, 2, 1}, {1, 0, 1}, {0, 1, 1}})},
                           {Partition{{3}}, qt_sum({{3, 0, 1}, {2, 1, 1}, {1, 2, 1}, {0, 3, 1}, {1, 1, 1}})}});
}

SymF table_33_ruurru(const SymRing& g) {
    return schur_combo(
        g, {{Partition{{1, 1, 1}}, qt_sum({{1, 0, 1}, {0, 1, 1}, {0, 0, -1}})},
            {Partition{{2, 1}}, qt_sum({{3, 0, 1}, {2, 1, 1}, {1, 2, 1}, {0, 3, 1},
                                        {2, 0, 1}, {1, 1, 2}, {0, 2, 1}, {1, 0, -1}, {0, 1, -1}})},
            {Partition{{3}}, qt_sum({{4, 0, 1}, {3, 1, 1}, {2, 2, 1}, {1, 3, 1}, {0, 4, 1},
                                     {2, 1, 1}, {1, 2, 1}, {1, 1, -1}})}});
}

std::vector<SymF> table_33_more_anchors(const SymRing& g) {
    Poly qpt = qt_sum({{1, 0, 1}, {0, 1, 1}});
    Poly qpt_mqt = qt_sum({{1, 0, 1}, {0, 1, 1}, {1, 1, -1}});
    Poly deg2 = qt_sum({{2, 0, 1}, {1, 1, 1}, {0, 2, 1}});
    Poly deg2m = qt_sum({{2, 0, 1}, {1, 1, 1}, {0, 2, 1}, {2, 1, -1}, {1, 2, -1}});
    SymF r12 = schur_combo(
        g, {{Partition{{1, 1, 1}}, Poly(1)},
            {Partition{{2, 1}}, qt_sum({{2, 0, 1}, {1, 1, 1}, {0, 2, 1}, {1, 0, 1}, {0, 1, 1},
                                        {2, 1, -1}, {1, 2, -1}})},
            {Partition{{3}}, qt_sum({{3, 0, 1}, {2, 1, 1}, {1, 2, 1}, {0, 3, 1}, {1, 1, 1},
                                     {3, 1, -1}, {2, 2, -1}, {1, 3, -1}})}});
    SymF r13 = schur_combo(
        g, {{Partition{{1, 1, 1}}, Poly(1)},
            {Partition{{2, 1}}, qt_sum({{2, 2, 1}, {2, 0, 1}, {1, 1, 1}, {0, 2, 1}, {1, 0, 1},
                                        {0, 1, 1}, {2, 1, -2}, {1, 2, -2}})},
            {Partition{{3}}, qt_sum({{3, 2, 1}, {2, 3, 1}, {3, 0, 1}, {2, 1, 1}, {1, 2, 1},
                                     {0, 3, 1}, {1, 1, 1}, {3, 1, -2}, {2, 2, -2}, {1, 3, -2}})}});
    return {
        schur_combo(g, {{Partition{{2, 1}}, Poly(1)}, {Partition{{3}}, qpt}}),
        schur_combo(g, {{Partition{{2, 1}}, qpt}, {Partition{{3}}, deg2}}),
        schur_combo(g, {{Partition{{2, 1}}, Poly(1)}, {Partition{{3}}, qpt_mqt}}),
        schur_combo(g, {{Partition{{2, 1}}, qpt_mqt}, {Partition{{3}}, deg2m}}),
        r12,
        r13,
    };
}

bool multiset_equal(const SymRing& ring, std::vector<SymF> a, std::vector<SymF> b) {
    if (a.size() != b.size()) return false;
    for (const SymF& x : a) {
        bool found = false;
        for (size_t j = 0; j < b.size(); j++)
            if (ring.equal(x, b[j])) {
                b.erase(b.begin() + long(j));
                found = true;
                break;
            }
        if (!found) return false;
    }
    return true;
}

// frozen coefficient of s_10 for the (10,7) convex example, organized by
// antidiagonal rows
Poly a3_frozen() {
    Poly p;
    for (int i = 0; i <= 16; i++) p += Poly::qt(i, 16 - i);
    for (int i = 1; i <= 14; i++) p += Poly::qt(i, 15 - i);
    for (int i = 1; i <= 13; i++) p += Poly::qt(i, 14 - i, Rat((i == 1 || i == 13) ? 1 : 2));
    {
        int c13[] = {1, 3, 4, 4, 4, 4, 4, 4, 4, 4, 3, 1}; // q^12 t^1 .. q^1 t^12
        for (int k = 0; k < 12; k++) p += Poly::qt(12 - k, 1 + k, Rat(c13[k]));
    }
    {
        int c12[] = {2, 5, 6, 6, 5, 6, 6, 5, 2}; // q^10 t^2 .. q^2 t^10
        for (int k = 0; k < 9; k++) p += Poly::qt(10 - k, 2 + k, Rat(c12[k]));
    }
    {
        int c11[] = {2, 5, 8, 8, 5, 2}; // q^8 t^3 .. q^3 t^8
        for (int k = 0; k < 6; k++) p += Poly::qt(8 - k, 3 + k, Rat(c11[k]));
    }
    return p;
}

Poly a3_homfly_top_frozen() {
    // coefficient of a^{-32} in the HOMFLY polynomial, times a^{32}
    std::map<int, int> c{{32, 1}, {30, 1}, {29, 1}, {28, 2}, {27, 2}, {26, 3}, {25, 4},
                         {24, 5}, {23, 5}, {22, 8}, {21, 7}, {20, 9}, {19, 10}, {18, 9},
                         {17, 13}, {16, 8}, {15, 13}, {14, 9}, {13, 10}, {12, 9}, {11, 7},
                         {10, 8}, {9, 5}, {8, 5}, {7, 4}, {6, 3}, {5, 2}, {4, 2}, {3, 1},
                         {2, 1}, {0, 1}};
    Poly p;
    for (auto [e, v] : c) p += Poly::qt(e, 0, Rat(v));
    return p;
}

using Suite = std::function<std::vector<VerifyResult>(SymRing&, const Calibration&, int)>;

std::vector<VerifyResult> suite_table1(SymRing& ring, const Calibration& calib, int jobs) {
    (void)jobs;
    ring.warm_up(3);
    std::vector<VerifyResult> out;
    EhaEngine eng(ring, calib);
    auto all = curves_upto(3, 3);
    bool engines_agree = true;
    std::map<std::pair<int, int>, std::vector<SymF>> by_mn;
    for (const CurveSpec& c : all) {
        SymF fa = daha_F(ring, c);
        SymF fb = eng.F(c);
        SymF fc = magic_F(ring, calib, c);
        if (!ring.equal(fa, fb) || !ring.equal(fa, fc)) engines_agree = false;
        by_mn[{c.m, c.n}].push_back(fa);
    }
    out.push_back({"table1: 31 curves, three engines agree",
                   engines_agree && all.size() == 31,
                   std::to_string(all.size()) + " curves"});

    bool anchors = true;
    // degree-1 rows: every (1,n) curve prints s_1
    for (int n = 1; n <= 3; n++)
        anchors = anchors && ring.equal(by_mn[{1, n}][0], ring.s(Partition{{1}}));
    anchors = anchors && ring.equal(by_mn[{2, 1}][0], table_rr(ring));
    anchors = anchors && ring.equal(by_mn[{3, 1}][0], ring.s(Partition{{3}}));
    anchors = anchors && multiset_equal(ring, by_mn[{2, 2}], table_family_22(ring));
    anchors = anchors && multiset_equal(ring, by_mn[{2, 3}], table_family_23(ring));
    anchors = anchors && multiset_equal(ring, by_mn[{3, 2}], table_family_32(ring));
    // anchored (3,3) rows: the almost linear curve, the non-convex curve, and
    // the other legible printed values must all occur
    {
        SymF al = daha_F(ring, parse_curve("RURURU"));
        SymF nc = daha_F(ring, parse_curve("RUURRU"));
        anchors = anchors && ring.equal(al, table_33_almost_linear(ring));
        anchors = anchors && ring.equal(nc, table_33_ruurru(ring));
        for (const SymF& want : table_33_more_anchors(ring)) {
            bool found = false;
            for (const SymF& have : by_mn[{3, 3}])
                if (ring.equal(want, have)) { found = true; break; }
            anchors = anchors && found;
        }
    }
    out.push_back({"table1: printed values match on every identifiable row", anchors, ""});
    return out;
}

std::vector<VerifyResult> suite_examples(SymRing& ring, const Calibration& calib, int jobs) {
    (void)calib;
    (void)jobs;
    ring.warm_up(3);
    std::vector<VerifyResult> out;
    CurveSpec cp = parse_curve("RURU"), cm = parse_curve("RRUU"), c0 = parse_curve("RU*RU");
    auto fam = table_family_22(ring);
    SymF Fp = daha_F(ring, cp), Fm = daha_F(ring, cm), F0 = daha_F(ring, c0);
    out.push_back({"worked examples: the three (2,2) symmetric functions",
                   ring.equal(Fp, fam[0]) && ring.equal(Fm, fam[1]) && ring.equal(F0, fam[2]), ""});
    {
        Poly php = superpoly_normalized(ring, Fp);
        Poly phm = superpoly_normalized(ring, Fm);
        Poly ph0 = superpoly_normalized(ring, F0);
        Poly ep = Poly::a_pow(1) * qt_sum({{1, 0, 1}, {0, 1, 1}}) - Poly::a_pow(-1);
        Poly em = Poly::a_pow(1);
        Poly e0 = Poly::a_pow(1) * qt_sum({{1, 0, 1}, {0, 1, 1}, {1, 1, -1}}) - Poly::a_pow(-1);
        out.push_back({"worked examples: normalized superpolynomials",
                       php == ep && phm == em && ph0 == e0, ""});
    }
    {
        SymF d1p = daha_D1(ring, cp), d1m = daha_D1(ring, cm), d10 = daha_D1(ring, c0);
        Poly omt = Poly(1) - Poly::qt(0, 1);
        SymF e42 = schur_combo(ring, {{Partition{{1, 1}}, omt * qt_sum({{0, 0, 1}, {0, 2, -1}, {1, 1, -1}})},
                                      {Partition{{2}}, omt * Poly::qt(1, 0)}});
        SymF e43 = schur_combo(ring, {{Partition{{1, 1}}, omt * Poly::qt(0, 1, Rat(-1))},
                                      {Partition{{2}}, omt}});
        SymF e44 = schur_combo(ring, {{Partition{{1, 1}}, omt * omt * qt_sum({{0, 0, 1}, {0, 1, 1}, {1, 1, -1}})},
                                      {Partition{{2}}, omt * omt * Poly::qt(1, 0)}});
        out.push_back({"worked examples: operator values before the plethysm",
                       ring.equal(d1p, e42) && ring.equal(d1m, e43) && ring.equal(d10, e44), ""});
    }
    {
        // u-generator expansions for the (2,2) triple
        EhaExpr Dp = almost_linear_expansion(2, 2);
        EhaExpr D0 = almost_linear_expansion(1, 1) * almost_linear_expansion(1, 1);
        Ratio inv_qt{Poly::qt(-1, -1)};
        EhaExpr Dsum = Dp;
        Dsum += D0 * Ratio(-1);
        EhaExpr Dm = Dsum * inv_qt;
        Poly omt = Poly(1) - Poly::qt(0, 1), omt2 = Poly(1) - Poly::qt(0, 2);
        Poly qm1 = Poly::qt(1, 0) - Poly(1), q2m1 = Poly::qt(2, 0) - Poly(1);
        EhaExpr e0;
        e0.terms.push_back({Ratio{omt * omt * qm1 * qm1}, {{{1, 1}, 2}}});
        EhaExpr ep;
        ep.terms.push_back({Ratio{omt2 * q2m1} * Ratio{Poly(Rat(1, 2))}, {{{2, 2}, 1}}});
        ep.terms.push_back({Ratio{omt * omt * qm1 * qm1} * Ratio{Poly(Rat(1, 2))}, {{{1, 1}, 2}}});
        EhaExpr em;
        em.terms.push_back({Ratio{omt2 * q2m1} * Ratio{Poly::qt(-1, -1, Rat(1, 2))}, {{{2, 2}, 1}}});
        em.terms.push_back({Ratio{omt * omt * qm1 * qm1} * Ratio{Poly::qt(-1, -1, Rat(-1, 2))}, {{{1, 1}, 2}}});
        out.push_back({"worked examples: u-generator expansions",
                       Dp.equals(ep) && D0.equals(e0) && Dm.equals(em), ""});
    }
    return out;
}

std::vector<VerifyResult> suite_census(SymRing& ring, const Calibration& calib, int jobs) {
    EhaEngine eng(ring, calib);
    CensusOptions opt;
    opt.jobs = jobs;
    CensusCounts c = census(eng, 7, 7, opt);
    std::ostringstream os;
    os << c.total << " total, " << c.series_positive << " series-positive, " << c.weak_zconvex
       << " weakly Z-convex, " << c.zconvex << " Z-convex";
    bool pass = c.total == 24319 && c.series_positive == 6781 && c.weak_zconvex == 4257 &&
                c.zconvex == 3313 && c.containments;
    return {{"census over 1 <= m,n <= 7 with containments and engine audit", pass, os.str()}};
}

std::vector<VerifyResult> suite_skein(SymRing& ring, const Calibration& calib, int jobs) {
    (void)calib;
    (void)jobs;
    ring.warm_up(4);
    bool pass = true;
    std::string bad;
    for (const auto& [cp, cm, c0] : skein_triples(4, 4)) {
        // operator level on 1: D(C_+) = qt D(C_-) + D(C_0)
        Daha H(cp.m);
        ScaledNPoly vp = D_apply(cp, H, H.one());
        ScaledNPoly vm = D_apply(cm, H, H.one());
        ScaledNPoly v0 = D_apply(c0, H, H.one());
        vm.scale *= Ratio{Poly::qt(1, 1)};
        // compare vp with qt*vm + v0 by moving to a common scale
        Ratio rm = vm.scale / vp.scale;
        Ratio r0 = v0.scale / vp.scale;
        Poly dm(1), d0(1);
        for (const auto& [f, mult] : rm.den)
            for (int i = 0; i < mult; i++) dm *= f;
        for (const auto& [f, mult] : r0.den)
            for (int i = 0; i < mult; i++) d0 *= f;
        // vp.poly * dm * d0 == vm.poly * rm.num * d0 + v0.poly * r0.num * dm
        NPoly lhs = vp.poly * (dm * d0);
        NPoly rhs = vm.poly * (rm.num * d0);
        rhs += v0.poly * (r0.num * dm);
        if (!(lhs == rhs)) {
            pass = false;
            bad = c0.render();
            break;
        }
    }
    return {{"skein relation at the operator level, all triples m,n <= 4", pass, bad}};
}

std::vector<VerifyResult> suite_prop2_9(SymRing& ring, const Calibration& calib, int jobs) {
    (void)calib;
    (void)jobs;
    bool pass = true;
    std::string bad;
    for (int N = 1; N <= 5 && pass; N++) {
        Daha H(N);
        for (int d = 1; d <= 5 && pass; d++) {
            // gamma e_N Y_1 X_1^d Y_1^{-1} e_N . 1
            NPoly f = H.one();
            // e_N . 1 = 1
            f = H.apply_Y(1, f, true);
            for (int i = 0; i < d; i++) f = H.apply_X(1, f);
            f = H.apply_Y(1, f);
            ScaledNPoly s{f, Ratio(1)};
            H.gamma_e(s);
            // (-t)^d e_d[(1 - t^{-1}) X_N] expanded through power sums
            SymF ed = ring.to_power(ring.e(d));
            SymF rhs_sym = ring.plethysm_pk_scale(ed, [](int k) {
                return Ratio{Poly(1) - Poly::qt(0, -k)};
            });
            rhs_sym = rhs_sym * Ratio{Poly::qt(0, d, Rat(d % 2 ? -1 : 1))};
            ScaledNPoly rhs = to_npoly(ring, rhs_sym, N);
            if (!s.value_equals(rhs)) {
                pass = false;
                bad = "d=" + std::to_string(d) + " N=" + std::to_string(N);
            }
        }
    }
    return {{"symmetrized X-power identity, 1 <= d,N <= 5", pass, bad}};
}

std::vector<VerifyResult> suite_qtsym(SymRing& ring, const Calibration& calib, int jobs) {
    EhaEngine eng(ring, calib);
    auto curves = curves_upto(4, 4);
    eng.warm(curves, jobs);
    bool pass = true;
    std::string bad;
    for (const CurveSpec& c : curves) {
        SymF f = eng.F(c);
        if (!ring.equal(f, ring.swap_qt(f))) {
            pass = false;
            bad = c.render();
            break;
        }
    }
    return {{"q,t-symmetry of F_C for all curves m,n <= 4", pass, bad}};
}

std::vector<VerifyResult> suite_prop1_19(SymRing& ring, const Calibration& calib, int jobs) {
    (void)calib;
    (void)jobs;
    ring.warm_up(4);
    std::vector<VerifyResult> out;
    bool pass = true;
    std::string bad;
    for (const CurveSpec& c : curves_upto(4, 4)) {
        SymF F = daha_F(ring, c);
        Prop119Report rep = verify_prop_1_19(ring, c, F);
        if (!rep.pass) {
            pass = false;
            bad = c.render();
            break;
        }
    }
    out.push_back({"HOMFLY specialization identity for all curves m,n <= 4", pass, bad});
    {
        // the three (2,2) trace values
        auto val = [&](const char* w) {
            return phi_annulus(ring, coxeter_braid(parse_curve(w)));
        };
        SymF vp = val("RURU"), vm = val("RRUU"), v0 = val("RU*RU");
        SymF ep{Basis::schur, {}};
        ep.add(Partition{{1, 1}}, Ratio{Poly::monomial(Rat(1), Mono{0, -5, 0})});
        ep.add(Partition{{2}}, Ratio{Poly::monomial(Rat(-1), Mono{0, 1, 0})});
        SymF em{Basis::schur, {}};
        em.add(Partition{{1, 1}}, Ratio{Poly::monomial(Rat(1), Mono{0, -3, 0})});
        em.add(Partition{{2}}, Ratio{Poly::monomial(Rat(-1), Mono{0, -1, 0})});
        SymF e0{Basis::schur, {}};
        e0.add(Partition{{1, 1}}, Ratio{Poly::monomial(Rat(1), Mono{0, -4, 0})});
        e0.add(Partition{{2}}, Ratio{Poly(1)});
        out.push_back({"annular trace values of the (2,2) braids",
                       ring.equal(vp, ring.to_power(ep)) && ring.equal(vm, ring.to_power(em)) &&
                           ring.equal(v0, ring.to_power(e0)),
                       ""});
    }
    {
        bool p66 = true;
        for (const CurveSpec& c : curves_upto(3, 3))
            if (!verify_trace_specialization(ring, c, daha_F(ring, c))) { p66 = false; break; }
        out.push_back({"trace route matches the t = q^{-1} specialization, m,n <= 3", p66, ""});
    }
    return out;
}

std::vector<VerifyResult> suite_writhe(SymRing& ring, const Calibration& calib, int jobs) {
    (void)ring;
    (void)calib;
    (void)jobs;
    bool pass = true;
    std::string bad;
    for (const CurveSpec& c : curves_upto(5, 5)) {
        CurveStats st = curve_stats(c);
        if (coxeter_braid(c).writhe() != st.writhe) {
            pass = false;
            bad = c.render();
            break;
        }
    }
    CurveStats hopf = curve_stats(parse_curve("RU*RU"));
    std::ostringstream os;
    os << "w(RU*RU) = " << hopf.writhe
       << " from both the lattice formula and the braid exponent sum"
       << " (an older printed value 3 disagrees; 2 is the consistent one)";
    return {{"writhe formula equals the braid exponent sum, m,n <= 5",
             pass && hopf.writhe == 2, pass ? os.str() : bad}};
}

std::vector<VerifyResult> suite_a3(SymRing& ring, const Calibration& calib, int jobs) {
    (void)jobs;
    std::vector<VerifyResult> out;
    EhaEngine eng(ring, calib);
    CurveSpec c = parse_curve("RRRURRRURURRUURUU");
    SymF F = eng.F(c);
    SymF fs = ring.convert(F, Basis::schur);
    Poly top;
    auto it = fs.terms.find(Partition{{10}});
    if (it != fs.terms.end()) top = it->second.as_poly();
    bool m1 = top == a3_frozen();
    out.push_back({"(10,7) convex example: s_10 coefficient matches, including the"
                   " non-unimodal antidiagonal",
                   m1, ""});
    {
        UnimodalityReport rep = unimodality(top);
        bool viol = !rep.all_unimodal;
        out.push_back({"(10,7) convex example: unimodality violation detected at q+t=12", viol,
                       viol ? rep.violations.front() : "no violation found"});
    }
    {
        Poly spec = top.subst_t_to_qinv() * Poly::qt(16, 0);
        out.push_back({"(10,7) convex example: top HOMFLY coefficient from t = q^{-1}",
                       spec == a3_homfly_top_frozen(), ""});
    }
    return out;
}

std::vector<VerifyResult> suite_t1(SymRing& ring, const Calibration& calib, int jobs) {
    EhaEngine eng(ring, calib);
    auto curves = curves_upto(4, 4);
    eng.warm(curves, jobs);
    bool pass = true, counts = true;
    std::string bad;
    for (const CurveSpec& c : curves) {
        long npaths = 0;
        SymF comb = t1_path_sum(ring, c, &npaths);
        SymF spec = ring.subst(ring.convert(eng.F(c), Basis::schur), &Poly::subst_t_one);
        if (!ring.equal(comb, spec)) {
            pass = false;
            bad = c.render();
            break;
        }
        // path count = coefficient of s_m at q = t = 1
        SymF both = ring.convert(spec, Basis::schur);
        auto it = both.terms.find(Partition{{c.m}});
        Rat sm(0);
        if (it != both.terms.end()) {
            Poly p = it->second.as_poly().subst_t_one(); // t was already 1
            Rat tot(0);
            for (const auto& [mm, cc] : p.terms) tot += cc; // q = 1
            sm = tot;
        }
        if (sm != npaths) {
            counts = false;
            bad = c.render();
            break;
        }
    }
    return {{"t = 1 path formula and path counts, all curves m,n <= 4", pass && counts, bad}};
}

std::vector<VerifyResult> suite_eha_relations(SymRing& ring, const Calibration& calib, int jobs) {
    (void)calib;
    (void)jobs;
    std::vector<VerifyResult> out;
    for (const RelationReport& r : verify_relations(ring, 6))
        out.push_back({"generator relation: " + r.name, r.pass, r.detail});
    return out;
}

std::vector<VerifyResult> suite_annulus(SymRing& ring, const Calibration& calib, int jobs) {
    (void)calib;
    (void)jobs;
    bool pass = true;
    std::string bad;
    for (int N = 1; N <= 5; N++)
        if (!annulus_powersum_check(ring, N)) {
            pass = false;
            bad = "N=" + std::to_string(N);
            break;
        }
    return {{"annular power-sum traces, N <= 5", pass, bad}};
}

std::vector<VerifyResult> suite_splice(SymRing& ring, const Calibration& calib, int jobs) {
    (void)ring;
    (void)calib;
    (void)jobs;
    bool pass = true;
    std::string bad;
    // all coaxial inputs with slope-nonincreasing order and sum bounds
    std::function<void(std::vector<std::pair<int, int>>&, int, int)> rec =
        [&](std::vector<std::pair<int, int>>& cur, int ms, int ns) {
            if (!cur.empty()) {
                bool sorted = true;
                for (size_t i = 0; i + 1 < cur.size(); i++)
                    if (long(cur[i].first) * cur[i + 1].second <
                        long(cur[i + 1].first) * cur[i].second)
                        sorted = false;
                if (sorted && !splice(cur).algebraic) {
                    pass = false;
                    bad = "nonincreasing input judged non-algebraic";
                }
            }
            for (int m = 1; ms + m <= 7; m++)
                for (int n = 1; ns + n <= 7; n++) {
                    cur.push_back({m, n});
                    rec(cur, ms + m, ns + n);
                    cur.pop_back();
                }
        };
    std::vector<std::pair<int, int>> cur;
    rec(cur, 0, 0);
    bool neg = !splice({{1, 2}, {2, 1}}).algebraic;
    return {{"splice algebraicity: decreasing slopes pass, an increasing pair fails",
             pass && neg, bad}};
}

std::vector<VerifyResult> suite_oracles(SymRing& ring, const Calibration& calib, int jobs) {
    (void)calib;
    (void)jobs;
    std::vector<VerifyResult> out;
    std::mt19937 rng(20260810u);
    {
        // HOMFLY: trace route vs skein resolution, plus Markov moves
        bool pass = true;
        for (int trial = 0; trial < 50 && pass; trial++) {
            int m = 2 + int(rng() % 3);
            int len = 1 + int(rng() % 8);
            BraidWord b;
            b.strands = m;
            for (int i = 0; i < len; i++)
                b.letters.push_back({1 + int(rng() % (m - 1)), rng() % 2 ? 1 : -1});
            Ratio direct = homfly_of_braid(ring, b);
            if (!direct.equals(homfly_skein_oracle(b))) pass = false;
            int g = 1 + int(rng() % (m - 1));
            if (!direct.equals(homfly_of_braid(ring, b.conjugated(g, 1)))) pass = false;
            if (!direct.equals(homfly_of_braid(ring, b.stabilized(1)))) pass = false;
        }
        out.push_back({"HOMFLY trace route vs skein-resolution oracle and Markov moves", pass, ""});
    }
    {
        bool pass = true;
        auto truncated_nonneg = [](const std::vector<Rat>& p, int j, size_t horizon) {
            std::vector<Rat> series(horizon, Rat(0));
            std::copy(p.begin(), p.end(), series.begin());
            for (int r = 0; r < j; r++)
                for (size_t i = 1; i < series.size(); i++) series[i] += series[i - 1];
            return std::all_of(series.begin(), series.end(),
                               [](const Rat& c) { return c >= 0; });
        };
        for (int trial = 0; trial < 1000 && pass; trial++) {
            int deg = int(rng() % 13);
            std::vector<Rat> p(size_t(deg) + 1);
            for (auto& c : p) c = Rat(long(rng() % 11) - 5);
            int j = int(rng() % 7);
            bool exact = series_nonneg(p, j);
            bool oracle = truncated_nonneg(p, j, p.size() + 50);
            if (exact == oracle) continue;
            if (exact && !oracle) { pass = false; continue; } // truncation negatives are real
            // the truncation was too short; the first negative must exist
            // further out, so extend until it is found
            bool found = false;
            for (size_t horizon = p.size() + 100; horizon <= (1u << 22); horizon *= 4)
                if (!truncated_nonneg(p, j, horizon)) { found = true; break; }
            if (!found) pass = false;
        }
        out.push_back({"series nonnegativity vs truncation oracle, 1000 random inputs", pass, ""});
    }
    {
        bool pass = true;
        Rat eps_val(1, 1000000000);
        for (int trial = 0; trial < 10000 && pass; trial++) {
            EpsPoint pts[3];
            Rat coords[3][2];
            for (int i = 0; i < 3; i++) {
                long shift = long(rng() % 3) - 1;
                Rat x(long(rng() % 41) - 20), y(long(rng() % 41) - 20);
                pts[i] = {EpsScalar(x, Rat(-shift)), EpsScalar(y, Rat(shift))};
                coords[i][0] = x - Rat(shift) * eps_val;
                coords[i][1] = y + Rat(shift) * eps_val;
            }
            int sym = eps_orient(pts[0], pts[1], pts[2]);
            Rat det = (coords[1][0] - coords[0][0]) * (coords[2][1] - coords[0][1]) -
                      (coords[1][1] - coords[0][1]) * (coords[2][0] - coords[0][0]);
            int num = det > 0 ? 1 : det < 0 ? -1 : 0;
            if (sym != 0 && sym != num) pass = false;
        }
        out.push_back({"exact eps-orientation vs rational sampling, 10000 random inputs", pass, ""});
    }
    {
        // defining relations of the double affine algebra on random inputs
        bool pass = true;
        int N = 3;
        Daha H(N);
        auto rand_poly = [&]() {
            NPoly f(N);
            for (int t = 0; t < 4; t++) {
                std::vector<int> e(static_cast<size_t>(N));
                for (auto& x : e) x = int(rng() % 4);
                f.add_term(e, Poly(Rat(long(rng() % 9) - 4)));
            }
            return f;
        };
        for (int trial = 0; trial < 5 && pass; trial++) {
            NPoly f = rand_poly();
            // quadratic: (T_i + t^{1/2})(T_i - t^{-1/2}) f = 0
            for (int i = 1; i < N; i++) {
                NPoly g = H.apply_T(i, f);
                g -= f * Poly::monomial(Rat(1), Mono{0, 0, -1});
                NPoly h = H.apply_T(i, g);
                h += g * Poly::monomial(Rat(1), Mono{0, 0, 1});
                if (!h.is_zero()) pass = false;
            }
            // braid relation
            {
                NPoly l = H.apply_T(1, H.apply_T(2, H.apply_T(1, f)));
                NPoly r = H.apply_T(2, H.apply_T(1, H.apply_T(2, f)));
                if (!(l == r)) pass = false;
            }
            // commuting Y's and X's
            {
                NPoly l = H.apply_Y(1, H.apply_Y(2, f));
                NPoly r = H.apply_Y(2, H.apply_Y(1, f));
                if (!(l == r)) pass = false;
                l = H.apply_X(1, H.apply_X(3, f));
                r = H.apply_X(3, H.apply_X(1, f));
                if (!(l == r)) pass = false;
            }
            // T_i X_i T_i = X_{i+1} and T_i^{-1} Y_i T_i^{-1} = Y_{i+1}
            for (int i = 1; i < N; i++) {
                NPoly l = H.apply_T(i, H.apply_X(i, H.apply_T(i, f)));
                if (!(l == H.apply_X(i + 1, f))) pass = false;
                NPoly l2 = H.apply_T(i, H.apply_Y(i, H.apply_T(i, f, true), false), true);
                if (!(l2 == H.apply_Y(i + 1, f))) pass = false;
            }
            // distant commutation |i - k| > 1
            {
                NPoly l = H.apply_T(1, H.apply_X(3, f));
                NPoly r = H.apply_X(3, H.apply_T(1, f));
                if (!(l == r)) pass = false;
                l = H.apply_T(1, H.apply_Y(3, f));
                r = H.apply_Y(3, H.apply_T(1, f));
                if (!(l == r)) pass = false;
            }
            // Y_1 X_1 .. X_N = q X_1 .. X_N Y_1
            {
                NPoly g = f;
                for (int i = 1; i <= N; i++) g = H.apply_X(i, g);
                g = H.apply_Y(1, g);
                NPoly h = H.apply_Y(1, f);
                for (int i = 1; i <= N; i++) h = H.apply_X(i, h);
                h = h * Poly::qt(1, 0);
                if (!(g == h)) pass = false;
            }
            // X_1^{-1} Y_2 = Y_2 X_1^{-1} T_1^{-2}
            {
                NPoly l = H.apply_X(1, H.apply_Y(2, f), true);
                NPoly r = H.apply_T(1, H.apply_T(1, f, true), true);
                r = H.apply_X(1, r, true);
                r = H.apply_Y(2, r);
                if (!(l == r)) pass = false;
            }
        }
        out.push_back({"double affine relations on random polynomials, N = 3", pass, ""});
    }
    return out;
}

const std::map<std::string, Suite>& suites() {
    static const std::map<std::string, Suite> table{
        {"table1", suite_table1},
        {"examples", suite_examples},
        {"census", suite_census},
        {"skein", suite_skein},
        {"prop2_9", suite_prop2_9},
        {"qtsym", suite_qtsym},
        {"prop1_19", suite_prop1_19},
        {"writhe", suite_writhe},
        {"a3", suite_a3},
        {"t1", suite_t1},
        {"eha_relations", suite_eha_relations},
        {"annulus", suite_annulus},
        {"splice", suite_splice},
        {"oracles", suite_oracles},
    };
    return table;
}

} // namespace

std::vector<std::string> verify_suite_names() {
    std::vector<std::string> names;
    for (const auto& [n, f] : suites()) names.push_back(n);
    return names;
}

std::vector<VerifyResult> run_suite(const std::string& name, SymRing& ring,
                                    const Calibration& calib, int jobs) {
    auto it = suites().find(name);
    if (it == suites().end()) throw std::invalid_argument("unknown verify suite: " + name);
    return it->second(ring, calib, jobs);
}

SymF t1_path_sum(const SymRing& ring, const CurveSpec& c, long* path_count) {
    CurveStats st = curve_stats(c);
    // required heights at starred columns
    std::map<int, int> required;
    for (auto [x, y] : st.on_points) required[x] = y;
    SymF acc{Basis::homogeneous, {}};
    long count = 0;
    std::vector<int> g(size_t(c.m) + 1, 0);
    g[size_t(c.m)] = c.n;
    std::function<void(int)> rec = [&](int x) {
        if (x == c.m) {
            long area = 0;
            for (int i = 0; i < c.m; i++) area += g[size_t(i)];
            // portion sizes: number of right steps at each level
            std::vector<int> portions(size_t(c.n) + 1, 0);
            for (int i = 0; i < c.m; i++) portions[size_t(g[size_t(i)])]++;
            std::vector<int> parts;
            for (int a : portions)
                if (a > 0) parts.push_back(a);
            std::sort(parts.rbegin(), parts.rend());
            acc.add(Partition(parts), Ratio{Poly::qt(st.area - area, 0)});
            count++;
            return;
        }
        int lo = x == 0 ? 0 : g[size_t(x - 1)];
        int hi = st.heights[size_t(x)];
        auto it = required.find(x);
        for (int y = lo; y <= hi; y++) {
            if (it != required.end() && y != it->second) continue;
            g[size_t(x)] = y;
            rec(x + 1);
        }
    };
    rec(0);
    if (path_count) *path_count = count;
    return ring.to_power(acc);
}

} // namespace mono
