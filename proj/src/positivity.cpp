#include "mono/positivity.hpp"
#include "mono/daha.hpp"
#include "mono/homfly.hpp"
#include "mono/series.hpp"

#include <omp.h>

#include <algorithm>
#include <fstream>
#include <map>
#include <random>
#include <sstream>

namespace mono {

static bool sequence_unimodal(const std::vector<Rat>& v, size_t* where) {
    bool descending = false;
    for (size_t i = 1; i < v.size(); i++) {
        if (v[i] > v[i - 1] && descending) {
            if (where) *where = i;
            return false;
        }
        if (v[i] < v[i - 1]) descending = true;
    }
    return true;
}

UnimodalityReport unimodality(const Poly& superpolynomial) {
    UnimodalityReport rep;
    // slice by a-degree
    std::map<int, std::map<std::pair<int, int>, Rat>> slices;
    for (const auto& [m, c] : superpolynomial.terms)
        slices[m.ea][{m.eq / 2, m.et / 2}] = c;
    for (const auto& [adeg, terms] : slices) {
        // anti-diagonals: fixed q+t total, coefficients by descending q power
        std::map<int, std::vector<std::pair<int, Rat>>> diag;
        for (const auto& [qt, c] : terms) diag[qt.first + qt.second].push_back({qt.first, c});
        for (auto& [s, seq] : diag) {
            std::sort(seq.begin(), seq.end(),
                      [](const auto& a, const auto& b) { return a.first > b.first; });
            // fill gaps with zeros between the extreme q-powers
            std::vector<Rat> v;
            for (int qp = seq.front().first; qp >= seq.back().first; qp--) {
                Rat c(0);
                for (const auto& [qq, cc] : seq)
                    if (qq == qp) c = cc;
                v.push_back(c);
            }
            size_t at = 0;
            if (!sequence_unimodal(v, &at)) {
                rep.all_unimodal = false;
                std::ostringstream os;
                os << "a^" << adeg << " antidiagonal q+t=" << s << " at q^"
                   << seq.front().first - int(at);
                rep.violations.push_back(os.str());
            }
        }
        // parity classes of the q-degree for one-variable slices
        bool tless = std::all_of(terms.begin(), terms.end(),
                                 [](const auto& kv) { return kv.first.second == 0; });
        if (tless && !terms.empty()) {
            for (int par = 0; par < 2; par++) {
                std::vector<Rat> v;
                int qmin = terms.begin()->first.first, qmax = terms.rbegin()->first.first;
                for (int qp = qmin; qp <= qmax; qp++) {
                    if (((qp % 2) + 2) % 2 != par) continue;
                    auto it = terms.find({qp, 0});
                    v.push_back(it == terms.end() ? Rat(0) : it->second);
                }
                size_t at = 0;
                if (!sequence_unimodal(v, &at)) {
                    rep.all_unimodal = false;
                    std::ostringstream os;
                    os << "a^" << adeg << " parity " << par << " class";
                    rep.violations.push_back(os.str());
                }
            }
        }
    }
    return rep;
}

PositivityReport classify(const SymRing& ring, const CurveSpec& c, const SymF& F) {
    PositivityReport rep;
    int k = c.star_count() + 1;
    SymF fs = ring.convert(F, Basis::schur);
    for (const auto& [la, coef] : fs.terms) {
        Poly p = coef.as_poly();
        if (!p.integer_qt_powers())
            throw std::logic_error("classify: non-integer q,t powers in F");
        // schur positivity of the polynomial itself
        for (const auto& [m, cc] : p.terms)
            if (cc < 0 && rep.schur_positive) {
                rep.schur_positive = false;
                if (!rep.witness) rep.witness = Witness{la, m.eq / 2, m.et / 2, cc};
            }
        // series positivity of p/(1-t)^{k-1}, per q-power
        std::map<int, std::vector<Rat>> by_q;
        for (const auto& [m, cc] : p.terms) {
            long tq = m.et / 2;
            if (tq < 0) throw std::logic_error("classify: negative t power");
            auto& vec = by_q[m.eq / 2];
            if (long(vec.size()) <= tq) vec.resize(size_t(tq) + 1, Rat(0));
            vec[size_t(tq)] = cc;
        }
        for (const auto& [qp, tpoly] : by_q)
            if (!series_nonneg(tpoly, k - 1)) {
                rep.series_positive = false;
                if (!rep.witness) {
                    // first negative polynomial coefficient as the witness
                    for (const auto& [m, cc] : p.terms)
                        if (cc < 0) { rep.witness = Witness{la, m.eq / 2, m.et / 2, cc}; break; }
                }
            }
        if (!(p.swap_qt() == p)) rep.qt_symmetric = false;
    }
    rep.unimodality = unimodality(superpoly(ring, F));
    return rep;
}

std::string report_json(const PositivityReport& r) {
    std::ostringstream os;
    os << "{\"schur_positive\":" << (r.schur_positive ? "true" : "false")
       << ",\"series_positive\":" << (r.series_positive ? "true" : "false")
       << ",\"qt_symmetric\":" << (r.qt_symmetric ? "true" : "false");
    if (r.witness)
        os << ",\"witness\":{\"partition\":\"" << r.witness->la.str() << "\",\"q\":"
           << r.witness->qpow << ",\"t\":" << r.witness->tpow << ",\"coeff\":\""
           << r.witness->coeff.get_str() << "\"}";
    os << ",\"unimodal\":" << (r.unimodality.all_unimodal ? "true" : "false") << "}";
    return os.str();
}

CensusCounts census(EhaEngine& engine, int m_max, int n_max, const CensusOptions& opt) {
    SymRing& ring = engine.ring();
    ring.warm_up(std::min(ring.degree_bound(), m_max));
    std::vector<CurveSpec> curves;
    for (int m = 1; m <= m_max; m++)
        for (int n = 1; n <= n_max; n++)
            for (CurveSpec& c : enumerate_curves(m, n)) curves.push_back(std::move(c));

    std::vector<SymF> values(curves.size());
    if (opt.engine_a) {
        values = daha_F_many(ring, curves, opt.jobs);
    } else {
        engine.warm(curves, opt.jobs);
        if (opt.jobs <= 1) {
            // serial reference path
            for (size_t i = 0; i < curves.size(); i++) values[i] = engine.F(curves[i]);
        } else {
#pragma omp parallel for schedule(dynamic) num_threads(opt.jobs)
            for (size_t i = 0; i < curves.size(); i++) values[i] = engine.F(curves[i]);
        }
    }

    std::vector<uint8_t> sp(curves.size()), wz(curves.size()), zc(curves.size());
    auto classify_one = [&](size_t i) {
        PositivityReport rep = classify(ring, curves[i], values[i]);
        sp[i] = rep.series_positive ? 1 : 0;
        wz[i] = z_convex(curves[i], true) ? 1 : 0;
        zc[i] = z_convex(curves[i], false) ? 1 : 0;
    };
    if (opt.jobs <= 1) {
        for (size_t i = 0; i < curves.size(); i++) classify_one(i);
    } else {
#pragma omp parallel for schedule(dynamic) num_threads(opt.jobs)
        for (size_t i = 0; i < curves.size(); i++) classify_one(i);
    }

    CensusCounts counts;
    counts.total = long(curves.size());
    for (size_t i = 0; i < curves.size(); i++) {
        counts.series_positive += sp[i];
        counts.weak_zconvex += wz[i];
        counts.zconvex += zc[i];
        if (zc[i] && !wz[i]) counts.containments = false;
        if (wz[i] && !sp[i]) counts.containments = false;
    }

    // spot-check a deterministic random sample against the DAHA engine
    if (!opt.engine_a && opt.audit_fraction > 0) {
        std::mt19937 rng(opt.seed);
        size_t want = size_t(double(curves.size()) * opt.audit_fraction);
        if (want == 0) want = 1;
        std::vector<size_t> idx(curves.size());
        for (size_t i = 0; i < idx.size(); i++) idx[i] = i;
        std::shuffle(idx.begin(), idx.end(), rng);
        idx.resize(want);
        std::sort(idx.begin(), idx.end());
        std::vector<CurveSpec> sample;
        for (size_t i : idx) sample.push_back(curves[i]);
        std::vector<SymF> audit = daha_F_many(ring, sample, opt.jobs);
        for (size_t j = 0; j < idx.size(); j++)
            if (!ring.equal(audit[j], values[idx[j]]))
                throw std::logic_error("census audit: engine disagreement on " +
                                       curves[idx[j]].render());
    }

    if (!opt.cache_path.empty()) {
        std::ofstream out(opt.cache_path, std::ios::app);
        out << "{\"cache_version\":1,\"mmax\":" << m_max << ",\"nmax\":" << n_max
            << ",\"engine\":\"" << (opt.engine_a ? "a" : "b") << "\",\"calibration_id\":\""
            << engine.calibration().id() << "\"}\n";
        for (size_t i = 0; i < curves.size(); i++) {
            PositivityReport rep = classify(ring, curves[i], values[i]);
            out << "{\"word\":\"" << curves[i].render() << "\",\"F\":\""
                << ring.schur_str(values[i]) << "\",\"report\":" << report_json(rep)
                << ",\"engine\":\"" << (opt.engine_a ? "a" : "b") << "\",\"calibration_id\":\""
                << engine.calibration().id() << "\"}\n";
        }
    }
    return counts;
}

} // namespace mono
