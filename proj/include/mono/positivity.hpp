// Positivity and symmetry diagnostics on the curve symmetric functions, and
// the exhaustive census. The census loop is data-parallel over curves; a
// serial reference path (jobs = 1) is kept and tested against the OpenMP
// path, and tools/bench_census compares them.
#pragma once

#include "mono/curve.hpp"
#include "mono/eha.hpp"
#include "mono/symfunc.hpp"

#include <optional>
#include <string>
#include <vector>

namespace mono {

struct Witness {
    Partition la;
    long qpow = 0, tpow = 0;
    Rat coeff;
};

struct UnimodalityReport {
    bool all_unimodal = true;
    // violations: (a-degree, description of the failing sequence position)
    std::vector<std::string> violations;
};

struct PositivityReport {
    bool schur_positive = true;
    bool series_positive = true; // for (1/(1-t))^{k-1} F_C
    bool qt_symmetric = true;
    std::optional<Witness> witness;
    UnimodalityReport unimodality; // per a-degree of the superpolynomial
};

PositivityReport classify(const SymRing& ring, const CurveSpec& c, const SymF& F);

// anti-diagonal and parity unimodality of a Laurent polynomial, sliced per
// a-degree
UnimodalityReport unimodality(const Poly& superpolynomial);

struct CensusCounts {
    long total = 0;
    long series_positive = 0;
    long weak_zconvex = 0;
    long zconvex = 0;
    bool containments = true; // series ⊇ weak ⊇ strict
};

struct CensusOptions {
    int jobs = 1;
    std::string cache_path;        // append-only JSONL; empty = no cache
    double audit_fraction = 0.01;  // DAHA-engine spot check
    bool engine_a = false;         // full DAHA census (audit runs)
    unsigned seed = 0xC0FFEEu;     // deterministic sample selection
};

CensusCounts census(EhaEngine& engine, int m_max, int n_max, const CensusOptions& opt = {});

std::string report_json(const PositivityReport& r);

} // namespace mono
