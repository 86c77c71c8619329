// Command-line interface: evaluation, enumeration, classification, census,
// verification suites, HOMFLY, splice diagrams, t = 1 sums, and calibration.
#include "mono/daha.hpp"
#include "mono/eha.hpp"
#include "mono/homfly.hpp"
#include "mono/magic.hpp"
#include "mono/positivity.hpp"
#include "mono/verify.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace mono;

namespace {

struct Options {
    std::string engine = "a";
    int mmax = 3, nmax = 3;
    int jobs = 1;
    std::string cache;
    int degree_bound = 12;
    std::string format = "text";
    std::string calibration_path = "calibration.json";
};

std::string poly_json(const Poly& p, bool with_a) {
    std::ostringstream os;
    os << "[";
    bool first = true;
    for (const auto& [m, c] : p.terms) {
        if (!first) os << ",";
        first = false;
        os << "[";
        if (with_a) os << m.ea << ",";
        os << m.eq << "," << m.et << ",\"" << rat_num_str(c) << "\",\"" << rat_den_str(c)
           << "\"]";
    }
    os << "]";
    return os.str();
}

std::string symf_json(const SymRing& ring, const SymF& f) {
    SymF fs = ring.convert(f, Basis::schur);
    std::ostringstream os;
    os << "{\"basis\":\"schur\",\"terms\":[";
    bool first = true;
    for (const auto& [la, c] : fs.terms) {
        if (!first) os << ",";
        first = false;
        os << "{\"partition\":[";
        for (size_t i = 0; i < la.parts.size(); i++) {
            if (i) os << ",";
            os << la.parts[i];
        }
        os << "],\"coeff\":" << poly_json(c.as_poly(), false) << "}";
    }
    os << "]}";
    return os.str();
}

SymF compute_F(SymRing& ring, const Options& opt, const CurveSpec& c) {
    if (opt.engine == "a") return daha_F(ring, c);
    Calibration calib = Calibration::load(opt.calibration_path);
    if (opt.engine == "b") {
        EhaEngine eng(ring, calib);
        return eng.F(c);
    }
    if (opt.engine == "c") return magic_F(ring, calib, c);
    throw std::invalid_argument("unknown engine '" + opt.engine + "' (use a, b, or c)");
}

int cmd_eval(SymRing& ring, const Options& opt, const std::string& word) {
    CurveSpec c = parse_curve(word);
    SymF F = compute_F(ring, opt, c);
    PositivityReport rep = classify(ring, c, F);
    Poly P = superpoly(ring, F);
    Poly Ph = superpoly_normalized(ring, F);
    if (opt.format == "json") {
        std::cout << "{\"word\":\"" << c.render() << "\",\"F\":" << symf_json(ring, F)
                  << ",\"superpoly\":" << poly_json(P, true)
                  << ",\"superpoly_normalized\":" << poly_json(Ph, true)
                  << ",\"stats\":" << stats_json(c) << ",\"report\":" << report_json(rep)
                  << ",\"engine\":\"" << opt.engine << "\"}\n";
        return 0;
    }
    CurveStats st = curve_stats(c);
    std::cout << "curve " << c.render() << "  (m,n) = (" << c.m << "," << c.n << ")  k = "
              << st.k << "  w = " << st.writhe << "\n";
    std::cout << "F_C = " << ring.schur_str(F) << "\n";
    std::cout << "P^E = " << P.str() << "\n";
    std::cout << "P^E / (a - a^{-1}) = " << Ph.str() << "\n";
    SymF Ft1 = ring.subst(ring.convert(F, Basis::schur), &Poly::subst_t_one);
    std::cout << "F_C at t = 1: " << ring.schur_str(Ft1) << "\n";
    SymF Ftq = ring.subst(ring.convert(F, Basis::schur), &Poly::subst_t_to_qinv);
    std::cout << "F_C at t = q^{-1}: " << ring.schur_str(Ftq) << "\n";
    std::cout << "stats: " << stats_json(c) << "\n";
    std::cout << "report: " << report_json(rep) << "\n";
    return 0;
}

int cmd_enum(const Options& opt, int m, int n) {
    for (const CurveSpec& c : enumerate_curves(m, n)) {
        if (opt.format == "json")
            std::cout << stats_json(c) << "\n";
        else
            std::cout << c.render() << "\n";
    }
    return 0;
}

int cmd_classify(SymRing& ring, const Options& opt, const std::string& word) {
    CurveSpec c = parse_curve(word);
    SymF F = compute_F(ring, opt, c);
    PositivityReport rep = classify(ring, c, F);
    std::cout << report_json(rep) << "\n";
    return 0;
}

int cmd_census(SymRing& ring, const Options& opt) {
    Calibration calib = Calibration::load(opt.calibration_path);
    EhaEngine eng(ring, calib);
    CensusOptions copt;
    copt.jobs = opt.jobs;
    copt.cache_path = opt.cache;
    copt.engine_a = opt.engine == "a";
    CensusCounts counts = census(eng, opt.mmax, opt.nmax, copt);
    if (opt.format == "json") {
        std::cout << "{\"total\":" << counts.total << ",\"series_positive\":"
                  << counts.series_positive << ",\"weak_zconvex\":" << counts.weak_zconvex
                  << ",\"zconvex\":" << counts.zconvex << ",\"containments\":"
                  << (counts.containments ? "true" : "false") << ",\"calibration_id\":\""
                  << calib.id() << "\"}\n";
    } else {
        std::cout << "curves: " << counts.total << "\nseries-positive: " << counts.series_positive
                  << "\nweakly Z-convex: " << counts.weak_zconvex
                  << "\nZ-convex: " << counts.zconvex << "\ncontainments: "
                  << (counts.containments ? "ok" : "VIOLATED") << "\n";
    }
    return counts.containments ? 0 : 1;
}

int cmd_verify(SymRing& ring, const Options& opt, const std::string& suite) {
    Calibration calib = Calibration::load(opt.calibration_path);
    std::vector<std::string> names;
    if (suite == "all")
        names = verify_suite_names();
    else
        names.push_back(suite);
    bool all_pass = true;
    for (const std::string& name : names) {
        for (const VerifyResult& r : run_suite(name, ring, calib, opt.jobs)) {
            std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.name;
            if (!r.detail.empty()) std::cout << "  (" << r.detail << ")";
            std::cout << "\n";
            all_pass = all_pass && r.pass;
        }
    }
    return all_pass ? 0 : 1;
}

int cmd_homfly(SymRing& ring, const Options& opt, const std::string& word) {
    CurveSpec c = parse_curve(word);
    Ratio h = homfly(ring, c);
    if (opt.format == "json") {
        std::cout << "{\"word\":\"" << c.render() << "\",\"homfly\":" << poly_json(h.as_poly(), true)
                  << "}\n";
    } else {
        std::cout << "P^HOMFLY(" << c.render() << ") = " << h.as_poly().str() << "\n";
    }
    return 0;
}

int cmd_splice(const Options& opt, const std::string& pairs_str) {
    std::vector<std::pair<int, int>> pairs;
    std::istringstream in(pairs_str);
    std::string tok;
    while (in >> tok) {
        auto comma = tok.find(',');
        if (comma == std::string::npos)
            throw std::invalid_argument("splice pairs must look like m,n");
        pairs.push_back({std::stoi(tok.substr(0, comma)), std::stoi(tok.substr(comma + 1))});
    }
    if (pairs.empty()) throw std::invalid_argument("no pairs given");
    SpliceDiagram d = splice(pairs);
    if (opt.format == "json") {
        std::cout << "{\"algebraic\":" << (d.algebraic ? "true" : "false") << ",\"groups\":[";
        for (size_t g = 0; g < d.groups.size(); g++) {
            if (g) std::cout << ",";
            std::cout << "{\"p\":" << d.groups[g].p << ",\"q\":" << d.groups[g].q << ",\"d\":[";
            for (size_t i = 0; i < d.groups[g].d.size(); i++) {
                if (i) std::cout << ",";
                std::cout << d.groups[g].d[i];
            }
            std::cout << "]}";
        }
        std::cout << "]}\n";
    } else {
        std::cout << d.str() << "\n";
    }
    return 0;
}

int cmd_t1(SymRing& ring, const Options& opt, const std::string& word) {
    CurveSpec c = parse_curve(word);
    long count = 0;
    SymF comb = t1_path_sum(ring, c, &count);
    SymF F = compute_F(ring, opt, c);
    SymF spec = ring.subst(ring.convert(F, Basis::schur), &Poly::subst_t_one);
    bool agree = ring.equal(comb, spec);
    std::cout << "paths weakly below the curve through its lattice points: " << count << "\n";
    std::cout << "combinatorial sum: " << ring.schur_str(comb) << "\n";
    std::cout << "F_C at t = 1:      " << ring.schur_str(spec) << "\n";
    std::cout << (agree ? "equal\n" : "MISMATCH\n");
    return agree ? 0 : 1;
}

int cmd_calibrate(SymRing& ring, const Options& opt) {
    Calibration calib = calibrate(ring);
    calib.save(opt.calibration_path);
    std::cout << "calibration locked: " << calib.id() << " -> " << opt.calibration_path << "\n";
    std::cout << calib.to_json() << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact invariants of monotone lattice curves"};
    app.require_subcommand(1);
    Options opt;
    app.add_option("--engine", opt.engine, "engine: a (operator), b (fast), c (tableau)");
    app.add_option("--mmax", opt.mmax, "maximum m for census");
    app.add_option("--nmax", opt.nmax, "maximum n for census");
    app.add_option("--jobs", opt.jobs, "worker count");
    app.add_option("--cache", opt.cache, "census cache path (append-only JSONL)");
    app.add_option("--degree-bound", opt.degree_bound, "symmetric function degree bound");
    app.add_option("--format", opt.format, "output format: text or json");
    app.add_option("--calibration", opt.calibration_path, "calibration record path");

    std::string word, suite = "all", pairs;
    int em = 2, en = 2;
    auto* eval = app.add_subcommand("eval", "evaluate a curve word");
    eval->add_option("word", word)->required();
    auto* enm = app.add_subcommand("enum", "enumerate curve words");
    enm->add_option("m", em)->required();
    enm->add_option("n", en)->required();
    auto* cls = app.add_subcommand("classify", "positivity report for a curve");
    cls->add_option("word", word)->required();
    app.add_subcommand("census", "classify every curve up to --mmax, --nmax");
    auto* ver = app.add_subcommand("verify", "run a verification suite");
    ver->add_option("suite", suite, "suite name or 'all'");
    auto* hom = app.add_subcommand("homfly", "HOMFLY polynomial of a curve link");
    hom->add_option("word", word)->required();
    auto* spl = app.add_subcommand("splice", "splice diagram of coaxial pairs \"m1,n1 m2,n2 ...\"");
    spl->add_option("pairs", pairs)->required();
    auto* t1c = app.add_subcommand("t1", "t = 1 path sum vs specialization");
    t1c->add_option("word", word)->required();
    app.add_subcommand("calibrate", "lock the engine conventions against the operator engine");
    for (CLI::App* sub : app.get_subcommands(nullptr)) sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        SymRing ring(opt.degree_bound);
        if (eval->parsed()) return cmd_eval(ring, opt, word);
        if (enm->parsed()) return cmd_enum(opt, em, en);
        if (cls->parsed()) return cmd_classify(ring, opt, word);
        if (app.get_subcommand("census")->parsed()) return cmd_census(ring, opt);
        if (ver->parsed()) return cmd_verify(ring, opt, suite);
        if (hom->parsed()) return cmd_homfly(ring, opt, word);
        if (spl->parsed()) return cmd_splice(opt, pairs);
        if (t1c->parsed()) return cmd_t1(ring, opt, word);
        if (app.get_subcommand("calibrate")->parsed()) return cmd_calibrate(ring, opt);
    } catch (const parse_error& e) {
        std::cerr << "input error: " << e.what();
        if (e.position != std::string::npos) std::cerr << " at position " << e.position;
        std::cerr << "\n";
        return 2;
    } catch (const degree_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const calibration_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
