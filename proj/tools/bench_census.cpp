// Times the census serial reference path against the OpenMP path and checks
// that the counts agree.
#include "mono/positivity.hpp"

#include <omp.h>

#include <chrono>
#include <iostream>

using namespace mono;
using clk = std::chrono::steady_clock;

int main(int argc, char** argv) {
    int mmax = argc > 1 ? std::atoi(argv[1]) : 5;
    int nmax = argc > 2 ? std::atoi(argv[2]) : 5;
    int maxjobs = argc > 3 ? std::atoi(argv[3]) : omp_get_max_threads();

    SymRing ring(12);
    Calibration calib = calibrate(ring);
    EhaEngine engine(ring, calib);
    ring.warm_up(mmax);

    auto run = [&](int jobs) {
        CensusOptions opt;
        opt.jobs = jobs;
        opt.audit_fraction = 0; // timing only
        auto t0 = clk::now();
        CensusCounts c = census(engine, mmax, nmax, opt);
        auto t1 = clk::now();
        double sec = std::chrono::duration<double>(t1 - t0).count();
        return std::make_pair(c, sec);
    };

    auto [serial, t_serial] = run(1);
    std::cout << "census " << mmax << "x" << nmax << ": " << serial.total << " curves\n";
    std::cout << "serial reference: " << t_serial << " s\n";
    for (int jobs = 2; jobs <= maxjobs; jobs *= 2) {
        auto [par, t_par] = run(jobs);
        bool same = par.total == serial.total && par.series_positive == serial.series_positive &&
                    par.weak_zconvex == serial.weak_zconvex && par.zconvex == serial.zconvex;
        std::cout << jobs << " workers: " << t_par << " s  speedup " << t_serial / t_par
                  << (same ? "" : "  COUNTS DIFFER") << "\n";
        if (!same) return 1;
    }
    return 0;
}
