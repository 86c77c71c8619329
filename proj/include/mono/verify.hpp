// Named verification suites shared by the CLI and the acceptance runner.
#pragma once

#include "mono/calibration.hpp"
#include "mono/curve.hpp"
#include "mono/symfunc.hpp"

#include <string>
#include <vector>

namespace mono {

struct VerifyResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

std::vector<std::string> verify_suite_names();
// runs one suite; jobs bounds the worker count for the heavy ones
std::vector<VerifyResult> run_suite(const std::string& name, SymRing& ring,
                                    const Calibration& calib, int jobs);

// the t = 1 combinatorial sum over lattice paths weakly below C through all
// of C's lattice points, and the number of such paths
SymF t1_path_sum(const SymRing& ring, const CurveSpec& c, long* path_count = nullptr);

} // namespace mono
