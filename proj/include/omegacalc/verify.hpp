#pragma once

#include <string>
#include <vector>

namespace omegacalc {

// Outcome of one release-gate check.
struct CheckResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail; // coverage summary, or the first recorded failures
    double seconds = 0.0;
};

constexpr int kNumCriteria = 12;

// Run one check (1..12). quick shrinks the heaviest sweeps for CI; the
// mathematical content is unchanged.
CheckResult run_criterion(int id, bool quick = false);

// All twelve, in order.
std::vector<CheckResult> run_all(bool quick = false);

} // namespace omegacalc
