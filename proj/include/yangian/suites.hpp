#pragma once

#include <string>
#include <vector>

#include "yangian/report.hpp"

namespace yangian {

struct SuiteConfig {
    std::string suite = "all";
    int max_mode = 3;
    /// Test fixture: sets [e_1, e_0] = 0 in the Y(sl(2)) table before checking.
    bool broken_table = false;
};

/// hopf, limit, cybe, colie, factor, twist, ybe, pqybe, series, gfmodes, all.
const std::vector<std::string>& suite_names();

/// Table capacity used for a given mode bound.
int capacity_for(int max_mode);

/// Runs the checks of one suite in a fixed order. Throws AlgebraError for an
/// unknown suite or max_mode < 1.
std::vector<CheckRecord> run_suite(const SuiteConfig& config);

} // namespace yangian
