#pragma once

#include <string>
#include <vector>

#include "mosaic/oracle.hpp"

namespace mosaic {

struct CheckResult {
    std::string name;
    bool pass;
    std::string detail;  // offending case and both values, empty when passing
};

struct VerifyLimits {
    int max_m = 6;              // strip heights for the cross-method checks
    int max_n = 8;              // strip widths
    long exhaustive_area = 12;  // grids up to this area also run the backtracker
};

// Independent cross-checks of the counting engines against each other and
// against the closed-form/bound identities. The weights argument feeds the
// frontier DP only, so corrupting it makes the cross-checks fail (a self-test
// of the verifier).
std::vector<CheckResult> run_verification(const VerifyLimits& limits = {},
                                          const ProfileWeights& weights = profile_weights());

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace mosaic
