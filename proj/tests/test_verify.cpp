#include "doctest.h"
#include "mosaic/verify.hpp"

using namespace mosaic;

TEST_CASE("verification passes with the canonical tile census") {
    VerifyLimits limits;
    limits.max_m = 5;
    limits.max_n = 6;
    limits.exhaustive_area = 10;
    auto results = run_verification(limits);
    REQUIRE(results.size() == 7);
    for (const auto& r : results) {
        CAPTURE(r.name);
        CHECK(r.pass);
        CHECK(r.detail.empty());
    }
    CHECK(all_passed(results));
}

TEST_CASE("tiny limits degenerate to the strip checks and still pass") {
    VerifyLimits limits;
    limits.max_m = 2;
    limits.max_n = 2;
    auto results = run_verification(limits);
    CHECK(all_passed(results));
}

TEST_CASE("a corrupted tile census is caught") {
    VerifyLimits limits;
    limits.max_m = 4;
    limits.max_n = 4;

    // Drop the blank tile: even the 1xn strip counts collapse.
    ProfileWeights no_blank = profile_weights();
    no_blank[0] = 0;
    auto results = run_verification(limits, no_blank);
    CHECK_FALSE(all_passed(results));
    CHECK_FALSE(results[0].pass);  // closed-form strip counts
    CHECK(results[0].detail.find("D(1,") != std::string::npos);

    // Inflate the crossing multiplicity: strips with no crossings still pass,
    // but the cross-method checks disagree.
    ProfileWeights extra_crossing = profile_weights();
    extra_crossing[0b1111] = 5;
    results = run_verification(limits, extra_crossing);
    CHECK_FALSE(all_passed(results));
    bool backtrack_mismatch = false, transfer_mismatch = false;
    for (const auto& r : results) {
        if (r.name == "backtrack vs frontier") backtrack_mismatch = !r.pass;
        if (r.name == "transfer vs frontier") transfer_mismatch = !r.pass;
    }
    CHECK(backtrack_mismatch);
    CHECK(transfer_mismatch);
}
