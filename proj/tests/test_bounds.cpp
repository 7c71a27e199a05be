#include "doctest.h"
#include "mosaic/bounds.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

#include "mosaic/errors.hpp"
#include "mosaic/oracle.hpp"

using namespace mosaic;

namespace {

BigInt pow10z(unsigned long e) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
    return r;
}

// Exact decimal digits of d^(1/n^2), rounded half to even: take the integer
// p-th root of d * 10^(places*p) and decide the direction by comparing
// 2^p * (d * 10^(places*p)) with (2t+1)^p. Float-free reference for
// root_estimate + format_fixed.
std::string exact_root_fixed(const BigInt& d, int n, int places) {
    const unsigned long p = static_cast<unsigned long>(n) * static_cast<unsigned long>(n);
    BigInt v = d * pow10z(static_cast<unsigned long>(places) * p);
    BigInt t;
    mpz_root(t.get_mpz_t(), v.get_mpz_t(), p);
    BigInt lhs = v << p;
    BigInt rhs;
    mpz_pow_ui(rhs.get_mpz_t(), BigInt(2 * t + 1).get_mpz_t(), p);
    if (lhs > rhs || (lhs == rhs && mpz_odd_p(t.get_mpz_t()))) t += 1;
    BigInt scale = pow10z(static_cast<unsigned long>(places));
    std::string frac = BigInt(t % scale).get_str();
    return BigInt(t / scale).get_str() + "." +
           std::string(std::size_t(places) - frac.size(), '0') + frac;
}

}  // namespace

TEST_CASE("bounding families: shapes and seeds") {
    XOPair lo = build_underline(2);
    CHECK(lo.x.dim() == 4);
    CHECK(entry_sum(lo.x) == 0);
    CHECK(entry_sum(lo.o) == 16);
    CHECK(lo.o.at(3, 3) == 16);

    for (int k = 1; k <= 5; ++k) {
        BigInt target;
        mpz_ui_pow_ui(target.get_mpz_t(), 4, static_cast<unsigned long>(k));
        CHECK(entry_sum(build_underline(k).o) == target);
    }

    XOPair hi = build_overline(1);
    CHECK(hi.x.at(1, 1) == 4);
    CHECK(hi.x == hi.o);
    BigMatrix n1 = overline_sum(1);
    CHECK(n1.at(0, 0) == 2);
    CHECK(n1.at(1, 1) == 8);

    CHECK_THROWS_AS(build_underline(0), SizeLimitError);
    CHECK_THROWS_AS(build_overline(17), SizeLimitError);
}

TEST_CASE("bound closed forms match their matrix definitions") {
    CHECK(lower_bound_count(3) == 8);
    CHECK(lower_bound_count(4) == 512);
    CHECK(lower_bound_count(5) == 524288);
    CHECK(upper_bound_count(3) == 28);
    CHECK(upper_bound_count(4) == 6728);

    for (int n = 3; n <= 8; ++n) {
        CHECK(lower_bound_count(n) == lower_bound_matrix(n));
        CHECK(upper_bound_count(n) == upper_bound_matrix(n));
    }
    CHECK_THROWS_AS(lower_bound_count(2), std::domain_error);
    CHECK_THROWS_AS(upper_bound_matrix(9), SizeLimitError);
}

TEST_CASE("block identity for the majorizing family") {
    BigMatrix m(2);
    m.at(0, 0) = 1; m.at(0, 1) = 1; m.at(1, 0) = 1; m.at(1, 1) = 4;
    for (int k = 1; k <= 4; ++k)
        for (unsigned long s = 0; s <= 4; ++s) {
            CAPTURE(k);
            CAPTURE(s);
            BigInt lhs = entry_sum(mat_pow(overline_sum(k + 1), s));
            BigInt rhs = entry_sum(mat_pow(m, s)) * entry_sum(mat_pow(overline_sum(k), s));
            CHECK(lhs == rhs);
        }
}

TEST_CASE("rational sandwich pinches at n=3") {
    RationalBounds b3 = hllo_bounds(3);
    CHECK(b3.lo == 22);
    CHECK(b3.hi == 22);
    CHECK(b3.lo.get_str() == "22");

    RationalBounds b4 = hllo_bounds(4);
    CHECK(b4.lo.get_str() == "16900/11");
    CHECK(b4.hi.get_str() == "3380");
    CHECK(b4.lo == Rational(16900, 11));

    CHECK_THROWS_AS(hllo_bounds(2), std::domain_error);
}

TEST_CASE("both sandwiches hold around the exact counts") {
    for (int n = 3; n <= 7; ++n) {
        BigInt d = count_frontier(n, n);
        CHECK(lower_bound_count(n) <= d);
        CHECK(d <= upper_bound_count(n));
        RationalBounds h = hllo_bounds(n);
        Rational dq(d);
        CHECK(h.lo <= dq);
        CHECK(dq <= h.hi);
    }
}

TEST_CASE("growth-constant bounds") {
    DeltaBounds b = delta_bounds(6);
    CHECK(b.lower == 4);
    CHECK(b.upper == "4.302776");
    CHECK(delta_bounds(1).upper == "4.3");
    CHECK(delta_bounds(3).upper == "4.303");
    CHECK(delta_bounds(12).upper == "4.302775637732");
    CHECK(delta_bounds(20).upper == "4.30277563773199464656");

    auto [big_root, small_root] = quadratic_roots(6);
    CHECK(big_root == "4.302776");
    CHECK(small_root == "0.697224");
    CHECK(quadratic_roots(12).second == "0.697224362268");

    // Vieta: the printed roots still sum to 5 and multiply to 3.
    double r1 = std::strtod(big_root.c_str(), nullptr);
    double r2 = std::strtod(small_root.c_str(), nullptr);
    CHECK(std::fabs(r1 + r2 - 5.0) <= 1e-5);
    CHECK(std::fabs(r1 * r2 - 3.0) <= 1e-5);

    CHECK_THROWS_AS(delta_bounds(0), std::domain_error);
    CHECK_THROWS_AS(delta_bounds(51), std::domain_error);
}

TEST_CASE("root_estimate against the exact decimal reference") {
    CHECK(root_estimate(1, 1) == doctest::Approx(1.0));
    CHECK(format_fixed(root_estimate(22, 3), 6) == "1.409802");
    CHECK(exact_root_fixed(22, 3, 6) == "1.409802");

    const char* counts[] = {"1", "2", "22", "2594", "4183954", "101393411126",
                            "38572794946976686", "234855052870954505606714",
                            "23054099362200397056093750003442"};
    for (int n = 1; n <= 9; ++n) {
        BigInt d(counts[n - 1]);
        CAPTURE(n);
        CHECK(format_fixed(root_estimate(d, n), 6) == exact_root_fixed(d, n, 6));
        // Absolute error against a 12-decimal exact reference.
        double exact12 = std::strtod(exact_root_fixed(d, n, 12).c_str(), nullptr);
        CHECK(std::fabs(root_estimate(d, n) - exact12) <= 1e-9);
    }

    CHECK_THROWS_AS(root_estimate(0, 3), std::domain_error);
    CHECK_THROWS_AS(root_estimate(22, 0), std::domain_error);
}

TEST_CASE("format_fixed rounds ties to even") {
    CHECK(format_fixed(1.0, 3) == "1.000");
    CHECK(format_fixed(0.25, 1) == "0.2");
    CHECK(format_fixed(0.75, 1) == "0.8");
    CHECK(format_fixed(1.4098024, 3) == "1.410");
}

TEST_CASE("growth table") {
    auto rows = growth_table(5);
    REQUIRE(rows.size() == 5);
    const char* counts[] = {"1", "2", "22", "2594", "4183954"};
    const char* roots[] = {"1.000000", "1.189207", "1.409802", "1.634456", "1.840193"};
    for (int i = 0; i < 5; ++i) {
        CHECK(rows[i].n == i + 1);
        CHECK(rows[i].count == BigInt(counts[i]));
        CHECK(format_fixed(rows[i].root, 6) == roots[i]);
        if (i) CHECK(rows[i].root > rows[i - 1].root);
    }
    CHECK_THROWS_AS(growth_table(0), SizeLimitError);
    CHECK_THROWS_AS(growth_table(12), SizeLimitError);
    CHECK(growth_table(2, 2).size() == 2);
}

TEST_CASE("upper-bound roots rise toward the quadratic root from below") {
    // Both bounding sequences approach their limits from below: the n-th
    // roots of the bound values increase with n and stay under the limits.
    double limit_hi = 4.302776;
    double prev_lo = 0.0, prev_hi = 0.0;
    for (int n = 3; n <= 12; ++n) {
        double rl = root_estimate(lower_bound_count(n), n);
        double rh = root_estimate(upper_bound_count(n), n);
        CHECK(rl > prev_lo);
        CHECK(rh > prev_hi);
        CHECK(rl < 4.0);
        CHECK(rh < limit_hi);
        prev_lo = rl;
        prev_hi = rh;
    }
}
