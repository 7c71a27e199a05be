#include "mosaic/bounds.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>
#include <string>

#include "mosaic/count.hpp"
#include "mosaic/errors.hpp"

namespace mosaic {

namespace {

void check_bound_domain(int n) {
    if (n < 3) throw std::domain_error("bounds are defined for n >= 3, got " + std::to_string(n));
}

BigMatrix seed_m() {
    BigMatrix m(2);
    m.at(0, 0) = 1; m.at(0, 1) = 1; m.at(1, 0) = 1; m.at(1, 1) = 4;
    return m;
}

// dst block at (row_off, col_off) = mult * src
void place_block(BigMatrix& dst, const BigMatrix& src, int row_off, int col_off, int mult) {
    for (int i = 0; i < src.dim(); ++i)
        for (int j = 0; j < src.dim(); ++j) dst.at(row_off + i, col_off + j) = mult * src.at(i, j);
}

void check_family_index(int k) {
    if (k < 1 || k > kDefaultTransferCap)
        throw SizeLimitError("bounding-family index " + std::to_string(k) + " outside 1.." +
                             std::to_string(kDefaultTransferCap));
}

BigInt pow_ui(unsigned long base, unsigned long exp) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
    return r;
}

}  // namespace

XOPair build_underline(int k) {
    check_family_index(k);
    // Entry-wise floor of the true pair: zero everywhere except the one entry
    // of O that is exactly 4^k (its bottom-right corner).
    const int d = 1 << k;
    BigMatrix x(d), o(d);
    o.at(d - 1, d - 1) = pow_ui(4, static_cast<unsigned long>(k));
    return {std::move(x), std::move(o)};
}

XOPair build_overline(int k) {
    check_family_index(k);
    BigMatrix x = seed_m(), o = seed_m();
    for (int level = 1; level < k; ++level) {
        const int d = x.dim();
        BigMatrix nx(2 * d), no(2 * d);
        place_block(nx, x, 0, 0, 1);
        place_block(nx, o, 0, d, 1);
        place_block(nx, o, d, 0, 1);
        place_block(nx, x, d, d, 4);  // majorizes the exact recursion's plain X block
        place_block(no, o, 0, 0, 1);
        place_block(no, x, 0, d, 1);
        place_block(no, x, d, 0, 1);
        place_block(no, o, d, d, 4);
        x = std::move(nx);
        o = std::move(no);
    }
    return {std::move(x), std::move(o)};
}

BigMatrix overline_sum(int k) {
    XOPair p = build_overline(k);
    return mat_add(p.x, p.o);
}

BigInt lower_bound_matrix(int n) {
    check_bound_domain(n);
    if (n > 8) throw SizeLimitError("direct bound matrices are limited to n <= 8");
    XOPair p = build_underline(n - 2);
    return 2 * entry_sum(mat_pow(mat_add(p.x, p.o), static_cast<unsigned long>(n - 2)));
}

BigInt upper_bound_matrix(int n) {
    check_bound_domain(n);
    if (n > 8) throw SizeLimitError("direct bound matrices are limited to n <= 8");
    return 2 * entry_sum(mat_pow(overline_sum(n - 2), static_cast<unsigned long>(n - 2)));
}

BigInt lower_bound_count(int n) {
    check_bound_domain(n);
    const unsigned long s = static_cast<unsigned long>(n - 2);
    BigInt closed = 2 * pow_ui(4, s * s);
    if (n <= 8) {
        BigInt direct = lower_bound_matrix(n);
        if (direct != closed)
            throw CrossCheckError("lower bound mismatch at n=" + std::to_string(n) + ": closed " +
                                  closed.get_str() + " vs matrix " + direct.get_str());
    }
    return closed;
}

BigInt upper_bound_count(int n) {
    check_bound_domain(n);
    const unsigned long s = static_cast<unsigned long>(n - 2);
    BigInt row_sum = entry_sum(mat_pow(seed_m(), s));
    BigInt closed;
    mpz_pow_ui(closed.get_mpz_t(), row_sum.get_mpz_t(), s);
    closed <<= n - 1;  // * 2^(n-1)
    if (n <= 8) {
        BigInt direct = upper_bound_matrix(n);
        if (direct != closed)
            throw CrossCheckError("upper bound mismatch at n=" + std::to_string(n) + ": closed " +
                                  closed.get_str() + " vs matrix " + direct.get_str());
    }
    return closed;
}

RationalBounds hllo_bounds(int n) {
    check_bound_domain(n);
    const unsigned long e = static_cast<unsigned long>(n - 3) * static_cast<unsigned long>(n - 3);
    BigInt t = 9 * pow_ui(6, static_cast<unsigned long>(n - 2)) + 1;
    Rational coeff = Rational(2, 275) * Rational(t * t);
    Rational lo = coeff * Rational(pow_ui(2, e));
    Rational hi = coeff * Rational(pow_ui(22, e), pow_ui(5, e));
    lo.canonicalize();
    hi.canonicalize();
    return {lo, hi};
}

namespace {

// (5 + sign*sqrt(13)) / 2 to `precision` decimals, rounded half to even.
// Computed with 12 guard digits and an exact integer square root; sqrt(13) is
// irrational, so no rounding boundary can sit inside the guard window for the
// precisions admitted here.
std::string quadratic_root_decimal(int sign, int precision) {
    const int guard = 12;
    BigInt scale = pow_ui(10, static_cast<unsigned long>(precision + guard));
    BigInt s;
    mpz_sqrt(s.get_mpz_t(), BigInt(13 * scale * scale).get_mpz_t());
    BigInt num = 5 * scale + sign * s;  // value * 2 * scale, up to 1 ulp at the guard digit
    BigInt den = 2 * pow_ui(10, guard);
    BigInt q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    const int c = cmp(BigInt(2 * r), den);
    if (c > 0 || (c == 0 && mpz_odd_p(q.get_mpz_t()))) q += 1;
    BigInt p10 = pow_ui(10, static_cast<unsigned long>(precision));
    BigInt whole = q / p10, frac = q % p10;
    std::string f = frac.get_str();
    return whole.get_str() + "." + std::string(std::size_t(precision) - f.size(), '0') + f;
}

}  // namespace

DeltaBounds delta_bounds(int precision) {
    if (precision < 1 || precision > kDeltaPrecisionCap)
        throw std::domain_error("precision must be in 1.." + std::to_string(kDeltaPrecisionCap));
    return {4, quadratic_root_decimal(+1, precision)};
}

std::pair<std::string, std::string> quadratic_roots(int precision) {
    if (precision < 1 || precision > kDeltaPrecisionCap)
        throw std::domain_error("precision must be in 1.." + std::to_string(kDeltaPrecisionCap));
    return {quadratic_root_decimal(+1, precision), quadratic_root_decimal(-1, precision)};
}

double root_estimate(const BigInt& d, int n) {
    if (n < 1) throw std::domain_error("root index must be positive");
    if (mpz_sgn(d.get_mpz_t()) <= 0) throw std::domain_error("count must be positive");
    long exp2 = 0;
    double frac = mpz_get_d_2exp(&exp2, d.get_mpz_t());  // d = frac * 2^exp2, frac in [0.5, 1)
    double log_d = std::log(frac) + double(exp2) * std::numbers::ln2;
    return std::exp(log_d / (double(n) * double(n)));
}

std::string format_fixed(double v, int places) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", places, v);
    return buf;
}

std::vector<GrowthRow> growth_table(int max_n, int cap) {
    if (max_n < 1 || max_n > cap)
        throw SizeLimitError("table size " + std::to_string(max_n) + " outside 1.." +
                             std::to_string(cap));
    std::vector<GrowthRow> rows;
    rows.reserve(std::size_t(max_n));
    for (int n = 1; n <= max_n; ++n) {
        BigInt d = count_auto(n, n).value;
        double root = root_estimate(d, n);
        rows.push_back({n, std::move(d), root});
    }
    return rows;
}

}  // namespace mosaic
