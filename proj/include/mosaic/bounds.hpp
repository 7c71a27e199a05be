#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mosaic/transfer.hpp"

namespace mosaic {

inline constexpr int kDefaultGrowthCap = 11;
inline constexpr int kDeltaPrecisionCap = 50;

// Bounding transfer-matrix families. The lower family keeps only the
// all-corners entry (X all zero, O a single power of 4); the upper family
// majorizes every block by the 2x2 seed M = [1 1; 1 4].
XOPair build_underline(int k);
XOPair build_overline(int k);

// Sum of the two upper-family matrices; satisfies the block identity
//   N_{k+1} = [N_k N_k; N_k 4*N_k],  entry_sum(N_{k+1}^s) = entry_sum(M^s) * entry_sum(N_k^s).
BigMatrix overline_sum(int k);

// Direct matrix-definition evaluation of the two bounds, 3 <= n <= 8 only
// (2^(n-2)-dimensional matrices). Exposed so tests can compare routes.
BigInt lower_bound_matrix(int n);
BigInt upper_bound_matrix(int n);

// Closed forms, n >= 3:
//   lower: 2 * 4^((n-2)^2)
//   upper: 2^(n-1) * entry_sum(M^(n-2))^(n-2)
// For n <= 8 the matrix route is evaluated too and must agree
// (CrossCheckError otherwise).
BigInt lower_bound_count(int n);
BigInt upper_bound_count(int n);

// The sharper rational sandwich, n >= 3:
//   (2/275) * (9*6^(n-2) + 1)^2 * 2^((n-3)^2)        <= D_n
//   (2/275) * (9*6^(n-2) + 1)^2 * (22/5)^((n-3)^2)   >= D_n
// Both sides coincide with D_3 = 22 at n = 3.
struct RationalBounds {
    Rational lo, hi;
};
RationalBounds hllo_bounds(int n);

// Bounds on the growth constant delta = lim D_n^(1/n^2): the integer 4 from
// below, and from above the larger root of x^2 - 5x + 3 (= (5 + sqrt(13))/2),
// printed with `precision` decimal digits (1..50), rounded half-even.
struct DeltaBounds {
    long lower;
    std::string upper;
};
DeltaBounds delta_bounds(int precision);

// Both roots of x^2 - 5x + 3 as decimal strings (larger first), same
// precision contract as delta_bounds. Their sum is 5 and product 3.
std::pair<std::string, std::string> quadratic_roots(int precision);

// D^(1/n^2) for D >= 1, n >= 1, computed from the bit length and leading bits
// of D. Absolute error well under 1e-9 for the sizes involved here.
double root_estimate(const BigInt& d, int n);

// Fixed-point formatting with the given number of decimals (correctly
// rounded, ties to even).
std::string format_fixed(double v, int places);

struct GrowthRow {
    int n;
    BigInt count;   // D_n
    double root;    // d_n = D_n^(1/n^2)
};

// Rows for n = 1..max_n; 1 <= max_n <= cap. Counts come from the fastest
// applicable exact method for each n.
std::vector<GrowthRow> growth_table(int max_n, int cap = kDefaultGrowthCap);

}  // namespace mosaic
