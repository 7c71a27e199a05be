#pragma once

#include <string_view>

#include "mosaic/bigmatrix.hpp"

namespace mosaic {

enum class CountMethod { closed_form, backtrack, frontier, transfer };

std::string_view to_string(CountMethod m);

struct CountResult {
    BigInt value;
    CountMethod method;  // engine that produced the value
    bool transposed;     // true when (m, n) was flipped to put the smaller side first
};

// Count knot mosaics on an m x n grid with the fastest applicable exact
// method. Transposes so the row count is the smaller side, then:
//   - one row or column, or a 2-row strip: closed form (1 and 2^(n-1)),
//     cross-checked against the frontier DP when n <= 12 (CrossCheckError
//     on disagreement);
//   - n <= 24 columns: frontier DP;
//   - otherwise: transfer matrices.
CountResult count_auto(int m, int n);

}  // namespace mosaic
