#pragma once

#include "mosaic/bigmatrix.hpp"

namespace mosaic {

inline constexpr int kDefaultTransferCap = 16;  // matrices are 2^k-dimensional

struct XOPair {
    BigMatrix x, o;
};

// The 2^k-dimensional transfer-matrix pair, built by the doubling recursion
//   X_1 = [1 1; 1 1],  O_1 = [1 1; 1 4],
//   X_{k+1} = [X_k O_k; O_k X_k],  O_{k+1} = [O_k X_k; X_k 4*O_k].
// Throws SizeLimitError unless 1 <= k <= cap.
XOPair build_xo(int k, int cap = kDefaultTransferCap);

// Number of knot mosaics on an m x n grid via the transfer matrices:
//   2 * entry_sum((X_{m-2} + O_{m-2})^(n-2)).
// Requires m >= 3 (throws std::domain_error otherwise) and n >= 2 (the n = 2
// column is the 0th power, i.e. the identity).
BigInt count_transfer(int m, int n, PowMethod method = PowMethod::iterative,
                      int cap = kDefaultTransferCap);

}  // namespace mosaic
