#include "mosaic/transfer.hpp"

#include <stdexcept>
#include <string>

#include "mosaic/errors.hpp"

namespace mosaic {

namespace {

// dst[row_off.., col_off..] = mult * src
void place_block(BigMatrix& dst, const BigMatrix& src, int row_off, int col_off, int mult) {
    for (int i = 0; i < src.dim(); ++i)
        for (int j = 0; j < src.dim(); ++j) dst.at(row_off + i, col_off + j) = mult * src.at(i, j);
}

}  // namespace

XOPair build_xo(int k, int cap) {
    if (k < 1 || k > cap)
        throw SizeLimitError("transfer index " + std::to_string(k) + " outside 1.." +
                             std::to_string(cap));
    BigMatrix x(2), o(2);
    x.at(0, 0) = 1; x.at(0, 1) = 1; x.at(1, 0) = 1; x.at(1, 1) = 1;
    o.at(0, 0) = 1; o.at(0, 1) = 1; o.at(1, 0) = 1; o.at(1, 1) = 4;
    for (int level = 1; level < k; ++level) {
        const int d = x.dim();
        BigMatrix nx(2 * d), no(2 * d);
        place_block(nx, x, 0, 0, 1);
        place_block(nx, o, 0, d, 1);
        place_block(nx, o, d, 0, 1);
        place_block(nx, x, d, d, 1);
        place_block(no, o, 0, 0, 1);
        place_block(no, x, 0, d, 1);
        place_block(no, x, d, 0, 1);
        place_block(no, o, d, d, 4);
        x = std::move(nx);
        o = std::move(no);
    }
    return {std::move(x), std::move(o)};
}

BigInt count_transfer(int m, int n, PowMethod method, int cap) {
    if (m < 3)
        throw std::domain_error("transfer count needs at least 3 rows, got " + std::to_string(m));
    if (n < 2)
        throw std::domain_error("transfer count needs at least 2 columns, got " +
                                std::to_string(n));
    XOPair xo = build_xo(m - 2, cap);
    BigMatrix sum = mat_add(xo.x, xo.o);
    return 2 * entry_sum(mat_pow(sum, static_cast<unsigned long>(n - 2), method));
}

}  // namespace mosaic
