#include "mosaic/oracle.hpp"

#include <string>

#include "mosaic/errors.hpp"

namespace mosaic {

namespace {

void check_dims_positive(int m, int n) {
    if (m < 1 || n < 1)
        throw std::domain_error("grid dimensions must be at least 1x1, got " + std::to_string(m) +
                                "x" + std::to_string(n));
}

// Row-major DFS over tile assignments. `south` carries the pending south flag
// of each column into the next row, `west` the east flag of the previous tile.
// Boundary cells only admit tiles whose outward-facing flags are clear. The
// leaf callback returns false to stop the whole search.
template <class Leaf>
void dfs_mosaics(int rows, int cols, Leaf&& leaf) {
    std::vector<std::uint8_t> south(cols, 0);
    std::vector<std::uint8_t> cells;
    cells.reserve(std::size_t(rows) * cols);
    bool stop = false;

    auto rec = [&](auto&& self, int r, int c, std::uint8_t west) -> void {
        if (r == rows) {
            if (!leaf(cells)) stop = true;
            return;
        }
        const int nr = (c + 1 == cols) ? r + 1 : r;
        const int nc = (c + 1 == cols) ? 0 : c + 1;
        for (int t = 0; t < kTileCount && !stop; ++t) {
            ConnectionProfile p = tiles()[t].profile;
            if (p.west() != (west != 0)) continue;
            if (p.north() != (south[c] != 0)) continue;
            if (r + 1 == rows && p.south()) continue;
            if (c + 1 == cols && p.east()) continue;
            std::uint8_t saved = south[c];
            south[c] = p.south();
            cells.push_back(static_cast<std::uint8_t>(t));
            self(self, nr, nc, nc == 0 ? std::uint8_t{0} : std::uint8_t{p.east()});
            cells.pop_back();
            south[c] = saved;
        }
    };
    rec(rec, 0, 0, 0);
}

}  // namespace

BigInt count_backtrack(int m, int n) {
    check_dims_positive(m, n);
    if (long(m) * n > kBacktrackAreaLimit)
        throw SizeLimitError("backtracking is limited to grids of area " +
                             std::to_string(kBacktrackAreaLimit) + ", got " + std::to_string(m) +
                             "x" + std::to_string(n));
    BigInt count = 0;
    dfs_mosaics(m, n, [&](const std::vector<std::uint8_t>&) {
        ++count;
        return true;
    });
    return count;
}

BigInt count_frontier(int m, int n) { return count_frontier(m, n, profile_weights()); }

BigInt count_frontier(int m, int n, const ProfileWeights& weights) {
    check_dims_positive(m, n);
    if (n > kFrontierColsLimit)
        throw SizeLimitError("frontier DP is limited to " + std::to_string(kFrontierColsLimit) +
                             " columns, got " + std::to_string(n));

    // State word: bit 0 is the west flag entering the next cell, bit c+1 the
    // pending south flag of column c. Cells are processed row-major; placing a
    // tile at (r, c) consumes (north, west) = (bit c+1, bit 0) and writes
    // (south, east) back into the same two bits, so each step rewrites
    // disjoint 4-slot groups of the dense table in place.
    const std::size_t words = std::size_t(1) << (n + 1);
    std::vector<BigInt> dp(words);
    dp[0] = 1;
    BigInt scratch[4];

    for (int r = 0; r < m; ++r) {
        const bool last_row = (r + 1 == m);
        for (int c = 0; c < n; ++c) {
            const bool last_col = (c + 1 == n);
            const std::size_t col_bit = std::size_t(1) << (c + 1);
            const std::size_t low_mask = (std::size_t(1) << (c + 1)) - 2;  // bits 1..c
            const std::size_t groups = std::size_t(1) << (n - 1);
            for (std::size_t g = 0; g < groups; ++g) {
                const std::size_t base = ((g << 1) & low_mask) | ((g >> c) << (c + 2));
                BigInt* slot[4] = {&dp[base], &dp[base | 1], &dp[base | col_bit],
                                   &dp[base | col_bit | 1]};
                if ((mpz_sgn(slot[0]->get_mpz_t()) | mpz_sgn(slot[1]->get_mpz_t()) |
                     mpz_sgn(slot[2]->get_mpz_t()) | mpz_sgn(slot[3]->get_mpz_t())) == 0)
                    continue;
                for (int k = 0; k < 4; ++k) mpz_swap(scratch[k].get_mpz_t(), slot[k]->get_mpz_t());
                for (int k = 0; k < 4; ++k) {
                    if (mpz_sgn(scratch[k].get_mpz_t()) == 0) continue;
                    const int north = k >> 1, west = k & 1;
                    for (int south = 0; south <= (last_row ? 0 : 1); ++south)
                        for (int east = 0; east <= (last_col ? 0 : 1); ++east) {
                            const int w = weights[north << 3 | east << 2 | south << 1 | west];
                            if (!w) continue;
                            const std::size_t dst =
                                base | (std::size_t(south) << (c + 1)) | std::size_t(east);
                            mpz_addmul_ui(dp[dst].get_mpz_t(), scratch[k].get_mpz_t(),
                                          static_cast<unsigned long>(w));
                        }
                    mpz_set_ui(scratch[k].get_mpz_t(), 0);
                }
            }
        }
    }
    // All boundary flags were forced clear, so the mass sits in state 0.
    return dp[0];
}

std::vector<Mosaic> enumerate_knot_mosaics(int m, int n, std::optional<std::uint64_t> limit) {
    check_dims_positive(m, n);
    if (long(m) * n > kEnumerateAreaLimit)
        throw SizeLimitError("enumeration is limited to grids of area " +
                             std::to_string(kEnumerateAreaLimit) + ", got " + std::to_string(m) +
                             "x" + std::to_string(n));
    std::vector<Mosaic> out;
    if (limit && *limit == 0) return out;
    dfs_mosaics(m, n, [&](const std::vector<std::uint8_t>& cells) {
        out.emplace_back(m, n, cells);
        return !(limit && out.size() >= *limit);
    });
    return out;
}

}  // namespace mosaic
