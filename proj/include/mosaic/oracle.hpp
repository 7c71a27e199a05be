#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "mosaic/bigmatrix.hpp"
#include "mosaic/grid.hpp"

namespace mosaic {

inline constexpr long kBacktrackAreaLimit = 20;
inline constexpr int kFrontierColsLimit = 24;
inline constexpr long kEnumerateAreaLimit = 16;

using ProfileWeights = std::array<int, 16>;

// Exhaustive depth-first search over all tile assignments with connectivity
// pruning. Exponential; limited to m*n <= 20 (SizeLimitError beyond).
BigInt count_backtrack(int m, int n);

// Profile dynamic programming over the frontier: one pass over the cells in
// row-major order, state = pending connection flags of the n columns plus the
// east flag of the current cell's west edge. O(m*n*2^n) big-int operations;
// limited to n <= 24 columns.
//
// The weights argument maps a tile's connection profile to how many tiles
// carry it; the default is the census of the canonical tile table.
BigInt count_frontier(int m, int n);
BigInt count_frontier(int m, int n, const ProfileWeights& weights);

// All knot mosaics on an m x n grid, in lexicographic order of the row-major
// tile-index sequence. Limited to m*n <= 16; an optional cap stops early
// (the first `limit` mosaics in that order).
std::vector<Mosaic> enumerate_knot_mosaics(int m, int n,
                                           std::optional<std::uint64_t> limit = std::nullopt);

}  // namespace mosaic
