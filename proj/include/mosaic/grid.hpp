#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "mosaic/errors.hpp"
#include "mosaic/tile.hpp"

namespace mosaic {

// An m x n grid of tile indices, row-major. Rows and columns are >= 1.
class Mosaic {
public:
    Mosaic(int rows, int cols);  // all blank
    Mosaic(int rows, int cols, std::vector<std::uint8_t> cells);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    int at(int r, int c) const;
    void set(int r, int c, int tile_index);

    const std::vector<std::uint8_t>& cells() const { return cells_; }

    friend bool operator==(const Mosaic&, const Mosaic&) = default;

private:
    int rows_;
    int cols_;
    std::vector<std::uint8_t> cells_;
};

// Every pair of adjacent tiles agrees on whether their shared edge midpoint
// is a connection point.
bool is_suitably_connected(const Mosaic& m);

// Suitably connected and no connection point on the outer boundary.
bool is_knot_mosaic(const Mosaic& m);

// Reflection across the main diagonal: an m x n mosaic becomes n x m, each
// tile replaced by its diagonal mirror. Preserves both predicates above.
Mosaic transpose(const Mosaic& m);

// Glue side by side (equal row counts) or stacked (equal column counts).
// Both inputs must be knot mosaics; the result then is one too.
// Throws std::invalid_argument on dimension mismatch or non-knot input.
Mosaic concat_horizontal(const Mosaic& a, const Mosaic& b);
Mosaic concat_vertical(const Mosaic& a, const Mosaic& b);

// Text format: one row per line, whitespace-separated tile indices 0..10,
// '#' starts a comment line, blank lines are ignored. All rows must have the
// same length. Throws ParseError with 1-based line/column on bad input.
Mosaic parse_mosaic(std::string_view text);

// Inverse of parse_mosaic (canonical spacing). With pretty=true renders one
// glyph per tile instead: e.g. a 2x2 circle becomes "┌┐\n└┘\n".
std::string render_mosaic(const Mosaic& m, bool pretty = false);

}  // namespace mosaic
