#include "mosaic/tile.hpp"

#include <stdexcept>

namespace mosaic {

namespace {

constexpr ConnectionProfile prof(bool n, bool e, bool s, bool w) {
    return ConnectionProfile::of(n, e, s, w);
}

constexpr std::array<Tile, kTileCount> kTiles{{
    {0, prof(0, 0, 0, 0), TileKind::blank, OverStrand::none, "·"},
    {1, prof(0, 0, 1, 1), TileKind::arc, OverStrand::none, "┐"},
    {2, prof(0, 1, 1, 0), TileKind::arc, OverStrand::none, "┌"},
    {3, prof(1, 1, 0, 0), TileKind::arc, OverStrand::none, "└"},
    {4, prof(1, 0, 0, 1), TileKind::arc, OverStrand::none, "┘"},
    {5, prof(0, 1, 0, 1), TileKind::line, OverStrand::none, "─"},
    {6, prof(1, 0, 1, 0), TileKind::line, OverStrand::none, "│"},
    {7, prof(1, 1, 1, 1), TileKind::double_arc, OverStrand::none, ")"},
    {8, prof(1, 1, 1, 1), TileKind::double_arc, OverStrand::none, "("},
    {9, prof(1, 1, 1, 1), TileKind::crossing, OverStrand::vertical, "╫"},
    {10, prof(1, 1, 1, 1), TileKind::crossing, OverStrand::horizontal, "╪"},
}};

// Diagonal reflection swaps N<->W and S<->E: the SW arc maps to the NE arc,
// the lines swap, the double arcs and crossings each map within their pair.
constexpr std::array<int, kTileCount> kTransposed{0, 3, 2, 1, 4, 6, 5, 7, 8, 10, 9};

}  // namespace

const std::array<Tile, kTileCount>& tiles() { return kTiles; }

const Tile& tile(int index) {
    if (index < 0 || index >= kTileCount)
        throw std::out_of_range("tile index " + std::to_string(index) + " outside 0..10");
    return kTiles[index];
}

ConnectionProfile profile(int index) { return tile(index).profile; }

int tile_weight(ConnectionProfile p) {
    switch (p.point_count()) {
        case 0: return 1;
        case 2: return 1;
        case 4: return 4;
        default: return 0;
    }
}

std::array<int, 16> profile_weights() {
    std::array<int, 16> w{};
    for (int bits = 0; bits < 16; ++bits)
        w[bits] = tile_weight(ConnectionProfile{static_cast<std::uint8_t>(bits)});
    return w;
}

int transposed_tile(int index) {
    tile(index);  // bounds check
    return kTransposed[index];
}

}  // namespace mosaic
