#pragma once

#include <array>
#include <cstdint>
#include <string_view>

namespace mosaic {

// Which edge midpoints of a tile are endpoints of the curves drawn on it.
// Packed into 4 bits: N = bit 3, E = bit 2, S = bit 1, W = bit 0.
struct ConnectionProfile {
    std::uint8_t bits = 0;

    static constexpr ConnectionProfile of(bool n, bool e, bool s, bool w) {
        return {static_cast<std::uint8_t>(n << 3 | e << 2 | s << 1 | int(w))};
    }

    constexpr bool north() const { return bits & 8; }
    constexpr bool east() const { return bits & 4; }
    constexpr bool south() const { return bits & 2; }
    constexpr bool west() const { return bits & 1; }

    constexpr int point_count() const {
        return (bits & 1) + (bits >> 1 & 1) + (bits >> 2 & 1) + (bits >> 3 & 1);
    }

    friend constexpr bool operator==(ConnectionProfile, ConnectionProfile) = default;
};

enum class TileKind : std::uint8_t { blank, arc, line, double_arc, crossing };

// For crossing tiles, which strand is drawn on top.
enum class OverStrand : std::uint8_t { none, vertical, horizontal };

struct Tile {
    std::uint8_t index;
    ConnectionProfile profile;
    TileKind kind;
    OverStrand over;
    std::string_view glyph;  // single display character, UTF-8
};

inline constexpr int kTileCount = 11;

// The canonical tile table, indexed 0..10:
//   0 blank, 1..4 quarter arcs (SW, SE, NE, NW), 5 horizontal line,
//   6 vertical line, 7 double arc SW+NE, 8 double arc NW+SE,
//   9 crossing with the vertical strand on top, 10 with the horizontal on top.
const std::array<Tile, kTileCount>& tiles();

// Bounds-checked lookup; throws std::out_of_range for index outside 0..10.
const Tile& tile(int index);

ConnectionProfile profile(int index);

// Number of tiles carrying the given profile: 1 for the empty profile, 1 for
// each of the six two-point profiles, 4 for the full profile, 0 otherwise
// (no tile has an odd number of connection points).
int tile_weight(ConnectionProfile p);

// tile_weight for all 16 profiles, indexed by ConnectionProfile::bits.
std::array<int, 16> profile_weights();

// Index of the tile obtained by reflecting across the main (NW-SE) diagonal,
// i.e. swapping the N/W and S/E roles. An involution on 0..10.
int transposed_tile(int index);

}  // namespace mosaic
