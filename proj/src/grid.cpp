#include "mosaic/grid.hpp"

#include <charconv>
#include <stdexcept>

namespace mosaic {

namespace {

void check_dims(int rows, int cols) {
    if (rows < 1 || cols < 1)
        throw std::invalid_argument("mosaic dimensions must be at least 1x1, got " +
                                    std::to_string(rows) + "x" + std::to_string(cols));
}

}  // namespace

Mosaic::Mosaic(int rows, int cols) : rows_(rows), cols_(cols) {
    check_dims(rows, cols);
    cells_.assign(std::size_t(rows) * cols, 0);
}

Mosaic::Mosaic(int rows, int cols, std::vector<std::uint8_t> cells)
    : rows_(rows), cols_(cols), cells_(std::move(cells)) {
    check_dims(rows, cols);
    if (cells_.size() != std::size_t(rows) * cols)
        throw std::invalid_argument("cell count does not match dimensions");
    for (auto c : cells_)
        if (c >= kTileCount) throw std::invalid_argument("tile index outside 0..10");
}

int Mosaic::at(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
        throw std::out_of_range("mosaic cell out of range");
    return cells_[std::size_t(r) * cols_ + c];
}

void Mosaic::set(int r, int c, int tile_index) {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
        throw std::out_of_range("mosaic cell out of range");
    tile(tile_index);  // bounds check
    cells_[std::size_t(r) * cols_ + c] = static_cast<std::uint8_t>(tile_index);
}

bool is_suitably_connected(const Mosaic& m) {
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) {
            ConnectionProfile p = profile(m.at(r, c));
            if (c + 1 < m.cols() && p.east() != profile(m.at(r, c + 1)).west()) return false;
            if (r + 1 < m.rows() && p.south() != profile(m.at(r + 1, c)).north()) return false;
        }
    return true;
}

bool is_knot_mosaic(const Mosaic& m) {
    if (!is_suitably_connected(m)) return false;
    for (int c = 0; c < m.cols(); ++c)
        if (profile(m.at(0, c)).north() || profile(m.at(m.rows() - 1, c)).south()) return false;
    for (int r = 0; r < m.rows(); ++r)
        if (profile(m.at(r, 0)).west() || profile(m.at(r, m.cols() - 1)).east()) return false;
    return true;
}

Mosaic transpose(const Mosaic& m) {
    Mosaic t(m.cols(), m.rows());
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) t.set(c, r, transposed_tile(m.at(r, c)));
    return t;
}

Mosaic concat_horizontal(const Mosaic& a, const Mosaic& b) {
    if (a.rows() != b.rows())
        throw std::invalid_argument("horizontal concat needs equal row counts, got " +
                                    std::to_string(a.rows()) + " and " + std::to_string(b.rows()));
    if (!is_knot_mosaic(a) || !is_knot_mosaic(b))
        throw std::invalid_argument("concat requires knot mosaics");
    Mosaic out(a.rows(), a.cols() + b.cols());
    for (int r = 0; r < a.rows(); ++r) {
        for (int c = 0; c < a.cols(); ++c) out.set(r, c, a.at(r, c));
        for (int c = 0; c < b.cols(); ++c) out.set(r, a.cols() + c, b.at(r, c));
    }
    return out;
}

Mosaic concat_vertical(const Mosaic& a, const Mosaic& b) {
    if (a.cols() != b.cols())
        throw std::invalid_argument("vertical concat needs equal column counts, got " +
                                    std::to_string(a.cols()) + " and " + std::to_string(b.cols()));
    if (!is_knot_mosaic(a) || !is_knot_mosaic(b))
        throw std::invalid_argument("concat requires knot mosaics");
    Mosaic out(a.rows() + b.rows(), a.cols());
    for (int r = 0; r < a.rows(); ++r)
        for (int c = 0; c < a.cols(); ++c) out.set(r, c, a.at(r, c));
    for (int r = 0; r < b.rows(); ++r)
        for (int c = 0; c < b.cols(); ++c) out.set(a.rows() + r, c, b.at(r, c));
    return out;
}

Mosaic parse_mosaic(std::string_view text) {
    std::vector<std::uint8_t> cells;
    int rows = 0, cols = -1;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        std::string_view line = text.substr(pos, eol - pos);
        ++line_no;
        pos = eol + 1;
        if (pos > text.size() && line.empty()) break;  // no trailing fragment after final newline

        if (!line.empty() && line.front() == '#') continue;

        // Tokenize on spaces/tabs/CR; a line with no tokens is a separator.
        int row_cols = 0;
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
            if (i >= line.size()) break;
            std::size_t start = i;
            while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
            std::string_view tok = line.substr(start, i - start);
            ++row_cols;
            int col_no = row_cols;

            int value = -1;
            auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
            if (ec != std::errc{} || ptr != tok.data() + tok.size())
                throw ParseError("invalid tile index '" + std::string(tok) + "'", line_no, col_no);
            if (value < 0 || value >= kTileCount)
                throw ParseError("tile index " + std::to_string(value) + " outside 0..10",
                                 line_no, col_no);
            if (cols >= 0 && col_no > cols)
                throw ParseError("row has more than " + std::to_string(cols) + " tiles",
                                 line_no, col_no);
            cells.push_back(static_cast<std::uint8_t>(value));
        }
        if (row_cols == 0) continue;
        if (cols < 0)
            cols = row_cols;
        else if (row_cols < cols)
            throw ParseError("row has " + std::to_string(row_cols) + " tiles, expected " +
                                 std::to_string(cols),
                             line_no, row_cols + 1);
        ++rows;
    }
    if (rows == 0) throw ParseError("no tile rows", 1, 1);
    return Mosaic(rows, cols, std::move(cells));
}

std::string render_mosaic(const Mosaic& m, bool pretty) {
    std::string out;
    for (int r = 0; r < m.rows(); ++r) {
        for (int c = 0; c < m.cols(); ++c) {
            if (pretty) {
                out += tile(m.at(r, c)).glyph;
            } else {
                if (c) out += ' ';
                out += std::to_string(m.at(r, c));
            }
        }
        out += '\n';
    }
    return out;
}

}  // namespace mosaic
