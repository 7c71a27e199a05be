#pragma once

#include <stdexcept>
#include <string>

namespace mosaic {

// Input text could not be parsed as a tile grid. Reports 1-based line/column.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, int line, int column)
        : std::runtime_error(msg + " (line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ")"),
          line_(line),
          column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

// A requested computation exceeds a configured size limit (grid area,
// column count, matrix dimension, ...).
class SizeLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Two independent computations of the same quantity disagreed.
class CrossCheckError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace mosaic
