#include "mosaic/count.hpp"

#include <stdexcept>
#include <string>
#include <utility>

#include "mosaic/errors.hpp"
#include "mosaic/oracle.hpp"
#include "mosaic/transfer.hpp"

namespace mosaic {

std::string_view to_string(CountMethod m) {
    switch (m) {
        case CountMethod::closed_form: return "closed-form";
        case CountMethod::backtrack: return "backtrack";
        case CountMethod::frontier: return "frontier";
        case CountMethod::transfer: return "transfer";
    }
    return "?";
}

CountResult count_auto(int m, int n) {
    if (m < 1 || n < 1)
        throw std::domain_error("grid dimensions must be at least 1x1, got " + std::to_string(m) +
                                "x" + std::to_string(n));
    bool transposed = false;
    if (n < m) {
        std::swap(m, n);
        transposed = true;
    }
    if (m <= 2) {
        BigInt value = (m == 1) ? BigInt(1) : BigInt(BigInt(1) << (n - 1));
        if (n <= 12) {
            BigInt check = count_frontier(m, n);
            if (check != value)
                throw CrossCheckError("closed form disagrees with frontier DP at " +
                                      std::to_string(m) + "x" + std::to_string(n) + ": " +
                                      value.get_str() + " vs " + check.get_str());
        }
        return {std::move(value), CountMethod::closed_form, transposed};
    }
    if (n <= kFrontierColsLimit)
        return {count_frontier(m, n), CountMethod::frontier, transposed};
    return {count_transfer(m, n), CountMethod::transfer, transposed};
}

}  // namespace mosaic
