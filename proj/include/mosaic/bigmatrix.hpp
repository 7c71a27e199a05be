#pragma once

#include <gmpxx.h>

#include <vector>

namespace mosaic {

using BigInt = mpz_class;
using Rational = mpq_class;

// Dense square matrix of big integers.
class BigMatrix {
public:
    explicit BigMatrix(int dim);
    static BigMatrix identity(int dim);

    int dim() const { return dim_; }

    BigInt& at(int i, int j) { return entries_[std::size_t(i) * dim_ + j]; }
    const BigInt& at(int i, int j) const { return entries_[std::size_t(i) * dim_ + j]; }

    friend bool operator==(const BigMatrix&, const BigMatrix&) = default;

private:
    int dim_;
    std::vector<BigInt> entries_;
};

BigInt entry_sum(const BigMatrix& m);

BigMatrix mat_add(const BigMatrix& a, const BigMatrix& b);

// Throws std::invalid_argument on dimension mismatch. Rows of the product are
// computed in parallel when worker_threads() > 1; the result is identical
// either way.
BigMatrix mat_mul(const BigMatrix& a, const BigMatrix& b);

enum class PowMethod { iterative, binary };

// a^s, with a^0 = identity. Iterated multiplication by default; binary
// exponentiation squares the (dense, fast-growing) matrix and is usually
// slower here, but available for cross-checks.
BigMatrix mat_pow(const BigMatrix& a, unsigned long s, PowMethod method = PowMethod::iterative);

// Worker count for mat_mul: the MOSAIC_THREADS environment variable if set to
// a positive integer, otherwise the hardware concurrency (at least 1).
unsigned worker_threads();

}  // namespace mosaic
