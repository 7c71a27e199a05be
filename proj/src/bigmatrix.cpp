#include "mosaic/bigmatrix.hpp"

#include <cstdlib>
#include <stdexcept>
#include <thread>

namespace mosaic {

BigMatrix::BigMatrix(int dim) : dim_(dim) {
    if (dim < 1) throw std::invalid_argument("matrix dimension must be positive");
    entries_.resize(std::size_t(dim) * dim);  // mpz default-initializes to 0
}

BigMatrix BigMatrix::identity(int dim) {
    BigMatrix m(dim);
    for (int i = 0; i < dim; ++i) m.at(i, i) = 1;
    return m;
}

BigInt entry_sum(const BigMatrix& m) {
    BigInt s = 0;
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j) s += m.at(i, j);
    return s;
}

BigMatrix mat_add(const BigMatrix& a, const BigMatrix& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("matrix dimension mismatch in add");
    BigMatrix c(a.dim());
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) c.at(i, j) = a.at(i, j) + b.at(i, j);
    return c;
}

unsigned worker_threads() {
    static const unsigned cached = [] {
        if (const char* env = std::getenv("MOSAIC_THREADS")) {
            char* end = nullptr;
            long v = std::strtol(env, &end, 10);
            if (end && *end == '\0' && v > 0 && v <= 1024) return unsigned(v);
        }
        unsigned hw = std::thread::hardware_concurrency();
        return hw ? hw : 1u;
    }();
    return cached;
}

namespace {

// One contiguous band of output rows; i-k-j order so each row of b is
// streamed once per nonzero a entry, accumulating with mpz_addmul.
void mul_rows(const BigMatrix& a, const BigMatrix& b, BigMatrix& c, int row_begin, int row_end) {
    const int n = a.dim();
    for (int i = row_begin; i < row_end; ++i)
        for (int k = 0; k < n; ++k) {
            const BigInt& aik = a.at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < n; ++j) {
                const BigInt& bkj = b.at(k, j);
                if (bkj != 0) mpz_addmul(c.at(i, j).get_mpz_t(), aik.get_mpz_t(), bkj.get_mpz_t());
            }
        }
}

}  // namespace

BigMatrix mat_mul(const BigMatrix& a, const BigMatrix& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("matrix dimension mismatch in mul");
    const int n = a.dim();
    BigMatrix c(n);
    unsigned workers = worker_threads();
    if (workers > unsigned(n)) workers = unsigned(n);
    if (workers <= 1 || n < 64) {
        mul_rows(a, b, c, 0, n);
        return c;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned t = 0; t < workers; ++t) {
        int begin = int(std::size_t(n) * t / workers);
        int end = int(std::size_t(n) * (t + 1) / workers);
        pool.emplace_back(mul_rows, std::cref(a), std::cref(b), std::ref(c), begin, end);
    }
    for (auto& th : pool) th.join();
    return c;
}

BigMatrix mat_pow(const BigMatrix& a, unsigned long s, PowMethod method) {
    BigMatrix r = BigMatrix::identity(a.dim());
    if (method == PowMethod::iterative) {
        for (unsigned long i = 0; i < s; ++i) r = mat_mul(r, a);
        return r;
    }
    BigMatrix base = a;
    while (s > 0) {
        if (s & 1) r = mat_mul(r, base);
        s >>= 1;
        if (s) base = mat_mul(base, base);
    }
    return r;
}

}  // namespace mosaic
