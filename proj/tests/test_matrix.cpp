#include "doctest.h"
#include "mosaic/transfer.hpp"

#include <random>
#include <stdexcept>

#include "mosaic/errors.hpp"

using namespace mosaic;

namespace {

BigMatrix seed_m() {
    BigMatrix m(2);
    m.at(0, 0) = 1; m.at(0, 1) = 1; m.at(1, 0) = 1; m.at(1, 1) = 4;
    return m;
}

BigMatrix random_matrix(std::mt19937& rng, int dim) {
    std::uniform_int_distribution<int> entry(0, 9);
    BigMatrix m(dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) m.at(i, j) = entry(rng);
    return m;
}

bool is_power_of_four(const BigInt& v) {
    if (v <= 0) return false;
    mpz_srcptr z = v.get_mpz_t();
    if (mpz_popcount(z) != 1) return false;
    return mpz_scan1(z, 0) % 2 == 0;
}

}  // namespace

TEST_CASE("matrix basics") {
    CHECK_THROWS_AS(BigMatrix(0), std::invalid_argument);
    BigMatrix id = BigMatrix::identity(3);
    CHECK(entry_sum(id) == 3);
    CHECK(id.at(1, 1) == 1);
    CHECK(id.at(0, 1) == 0);

    BigMatrix m = seed_m();
    CHECK(entry_sum(m) == 7);
    CHECK(entry_sum(mat_add(m, m)) == 14);
    CHECK_THROWS_AS(mat_add(m, id), std::invalid_argument);
    CHECK_THROWS_AS(mat_mul(m, id), std::invalid_argument);
}

TEST_CASE("mat_mul and mat_pow") {
    BigMatrix m = seed_m();
    BigMatrix m2 = mat_mul(m, m);
    CHECK(m2.at(0, 0) == 2);
    CHECK(m2.at(0, 1) == 5);
    CHECK(m2.at(1, 0) == 5);
    CHECK(m2.at(1, 1) == 17);
    CHECK(entry_sum(m2) == 29);

    CHECK(mat_pow(m, 0) == BigMatrix::identity(2));
    CHECK(mat_pow(m, 1) == m);
    CHECK(mat_pow(m, 2) == m2);

    std::mt19937 rng(42);
    std::uniform_int_distribution<int> dim_dist(1, 5), exp_dist(0, 4);
    for (int iter = 0; iter < 50; ++iter) {
        BigMatrix a = random_matrix(rng, dim_dist(rng));
        unsigned long s = exp_dist(rng), t = exp_dist(rng);
        CHECK(mat_pow(a, s, PowMethod::binary) == mat_pow(a, s, PowMethod::iterative));
        CHECK(mat_pow(a, s + t) == mat_mul(mat_pow(a, s), mat_pow(a, t)));
    }
}

TEST_CASE("worker_threads is at least one") { CHECK(worker_threads() >= 1); }

TEST_CASE("transfer pair seeds and doubling step") {
    XOPair p1 = build_xo(1);
    CHECK(p1.x.dim() == 2);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) CHECK(p1.x.at(i, j) == 1);
    CHECK(p1.o.at(1, 1) == 4);
    CHECK(entry_sum(p1.x) == 4);
    CHECK(entry_sum(p1.o) == 7);
    CHECK(entry_sum(mat_add(p1.x, p1.o)) == 11);

    XOPair p2 = build_xo(2);
    const int x2[4][4] = {{1, 1, 1, 1}, {1, 1, 1, 4}, {1, 1, 1, 1}, {1, 4, 1, 1}};
    const int o2[4][4] = {{1, 1, 1, 1}, {1, 4, 1, 1}, {1, 1, 4, 4}, {1, 1, 4, 16}};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            CHECK(p2.x.at(i, j) == x2[i][j]);
            CHECK(p2.o.at(i, j) == o2[i][j]);
        }
}

TEST_CASE("transfer pair entries are powers of four, O peaking at 4^k") {
    for (int k = 1; k <= 6; ++k) {
        XOPair p = build_xo(k);
        BigInt target;
        mpz_ui_pow_ui(target.get_mpz_t(), 4, static_cast<unsigned long>(k));
        BigInt max_entry = 0;
        for (int i = 0; i < p.o.dim(); ++i)
            for (int j = 0; j < p.o.dim(); ++j) {
                CHECK(is_power_of_four(p.x.at(i, j)));
                CHECK(is_power_of_four(p.o.at(i, j)));
                if (p.o.at(i, j) > max_entry) max_entry = p.o.at(i, j);
            }
        CHECK(max_entry == target);
    }
}

TEST_CASE("build_xo size limits") {
    CHECK_THROWS_AS(build_xo(0), SizeLimitError);
    CHECK_THROWS_AS(build_xo(17), SizeLimitError);
    CHECK_THROWS_AS(build_xo(3, 2), SizeLimitError);
    CHECK(build_xo(3, 3).x.dim() == 8);
}

TEST_CASE("count_transfer on known grids") {
    CHECK(count_transfer(3, 2) == 4);
    CHECK(count_transfer(3, 3) == 22);
    CHECK(count_transfer(3, 4) == 130);
    CHECK(count_transfer(3, 5) == 778);
    CHECK(count_transfer(4, 4) == 2594);
    CHECK(count_transfer(4, 5) == 54226);
    CHECK(count_transfer(5, 5) == 4183954);
    CHECK(count_transfer(5, 6) == BigInt("331745962"));
    CHECK(count_transfer(6, 7) == BigInt("31507552821550"));

    // Two-column grids reduce to the 0th power: 2^(m-1) mosaics.
    for (int m = 3; m <= 10; ++m) {
        BigInt expected = BigInt(1) << (m - 1);
        CHECK(count_transfer(m, 2) == expected);
    }

    CHECK(count_transfer(5, 7, PowMethod::binary) == count_transfer(5, 7));

    CHECK_THROWS_AS(count_transfer(2, 5), std::domain_error);
    CHECK_THROWS_AS(count_transfer(3, 1), std::domain_error);
    CHECK_THROWS_AS(count_transfer(19, 3), SizeLimitError);
}
