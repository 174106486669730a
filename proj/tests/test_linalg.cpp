#include <numeric>
#include <random>

#include "doctest.h"
#include "oracle.hpp"

#include "frobcheck/linalg.hpp"
#include "frobcheck/matrix.hpp"

using frobcheck::cokernel;
using frobcheck::CokernelResult;
using frobcheck::inverse;
using frobcheck::is_iso;
using frobcheck::kron;
using frobcheck::mat_mul;
using frobcheck::rank;
using frobcheck::Rational;
using frobcheck::RatMatrix;
using frobcheck::row_reduce;
using frobcheck::RrefResult;

TEST_CASE("rank agrees with an independent elimination") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 60; ++trial) {
        std::uniform_int_distribution<size_t> dim(1, 6);
        const size_t r = dim(rng), c = dim(rng);
        std::uniform_int_distribution<size_t> kd(0, std::min(r, c));
        const RatMatrix m = oracle::random_low_rank(rng, r, c, kd(rng));
        CHECK(rank(m) == oracle::naive_rank(m));
    }
}

TEST_CASE("row_reduce produces a reduced echelon form") {
    std::mt19937 rng(29);
    const RatMatrix m = oracle::random_low_rank(rng, 5, 7, 3);
    const RrefResult rr = row_reduce(m);
    CHECK(rr.rank == rr.pivot_cols.size());
    CHECK(rr.rank == oracle::naive_rank(m));
    for (size_t k = 0; k < rr.pivot_cols.size(); ++k) {
        const size_t c = rr.pivot_cols[k];
        for (size_t i = 0; i < rr.rref.rows(); ++i)
            CHECK(rr.rref.at(i, c) == (i == k ? Rational(1) : Rational(0)));
        if (k > 0) CHECK(rr.pivot_cols[k - 1] < c);
    }
    // rows below the rank are zero
    for (size_t i = rr.rank; i < rr.rref.rows(); ++i)
        for (size_t j = 0; j < rr.rref.cols(); ++j) CHECK(rr.rref.at(i, j).is_zero());
}

TEST_CASE("inverse is exact and two-sided") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 20; ++trial) {
        RatMatrix m = oracle::random_matrix(rng, 4, 4);
        const auto inv = inverse(m);
        if (!inv) {
            CHECK(rank(m) < 4);
            continue;
        }
        CHECK(mat_mul(m, *inv).is_identity());
        CHECK(mat_mul(*inv, m).is_identity());
    }
}

TEST_CASE("inverse rejects the singular and the non-square") {
    CHECK_FALSE(inverse(RatMatrix(2, 3)).has_value());
    RatMatrix sing(2, 2);
    sing.at(0, 0) = Rational(1);
    sing.at(1, 0) = Rational(2);
    CHECK_FALSE(inverse(sing).has_value());
    CHECK_FALSE(is_iso(sing));
    CHECK(is_iso(RatMatrix::identity(5)));
}

TEST_CASE("cokernel postconditions hold on random low-rank maps") {
    std::mt19937 rng(37);
    for (int trial = 0; trial < 40; ++trial) {
        std::uniform_int_distribution<size_t> dim(1, 6);
        const size_t r = dim(rng), c = dim(rng);
        std::uniform_int_distribution<size_t> kd(0, std::min(r, c));
        const RatMatrix f = oracle::random_low_rank(rng, r, c, kd(rng));
        const CokernelResult ck = cokernel(f);
        const size_t q = r - oracle::naive_rank(f);
        CHECK(ck.projection.rows() == q);
        CHECK(ck.projection.cols() == r);
        CHECK(mat_mul(ck.projection, f).is_zero());
        CHECK(mat_mul(ck.projection, ck.section).is_identity());
        CHECK(rank(ck.projection) == q);
    }
}

TEST_CASE("cokernel is deterministic and stable under column moves") {
    std::mt19937 rng(41);
    const RatMatrix f = oracle::random_low_rank(rng, 6, 5, 3);
    const CokernelResult a = cokernel(f);
    const CokernelResult b = cokernel(f);
    CHECK(a.projection == b.projection);
    CHECK(a.section == b.section);

    // permuting the relation columns changes nothing about the span, so the
    // two projections differ by an invertible change of basis
    RatMatrix g(f.rows(), f.cols());
    for (size_t j = 0; j < f.cols(); ++j)
        for (size_t i = 0; i < f.rows(); ++i) g.at(i, (j + 2) % f.cols()) = f.at(i, j);
    const CokernelResult c = cokernel(g);
    REQUIRE(c.projection.rows() == a.projection.rows());
    const RatMatrix t = mat_mul(c.projection, a.section);
    CHECK(is_iso(t));
    CHECK(mat_mul(t, a.projection) == c.projection);
}

TEST_CASE("cokernel of a surjection is zero-dimensional") {
    const CokernelResult ck = cokernel(RatMatrix::identity(3));
    CHECK(ck.projection.rows() == 0);
    CHECK(mat_mul(ck.projection, ck.section).is_identity());
}

TEST_CASE("cokernel of the zero map is the identity quotient") {
    const CokernelResult ck = cokernel(RatMatrix::zero(3, 2));
    CHECK(ck.projection.rows() == 3);
    CHECK(mat_mul(ck.projection, ck.section).is_identity());
    CHECK(is_iso(ck.projection));
}
