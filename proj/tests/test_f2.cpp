#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "simbound/f2.hpp"

#include "helpers.hpp"

using namespace simbound;
using namespace simbound::f2;

TEST_CASE("bit vector basics") {
    F2Vector v(130);
    REQUIRE(v.size() == 130);
    REQUIRE_FALSE(v.any());
    v.set(0, true);
    v.set(64, true);
    v.set(129, true);
    REQUIRE(v.get(64));
    REQUIRE(v.popcount() == 3);
    REQUIRE(v.leading() == 0);
    v.flip(0);
    REQUIRE(v.leading() == 64);
    F2Vector w(130);
    w.set(64, true);
    v ^= w;
    REQUIRE(v.popcount() == 1);
    REQUIRE(v.leading() == 129);
    REQUIRE_THROWS_AS(v ^= F2Vector(7), Error);
}

TEST_CASE("from_bits round trip") {
    auto v = F2Vector::from_bits({1, 0, 0, 1, 1});
    REQUIRE(v.size() == 5);
    REQUIRE(v.get(0));
    REQUIRE_FALSE(v.get(1));
    REQUIRE(v.get(4));
    REQUIRE(v.popcount() == 3);
}

TEST_CASE("rank on fixed matrices") {
    F2Matrix m(3, 4);
    // rows: 1100, 0110, 1010 -> third = first + second
    m.set(0, 0, true); m.set(0, 1, true);
    m.set(1, 1, true); m.set(1, 2, true);
    m.set(2, 0, true); m.set(2, 2, true);
    REQUIRE(rank(m) == 2);
    REQUIRE(rank(F2Matrix(0, 5)) == 0);
    REQUIRE(rank(F2Matrix(5, 0)) == 0);
}

TEST_CASE("rank matches the unpacked oracle") {
    std::mt19937_64 rng(12345);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t rows = rng() % 13, cols = rng() % 15;
        auto m = testutil::random_matrix(rng, rows, cols);
        REQUIRE(rank(m) == testutil::naive_rank(testutil::unpack(m)));
    }
}

TEST_CASE("kernel basis spans the kernel") {
    std::mt19937_64 rng(777);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t rows = rng() % 10, cols = 1 + rng() % 12;
        auto m = testutil::random_matrix(rng, rows, cols);
        auto basis = kernel_basis(m);
        REQUIRE(basis.size() == cols - rank(m));
        SpanBasis span(cols);
        for (const auto& x : basis) {
            REQUIRE_FALSE(m.multiply(x).any());
            REQUIRE(span.insert(x));
        }
        // random kernel combinations stay in the span
        for (int k = 0; k < 5 && !basis.empty(); ++k) {
            F2Vector combo(cols);
            for (const auto& x : basis)
                if (rng() & 1) combo ^= x;
            REQUIRE(span.contains(combo));
        }
    }
}

TEST_CASE("solve agrees with the rank oracle and self-verifies") {
    std::mt19937_64 rng(4242);
    for (int trial = 0; trial < 80; ++trial) {
        std::size_t rows = rng() % 11, cols = rng() % 12;
        auto m = testutil::random_matrix(rng, rows, cols);
        // consistent system: b = M x for random x
        auto x = testutil::random_vector(rng, cols);
        auto b = m.multiply(x);
        auto sol = solve(m, b);
        REQUIRE(sol.has_value());
        REQUIRE(m.multiply(*sol) == b);
        // arbitrary rhs: solvability matches the independent oracle
        auto b2 = testutil::random_vector(rng, rows);
        auto sol2 = solve(m, b2);
        REQUIRE(sol2.has_value() == testutil::naive_solvable(m, b2));
        if (sol2) REQUIRE(m.multiply(*sol2) == b2);
    }
    REQUIRE_THROWS_AS(solve(F2Matrix(3, 2), F2Vector(4)), Error);
}

TEST_CASE("in_span basics") {
    F2Vector a = F2Vector::from_bits({1, 1, 0});
    F2Vector b = F2Vector::from_bits({0, 1, 1});
    F2Vector c = F2Vector::from_bits({1, 0, 1});
    F2Vector d = F2Vector::from_bits({1, 1, 1});
    REQUIRE(in_span({a, b}, c));
    REQUIRE_FALSE(in_span({a, b}, d));
    REQUIRE(in_span({}, F2Vector(3)));
    REQUIRE_FALSE(in_span({}, a));
}

TEST_CASE("matrix product and transpose") {
    std::mt19937_64 rng(99);
    auto a = testutil::random_matrix(rng, 5, 7);
    auto b = testutil::random_matrix(rng, 7, 4);
    auto ab = a * b;
    REQUIRE(ab.rows() == 5);
    REQUIRE(ab.cols() == 4);
    for (std::size_t r = 0; r < 5; ++r)
        for (std::size_t c = 0; c < 4; ++c) {
            int expect = 0;
            for (std::size_t k = 0; k < 7; ++k) expect ^= (a.get(r, k) && b.get(k, c));
            REQUIRE(ab.get(r, c) == (expect == 1));
        }
    auto at = a.transposed();
    for (std::size_t r = 0; r < 5; ++r)
        for (std::size_t c = 0; c < 7; ++c) REQUIRE(a.get(r, c) == at.get(c, r));
}
