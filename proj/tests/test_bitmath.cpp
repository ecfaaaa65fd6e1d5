#include "doctest.h"

#include <random>

#include "orcas/bitmath.hpp"
#include "test_util.hpp"

using namespace orcas;

TEST_CASE("binary expansion is LSB-first") {
    CHECK(binary_expansion(1, 3) == BitVector{1, 0, 0});
    CHECK(binary_expansion(6, 3) == BitVector{0, 1, 1});
    CHECK(binary_expansion(0, 2) == BitVector{0, 0});
    CHECK_THROWS_AS(binary_expansion(8, 3), std::invalid_argument);
}

TEST_CASE("bit_length") {
    CHECK(bit_length(0) == 0);
    CHECK(bit_length(7) == 3);
    CHECK(bit_length(8) == 4);
    CHECK(bit_length(12) == 4);
}

TEST_CASE("expansion matrix") {
    BitMatrix m = expansion_matrix(2, 3);
    CHECK(m.rows() == 2);
    CHECK(m.cols() == 3);
    // columns (1,0), (0,1), (1,1)
    CHECK(m.get(0, 0));
    CHECK_FALSE(m.get(1, 0));
    CHECK_FALSE(m.get(0, 1));
    CHECK(m.get(1, 1));
    CHECK(m.get(0, 2));
    CHECK(m.get(1, 2));

    BitMatrix m37 = expansion_matrix(3, 7);
    CHECK(gf2_rank(m37) == 3);
    // every nonzero 3-bit pattern appears exactly once
    std::set<int> seen;
    for (std::size_t c = 0; c < 7; ++c) {
        int pat = m37.get(0, c) | (m37.get(1, c) << 1) | (m37.get(2, c) << 2);
        seen.insert(pat);
    }
    CHECK(seen.size() == 7);
    CHECK(seen.count(0) == 0);

    CHECK_THROWS_AS(expansion_matrix(3, 8), std::invalid_argument);
}

TEST_CASE("rank, nullspace, matvec") {
    BitMatrix spc(1, 2);
    spc.set(0, 0, true);
    spc.set(0, 1, true);
    BitMatrix ns = gf2_nullspace(spc);
    REQUIRE(ns.rows() == 1);
    CHECK(ns.row(0) == BitVector{1, 1});

    CHECK(hamming_weight(BitVector{1, 0, 1, 1}) == 3);

    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        std::size_t rows = 1 + rng() % 6, cols = rows + rng() % 8;
        BitMatrix m(rows, cols);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rng() & 1u);
        BitMatrix ker = gf2_nullspace(m);
        CHECK(ker.rows() == cols - gf2_rank(m));
        CHECK(gf2_rank(ker) == ker.rows());
        for (std::size_t r = 0; r < ker.rows(); ++r)
            CHECK(gf2_matvec(m, ker.row(r)).is_zero());
    }
}

TEST_CASE("vecmat/matvec composition G H^T = 0") {
    BitMatrix g = expansion_matrix(3, 7);  // simplex generator
    BitMatrix h = gf2_nullspace(g);        // Hamming parity check
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        BitVector msg = test::random_bits(3, rng);
        BitVector cw = gf2_vecmat(msg, g);
        CHECK(gf2_matvec(h, cw).is_zero());
    }
}
