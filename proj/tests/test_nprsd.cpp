#include "doctest.h"

#include "orcas/nprsd.hpp"
#include "test_util.hpp"

using namespace orcas;

TEST_CASE("macwilliams on known pairs") {
    // simplex (7,3) -> Hamming (7,4)
    WeightDistribution simplex(7);
    simplex.counts[0] = 1;
    simplex.counts[4] = 7;
    WeightDistribution hamming = macwilliams_dual(simplex, 7, 3);
    CHECK(hamming.counts[0] == 1);
    CHECK(hamming.counts[3] == 7);
    CHECK(hamming.counts[4] == 7);
    CHECK(hamming.counts[7] == 1);
    CHECK(hamming.total() == 16);

    // full space (4,4) -> trivial code
    WeightDistribution full(4);
    for (int w = 0; w <= 4; ++w) full.counts[w] = binomial(4, w);
    WeightDistribution trivial = macwilliams_dual(full, 4, 4);
    CHECK(trivial.counts[0] == 1);
    CHECK(trivial.total() == 1);

    // repetition (2,1) is self-dual
    WeightDistribution rep(2);
    rep.counts[0] = 1;
    rep.counts[2] = 1;
    CHECK(macwilliams_dual(rep, 2, 1) == rep);

    WeightDistribution bad(7);
    bad.counts[0] = 2;
    CHECK_THROWS_AS(macwilliams_dual(bad, 7, 3), std::invalid_argument);
}

TEST_CASE("macwilliams is an involution") {
    for (int n : {6, 9, 12, 15}) {
        for (int k = 1; k <= static_cast<int>(bit_length(n)); ++k) {
            WeightDistribution w = nprs_weight_distribution(n, k);
            WeightDistribution back = macwilliams_dual(macwilliams_dual(w, n, k), n, n - k);
            CHECK(back == w);
        }
    }
}

TEST_CASE("nprsd parameters from the (96,48) component codes") {
    CHECK(nprsd_code(12, 8).d == 3);
    CHECK(nprsd_code(12, 9).d == 2);
    CHECK(nprsd_code(24, 22).d == 2);
    CHECK(nprsd_weight_distribution(7, 4).min_distance() == 3);
    CHECK_THROWS_AS(nprsd_code(12, 5), std::invalid_argument);
}

TEST_CASE("nprsd weight distribution matches enumeration up to n = 16") {
    for (int n = 2; n <= 16; ++n) {
        for (int k = n - static_cast<int>(bit_length(n)); k <= n; ++k) {
            if (k < 1) continue;
            NprsdCode code = nprsd_code(n, k);
            CHECK(code.weights == test::enumerate_weights(code.generator));
            // generator really spans the nullspace of the parity check
            CHECK(gf2_rank(code.generator) == static_cast<std::size_t>(k));
            for (std::size_t r = 0; r < code.generator.rows(); ++r)
                if (code.parity_check.rows() > 0)
                    CHECK(gf2_matvec(code.parity_check, code.generator.row(r)).is_zero());
        }
    }
}

TEST_CASE("duplicated-column count is minimal in the high-rate interior") {
    // For n - bit_length(n) < k < n: d = 2 and A_2 = sum_i C(m_i, 2) with the
    // natural multiplicities, minimal over all assignments summing to n.
    for (int n : {9, 12, 14}) {
        for (int k = n - static_cast<int>(bit_length(n)) + 1; k < n; ++k) {
            NprsdCode code = nprsd_code(n, k);
            CHECK(code.d == 2);
            int m = n - k;
            std::int64_t patterns = mersenne(m);
            BigInt a2 = 0;
            for (int i = 1; i <= patterns; ++i) {
                int mult = column_multiplicity(n, m, i);
                a2 += BigInt(mult) * (mult - 1) / 2;
            }
            CHECK(code.weights.counts[2] == a2);
            // any assignment of n columns over the patterns has at least as
            // many duplicate pairs as the balanced one
            BigInt balanced = a2;
            int q = n / static_cast<int>(patterns), r = n % static_cast<int>(patterns);
            BigInt best = BigInt(patterns - r) * q * (q - 1) / 2 + BigInt(r) * q * (q + 1) / 2;
            CHECK(balanced == best);
        }
    }
}

TEST_CASE("high-rate boundary is a shortened Hamming code with d >= 3") {
    for (int n : {7, 11, 12, 15, 16, 24, 31}) {
        int k = n - static_cast<int>(bit_length(n));
        if (k < 1) continue;
        CHECK(nprsd_weight_distribution(n, k).min_distance() >= 3);
    }
    // n = 2^{m-1} gives the extended Hamming code, d = 4
    CHECK(nprsd_weight_distribution(8, 4).min_distance() == 4);
    CHECK(nprsd_weight_distribution(16, 11).min_distance() == 4);
}
