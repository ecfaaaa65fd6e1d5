#include "doctest.h"

#include <cmath>
#include <random>

#include "orcas/leaf_decoders.hpp"
#include "test_util.hpp"

using namespace orcas;

namespace {

std::vector<double> noisy_llr(const BitVector& cw, double sigma, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, sigma);
    std::vector<double> llr(cw.size());
    for (std::size_t i = 0; i < cw.size(); ++i) {
        double y = (cw.get(i) ? -1.0 : 1.0) + gauss(rng);
        llr[i] = 2.0 * y / (sigma * sigma);
    }
    return llr;
}

bool in_code(const BitMatrix& parity, const BitVector& cw) {
    return parity.rows() == 0 || gf2_matvec(parity, cw).is_zero();
}

}  // namespace

TEST_CASE("boxplus") {
    CHECK(boxplus_min(2.0, -3.0) == -2.0);
    CHECK(boxplus_exact(0.0, 5.0) == doctest::Approx(0.0));
    CHECK(boxplus_exact(1.3, kLlrSaturation) == doctest::Approx(1.3).epsilon(1e-12));
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-8.0, 8.0);
    for (int t = 0; t < 2000; ++t) {
        double a = u(rng), b = u(rng);
        double exact = boxplus_exact(a, b), approx = boxplus_min(a, b);
        CHECK(std::signbit(exact) == std::signbit(approx));
        CHECK(std::fabs(approx) >= std::fabs(exact) - 1e-12);
    }
}

TEST_CASE("group combiners") {
    std::vector<double> llr{1.0, 2.0, -0.5};
    std::vector<int> groups{0, 0, 1};
    auto sums = group_sum_llr(llr, groups, 2);
    CHECK(sums == std::vector<double>{3.0, -0.5});

    std::vector<double> llr2{2.0, -3.0};
    auto bp = group_boxplus_llr(llr2, std::vector<int>{0, 0}, 1);
    CHECK(bp[0] == -2.0);

    auto ident = group_sum_llr(llr, std::vector<int>{0, 1, 2}, 3);
    CHECK(ident == llr);
}

TEST_CASE("FHT decoder is exact ML") {
    std::mt19937_64 rng(17);
    for (auto [n, k] : std::vector<std::pair<int, int>>{{12, 3}, {7, 3}, {24, 4}, {5, 3}}) {
        NprsCode code = nprs_generator(n, k);
        // noiseless round trip
        for (int t = 0; t < 20; ++t) {
            BitVector msg = test::random_bits(static_cast<std::size_t>(k), rng);
            BitVector cw = gf2_vecmat(msg, code.generator);
            std::vector<double> llr(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i)
                llr[static_cast<std::size_t>(i)] =
                    cw.get(static_cast<std::size_t>(i)) ? -kLlrSaturation : kLlrSaturation;
            LeafDecodeResult res = decode_nprs_fht(llr, code);
            CHECK(res.codeword == cw);
            CHECK(res.message == msg);
        }
        // ML correlation on noisy frames
        for (int t = 0; t < 3000; ++t) {
            BitVector msg = test::random_bits(static_cast<std::size_t>(k), rng);
            BitVector cw = gf2_vecmat(msg, code.generator);
            std::vector<double> llr = noisy_llr(cw, 1.0, rng);
            LeafDecodeResult res = decode_nprs_fht(llr, code);
            CHECK(res.codeword == gf2_vecmat(res.message, code.generator));
            CHECK(test::correlation(res.codeword, llr) ==
                  doctest::Approx(test::best_correlation(code.generator, llr)).epsilon(1e-12));
        }
    }
}

TEST_CASE("CW decoder") {
    NprsCode code = nprs_generator(24, 2);
    // hand example: totals (5,4,-3) -> parity odd -> flip group 3
    {
        std::vector<double> llr(24, 0.0);
        // groups are 8 repetitions each of patterns 1,2,3
        for (int i = 0; i < 8; ++i) llr[static_cast<std::size_t>(i)] = 5.0 / 8;
        for (int i = 8; i < 16; ++i) llr[static_cast<std::size_t>(i)] = 4.0 / 8;
        for (int i = 16; i < 24; ++i) llr[static_cast<std::size_t>(i)] = -3.0 / 8;
        LeafDecodeResult res = decode_cw(llr, code);
        CHECK(res.codeword.is_zero());
        CHECK(res.message.is_zero());
    }
    {
        std::vector<double> llr(24, 0.0);
        for (int i = 0; i < 8; ++i) llr[static_cast<std::size_t>(i)] = 5.0 / 8;
        for (int i = 8; i < 16; ++i) llr[static_cast<std::size_t>(i)] = 4.0 / 8;
        for (int i = 16; i < 24; ++i) llr[static_cast<std::size_t>(i)] = 3.0 / 8;
        CHECK(decode_cw(llr, code).codeword.is_zero());
    }
    std::mt19937_64 rng(23);
    for (int t = 0; t < 3000; ++t) {
        BitVector msg = test::random_bits(2, rng);
        BitVector cw = gf2_vecmat(msg, code.generator);
        std::vector<double> llr = noisy_llr(cw, 1.3, rng);
        LeafDecodeResult res = decode_cw(llr, code);
        CHECK(test::correlation(res.codeword, llr) ==
              doctest::Approx(test::best_correlation(code.generator, llr)).epsilon(1e-12));
        // agrees with the FHT path up to ties
        LeafDecodeResult fht = decode_nprs_fht(llr, code);
        CHECK(test::correlation(fht.codeword, llr) ==
              doctest::Approx(test::correlation(res.codeword, llr)).epsilon(1e-12));
    }
}

TEST_CASE("repetition, SPC, rate-0, rate-1") {
    LeafDecodeResult rep = decode_repetition(std::vector<double>{-1.0, -2.0, 0.5});
    CHECK(rep.codeword == BitVector{1, 1, 1});
    CHECK(rep.message == BitVector{1});

    LeafDecodeResult spc = decode_spc(std::vector<double>{3.0, -2.0, 1.0});
    CHECK(spc.codeword == BitVector{0, 1, 1});

    CHECK(decode_rate0(std::vector<double>{-5.0, 1.0}).codeword.is_zero());

    LeafDecodeResult r1 = decode_rate1(std::vector<double>{-5.0, 1.0, -0.1});
    CHECK(r1.codeword == BitVector{1, 0, 1});

    // SPC is ML: brute force over even-weight words
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> u(-4.0, 4.0);
    for (int t = 0; t < 2000; ++t) {
        std::vector<double> llr(6);
        for (auto& v : llr) v = u(rng);
        LeafDecodeResult res = decode_spc(llr);
        CHECK(res.codeword.weight() % 2 == 0);
        double best = -1e300;
        for (int m = 0; m < 64; ++m) {
            if (std::popcount(static_cast<unsigned>(m)) % 2) continue;
            BitVector cw(6);
            for (int b = 0; b < 6; ++b) cw.set(static_cast<std::size_t>(b), (m >> b) & 1);
            best = std::max(best, test::correlation(cw, llr));
        }
        CHECK(test::correlation(res.codeword, llr) == doctest::Approx(best).epsilon(1e-12));
    }
}

TEST_CASE("Chase-II decoder on NPRSD codes") {
    std::mt19937_64 rng(41);
    for (auto [n, k] : std::vector<std::pair<int, int>>{{12, 8}, {12, 9}, {15, 11}, {10, 6}}) {
        NprsdCode code = nprsd_code(n, k);
        // noiseless round trip
        for (int t = 0; t < 20; ++t) {
            BitVector msg = test::random_bits(static_cast<std::size_t>(k), rng);
            BitVector cw = gf2_vecmat(msg, code.generator);
            std::vector<double> llr(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i)
                llr[static_cast<std::size_t>(i)] =
                    cw.get(static_cast<std::size_t>(i)) ? -20.0 : 20.0;
            LeafDecodeResult res = decode_nprsd_chase(llr, code);
            CHECK(res.codeword == cw);
            CHECK(res.message == msg);
        }
        // single hard flip is corrected when d >= 3
        if (code.d >= 3) {
            for (int pos = 0; pos < n; ++pos) {
                BitVector msg = test::random_bits(static_cast<std::size_t>(k), rng);
                BitVector cw = gf2_vecmat(msg, code.generator);
                std::vector<double> llr(static_cast<std::size_t>(n));
                for (int i = 0; i < n; ++i)
                    llr[static_cast<std::size_t>(i)] =
                        cw.get(static_cast<std::size_t>(i)) ? -4.0 : 4.0;
                llr[static_cast<std::size_t>(pos)] *= -0.9;
                LeafDecodeResult res = decode_nprsd_chase(llr, code);
                CHECK(res.codeword == cw);
            }
        }
        // always a codeword; near-ML on noisy frames
        int chase_err = 0, ml_err = 0;
        for (int t = 0; t < 4000; ++t) {
            BitVector msg = test::random_bits(static_cast<std::size_t>(k), rng);
            BitVector cw = gf2_vecmat(msg, code.generator);
            std::vector<double> llr = noisy_llr(cw, 0.55, rng);
            LeafDecodeResult res = decode_nprsd_chase(llr, code);
            CHECK(in_code(code.parity_check, res.codeword));
            double best = test::best_correlation(code.generator, llr);
            chase_err += res.codeword != cw;
            ml_err += test::correlation(cw, llr) < best - 1e-12;
        }
        CHECK(chase_err <= ml_err + 10 + ml_err / 10);
    }
}

TEST_CASE("dual-CW decoder") {
    std::mt19937_64 rng(47);
    for (int n : {9, 12, 24}) {
        NprsdCode code = nprsd_code(n, n - 2);
        for (int t = 0; t < 20; ++t) {
            BitVector msg = test::random_bits(static_cast<std::size_t>(n - 2), rng);
            BitVector cw = gf2_vecmat(msg, code.generator);
            std::vector<double> llr(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i)
                llr[static_cast<std::size_t>(i)] = cw.get(static_cast<std::size_t>(i)) ? -9.0 : 9.0;
            LeafDecodeResult res = decode_dual_cw(llr, code);
            CHECK(res.codeword == cw);
            CHECK(res.message == msg);
        }
        // agreement with the Chase specialization
        for (int t = 0; t < 1000; ++t) {
            BitVector msg = test::random_bits(static_cast<std::size_t>(n - 2), rng);
            BitVector cw = gf2_vecmat(msg, code.generator);
            std::vector<double> llr = noisy_llr(cw, 0.8, rng);
            LeafDecodeResult a = decode_dual_cw(llr, code);
            LeafDecodeResult b = decode_nprsd_chase(llr, code);
            CHECK(in_code(code.parity_check, a.codeword));
            CHECK(test::correlation(a.codeword, llr) ==
                  doctest::Approx(test::correlation(b.codeword, llr)).epsilon(1e-9));
        }
    }
}

TEST_CASE("decoders are sign-symmetric") {
    // Negating the LLRs on the support of a codeword shift maps the decoder
    // output by that codeword.
    std::mt19937_64 rng(53);
    NprsCode nprs = nprs_generator(12, 3);
    NprsdCode nprsd = nprsd_code(12, 8);
    std::uniform_real_distribution<double> u(-5.0, 5.0);
    for (int t = 0; t < 500; ++t) {
        std::vector<double> llr(12);
        for (auto& v : llr) v = u(rng);

        BitVector shift_msg = test::random_bits(3, rng);
        BitVector shift = gf2_vecmat(shift_msg, nprs.generator);
        std::vector<double> shifted(12);
        for (int i = 0; i < 12; ++i)
            shifted[static_cast<std::size_t>(i)] =
                shift.get(static_cast<std::size_t>(i)) ? -llr[static_cast<std::size_t>(i)]
                                                       : llr[static_cast<std::size_t>(i)];
        BitVector a = decode_nprs_fht(llr, nprs).codeword;
        BitVector b = decode_nprs_fht(shifted, nprs).codeword;
        CHECK((a ^ shift) == b);

        BitVector dshift_msg = test::random_bits(8, rng);
        BitVector dshift = gf2_vecmat(dshift_msg, nprsd.generator);
        for (int i = 0; i < 12; ++i)
            shifted[static_cast<std::size_t>(i)] =
                dshift.get(static_cast<std::size_t>(i)) ? -llr[static_cast<std::size_t>(i)]
                                                        : llr[static_cast<std::size_t>(i)];
        BitVector da = decode_nprsd_chase(llr, nprsd).codeword;
        BitVector db = decode_nprsd_chase(shifted, nprsd).codeword;
        CHECK((da ^ dshift) == db);
    }
}
