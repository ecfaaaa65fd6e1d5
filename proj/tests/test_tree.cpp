#include "doctest.h"

#include <random>

#include "orcas/tree.hpp"
#include "test_util.hpp"

using namespace orcas;

namespace {

RateProfile profile_from(std::initializer_list<int> bits) {
    RateProfile p;
    p.bits = BitVector(bits);
    return p;
}

RateProfile tail_profile(int n, int k) {
    // ones at the last k positions, the leaf-level activation convention
    RateProfile p;
    p.bits = BitVector(static_cast<std::size_t>(n));
    for (int i = n - k; i < n; ++i) p.bits.set(static_cast<std::size_t>(i), true);
    return p;
}

}  // namespace

TEST_CASE("length support") {
    for (int n : {1, 2, 3, 4, 5, 6, 7, 8, 9, 12, 18, 24, 96, 256, 640})
        CHECK(length_supported(n));
    for (int n : {0, 11, 13, 22, 44, 100}) CHECK_FALSE(length_supported(n));
}

TEST_CASE("tree classification") {
    CHECK(build_tree(tail_profile(12, 0)).kind == CodeTree::Kind::Rate0);
    CHECK(build_tree(tail_profile(12, 12)).kind == CodeTree::Kind::NprsdLeaf);
    CHECK(build_tree(tail_profile(12, 3)).kind == CodeTree::Kind::NprsLeaf);
    CHECK(build_tree(tail_profile(12, 4)).kind == CodeTree::Kind::NprsLeaf);
    CHECK(build_tree(tail_profile(12, 8)).kind == CodeTree::Kind::NprsdLeaf);
    CHECK(build_tree(tail_profile(12, 6)).kind == CodeTree::Kind::Split);

    // malformed: mid-rate at odd length (15 is not a reachable length)
    CHECK_THROWS_AS(build_tree(tail_profile(15, 7)), std::invalid_argument);
}

TEST_CASE("encode linearity and zero message") {
    std::mt19937_64 rng(3);
    RateProfile p = tail_profile(24, 11);
    p.bits.set(0, true);
    p.bits.set(23, false);  // keep k = 11, force a split shape
    CodeTree tree = build_tree(p);
    CHECK(encode(tree, BitVector(static_cast<std::size_t>(tree.k))).is_zero());
    for (int t = 0; t < 200; ++t) {
        BitVector m1 = test::random_bits(static_cast<std::size_t>(tree.k), rng);
        BitVector m2 = test::random_bits(static_cast<std::size_t>(tree.k), rng);
        CHECK((encode(tree, m1) ^ encode(tree, m2)) == encode(tree, m1 ^ m2));
    }
}

TEST_CASE("single-leaf tree encodes by the generator") {
    CodeTree tree = build_tree(tail_profile(7, 3));
    BitVector msg{1, 0, 0};
    CHECK(encode(tree, msg) == tree.nprs->generator.row(0));
}

TEST_CASE("sc_decode equals the leaf decoder on a single-leaf tree") {
    std::mt19937_64 rng(9);
    CodeTree tree = build_tree(tail_profile(12, 3));
    std::uniform_real_distribution<double> u(-4.0, 4.0);
    for (int t = 0; t < 300; ++t) {
        std::vector<double> llr(12);
        for (auto& v : llr) v = u(rng);
        ScResult sc = sc_decode(tree, llr);
        LeafDecodeResult leaf = decode_nprs_fht(llr, *tree.nprs);
        CHECK(sc.codeword == leaf.codeword);
        CHECK(sc.message == leaf.message);
    }
}

TEST_CASE("noiseless round trips through split trees") {
    std::mt19937_64 rng(15);
    for (int n : {8, 12, 24, 48}) {
        RateProfile p;
        p.bits = test::random_bits(static_cast<std::size_t>(n), rng);
        CodeTree tree = build_tree(p);
        OrcasDecoder dec(tree);
        for (int t = 0; t < 50; ++t) {
            BitVector msg = test::random_bits(static_cast<std::size_t>(tree.k), rng);
            BitVector cw = encode(tree, msg);
            std::vector<double> llr(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i)
                llr[static_cast<std::size_t>(i)] =
                    cw.get(static_cast<std::size_t>(i)) ? -kLlrSaturation : kLlrSaturation;
            ScResult res = dec.decode(llr);
            CHECK(res.message == msg);
            CHECK(res.codeword == cw);
        }
    }
}

TEST_CASE("every decoded codeword re-encodes from its message") {
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    for (int n : {12, 24, 48}) {
        RateProfile p;
        p.bits = test::random_bits(static_cast<std::size_t>(n), rng);
        CodeTree tree = build_tree(p);
        OrcasDecoder dec(tree);
        for (int t = 0; t < 200; ++t) {
            std::vector<double> llr(static_cast<std::size_t>(n));
            for (auto& v : llr) v = u(rng);
            ScResult res = dec.decode(llr);
            CHECK(encode(tree, res.message) == res.codeword);
        }
    }
}

TEST_CASE("Plotkin distance law by enumeration") {
    std::mt19937_64 rng(27);
    for (int n : {8, 12, 16}) {
        for (int trial = 0; trial < 20; ++trial) {
            RateProfile p;
            p.bits = test::random_bits(static_cast<std::size_t>(n), rng);
            CodeTree tree = build_tree(p);
            if (tree.k == 0 || tree.k > 14) continue;
            long long min_w = kInfiniteDistance;
            for (std::uint64_t m = 1; m < (std::uint64_t(1) << tree.k); ++m) {
                BitVector msg(static_cast<std::size_t>(tree.k));
                for (int b = 0; b < tree.k; ++b) msg.set(static_cast<std::size_t>(b), (m >> b) & 1);
                min_w = std::min<long long>(min_w, static_cast<long long>(encode(tree, msg).weight()));
            }
            CHECK(tree.d == min_w);
        }
    }
}

TEST_CASE("designed (96,48) tree: round trips and distance attainment") {
    // profile equivalent to the reference construction at its design point
    CodeTree tree = [] {
        RateProfile p;
        p.bits = BitVector(96);
        auto set_range = [&](int lo, int count) {
            for (int i = 0; i < count; ++i) p.bits.set(static_cast<std::size_t>(lo + i), true);
        };
        // tail-of-segment activation: (24,2)(12,3)(12,8)(12,4)(12,9)(24,22)
        set_range(22, 2);
        set_range(33, 3);
        set_range(40, 8);
        set_range(56, 4);
        set_range(63, 9);
        set_range(74, 22);
        return build_tree(p);
    }();
    REQUIRE(tree.k == 48);
    CHECK(tree.d == 8);

    std::mt19937_64 rng(77);
    OrcasDecoder dec(tree);
    std::size_t min_weight = 96;
    for (int t = 0; t < 2000; ++t) {
        BitVector msg = test::random_bits(48, rng);
        if (msg.is_zero()) continue;
        BitVector cw = encode(tree, msg);
        min_weight = std::min(min_weight, cw.weight());
        if (t < 200) {  // noiseless round trip
            std::vector<double> llr(96);
            for (int i = 0; i < 96; ++i)
                llr[static_cast<std::size_t>(i)] =
                    cw.get(static_cast<std::size_t>(i)) ? -kLlrSaturation : kLlrSaturation;
            ScResult res = dec.decode(llr);
            CHECK(res.message == msg);
        }
    }
    CHECK(min_weight >= 8);

    // weight 8 is attained: a weight-2 codeword of the last leaf lifts to
    // weight 8 through the two v-side combinations
    const CodeTree* last = tree_leaves(tree).back();
    REQUIRE(last->kind == CodeTree::Kind::NprsdLeaf);
    bool attained = false;
    for (int i = 0; i < last->k && !attained; ++i) {
        for (int j = i; j < last->k && !attained; ++j) {
            BitVector msg(48);
            msg.set(static_cast<std::size_t>(26 + i), true);
            if (j != i) msg.flip(static_cast<std::size_t>(26 + j));
            attained = encode(tree, msg).weight() == 8;
        }
    }
    CHECK(attained);
}

TEST_CASE("exact boxplus option still round trips") {
    std::mt19937_64 rng(33);
    RateProfile p;
    p.bits = test::random_bits(24, rng);
    CodeTree tree = build_tree(p);
    DecodeOptions opts;
    opts.exact_boxplus = true;
    OrcasDecoder dec(tree, opts);
    for (int t = 0; t < 50; ++t) {
        BitVector msg = test::random_bits(static_cast<std::size_t>(tree.k), rng);
        BitVector cw = encode(tree, msg);
        std::vector<double> llr(24);
        for (int i = 0; i < 24; ++i)
            llr[static_cast<std::size_t>(i)] = cw.get(static_cast<std::size_t>(i)) ? -40.0 : 40.0;
        CHECK(dec.decode(llr).message == msg);
    }
}

TEST_CASE("FHT cross-check path for k = 2 leaves") {
    std::mt19937_64 rng(41);
    CodeTree tree = build_tree(tail_profile(24, 2));
    DecodeOptions fht_opts;
    fht_opts.fht_for_k2 = true;
    OrcasDecoder cw_dec(tree), fht_dec(tree, fht_opts);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    for (int t = 0; t < 500; ++t) {
        std::vector<double> llr(24);
        for (auto& v : llr) v = u(rng);
        ScResult a = cw_dec.decode(llr);
        ScResult b = fht_dec.decode(llr);
        // both are exact ML; identical up to correlation ties
        CHECK(test::correlation(a.codeword, llr) ==
              doctest::Approx(test::correlation(b.codeword, llr)).epsilon(1e-12));
    }
}

TEST_CASE("tree rendering lists leaf parameters") {
    CodeTree tree = build_tree(tail_profile(12, 3));
    CHECK(tree_to_string(tree) == "(12,3,6) FHT\n");
    CHECK(leaf_decoder_name(tree) == "FHT");
}
