#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "orcas/bitmath.hpp"
#include "orcas/weights.hpp"

namespace orcas::test {

// Weight histogram of all 2^k codewords of a generator matrix; the
// enumeration oracle the analytic distributions are checked against.
inline WeightDistribution enumerate_weights(const BitMatrix& gen) {
    std::size_t k = gen.rows(), n = gen.cols();
    WeightDistribution dist(n);
    for (std::uint64_t m = 0; m < (std::uint64_t(1) << k); ++m) {
        BitVector cw(n);
        for (std::size_t b = 0; b < k; ++b)
            if ((m >> b) & 1u) cw ^= gen.row(b);
        dist.counts[cw.weight()] += 1;
    }
    return dist;
}

inline BitVector random_bits(std::size_t n, std::mt19937_64& rng) {
    BitVector v(n);
    for (std::size_t i = 0; i < n; ++i) v.set(i, rng() & 1u);
    return v;
}

// Correlation metric sum_i (1 - 2 c_i) llr_i maximized by the ML codeword.
inline double correlation(const BitVector& cw, const std::vector<double>& llr) {
    double c = 0.0;
    for (std::size_t i = 0; i < cw.size(); ++i) c += cw.get(i) ? -llr[i] : llr[i];
    return c;
}

// Best correlation over all 2^k codewords of a generator matrix.
inline double best_correlation(const BitMatrix& gen, const std::vector<double>& llr) {
    std::size_t k = gen.rows();
    double best = -1e300;
    for (std::uint64_t m = 0; m < (std::uint64_t(1) << k); ++m) {
        BitVector cw(gen.cols());
        for (std::size_t b = 0; b < k; ++b)
            if ((m >> b) & 1u) cw ^= gen.row(b);
        best = std::max(best, correlation(cw, llr));
    }
    return best;
}

}  // namespace orcas::test
