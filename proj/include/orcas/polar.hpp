#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "orcas/bitmath.hpp"
#include "orcas/tree.hpp"

namespace orcas {

enum class PolarMatching { None, Puncture, Shorten };
enum class PolarOrder { Natural, BitReverse };

struct PolarSpec {
    int mother_n = 0;  // power of two
    int n = 0;         // matched length
    int k = 0;
    PolarMatching matching = PolarMatching::None;
    PolarOrder order = PolarOrder::Natural;
    double design_es_n0 = 1.0;            // linear
    std::vector<int> removed;             // sorted mother codeword positions
    std::vector<std::uint8_t> frozen;     // per mother input position
    std::vector<int> info_positions;      // ascending non-frozen inputs
};

// Per-input-bit error probabilities Q(1/sigma) after evolving the given
// per-channel LLR means through the polar transform. Punctured channels
// enter with mu = 0, shortened ones with mu = +inf.
std::vector<double> dega_reliabilities(int mother_n, const std::vector<double>& initial_mu);

// Removed codeword positions for a matching scheme: puncturing drops the
// first mother_n - n positions, shortening the last; the bit-reverse
// variants apply the bit-reversal permutation to those index sets.
std::vector<int> removed_positions(int mother_n, int n, PolarMatching matching, PolarOrder order);

PolarSpec construct_polar(int n, int k, PolarMatching matching, PolarOrder order,
                          double design_es_n0_linear);

BitVector polar_encode(const PolarSpec& spec, const BitVector& message);

// Simplified SC decoding with rate-0/rate-1 subtree shortcuts.
ScResult polar_sc_decode(const PolarSpec& spec, std::span<const double> llr);

// Plain bit-by-bit SC decoding; reference for the simplified decoder.
ScResult polar_sc_decode_plain(const PolarSpec& spec, std::span<const double> llr);

// Reusable-workspace decoder for throughput measurements.
class PolarDecoder {
public:
    explicit PolarDecoder(const PolarSpec& spec, bool simplified = true);
    ScResult decode(std::span<const double> llr);

private:
    void decode_rec(int offset, int size, int input_offset, double* llr);

    const PolarSpec& spec_;
    bool simplified_;
    std::vector<std::vector<double>> llr_arena_;
    std::vector<std::uint8_t> cw_;
    std::vector<std::uint8_t> scratch_bits_;
    std::vector<std::uint8_t> msg_;
    std::vector<int> frozen_count_;  // prefix sums for rate-0/rate-1 tests
    std::vector<double> llr_full_;   // mother-length channel LLRs
};

// DEGA estimate 1 - prod(1 - p_i) over the information set at Eb/N0.
double polar_analytic_bler(const PolarSpec& spec, double eb_n0_linear);

// Bisection on the design SNR until the DEGA estimate hits the target.
PolarSpec polar_design_for_target(int n, int k, PolarMatching matching, PolarOrder order,
                                  double target_bler);

std::string to_string(PolarMatching m);
std::string to_string(PolarOrder o);

}  // namespace orcas
