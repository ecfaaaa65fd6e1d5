#pragma once

#include <cmath>
#include <span>
#include <vector>

#include "orcas/bitmath.hpp"
#include "orcas/nprs.hpp"
#include "orcas/nprsd.hpp"

namespace orcas {

// LLR sign convention: positive favors bit 0. Magnitudes at or above
// kLlrSaturation represent perfectly known bits.
inline constexpr double kLlrSaturation = 1e6;

using LlrVector = std::vector<double>;

inline bool hard_bit(double llr) { return llr < 0.0; }

// a [+] b = ln((1 + e^{a+b}) / (e^a + e^b)).
double boxplus_exact(double a, double b);

inline double boxplus_min(double a, double b) {
    // copysign keeps this branchless; the sign of a*b is the sign product
    // (including signed zeros), and magnitudes stay far below overflow.
    return std::copysign(std::min(std::fabs(a), std::fabs(b)), a * b);
}

// Per-group LLR total (repetition combining). group_of maps each position
// to a group in [0, num_groups); groups may be empty (total stays 0).
std::vector<double> group_sum_llr(std::span<const double> llr, const std::vector<int>& group_of,
                                  int num_groups);

// Per-group min-sum boxplus fold (parity combining); empty groups yield
// +kLlrSaturation, the boxplus identity.
std::vector<double> group_boxplus_llr(std::span<const double> llr,
                                      const std::vector<int>& group_of, int num_groups);

struct LeafDecodeResult {
    BitVector codeword;
    BitVector message;
};

// Reusable scratch for the allocation-free decode cores below; sized on
// first use, shared across calls.
struct LeafWorkspace {
    std::vector<double> metrics;        // group totals / effective LLRs / WHT array
    std::vector<std::uint8_t> hard;     // effective hard decisions
    std::vector<std::uint8_t> flipped;  // chase flip mask over effective positions
    std::vector<int> order;             // reliability ordering
    std::vector<int> flips, best_flips;
};

// Raw cores: write codeword bits (0/1 bytes) into cw and message bits into
// msg. NPRSD decoders leave message extraction to the caller (systematic
// positions of the code). All behavior identical to the BitVector wrappers.
void decode_nprs_fht_raw(const double* llr, const NprsCode& code, LeafWorkspace& ws,
                         std::uint8_t* cw, std::uint8_t* msg);
void decode_cw_raw(const double* llr, const NprsCode& code, LeafWorkspace& ws, std::uint8_t* cw,
                   std::uint8_t* msg);
void decode_repetition_raw(const double* llr, int n, std::uint8_t* cw, std::uint8_t* msg);
void decode_rate1_raw(const double* llr, int n, std::uint8_t* cw);
void decode_spc_raw(const double* llr, int n, std::uint8_t* cw);
void decode_nprsd_chase_raw(const double* llr, const NprsdCode& code, LeafWorkspace& ws,
                            std::uint8_t* cw);
void decode_dual_cw_raw(const double* llr, const NprsdCode& code, LeafWorkspace& ws,
                        std::uint8_t* cw);

// Exact ML decoding of an NPRS code: repetition-combine onto the M_k
// simplex coordinates, length-2^k fast Hadamard transform, pick the
// maximizing message.
LeafDecodeResult decode_nprs_fht(std::span<const double> llr, const NprsCode& code);

// k = 2 specialization (Cordaro-Wagner code): hard-decide the three group
// totals, flip the least reliable group if the parity is odd.
LeafDecodeResult decode_cw(std::span<const double> llr, const NprsCode& code);

LeafDecodeResult decode_repetition(std::span<const double> llr);
LeafDecodeResult decode_rate0(std::span<const double> llr);
LeafDecodeResult decode_rate1(std::span<const double> llr);
LeafDecodeResult decode_spc(std::span<const double> llr);

// Chase-II decoding of an NPRSD code: boxplus-combine each duplicated
// parity group, test all 2^p flip patterns on the p = n-k least reliable
// effective positions with syndrome lookup, then repair mismatched groups
// by flipping their least reliable raw bit.
LeafDecodeResult decode_nprsd_chase(std::span<const double> llr, const NprsdCode& code);

// k = n-2 specialization: the effective code is a length-3 repetition code.
LeafDecodeResult decode_dual_cw(std::span<const double> llr, const NprsdCode& code);

}  // namespace orcas
