#pragma once

#include <vector>

#include "orcas/bitmath.hpp"
#include "orcas/nprs.hpp"
#include "orcas/weights.hpp"

namespace orcas {

// Dual of an NPRS code: NPRSD(n,k) has the NPRS(n, n-k) generator matrix as
// its parity-check matrix. High-rate counterpart of NPRS; a shortened
// Hamming code at k = n - bit_length(n), d = 2 with duplicated parity
// columns above that.
struct NprsdCode {
    int n = 0;
    int k = 0;
    int d = 0;
    BitMatrix parity_check;  // (n-k) x n, sorted NPRS columns; empty for k = n
    BitMatrix generator;     // k x n nullspace basis, systematic at the free columns
    std::vector<std::size_t> message_positions;  // free columns; codeword there = message
    std::vector<int> column_of;                  // position -> parity column pattern 1..M_{n-k}
    // Effective code over the distinct parity-check columns (group parities
    // form a word of a (shortened) Hamming code).
    std::vector<int> eff_pattern;                   // distinct present patterns, ascending
    std::vector<std::vector<int>> eff_positions;    // raw positions per effective position
    std::vector<int> eff_of;                        // position -> effective index
    std::vector<int> syndrome_to_eff;               // 2^{n-k} entries; -1 when no column matches
    WeightDistribution weights;
};

// MacWilliams transform: weight distribution of the dual of an (n,k) code.
WeightDistribution macwilliams_dual(const WeightDistribution& weights, int n, int k);

NprsdCode nprsd_code(int n, int k);

// Equals macwilliams_dual(nprs_weight_distribution(n, n-k), n, n-k).
WeightDistribution nprsd_weight_distribution(int n, int k);

}  // namespace orcas
