#pragma once

#include <cstdint>
#include <vector>

#include "orcas/bitmath.hpp"
#include "orcas/weights.hpp"

namespace orcas {

inline std::int64_t mersenne(unsigned k) { return (std::int64_t(1) << k) - 1; }

// Naturally punctured repeated simplex code: the length-n code obtained by
// dropping the first a(n,k) coordinates of the r-fold repeated simplex code
// S_k(r), r = ceil(n / M_k). Stored with sorted generator columns, i.e.
// column pattern i (1..M_k) appears multiplicity(i) times consecutively.
struct NprsCode {
    int n = 0;
    int k = 0;
    int r = 0;  // repetition count of the parent simplex code
    int a = 0;  // punctured coordinate count
    int d = 0;  // minimum distance, from the analytic weight distribution
    BitMatrix generator;                  // k x n
    std::vector<int> column_of;           // position -> column pattern in 1..M_k
    std::vector<std::vector<int>> group_positions;  // indexed by pattern-1, possibly empty
    WeightDistribution weights;
};

// a(n,k) = (-n) mod M_k.
int puncture_count(int n, int k);

// Number of times column pattern i (1..M_k) appears in the sorted generator.
int column_multiplicity(int n, int k, int i);

// Builds the code; requires 1 <= k <= bit_length(n).
NprsCode nprs_generator(int n, int k);

// V_i(j): the set of weights the anticode coset i can take, |V_i(j)| <= 2.
std::vector<std::int64_t> coset_weight_values(int i, std::int64_t j);

// Weight distribution of coset i of the anticode B_{k,a} (indexed by
// anticode weight, length a).
WeightDistribution anticode_coset_distribution(int k, int a, int i);

// Analytic weight distribution of the NPRS(n,k) code. k = 0 gives {A_0 = 1}.
WeightDistribution nprs_weight_distribution(int n, int k);

// Dimensions k for which NPRS(n,k) is guaranteed distance-optimal.
std::vector<int> distance_optimal_dims(int n);

}  // namespace orcas
