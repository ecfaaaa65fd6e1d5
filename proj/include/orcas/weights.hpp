#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

namespace orcas {

using BigInt = boost::multiprecision::cpp_int;

// Codeword counts A_0..A_n by Hamming weight. Counts are exact integers:
// the MacWilliams transform involves alternating sums of large binomials
// and is hopeless in floating point.
struct WeightDistribution {
    std::vector<BigInt> counts;  // size n + 1

    WeightDistribution() = default;
    explicit WeightDistribution(std::size_t n) : counts(n + 1, 0) {}

    std::size_t length() const { return counts.size() - 1; }
    BigInt total() const;

    // Smallest w > 0 with A_w > 0; returns 0 for the trivial code {0}.
    int min_distance() const;

    bool operator==(const WeightDistribution& other) const { return counts == other.counts; }
};

// Binomial coefficient from a process-wide cached Pascal triangle.
const BigInt& binomial(unsigned n, unsigned k);

}  // namespace orcas
