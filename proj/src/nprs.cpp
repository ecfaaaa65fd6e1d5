#include "orcas/nprs.hpp"

#include <algorithm>
#include <stdexcept>

namespace orcas {

int puncture_count(int n, int k) {
    if (k < 1) throw std::invalid_argument("puncture_count: k must be >= 1");
    std::int64_t m = mersenne(static_cast<unsigned>(k));
    return static_cast<int>(((-static_cast<std::int64_t>(n)) % m + m) % m);
}

int column_multiplicity(int n, int k, int i) {
    std::int64_t m = mersenne(static_cast<unsigned>(k));
    if (i < 1 || i > m) throw std::invalid_argument("column_multiplicity: index out of range");
    int mult = static_cast<int>(n / m);
    if (i > m - (n % m)) ++mult;
    return mult;
}

NprsCode nprs_generator(int n, int k) {
    if (n < 1) throw std::invalid_argument("nprs_generator: n must be >= 1");
    if (k < 1 || static_cast<unsigned>(k) > bit_length(static_cast<std::uint64_t>(n)))
        throw std::invalid_argument("nprs_generator: k outside the low-rate range 1..bit_length(n)");

    NprsCode code;
    code.n = n;
    code.k = k;
    std::int64_t m = mersenne(static_cast<unsigned>(k));
    code.r = static_cast<int>((n + m - 1) / m);
    code.a = puncture_count(n, k);
    code.generator = BitMatrix(k, n);
    code.column_of.resize(n);
    code.group_positions.assign(static_cast<std::size_t>(m), {});

    int pos = 0;
    for (std::int64_t i = 1; i <= m; ++i) {
        int mult = column_multiplicity(n, k, static_cast<int>(i));
        for (int rep = 0; rep < mult; ++rep, ++pos) {
            code.column_of[pos] = static_cast<int>(i);
            code.group_positions[i - 1].push_back(pos);
            for (int b = 0; b < k; ++b)
                if ((i >> b) & 1) code.generator.set(b, pos, true);
        }
    }

    code.weights = nprs_weight_distribution(n, k);
    code.d = code.weights.min_distance();
    return code;
}

std::vector<std::int64_t> coset_weight_values(int i, std::int64_t j) {
    std::int64_t half = std::int64_t(1) << i;          // 2^i
    std::int64_t block = half << 1;                    // 2^{i+1}
    std::int64_t v = (j / block) * half + std::max<std::int64_t>(0, (j % block) - half);
    if (block <= j && v != j - v) return {v, j - v};
    return {v};
}

WeightDistribution anticode_coset_distribution(int k, int a, int i) {
    if (i < 0 || i >= k) throw std::invalid_argument("anticode_coset_distribution: coset index");
    WeightDistribution dist(static_cast<std::size_t>(std::max(a, 0)));
    std::vector<std::int64_t> weights = coset_weight_values(i, a + 1);
    BigInt count = BigInt(1) << (k - i - static_cast<int>(weights.size()));
    for (std::int64_t w : weights) dist.counts[static_cast<std::size_t>(w)] += count;
    return dist;
}

WeightDistribution nprs_weight_distribution(int n, int k) {
    WeightDistribution dist(static_cast<std::size_t>(n));
    dist.counts[0] = 1;
    if (k == 0) return dist;
    if (static_cast<unsigned>(k) > bit_length(static_cast<std::uint64_t>(n)))
        throw std::invalid_argument("nprs_weight_distribution: k outside the low-rate range");

    std::int64_t m = mersenne(static_cast<unsigned>(k));
    std::int64_t r = (n + m - 1) / m;
    std::int64_t parent_d = r << (k - 1);  // every nonzero codeword of S_k(r) has this weight
    int a = puncture_count(n, k);

    for (int i = 0; i < k; ++i) {
        WeightDistribution coset = anticode_coset_distribution(k, a, i);
        for (std::size_t aw = 0; aw < coset.counts.size(); ++aw) {
            if (coset.counts[aw] == 0) continue;
            std::int64_t w = parent_d - static_cast<std::int64_t>(aw);
            dist.counts[static_cast<std::size_t>(w)] += coset.counts[aw];
        }
    }
    return dist;
}

std::vector<int> distance_optimal_dims(int n) {
    if (n < 1) throw std::invalid_argument("distance_optimal_dims: n must be >= 1");
    std::vector<int> dims{1};
    unsigned lb = bit_length(static_cast<std::uint64_t>(n));
    for (int k = 2; k <= static_cast<int>(lb); ++k) {
        int a = puncture_count(n, k);
        // A(n,k) = {0} u {2^j - j, ..., 2^j}, j = bit_length(a - 1); a = 0 counts
        // as a member (the j-expression is undefined there).
        bool member = (a == 0);
        if (!member) {
            std::int64_t j = bit_length(static_cast<std::uint64_t>(a - 1));
            std::int64_t hi = std::int64_t(1) << j;
            member = (a >= hi - j && a <= hi);
        }
        if (member) dims.push_back(k);
    }
    return dims;
}

}  // namespace orcas
