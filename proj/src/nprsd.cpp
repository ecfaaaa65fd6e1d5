#include "orcas/nprsd.hpp"

#include <algorithm>
#include <stdexcept>

namespace orcas {

WeightDistribution macwilliams_dual(const WeightDistribution& weights, int n, int k) {
    if (static_cast<int>(weights.length()) != n)
        throw std::invalid_argument("macwilliams_dual: distribution length mismatch");
    if (weights.total() != BigInt(1) << k)
        throw std::invalid_argument("macwilliams_dual: counts do not sum to 2^k");

    WeightDistribution dual(static_cast<std::size_t>(n));
    for (int w = 0; w <= n; ++w) {
        BigInt sum = 0;
        for (int i = 0; i <= n; ++i) {
            const BigInt& a = weights.counts[static_cast<std::size_t>(i)];
            if (a == 0) continue;
            // Krawtchouk polynomial K_w(i) evaluated term by term.
            BigInt kraw = 0;
            int jlo = std::max(0, i + w - n);
            int jhi = std::min(i, w);
            for (int j = jlo; j <= jhi; ++j) {
                BigInt term = binomial(static_cast<unsigned>(i), static_cast<unsigned>(j)) *
                              binomial(static_cast<unsigned>(n - i), static_cast<unsigned>(w - j));
                if (j & 1) kraw -= term; else kraw += term;
            }
            sum += a * kraw;
        }
        BigInt scaled = sum >> k;
        if ((scaled << k) != sum)
            throw std::invalid_argument("macwilliams_dual: transform not divisible by 2^k");
        dual.counts[static_cast<std::size_t>(w)] = scaled;
    }
    return dual;
}

WeightDistribution nprsd_weight_distribution(int n, int k) {
    if (k < 0 || k > n) throw std::invalid_argument("nprsd_weight_distribution: k out of range");
    if (static_cast<unsigned>(n - k) > bit_length(static_cast<std::uint64_t>(n)))
        throw std::invalid_argument("nprsd_weight_distribution: k below the high-rate range");
    return macwilliams_dual(nprs_weight_distribution(n, n - k), n, n - k);
}

NprsdCode nprsd_code(int n, int k) {
    if (n < 1) throw std::invalid_argument("nprsd_code: n must be >= 1");
    if (k > n || k < n - static_cast<int>(bit_length(static_cast<std::uint64_t>(n))))
        throw std::invalid_argument("nprsd_code: k below the high-rate range n-bit_length(n)..n");

    NprsdCode code;
    code.n = n;
    code.k = k;
    code.weights = nprsd_weight_distribution(n, k);
    code.d = code.weights.min_distance();

    if (k == n) {
        // Full space: no parity checks, identity generator.
        code.parity_check = BitMatrix(0, static_cast<std::size_t>(n));
        code.generator = BitMatrix(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            code.generator.set(static_cast<std::size_t>(i), static_cast<std::size_t>(i), true);
            code.message_positions.push_back(static_cast<std::size_t>(i));
        }
        code.column_of.assign(static_cast<std::size_t>(n), 0);
        return code;
    }

    NprsCode base = nprs_generator(n, n - k);
    code.parity_check = base.generator;
    code.column_of = base.column_of;
    code.generator = gf2_nullspace(code.parity_check);
    code.message_positions = gf2_free_columns(code.parity_check);

    code.eff_of.assign(static_cast<std::size_t>(n), -1);
    for (std::size_t i = 0; i < base.group_positions.size(); ++i) {
        if (base.group_positions[i].empty()) continue;
        for (int pos : base.group_positions[i])
            code.eff_of[static_cast<std::size_t>(pos)] = static_cast<int>(code.eff_pattern.size());
        code.eff_pattern.push_back(static_cast<int>(i + 1));
        code.eff_positions.push_back(base.group_positions[i]);
    }
    code.syndrome_to_eff.assign(std::size_t(1) << (n - k), -1);
    for (std::size_t e = 0; e < code.eff_pattern.size(); ++e)
        code.syndrome_to_eff[static_cast<std::size_t>(code.eff_pattern[e])] = static_cast<int>(e);
    return code;
}

}  // namespace orcas
