#include "orcas/weights.hpp"

#include <deque>
#include <mutex>

namespace orcas {

BigInt WeightDistribution::total() const {
    BigInt t = 0;
    for (const BigInt& c : counts) t += c;
    return t;
}

int WeightDistribution::min_distance() const {
    for (std::size_t w = 1; w < counts.size(); ++w)
        if (counts[w] > 0) return static_cast<int>(w);
    return 0;
}

const BigInt& binomial(unsigned n, unsigned k) {
    // deque keeps completed rows stable while new ones are appended, so
    // returned references stay valid across later calls.
    static std::deque<std::vector<BigInt>> triangle{{1}};
    static std::mutex mutex;
    static const BigInt zero = 0;
    if (k > n) return zero;
    std::lock_guard<std::mutex> lock(mutex);
    while (triangle.size() <= n) {
        const auto& prev = triangle.back();
        std::vector<BigInt> row(prev.size() + 1, 1);
        for (std::size_t j = 1; j + 1 < row.size(); ++j) row[j] = prev[j - 1] + prev[j];
        triangle.push_back(std::move(row));
    }
    return triangle[n][k];
}

}  // namespace orcas
