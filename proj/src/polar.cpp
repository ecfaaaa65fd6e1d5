#include "orcas/polar.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "orcas/designer.hpp"
#include "orcas/ga.hpp"
#include "orcas/leaf_decoders.hpp"

namespace orcas {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

int log2_exact(int n) {
    int m = 0;
    while ((1 << m) < n) ++m;
    return m;
}

int bit_reverse(int value, int bits) {
    int out = 0;
    for (int b = 0; b < bits; ++b)
        if ((value >> b) & 1) out |= 1 << (bits - 1 - b);
    return out;
}

void dega_rec(std::vector<double>& mu, int offset, int size, std::vector<double>& out) {
    if (size == 1) {
        out.push_back(q_func(std::sqrt(mu[static_cast<std::size_t>(offset)] / 2.0)));
        return;
    }
    int half = size / 2;
    std::vector<double> saved(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i) saved[static_cast<std::size_t>(i)] = mu[static_cast<std::size_t>(offset + i)];
    // check side (first half of the inputs)
    for (int i = 0; i < half; ++i)
        mu[static_cast<std::size_t>(offset + i)] =
            check_combine_mu(saved[static_cast<std::size_t>(i)], saved[static_cast<std::size_t>(half + i)]);
    dega_rec(mu, offset, half, out);
    // variable side (second half)
    for (int i = 0; i < half; ++i)
        mu[static_cast<std::size_t>(offset + i)] =
            var_combine_mu(saved[static_cast<std::size_t>(i)], saved[static_cast<std::size_t>(half + i)]);
    dega_rec(mu, offset, half, out);
    for (int i = 0; i < size; ++i) mu[static_cast<std::size_t>(offset + i)] = saved[static_cast<std::size_t>(i)];
}

}  // namespace

std::vector<double> dega_reliabilities(int mother_n, const std::vector<double>& initial_mu) {
    if (!is_power_of_two(mother_n)) throw std::invalid_argument("dega_reliabilities: mother length");
    if (static_cast<int>(initial_mu.size()) != mother_n)
        throw std::invalid_argument("dega_reliabilities: channel vector length");
    std::vector<double> mu = initial_mu;
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(mother_n));
    dega_rec(mu, 0, mother_n, out);
    return out;
}

std::vector<int> removed_positions(int mother_n, int n, PolarMatching matching, PolarOrder order) {
    int s = mother_n - n;
    if (s < 0) throw std::invalid_argument("removed_positions: n exceeds mother length");
    std::vector<int> removed;
    if (s == 0) return removed;
    if (matching == PolarMatching::None)
        throw std::invalid_argument("removed_positions: matching required for n < mother_n");
    int m = log2_exact(mother_n);
    for (int i = 0; i < s; ++i) {
        int idx = matching == PolarMatching::Puncture ? i : mother_n - s + i;
        removed.push_back(order == PolarOrder::BitReverse ? bit_reverse(idx, m) : idx);
    }
    std::sort(removed.begin(), removed.end());
    return removed;
}

PolarSpec construct_polar(int n, int k, PolarMatching matching, PolarOrder order,
                          double design_es_n0_linear) {
    if (n < 1 || k < 0 || k > n) throw std::invalid_argument("construct_polar: bad dimensions");
    PolarSpec spec;
    spec.mother_n = 1;
    while (spec.mother_n < n) spec.mother_n <<= 1;
    if (matching == PolarMatching::None && spec.mother_n != n)
        throw std::invalid_argument("construct_polar: length is not a power of two");
    spec.n = n;
    spec.k = k;
    spec.matching = matching;
    spec.order = order;
    spec.design_es_n0 = design_es_n0_linear;
    spec.removed = removed_positions(spec.mother_n, n, matching, order);

    std::vector<double> mu(static_cast<std::size_t>(spec.mother_n), 4.0 * design_es_n0_linear);
    for (int r : spec.removed)
        mu[static_cast<std::size_t>(r)] = matching == PolarMatching::Shorten ? kInf : 0.0;
    std::vector<double> perr = dega_reliabilities(spec.mother_n, mu);

    spec.frozen.assign(static_cast<std::size_t>(spec.mother_n), 0);
    int frozen_needed = spec.mother_n - k;
    int forced = 0;
    if (matching == PolarMatching::Shorten) {
        // Inputs at the removed indices force the removed code bits to zero.
        for (int r : spec.removed) {
            spec.frozen[static_cast<std::size_t>(r)] = 1;
            ++forced;
        }
    }
    std::vector<int> rest;
    for (int i = 0; i < spec.mother_n; ++i)
        if (!spec.frozen[static_cast<std::size_t>(i)]) rest.push_back(i);
    std::stable_sort(rest.begin(), rest.end(), [&](int a, int b) {
        return perr[static_cast<std::size_t>(a)] > perr[static_cast<std::size_t>(b)];
    });
    for (int i = 0; i < frozen_needed - forced; ++i)
        spec.frozen[static_cast<std::size_t>(rest[static_cast<std::size_t>(i)])] = 1;

    for (int i = 0; i < spec.mother_n; ++i)
        if (!spec.frozen[static_cast<std::size_t>(i)]) spec.info_positions.push_back(i);
    return spec;
}

namespace {

void polar_transform(std::uint8_t* x, int n) {
    for (int h = 1; h < n; h <<= 1)
        for (int base = 0; base < n; base += 2 * h)
            for (int j = base; j < base + h; ++j) x[j] ^= x[j + h];
}

}  // namespace

BitVector polar_encode(const PolarSpec& spec, const BitVector& message) {
    if (static_cast<int>(message.size()) != spec.k)
        throw std::invalid_argument("polar_encode: message length mismatch");
    std::vector<std::uint8_t> x(static_cast<std::size_t>(spec.mother_n), 0);
    for (std::size_t i = 0; i < spec.info_positions.size(); ++i)
        x[static_cast<std::size_t>(spec.info_positions[i])] = message.get(i);
    polar_transform(x.data(), spec.mother_n);
    BitVector out(static_cast<std::size_t>(spec.n));
    std::size_t r = 0, o = 0;
    for (int i = 0; i < spec.mother_n; ++i) {
        if (r < spec.removed.size() && spec.removed[r] == i) {
            ++r;
            continue;
        }
        out.set(o++, x[static_cast<std::size_t>(i)]);
    }
    return out;
}

PolarDecoder::PolarDecoder(const PolarSpec& spec, bool simplified)
    : spec_(spec), simplified_(simplified) {
    int depth = log2_exact(spec.mother_n);
    llr_arena_.resize(static_cast<std::size_t>(std::max(depth, 1)));
    int size = spec.mother_n / 2;
    for (auto& buf : llr_arena_) {
        buf.resize(static_cast<std::size_t>(std::max(size, 1)));
        size /= 2;
    }
    cw_.resize(static_cast<std::size_t>(spec.mother_n));
    scratch_bits_.resize(static_cast<std::size_t>(spec.mother_n));
    frozen_count_.assign(static_cast<std::size_t>(spec.mother_n) + 1, 0);
    for (int i = 0; i < spec.mother_n; ++i)
        frozen_count_[static_cast<std::size_t>(i) + 1] =
            frozen_count_[static_cast<std::size_t>(i)] + spec.frozen[static_cast<std::size_t>(i)];
}

void PolarDecoder::decode_rec(int offset, int size, int input_offset, double* llr) {
    int frozen_in_range = frozen_count_[static_cast<std::size_t>(input_offset + size)] -
                          frozen_count_[static_cast<std::size_t>(input_offset)];
    bool rate0 = frozen_in_range == size;
    bool rate1 = frozen_in_range == 0;
    if ((simplified_ || size == 1) && rate0) {
        std::fill(cw_.begin() + offset, cw_.begin() + offset + size, 0);
        return;
    }
    if ((simplified_ || size == 1) && rate1) {
        for (int i = 0; i < size; ++i) cw_[static_cast<std::size_t>(offset + i)] = hard_bit(llr[i]);
        // message bits: invert the transform (it is an involution)
        std::copy(cw_.begin() + offset, cw_.begin() + offset + size, scratch_bits_.begin());
        polar_transform(scratch_bits_.data(), size);
        std::size_t msg_at = msg_.size();
        msg_.resize(msg_at + static_cast<std::size_t>(size));
        std::copy(scratch_bits_.begin(), scratch_bits_.begin() + size, msg_.begin() + static_cast<std::ptrdiff_t>(msg_at));
        return;
    }
    int half = size / 2;
    int depth = 0;
    for (int s = spec_.mother_n; s > size; s /= 2) ++depth;
    double* child = llr_arena_[static_cast<std::size_t>(depth)].data();
    for (int i = 0; i < half; ++i) child[i] = boxplus_min(llr[i], llr[half + i]);
    decode_rec(offset, half, input_offset, child);
    for (int i = 0; i < half; ++i)
        child[i] = (1.0 - 2.0 * cw_[static_cast<std::size_t>(offset + i)]) * llr[i] + llr[half + i];
    decode_rec(offset + half, half, input_offset + half, child);
    for (int i = 0; i < half; ++i)
        cw_[static_cast<std::size_t>(offset + i)] ^= cw_[static_cast<std::size_t>(offset + half + i)];
}

ScResult PolarDecoder::decode(std::span<const double> llr) {
    if (static_cast<int>(llr.size()) != spec_.n)
        throw std::invalid_argument("polar decode: LLR length mismatch");
    llr_full_.resize(static_cast<std::size_t>(spec_.mother_n));
    std::size_t r = 0, in = 0;
    for (int i = 0; i < spec_.mother_n; ++i) {
        if (r < spec_.removed.size() && spec_.removed[r] == i) {
            llr_full_[static_cast<std::size_t>(i)] =
                spec_.matching == PolarMatching::Shorten ? kLlrSaturation : 0.0;
            ++r;
        } else {
            llr_full_[static_cast<std::size_t>(i)] = llr[in++];
        }
    }
    msg_.clear();
    decode_rec(0, spec_.mother_n, 0, llr_full_.data());

    ScResult res;
    res.message = BitVector(msg_.size());
    for (std::size_t i = 0; i < msg_.size(); ++i) res.message.set(i, msg_[i]);
    res.codeword = BitVector(static_cast<std::size_t>(spec_.n));
    r = 0;
    std::size_t o = 0;
    for (int i = 0; i < spec_.mother_n; ++i) {
        if (r < spec_.removed.size() && spec_.removed[r] == i) {
            ++r;
            continue;
        }
        res.codeword.set(o++, cw_[static_cast<std::size_t>(i)]);
    }
    return res;
}

ScResult polar_sc_decode(const PolarSpec& spec, std::span<const double> llr) {
    PolarDecoder dec(spec, true);
    return dec.decode(llr);
}

ScResult polar_sc_decode_plain(const PolarSpec& spec, std::span<const double> llr) {
    PolarDecoder dec(spec, false);
    return dec.decode(llr);
}

double polar_analytic_bler(const PolarSpec& spec, double eb_n0_linear) {
    double rate = static_cast<double>(spec.k) / spec.n;
    double mu_ch = 4.0 * rate * eb_n0_linear;
    std::vector<double> mu(static_cast<std::size_t>(spec.mother_n), mu_ch);
    for (int r : spec.removed)
        mu[static_cast<std::size_t>(r)] = spec.matching == PolarMatching::Shorten ? kInf : 0.0;
    std::vector<double> perr = dega_reliabilities(spec.mother_n, mu);
    double log_ok = 0.0;
    for (int i : spec.info_positions)
        log_ok += std::log1p(-std::min(perr[static_cast<std::size_t>(i)], 1.0 - 1e-300));
    return -std::expm1(log_ok);
}

PolarSpec polar_design_for_target(int n, int k, PolarMatching matching, PolarOrder order,
                                  double target_bler) {
    if (!(target_bler > 0.0 && target_bler < 1.0))
        throw std::invalid_argument("polar_design_for_target: target outside (0,1)");
    double rate = static_cast<double>(k) / n;
    double lo = 1e-4, hi = 1e4;
    for (int it = 0; it < 100; ++it) {
        double mid = std::sqrt(lo * hi);
        PolarSpec spec = construct_polar(n, k, matching, order, mid);
        double b = polar_analytic_bler(spec, mid / rate);
        if (b > 0.0 && std::fabs(b / target_bler - 1.0) <= 0.02) return spec;
        if (b > target_bler) lo = mid; else hi = mid;
    }
    throw SearchError("polar_design_for_target: no design SNR reaches the target BLER");
}

std::string to_string(PolarMatching m) {
    switch (m) {
        case PolarMatching::None: return "none";
        case PolarMatching::Puncture: return "puncture";
        case PolarMatching::Shorten: return "shorten";
    }
    return "?";
}

std::string to_string(PolarOrder o) {
    return o == PolarOrder::Natural ? "natural" : "bitrev";
}

}  // namespace orcas
