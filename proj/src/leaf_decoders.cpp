#include "orcas/leaf_decoders.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace orcas {

double boxplus_exact(double a, double b) {
    double m = boxplus_min(a, b);
    // ln((1+e^{a+b})/(e^a+e^b)) = sgn(a)sgn(b)min(|a|,|b|)
    //                             + log1p(e^{-|a+b|}) - log1p(e^{-|a-b|})
    return m + std::log1p(std::exp(-std::fabs(a + b))) - std::log1p(std::exp(-std::fabs(a - b)));
}

std::vector<double> group_sum_llr(std::span<const double> llr, const std::vector<int>& group_of,
                                  int num_groups) {
    if (llr.size() != group_of.size())
        throw std::invalid_argument("group_sum_llr: group map does not cover the input");
    std::vector<double> totals(static_cast<std::size_t>(num_groups), 0.0);
    for (std::size_t i = 0; i < llr.size(); ++i)
        totals[static_cast<std::size_t>(group_of[i])] += llr[i];
    return totals;
}

std::vector<double> group_boxplus_llr(std::span<const double> llr,
                                      const std::vector<int>& group_of, int num_groups) {
    if (llr.size() != group_of.size())
        throw std::invalid_argument("group_boxplus_llr: group map does not cover the input");
    std::vector<double> combined(static_cast<std::size_t>(num_groups), kLlrSaturation);
    for (std::size_t i = 0; i < llr.size(); ++i) {
        double& c = combined[static_cast<std::size_t>(group_of[i])];
        c = boxplus_min(c, llr[i]);
    }
    return combined;
}

namespace {

// In-place Walsh-Hadamard transform: x[m] <- sum_i (-1)^{<m,i>} x[i].
void fht(double* x, std::size_t n) {
    for (std::size_t h = 1; h < n; h <<= 1) {
        for (std::size_t base = 0; base < n; base += 2 * h) {
            for (std::size_t j = base; j < base + h; ++j) {
                double u = x[j], v = x[j + h];
                x[j] = u + v;
                x[j + h] = u - v;
            }
        }
    }
}

LeafDecodeResult wrap(const std::uint8_t* cw, int n, const std::uint8_t* msg, int k) {
    LeafDecodeResult res;
    res.codeword = BitVector(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        if (cw[i]) res.codeword.set(static_cast<std::size_t>(i), true);
    res.message = BitVector(static_cast<std::size_t>(k));
    for (int b = 0; b < k; ++b)
        if (msg[b]) res.message.set(static_cast<std::size_t>(b), true);
    return res;
}

}  // namespace

void decode_nprs_fht_raw(const double* llr, const NprsCode& code, LeafWorkspace& ws,
                         std::uint8_t* cw, std::uint8_t* msg) {
    std::size_t size = std::size_t(1) << code.k;
    if (ws.metrics.size() < size) ws.metrics.resize(size);
    double* x = ws.metrics.data();
    std::fill(x, x + size, 0.0);
    for (int p = 0; p < code.n; ++p)
        x[static_cast<std::size_t>(code.column_of[static_cast<std::size_t>(p)])] += llr[p];
    // x[m] becomes the correlation sum_p (1-2c_p) llr_p of message m; the
    // final butterfly stage is fused with the argmax.
    std::uint32_t best = 0;
    if (size == 2) {
        double t0 = x[0] + x[1], t1 = x[0] - x[1];
        best = t1 > t0 ? 1 : 0;
    } else {
        std::size_t half = size >> 1;
        fht(x, half);
        fht(x + half, half);
        double best_val = x[0] + x[half];
        for (std::uint32_t m = 0; m < half; ++m) {
            double u = x[m], v = x[m + half];
            double top = u + v, bottom = u - v;
            if (top > best_val) {
                best_val = top;
                best = m;
            }
            if (bottom > best_val) {
                best_val = bottom;
                best = m + static_cast<std::uint32_t>(half);
            }
        }
    }
    for (int p = 0; p < code.n; ++p)
        cw[p] = std::popcount(best & static_cast<std::uint32_t>(
                                         code.column_of[static_cast<std::size_t>(p)])) &
                1u;
    for (int b = 0; b < code.k; ++b) msg[b] = (best >> b) & 1u;
}

void decode_cw_raw(const double* llr, const NprsCode& code, LeafWorkspace& ws, std::uint8_t* cw,
                   std::uint8_t* msg) {
    if (ws.metrics.size() < 3) ws.metrics.resize(3);
    double* t = ws.metrics.data();
    t[0] = t[1] = t[2] = 0.0;
    for (int p = 0; p < code.n; ++p)
        t[static_cast<std::size_t>(code.column_of[static_cast<std::size_t>(p)] - 1)] += llr[p];
    std::uint8_t h[3];
    for (int i = 0; i < 3; ++i) h[i] = hard_bit(t[i]);
    if (h[0] ^ h[1] ^ h[2]) {
        int flip = 0;
        for (int i = 1; i < 3; ++i)
            if (std::fabs(t[i]) < std::fabs(t[flip])) flip = i;
        h[flip] ^= 1;
    }
    for (int p = 0; p < code.n; ++p)
        cw[p] = h[static_cast<std::size_t>(code.column_of[static_cast<std::size_t>(p)] - 1)];
    msg[0] = h[0];
    msg[1] = h[1];
}

void decode_repetition_raw(const double* llr, int n, std::uint8_t* cw, std::uint8_t* msg) {
    double sum = 0.0;
    for (int i = 0; i < n; ++i) sum += llr[i];
    std::uint8_t b = hard_bit(sum);
    std::fill(cw, cw + n, b);
    msg[0] = b;
}

void decode_rate1_raw(const double* llr, int n, std::uint8_t* cw) {
    for (int i = 0; i < n; ++i) cw[i] = hard_bit(llr[i]);
}

void decode_spc_raw(const double* llr, int n, std::uint8_t* cw) {
    std::uint8_t parity = 0;
    int weakest = 0;
    for (int i = 0; i < n; ++i) {
        cw[i] = hard_bit(llr[i]);
        parity ^= cw[i];
        if (std::fabs(llr[i]) < std::fabs(llr[weakest])) weakest = i;
    }
    if (parity) cw[weakest] ^= 1;
}

namespace {

// Shared tail of the NPRSD decoders: effective LLRs in ws.metrics, raw hard
// parities in ws.hard, target effective bits in ws.flipped (as xor mask).
void finish_nprsd_raw(const double* llr, const NprsdCode& code, LeafWorkspace& ws,
                      std::uint8_t* cw) {
    for (int p = 0; p < code.n; ++p) cw[p] = hard_bit(llr[p]);
    std::size_t d_eff = code.eff_pattern.size();
    for (std::size_t e = 0; e < d_eff; ++e) {
        if (!ws.flipped[e]) continue;
        const std::vector<int>& grp = code.eff_positions[e];
        int weakest = grp[0];
        for (int p : grp)
            if (std::fabs(llr[p]) < std::fabs(llr[weakest])) weakest = p;
        cw[weakest] ^= 1;
    }
}

void make_effective_raw(const double* llr, const NprsdCode& code, LeafWorkspace& ws) {
    std::size_t d_eff = code.eff_pattern.size();
    if (ws.metrics.size() < d_eff) ws.metrics.resize(d_eff);
    if (ws.hard.size() < d_eff) ws.hard.resize(d_eff);
    if (ws.flipped.size() < d_eff) ws.flipped.resize(d_eff);
    std::fill(ws.metrics.begin(), ws.metrics.begin() + static_cast<std::ptrdiff_t>(d_eff),
              kLlrSaturation);
    std::fill(ws.hard.begin(), ws.hard.begin() + static_cast<std::ptrdiff_t>(d_eff), 0);
    std::fill(ws.flipped.begin(), ws.flipped.begin() + static_cast<std::ptrdiff_t>(d_eff), 0);
    for (int p = 0; p < code.n; ++p) {
        std::size_t e = static_cast<std::size_t>(code.eff_of[static_cast<std::size_t>(p)]);
        ws.metrics[e] = boxplus_min(ws.metrics[e], llr[p]);
        ws.hard[e] ^= hard_bit(llr[p]) ? 1 : 0;
    }
}

}  // namespace

void decode_nprsd_chase_raw(const double* llr, const NprsdCode& code, LeafWorkspace& ws,
                            std::uint8_t* cw) {
    int m = code.n - code.k;
    make_effective_raw(llr, code, ws);
    std::size_t d_eff = code.eff_pattern.size();

    int base_syndrome = 0;
    for (std::size_t e = 0; e < d_eff; ++e)
        if (ws.hard[e]) base_syndrome ^= code.eff_pattern[e];

    // p = n-k least reliable effective positions, ties by index.
    int p = m;
    ws.order.resize(d_eff);
    std::iota(ws.order.begin(), ws.order.end(), 0);
    std::partial_sort(ws.order.begin(), ws.order.begin() + p, ws.order.end(), [&](int a, int b) {
        double fa = std::fabs(ws.metrics[static_cast<std::size_t>(a)]);
        double fb = std::fabs(ws.metrics[static_cast<std::size_t>(b)]);
        return fa < fb || (fa == fb && a < b);
    });
    // order rank of an effective position, -1 when outside the test set
    ws.flips.assign(d_eff, -1);
    for (int b = 0; b < p; ++b) ws.flips[static_cast<std::size_t>(ws.order[b])] = b;

    // Walk patterns in Gray-code order so syndrome and cost update by a
    // single toggled position; ties resolve to the lowest pattern value,
    // identical to a plain ascending pattern loop.
    double best_cost = 0.0;
    bool found = false;
    std::uint32_t best_pattern = 0;
    int best_fix = -1;
    std::uint32_t gray = 0;
    int syndrome = base_syndrome;
    double cost = 0.0;
    const std::uint32_t count = std::uint32_t(1) << p;
    for (std::uint32_t i = 0;; ++i) {
        int fix = -1;
        bool valid = syndrome == 0;
        double total = cost;
        if (!valid) {
            fix = code.syndrome_to_eff[static_cast<std::size_t>(syndrome)];
            if (fix >= 0) {
                valid = true;
                int rank = ws.flips[static_cast<std::size_t>(fix)];
                bool in_pattern = rank >= 0 && ((gray >> rank) & 1u);
                total += in_pattern ? -std::fabs(ws.metrics[static_cast<std::size_t>(fix)])
                                    : std::fabs(ws.metrics[static_cast<std::size_t>(fix)]);
            }
        }
        if (valid && (!found || total < best_cost ||
                      (total == best_cost && gray < best_pattern))) {
            found = true;
            best_cost = total;
            best_pattern = gray;
            best_fix = fix;
        }
        if (i + 1 == count) break;
        int bit = std::countr_zero(i + 1);
        std::uint32_t mask = std::uint32_t(1) << bit;
        int e = ws.order[static_cast<std::size_t>(bit)];
        syndrome ^= code.eff_pattern[static_cast<std::size_t>(e)];
        cost += (gray & mask) ? -std::fabs(ws.metrics[static_cast<std::size_t>(e)])
                              : std::fabs(ws.metrics[static_cast<std::size_t>(e)]);
        gray ^= mask;
    }
    ws.best_flips.clear();
    if (found) {
        for (int b = 0; b < p; ++b)
            if ((best_pattern >> b) & 1u) ws.best_flips.push_back(ws.order[static_cast<std::size_t>(b)]);
        if (best_fix >= 0) {
            auto it = std::find(ws.best_flips.begin(), ws.best_flips.end(), best_fix);
            if (it != ws.best_flips.end()) ws.best_flips.erase(it);
            else ws.best_flips.push_back(best_fix);
        }
    }

    if (!found) {
        // Every test pattern fell outside the shortened code. Explain the
        // base syndrome with two parity columns instead.
        double pair_cost = 0.0;
        for (std::size_t e1 = 0; e1 < d_eff; ++e1) {
            int need = base_syndrome ^ code.eff_pattern[e1];
            int e2 = need > 0 ? code.syndrome_to_eff[static_cast<std::size_t>(need)] : -1;
            if (e2 < 0 || static_cast<std::size_t>(e2) <= e1) continue;
            double c = std::fabs(ws.metrics[e1]) + std::fabs(ws.metrics[static_cast<std::size_t>(e2)]);
            if (!found || c < pair_cost) {
                pair_cost = c;
                ws.best_flips = {static_cast<int>(e1), e2};
                found = true;
            }
        }
        if (!found) throw std::runtime_error("decode_nprsd_chase: syndrome table inconsistency");
    }

    for (int e : ws.best_flips) ws.flipped[static_cast<std::size_t>(e)] ^= 1;
    finish_nprsd_raw(llr, code, ws, cw);
}

void decode_dual_cw_raw(const double* llr, const NprsdCode& code, LeafWorkspace& ws,
                        std::uint8_t* cw) {
    make_effective_raw(llr, code, ws);
    std::size_t d_eff = code.eff_pattern.size();
    double sum = 0.0;
    for (std::size_t e = 0; e < d_eff; ++e) sum += ws.metrics[e];
    std::uint8_t b = hard_bit(sum);
    for (std::size_t e = 0; e < d_eff; ++e) ws.flipped[e] = ws.hard[e] != b;
    finish_nprsd_raw(llr, code, ws, cw);
}

LeafDecodeResult decode_nprs_fht(std::span<const double> llr, const NprsCode& code) {
    if (static_cast<int>(llr.size()) != code.n)
        throw std::invalid_argument("decode_nprs_fht: LLR length mismatch");
    LeafWorkspace ws;
    std::vector<std::uint8_t> cw(static_cast<std::size_t>(code.n)), msg(static_cast<std::size_t>(code.k));
    decode_nprs_fht_raw(llr.data(), code, ws, cw.data(), msg.data());
    return wrap(cw.data(), code.n, msg.data(), code.k);
}

LeafDecodeResult decode_cw(std::span<const double> llr, const NprsCode& code) {
    if (code.k != 2) throw std::invalid_argument("decode_cw: code dimension must be 2");
    if (static_cast<int>(llr.size()) != code.n)
        throw std::invalid_argument("decode_cw: LLR length mismatch");
    LeafWorkspace ws;
    std::vector<std::uint8_t> cw(static_cast<std::size_t>(code.n)), msg(2);
    decode_cw_raw(llr.data(), code, ws, cw.data(), msg.data());
    return wrap(cw.data(), code.n, msg.data(), 2);
}

LeafDecodeResult decode_repetition(std::span<const double> llr) {
    std::vector<std::uint8_t> cw(llr.size());
    std::uint8_t msg;
    decode_repetition_raw(llr.data(), static_cast<int>(llr.size()), cw.data(), &msg);
    return wrap(cw.data(), static_cast<int>(llr.size()), &msg, 1);
}

LeafDecodeResult decode_rate0(std::span<const double> llr) {
    return {BitVector(llr.size()), BitVector(0)};
}

LeafDecodeResult decode_rate1(std::span<const double> llr) {
    std::vector<std::uint8_t> cw(llr.size());
    decode_rate1_raw(llr.data(), static_cast<int>(llr.size()), cw.data());
    LeafDecodeResult res = wrap(cw.data(), static_cast<int>(llr.size()), cw.data(), 0);
    res.message = res.codeword;
    return res;
}

LeafDecodeResult decode_spc(std::span<const double> llr) {
    std::vector<std::uint8_t> cw(llr.size());
    decode_spc_raw(llr.data(), static_cast<int>(llr.size()), cw.data());
    LeafDecodeResult res = wrap(cw.data(), static_cast<int>(llr.size()), cw.data(), 0);
    res.message = BitVector(llr.size() - 1);
    for (std::size_t i = 1; i < llr.size(); ++i) res.message.set(i - 1, cw[i]);
    return res;
}

LeafDecodeResult decode_nprsd_chase(std::span<const double> llr, const NprsdCode& code) {
    if (static_cast<int>(llr.size()) != code.n)
        throw std::invalid_argument("decode_nprsd_chase: LLR length mismatch");
    LeafWorkspace ws;
    std::vector<std::uint8_t> cw(static_cast<std::size_t>(code.n));
    decode_nprsd_chase_raw(llr.data(), code, ws, cw.data());
    LeafDecodeResult res = wrap(cw.data(), code.n, cw.data(), 0);
    res.message = BitVector(static_cast<std::size_t>(code.k));
    for (std::size_t i = 0; i < code.message_positions.size(); ++i)
        res.message.set(i, cw[code.message_positions[i]]);
    return res;
}

LeafDecodeResult decode_dual_cw(std::span<const double> llr, const NprsdCode& code) {
    if (code.k != code.n - 2) throw std::invalid_argument("decode_dual_cw: k must be n-2");
    LeafWorkspace ws;
    std::vector<std::uint8_t> cw(static_cast<std::size_t>(code.n));
    decode_dual_cw_raw(llr.data(), code, ws, cw.data());
    LeafDecodeResult res = wrap(cw.data(), code.n, cw.data(), 0);
    res.message = BitVector(static_cast<std::size_t>(code.k));
    for (std::size_t i = 0; i < code.message_positions.size(); ++i)
        res.message.set(i, cw[code.message_positions[i]]);
    return res;
}

}  // namespace orcas
