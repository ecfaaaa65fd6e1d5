#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "orcas/bitmath.hpp"
#include "orcas/polar.hpp"
#include "orcas/tree.hpp"

namespace orcas {

// Counter-based generator: Philox4x32-10 (Random123 constants) feeding
// Box-Muller. Every draw is addressed by (seed, stream, frame, index), so
// frames are reproducible in any execution order. Algorithm id: "philox4x32-10/bm v1".
struct Philox {
    static std::array<std::uint32_t, 4> block(std::uint64_t seed, std::uint32_t stream,
                                              std::uint64_t frame, std::uint64_t index);
};

// Per-frame deterministic substream of uniform bits / Gaussian pairs.
class FrameRng {
public:
    FrameRng(std::uint64_t seed, std::uint32_t stream, std::uint64_t frame)
        : seed_(seed), stream_(stream), frame_(frame) {}

    bool next_bit();
    double next_gaussian();

private:
    void refill();

    std::uint64_t seed_;
    std::uint32_t stream_;
    std::uint64_t frame_;
    std::uint64_t index_ = 0;
    std::array<std::uint32_t, 4> buf_{};
    int bit_pos_ = 128;      // forces refill
    double spare_ = 0.0;
    bool have_spare_ = false;
    std::uint64_t gauss_index_ = 0;
};

struct ChannelConfig {
    double eb_n0_db = 0.0;
    double rate = 0.5;   // k / n
    double sigma = 1.0;  // derived: Es/N0 = rate * Eb/N0, sigma = 1/sqrt(2 Es/N0)
};

ChannelConfig make_channel(double eb_n0_db, int n, int k);

struct StopRule {
    long long min_errors = 100;
    long long max_frames = 10'000'000;
};

struct TrialRecord {
    long long frames = 0;
    long long frame_errors = 0;
    long long bit_errors = 0;
    long long codeword_errors = 0;
    double elapsed_s = 0.0;
    std::uint64_t seed = 0;

    double bler() const { return frames ? static_cast<double>(frame_errors) / frames : 0.0; }
};

// BPSK: bit 0 -> +1, bit 1 -> -1.
std::vector<double> modulate(const BitVector& cw);

// L = 2 y / sigma^2.
LlrVector channel_llr(const std::vector<double>& y, double sigma);

// Type-erased encoder/decoder pair the Monte Carlo engine runs against.
struct CodeSystem {
    std::string name;
    int n = 0;
    int k = 0;
    std::function<BitVector(const BitVector&)> encode;
    std::function<ScResult(const LlrVector&)> decode;  // not thread-safe (shared workspace)
};

CodeSystem make_system(std::shared_ptr<const CodeTree> tree, DecodeOptions options = {},
                       std::string name = "orcas");
CodeSystem make_system(std::shared_ptr<const PolarSpec> spec, bool simplified = true,
                       std::string name = "polar");

TrialRecord run_point(const CodeSystem& system, const ChannelConfig& config, StopRule stop,
                      std::uint64_t seed, bool all_zero = false);

std::vector<TrialRecord> run_sweep(const CodeSystem& system, const std::vector<double>& eb_n0_db,
                                   StopRule stop, std::uint64_t seed);

// Single-threaded decode throughput in codewords per second over
// pre-generated noisy frames.
double measure_throughput(const CodeSystem& system, double seconds, double es_n0_db = 2.0,
                          std::uint64_t seed = 1);

}  // namespace orcas
