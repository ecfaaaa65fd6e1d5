#include "orcas/simulator.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>

#include "orcas/leaf_decoders.hpp"

namespace orcas {

namespace {

constexpr std::uint32_t kPhiloxM0 = 0xD2511F53u;
constexpr std::uint32_t kPhiloxM1 = 0xCD9E8D57u;
constexpr std::uint32_t kPhiloxW0 = 0x9E3779B9u;
constexpr std::uint32_t kPhiloxW1 = 0xBB67AE85u;

inline void philox_round(std::array<std::uint32_t, 4>& c, std::uint32_t k0, std::uint32_t k1) {
    std::uint64_t p0 = static_cast<std::uint64_t>(kPhiloxM0) * c[0];
    std::uint64_t p1 = static_cast<std::uint64_t>(kPhiloxM1) * c[2];
    std::array<std::uint32_t, 4> out;
    out[0] = static_cast<std::uint32_t>(p1 >> 32) ^ c[1] ^ k0;
    out[1] = static_cast<std::uint32_t>(p1);
    out[2] = static_cast<std::uint32_t>(p0 >> 32) ^ c[3] ^ k1;
    out[3] = static_cast<std::uint32_t>(p0);
    c = out;
}

constexpr double kTwoPi = 6.283185307179586476925286766559;

}  // namespace

std::array<std::uint32_t, 4> Philox::block(std::uint64_t seed, std::uint32_t stream,
                                           std::uint64_t frame, std::uint64_t index) {
    std::array<std::uint32_t, 4> c{
        static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32),
        static_cast<std::uint32_t>(frame),
        static_cast<std::uint32_t>(frame >> 32) ^ (stream << 24)};
    std::uint32_t k0 = static_cast<std::uint32_t>(seed);
    std::uint32_t k1 = static_cast<std::uint32_t>(seed >> 32);
    for (int round = 0; round < 10; ++round) {
        philox_round(c, k0, k1);
        k0 += kPhiloxW0;
        k1 += kPhiloxW1;
    }
    return c;
}

void FrameRng::refill() {
    buf_ = Philox::block(seed_, stream_, frame_, index_++);
    bit_pos_ = 0;
}

bool FrameRng::next_bit() {
    if (bit_pos_ >= 128) refill();
    bool b = (buf_[static_cast<std::size_t>(bit_pos_ >> 5)] >> (bit_pos_ & 31)) & 1u;
    ++bit_pos_;
    return b;
}

double FrameRng::next_gaussian() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    // Dedicated counter range for Gaussians so bit and noise draws may share
    // a stream without overlap (they never do in practice: separate streams).
    std::array<std::uint32_t, 4> b = Philox::block(seed_, stream_, frame_, gauss_index_++);
    std::uint64_t a = (static_cast<std::uint64_t>(b[1]) << 32) | b[0];
    std::uint64_t c = (static_cast<std::uint64_t>(b[3]) << 32) | b[2];
    double u1 = (static_cast<double>(a >> 11) + 1.0) * 0x1.0p-53;  // (0,1]
    double u2 = static_cast<double>(c >> 11) * 0x1.0p-53;          // [0,1)
    double r = std::sqrt(-2.0 * std::log(u1));
    spare_ = r * std::sin(kTwoPi * u2);
    have_spare_ = true;
    return r * std::cos(kTwoPi * u2);
}

ChannelConfig make_channel(double eb_n0_db, int n, int k) {
    ChannelConfig c;
    c.eb_n0_db = eb_n0_db;
    c.rate = static_cast<double>(k) / n;
    double es_n0 = c.rate * std::pow(10.0, eb_n0_db / 10.0);
    c.sigma = 1.0 / std::sqrt(2.0 * es_n0);
    return c;
}

std::vector<double> modulate(const BitVector& cw) {
    std::vector<double> x(cw.size());
    for (std::size_t i = 0; i < cw.size(); ++i) x[i] = cw.get(i) ? -1.0 : 1.0;
    return x;
}

LlrVector channel_llr(const std::vector<double>& y, double sigma) {
    if (!(sigma > 0)) throw std::invalid_argument("channel_llr: sigma must be positive");
    LlrVector llr(y.size());
    double scale = 2.0 / (sigma * sigma);
    // Magnitudes at kLlrSaturation mean "known bit" throughout the decoders.
    for (std::size_t i = 0; i < y.size(); ++i)
        llr[i] = std::clamp(scale * y[i], -kLlrSaturation, kLlrSaturation);
    return llr;
}

CodeSystem make_system(std::shared_ptr<const CodeTree> tree, DecodeOptions options,
                       std::string name) {
    CodeSystem sys;
    sys.name = std::move(name);
    sys.n = tree->n;
    sys.k = tree->k;
    auto decoder = std::make_shared<OrcasDecoder>(*tree, options);
    sys.encode = [tree](const BitVector& msg) { return orcas::encode(*tree, msg); };
    sys.decode = [tree, decoder](const LlrVector& llr) { return decoder->decode(llr); };
    return sys;
}

CodeSystem make_system(std::shared_ptr<const PolarSpec> spec, bool simplified, std::string name) {
    CodeSystem sys;
    sys.name = std::move(name);
    sys.n = spec->n;
    sys.k = spec->k;
    auto decoder = std::make_shared<PolarDecoder>(*spec, simplified);
    sys.encode = [spec](const BitVector& msg) { return polar_encode(*spec, msg); };
    sys.decode = [spec, decoder](const LlrVector& llr) { return decoder->decode(llr); };
    return sys;
}

TrialRecord run_point(const CodeSystem& system, const ChannelConfig& config, StopRule stop,
                      std::uint64_t seed, bool all_zero) {
    if (stop.min_errors < 1) throw std::invalid_argument("run_point: min_errors must be >= 1");
    TrialRecord rec;
    rec.seed = seed;
    auto t0 = std::chrono::steady_clock::now();
    BitVector msg(static_cast<std::size_t>(system.k));
    std::vector<double> y(static_cast<std::size_t>(system.n));
    for (long long frame = 0; frame < stop.max_frames && rec.frame_errors < stop.min_errors;
         ++frame) {
        if (!all_zero) {
            FrameRng bits(seed, 0, static_cast<std::uint64_t>(frame));
            for (int i = 0; i < system.k; ++i) msg.set(static_cast<std::size_t>(i), bits.next_bit());
        }
        BitVector cw = system.encode(msg);
        FrameRng noise(seed, 1, static_cast<std::uint64_t>(frame));
        for (int i = 0; i < system.n; ++i)
            y[static_cast<std::size_t>(i)] =
                (cw.get(static_cast<std::size_t>(i)) ? -1.0 : 1.0) +
                config.sigma * noise.next_gaussian();
        ScResult res = system.decode(channel_llr(y, config.sigma));
        ++rec.frames;
        if (res.message != msg) {
            ++rec.frame_errors;
            for (int b = 0; b < system.k; ++b)
                rec.bit_errors += res.message.get(static_cast<std::size_t>(b)) !=
                                  msg.get(static_cast<std::size_t>(b));
        }
        if (res.codeword != cw) ++rec.codeword_errors;
    }
    rec.elapsed_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rec;
}

std::vector<TrialRecord> run_sweep(const CodeSystem& system, const std::vector<double>& eb_n0_db,
                                   StopRule stop, std::uint64_t seed) {
    std::vector<TrialRecord> out;
    out.reserve(eb_n0_db.size());
    for (double db : eb_n0_db)
        out.push_back(run_point(system, make_channel(db, system.n, system.k), stop, seed));
    return out;
}

double measure_throughput(const CodeSystem& system, double seconds, double es_n0_db,
                          std::uint64_t seed) {
    double es_n0 = std::pow(10.0, es_n0_db / 10.0);
    double sigma = 1.0 / std::sqrt(2.0 * es_n0);
    const int pool = 256;
    std::vector<LlrVector> frames;
    frames.reserve(pool);
    BitVector msg(static_cast<std::size_t>(system.k));
    std::vector<double> y(static_cast<std::size_t>(system.n));
    for (int f = 0; f < pool; ++f) {
        FrameRng bits(seed, 0, static_cast<std::uint64_t>(f));
        for (int i = 0; i < system.k; ++i) msg.set(static_cast<std::size_t>(i), bits.next_bit());
        BitVector cw = system.encode(msg);
        FrameRng noise(seed, 1, static_cast<std::uint64_t>(f));
        for (int i = 0; i < system.n; ++i)
            y[static_cast<std::size_t>(i)] =
                (cw.get(static_cast<std::size_t>(i)) ? -1.0 : 1.0) + sigma * noise.next_gaussian();
        frames.push_back(channel_llr(y, sigma));
    }

    // warm-up pass so lazy tables are excluded from the timing
    volatile bool sink = false;
    sink = sink ^ system.decode(frames[0]).codeword.get(0);

    auto t0 = std::chrono::steady_clock::now();
    long long count = 0;
    double elapsed = 0.0;
    while (elapsed < seconds) {
        for (int burst = 0; burst < 64; ++burst) {
            sink = sink ^ system.decode(frames[static_cast<std::size_t>(count % pool)]).codeword.get(0);
            ++count;
        }
        elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
    (void)sink;
    return static_cast<double>(count) / elapsed;
}

}  // namespace orcas
