#pragma once

// Counter-based RNG (Philox4x32-10) plus the sampling primitives the Monte
// Carlo paths need.  Counter-based generation gives reproducible, seekable
// sub-streams: (seed, stream, block) fully determines every output, so draws
// can be partitioned across metrics/blocks without any shared state.

#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>

#include "plsec/errors.hpp"

namespace plsec {

namespace philox {

inline constexpr std::uint32_t kMult0 = 0xD2511F53u;
inline constexpr std::uint32_t kMult1 = 0xCD9E8D57u;
inline constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
inline constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

inline void round_once(std::array<std::uint32_t, 4>& ctr, std::uint32_t k0,
                       std::uint32_t k1) {
    const std::uint64_t prod0 = static_cast<std::uint64_t>(kMult0) * ctr[0];
    const std::uint64_t prod1 = static_cast<std::uint64_t>(kMult1) * ctr[2];
    const std::uint32_t hi0 = static_cast<std::uint32_t>(prod0 >> 32);
    const std::uint32_t lo0 = static_cast<std::uint32_t>(prod0);
    const std::uint32_t hi1 = static_cast<std::uint32_t>(prod1 >> 32);
    const std::uint32_t lo1 = static_cast<std::uint32_t>(prod1);
    ctr = {hi1 ^ ctr[1] ^ k0, lo1, hi0 ^ ctr[3] ^ k1, lo0};
}

// One 128-bit block of Philox4x32-10 output.
inline std::array<std::uint32_t, 4> block(std::uint64_t seed, std::uint64_t stream,
                                          std::uint64_t index) {
    std::array<std::uint32_t, 4> ctr = {
        static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32),
        static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
    std::uint32_t k0 = static_cast<std::uint32_t>(seed);
    std::uint32_t k1 = static_cast<std::uint32_t>(seed >> 32);
    for (int r = 0; r < 10; ++r) {
        round_once(ctr, k0, k1);
        k0 += kWeyl0;
        k1 += kWeyl1;
    }
    return ctr;
}

} // namespace philox

// A deterministic stream of random values identified by (seed, stream).
class rng_stream {
public:
    explicit rng_stream(std::uint64_t seed, std::uint64_t stream = 0)
        : seed_(seed), stream_(stream) {}

    std::uint64_t seed() const noexcept { return seed_; }
    std::uint64_t stream() const noexcept { return stream_; }

    std::uint32_t next_u32() {
        if (pos_ == 4) {
            buf_ = philox::block(seed_, stream_, block_index_++);
            pos_ = 0;
        }
        return buf_[pos_++];
    }

    std::uint64_t next_u64() {
        const std::uint64_t lo = next_u32();
        const std::uint64_t hi = next_u32();
        return lo | (hi << 32);
    }

    // Uniform on (0,1]: 53 random bits, never exactly zero (safe for log()).
    double uniform01() {
        return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
    }

    // Standard exponential via inversion.
    double exponential() { return -std::log(uniform01()); }

    // Standard normal via Box-Muller; the second deviate of each pair is cached.
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = uniform01();
        const double u2 = uniform01();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double theta = 2.0 * std::numbers::pi * u2;
        spare_ = r * std::sin(theta);
        have_spare_ = true;
        return r * std::cos(theta);
    }

    // Gamma(shape, scale 1) via Marsaglia-Tsang squeeze; shape<1 handled by the
    // boost Gamma(shape) = Gamma(shape+1) * U^(1/shape).
    double gamma(double shape) {
        if (!(shape > 0.0))
            throw invalid_argument_error("rng_stream::gamma: shape must be > 0", "shape");
        if (shape < 1.0)
            return gamma(shape + 1.0) * std::pow(uniform01(), 1.0 / shape);
        const double d = shape - 1.0 / 3.0;
        const double c = 1.0 / std::sqrt(9.0 * d);
        for (;;) {
            double x, v;
            do {
                x = normal();
                v = 1.0 + c * x;
            } while (v <= 0.0);
            v = v * v * v;
            const double u = uniform01();
            const double x2 = x * x;
            if (u < 1.0 - 0.0331 * x2 * x2) return d * v;
            if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) return d * v;
        }
    }

private:
    std::uint64_t seed_;
    std::uint64_t stream_;
    std::uint64_t block_index_ = 0;
    std::array<std::uint32_t, 4> buf_{};
    int pos_ = 4;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

} // namespace plsec
