#pragma once

// Monte Carlo estimation of the secrecy metrics, used as the independent
// cross-check for every analytic path.  Draw streams are carved out of the
// counter-based RNG in fixed-size blocks so results are bit-reproducible for
// a given (seed, n) regardless of how the work is chunked.

#include <algorithm>
#include <cmath>
#include <cstdint>

#include "plsec/errors.hpp"
#include "plsec/metrics.hpp"
#include "plsec/rng.hpp"

namespace plsec {

enum class secrecy_metric {
    sop,
    sop_lower_bound,
    pnz,
    asc,
    esc,
};

inline const char* metric_name(secrecy_metric m) {
    switch (m) {
        case secrecy_metric::sop: return "sop";
        case secrecy_metric::sop_lower_bound: return "sop_lb";
        case secrecy_metric::pnz: return "pnz";
        case secrecy_metric::asc: return "asc";
        case secrecy_metric::esc: return "esc";
    }
    return "unknown";
}

struct mc_estimate {
    double value = 0.0;
    double std_error = 0.0;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
};

namespace detail {

// The probability metrics share one stream base so sop/pnz consume identical
// draws (their estimates are exact complements when rate_threshold == 0);
// the capacity averages get disjoint bases.
inline std::uint64_t mc_stream_base(secrecy_metric m) {
    switch (m) {
        case secrecy_metric::sop:
        case secrecy_metric::sop_lower_bound:
        case secrecy_metric::pnz: return 0;
        case secrecy_metric::asc: return 0x100000000ull;
        case secrecy_metric::esc: return 0x200000000ull;
    }
    return 0;
}

} // namespace detail

inline mc_estimate mc_metric(const secrecy_scenario& scn, secrecy_metric metric,
                             std::uint64_t n, std::uint64_t seed) {
    scn.validate();
    if (n < 2)
        throw invalid_argument_error("mc_metric: need at least 2 samples", "n");
    const double pow2r = std::exp2(scn.rate_threshold);
    const std::uint64_t base = detail::mc_stream_base(metric);
    constexpr std::uint64_t kBlock = 65536;

    // accumulators: indicator count for probabilities; sums/sumsq for means
    double count = 0.0;
    double sum_b = 0.0, sumsq_b = 0.0; // asc value, or main-channel log term
    double sum_e = 0.0, sumsq_e = 0.0; // wiretap log term (esc only)

    std::uint64_t done = 0;
    for (std::uint64_t block = 0; done < n; ++block) {
        rng_stream rng_b(seed, base + 2 * block);
        rng_stream rng_e(seed, base + 2 * block + 1);
        const std::uint64_t todo = std::min(kBlock, n - done);
        for (std::uint64_t i = 0; i < todo; ++i) {
            const double gb = scn.main.sample(rng_b);
            const double ge = scn.wiretap.sample(rng_e);
            switch (metric) {
                case secrecy_metric::sop:
                    if (1.0 + gb <= pow2r * (1.0 + ge)) count += 1.0;
                    break;
                case secrecy_metric::sop_lower_bound:
                    if (gb <= pow2r * ge) count += 1.0;
                    break;
                case secrecy_metric::pnz:
                    if (gb > ge) count += 1.0;
                    break;
                case secrecy_metric::asc: {
                    const double cs = secrecy_capacity(gb, ge);
                    sum_b += cs;
                    sumsq_b += cs * cs;
                    break;
                }
                case secrecy_metric::esc: {
                    const double ub = std::log2(1.0 + gb);
                    const double ue = std::log2(1.0 + ge);
                    sum_b += ub;
                    sumsq_b += ub * ub;
                    sum_e += ue;
                    sumsq_e += ue * ue;
                    break;
                }
            }
        }
        done += todo;
    }

    const double nd = static_cast<double>(n);
    mc_estimate out;
    out.samples = n;
    out.seed = seed;
    switch (metric) {
        case secrecy_metric::sop:
        case secrecy_metric::sop_lower_bound:
        case secrecy_metric::pnz: {
            const double p = count / nd;
            out.value = p;
            out.std_error = std::sqrt(std::max(p * (1.0 - p), 0.0) / nd);
            break;
        }
        case secrecy_metric::asc: {
            const double mean = sum_b / nd;
            const double var =
                std::max(sumsq_b - nd * mean * mean, 0.0) / (nd - 1.0);
            out.value = mean;
            out.std_error = std::sqrt(var / nd);
            break;
        }
        case secrecy_metric::esc: {
            const double mb = sum_b / nd;
            const double me = sum_e / nd;
            const double vb = std::max(sumsq_b - nd * mb * mb, 0.0) / (nd - 1.0);
            const double ve = std::max(sumsq_e - nd * me * me, 0.0) / (nd - 1.0);
            // the two expectations use independent draws, so variances add
            out.value = std::max(0.0, mb - me);
            out.std_error = std::sqrt((vb + ve) / nd);
            break;
        }
    }
    return out;
}

} // namespace plsec
