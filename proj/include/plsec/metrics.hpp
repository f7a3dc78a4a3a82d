#pragma once

// Secrecy metrics for the three-node wiretap setup over independent fading:
// outage probability (and its high-rate lower bound), probability of non-zero
// secrecy capacity, average secrecy capacity, and ergodic secrecy capacity.
// All integrals run on adaptive Gauss-Kronrod quadrature; probability outputs
// are range-checked before roundoff-level clamping.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "plsec/channels.hpp"
#include "plsec/errors.hpp"
#include "plsec/quadrature.hpp"

namespace plsec {

struct secrecy_scenario {
    channel_model main;    // legitimate receiver
    channel_model wiretap; // eavesdropper
    double rate_threshold = 0.0; // bits/s/Hz, for outage metrics

    void validate() const {
        if (!main.valid())
            throw invalid_argument_error("secrecy_scenario: main channel not set",
                                         "main");
        if (!wiretap.valid())
            throw invalid_argument_error("secrecy_scenario: wiretap channel not set",
                                         "wiretap");
        if (!(rate_threshold >= 0.0) || !std::isfinite(rate_threshold))
            throw invalid_argument_error(
                "secrecy_scenario: rate_threshold must be finite and >= 0",
                "rate_threshold");
    }
};

// Instantaneous secrecy capacity of one (main, wiretap) SNR draw.
inline double secrecy_capacity(double snr_main, double snr_wiretap) {
    return std::max(0.0, std::log2((1.0 + snr_main) / (1.0 + snr_wiretap)));
}

namespace detail {

inline double checked_probability(double p, const char* what,
                                  double tol = 1.0e-6) {
    if (!(p > -tol) || !(p < 1.0 + tol))
        throw accuracy_error(std::string(what) + ": probability outside [0,1]", p,
                             std::max(-p, p - 1.0));
    return std::clamp(p, 0.0, 1.0);
}

} // namespace detail

// P(secrecy capacity <= rate_threshold): the eavesdropper-pdf-weighted main
// CDF at the outage boundary 2^R (1 + snr_e) - 1.
inline double sop(const secrecy_scenario& scn, const quadrature_config& cfg = {}) {
    scn.validate();
    const double pow2r = std::exp2(scn.rate_threshold);
    quadrature_config c = cfg;
    c.scale = scn.wiretap.mean_snr();
    auto integrand = [&](double g) {
        return scn.wiretap.pdf(g) * scn.main.cdf(pow2r * (1.0 + g) - 1.0);
    };
    const double v = integrate_semi_infinite_checked(integrand, c, "sop");
    return detail::checked_probability(v, "sop");
}

// Tractable lower bound on the outage probability: drops the "+1" inside the
// outage boundary, i.e. uses 2^R snr_e instead of 2^R (1 + snr_e) - 1.
inline double sop_lower_bound(const secrecy_scenario& scn,
                              const quadrature_config& cfg = {}) {
    scn.validate();
    const double pow2r = std::exp2(scn.rate_threshold);
    quadrature_config c = cfg;
    c.scale = scn.wiretap.mean_snr();
    auto integrand = [&](double g) {
        return scn.wiretap.pdf(g) * scn.main.cdf(pow2r * g);
    };
    const double v = integrate_semi_infinite_checked(integrand, c, "sop_lower_bound");
    return detail::checked_probability(v, "sop_lower_bound");
}

// P(secrecy capacity > 0) = P(snr_main > snr_wiretap).
inline double pnz(const secrecy_scenario& scn, const quadrature_config& cfg = {}) {
    scn.validate();
    quadrature_config c = cfg;
    c.scale = scn.wiretap.mean_snr();
    auto integrand = [&](double g) {
        return scn.wiretap.pdf(g) * (1.0 - scn.main.cdf(g));
    };
    const double v = integrate_semi_infinite_checked(integrand, c, "pnz");
    return detail::checked_probability(v, "pnz");
}

// Average secrecy capacity E[max(0, log2(1+snr_b) - log2(1+snr_e))] as an
// iterated integral: outer over the eavesdropper pdf, inner over the main
// channel's tail above the eavesdropper draw.
inline double asc(const secrecy_scenario& scn, const quadrature_config& cfg = {}) {
    scn.validate();
    const double ln2 = std::numbers::ln2;
    quadrature_config outer_cfg = cfg;
    outer_cfg.scale = scn.wiretap.mean_snr();
    quadrature_config inner_cfg = cfg; // separate subdivision budget per call
    inner_cfg.scale = scn.main.mean_snr();
    auto inner = [&](double e) {
        auto f = [&](double y) { // y = snr_b - e >= 0
            return scn.main.pdf(e + y) * std::log1p(y / (1.0 + e)) / ln2;
        };
        return integrate_semi_infinite_checked(f, inner_cfg, "asc inner");
    };
    auto integrand = [&](double e) { return scn.wiretap.pdf(e) * inner(e); };
    const double v = integrate_semi_infinite_checked(integrand, outer_cfg, "asc");
    if (v < -1.0e-9)
        throw accuracy_error("asc: negative capacity average", v, -v);
    return std::max(v, 0.0);
}

// Ergodic secrecy capacity [E log2(1+snr_b) - E log2(1+snr_e)]^+ with each
// expectation taken over its own channel.
inline double esc(const secrecy_scenario& scn, const quadrature_config& cfg = {}) {
    scn.validate();
    const double ln2 = std::numbers::ln2;
    auto expected_log = [&](const channel_model& ch, const char* what) {
        quadrature_config c = cfg;
        c.scale = ch.mean_snr();
        auto f = [&](double g) { return ch.pdf(g) * std::log1p(g) / ln2; };
        return integrate_semi_infinite_checked(f, c, what);
    };
    const double eb = expected_log(scn.main, "esc main");
    const double ee = expected_log(scn.wiretap, "esc wiretap");
    return std::max(0.0, eb - ee);
}

} // namespace plsec
