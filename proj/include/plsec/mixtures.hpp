#pragma once

// Finite-mixture representations of SNR distributions:
//  - mixture of gamma terms (exact for gamma-type families, Gauss-Laguerre
//    discretization of the shadowing mixture for composite families)
//  - mixture of Gaussians in the sqrt-SNR domain, fitted to samples by a
//    deterministic, seeded EM with k-means++ initialization.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <memory>
#include <numbers>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "plsec/channels.hpp"
#include "plsec/errors.hpp"
#include "plsec/rng.hpp"
#include "plsec/specfun.hpp"

namespace plsec {

// ---------------------------------------------------------------------------
// Mixture gamma:  pdf(x) = sum_l alpha_l x^(beta_l - 1) exp(-zeta_l x)
// ---------------------------------------------------------------------------
struct mg_component {
    double alpha = 0.0;
    double beta = 1.0;
    double zeta = 1.0;
};

struct mg_model {
    std::vector<mg_component> components;
    struct metadata_t {
        double fit_error = 0.0;        // max |pdf - reference pdf| on the tuning grid
        bool accuracy_warning = false; // set when the family is only approximable
        double laguerre_scale = 1.0;   // node compression factor actually used
        std::string reference;         // what fit_error was measured against
    } meta;

    // Total mixture mass; equals 1 for a valid model.
    double normalization() const {
        double s = 0.0;
        for (const auto& c : components)
            s += c.alpha * std::exp(std::lgamma(c.beta) - c.beta * std::log(c.zeta));
        return s;
    }

    // First moment (the represented mean SNR).
    double mean() const {
        double s = 0.0;
        for (const auto& c : components)
            s += c.alpha *
                 std::exp(std::lgamma(c.beta + 1.0) - (c.beta + 1.0) * std::log(c.zeta));
        return s;
    }

    double pdf(double snr) const {
        if (!(snr > 0.0))
            throw invalid_argument_error("mg_model::pdf: snr must be > 0", "snr");
        double s = 0.0;
        for (const auto& c : components)
            s += c.alpha * std::exp((c.beta - 1.0) * std::log(snr) - c.zeta * snr);
        return s;
    }

    double cdf(double snr) const {
        if (snr <= 0.0) return 0.0;
        double s = 0.0;
        for (const auto& c : components)
            s += c.alpha * std::exp(std::lgamma(c.beta) - c.beta * std::log(c.zeta)) *
                 gamma_p(c.beta, c.zeta * snr);
        return std::clamp(s, 0.0, 1.0);
    }

    void validate(double norm_tol = 1.0e-9) const {
        if (components.empty())
            throw invalid_argument_error("mg_model: no components", "components");
        for (const auto& c : components) {
            if (!(c.alpha > 0.0) || !std::isfinite(c.alpha))
                throw invalid_argument_error("mg_model: alpha must be finite and > 0",
                                             "alpha");
            if (!(c.beta > 0.0) || !std::isfinite(c.beta))
                throw invalid_argument_error("mg_model: beta must be finite and > 0",
                                             "beta");
            if (!(c.zeta > 0.0) || !std::isfinite(c.zeta))
                throw invalid_argument_error("mg_model: zeta must be finite and > 0",
                                             "zeta");
        }
        const double n = normalization();
        if (std::fabs(n - 1.0) > norm_tol)
            throw invalid_argument_error(
                "mg_model: mixture mass deviates from 1 by " + std::to_string(n - 1.0),
                "alpha");
    }
};

namespace detail {

inline void mg_renormalize(mg_model& mg) {
    const double n = mg.normalization();
    for (auto& c : mg.components) c.alpha /= n;
}

// Gamma-mixture for the compound construction
//   snr | u ~ Gamma(shape, rate zeta(u)),   u ~ Gamma(mix_shape, 1),
// where zeta(u) = rate_coeff * u (direct) or rate_coeff / u (reciprocal),
// discretized by an L-point Gauss-Laguerre rule with nodes compressed by
// `scale` (substituting u = scale * t keeps the rule exact for the weight
// exp(-t) while concentrating nodes where the mixing density peaks).
inline mg_model mg_compound(double shape, double mix_shape, double rate_coeff,
                            bool reciprocal_rate, std::size_t L, double scale) {
    const gauss_laguerre_rule rule = gauss_laguerre(L);
    mg_model mg;
    mg.components.reserve(L);
    const double log_norm = std::lgamma(shape) + std::lgamma(mix_shape);
    for (std::size_t i = 0; i < L; ++i) {
        const double t = rule.nodes[i];
        const double u = scale * t;
        const double zeta = reciprocal_rate ? rate_coeff / u : rate_coeff * u;
        const double log_alpha = std::log(scale * rule.weights[i]) +
                                 shape * std::log(zeta) +
                                 (mix_shape - 1.0) * std::log(u) - (scale - 1.0) * t -
                                 log_norm;
        mg.components.push_back({std::exp(log_alpha), shape, zeta});
    }
    mg_renormalize(mg);
    mg.meta.laguerre_scale = scale;
    return mg;
}

// Max absolute pdf deviation against a reference over the standard tuning
// grid (200 points spanning [0.01, 20] x mean).
template <class Ref>
double mg_grid_error(const mg_model& mg, const Ref& ref_pdf, double mean_snr) {
    double worst = 0.0;
    for (int i = 0; i < 200; ++i) {
        const double g = (0.01 + (20.0 - 0.01) * i / 199.0) * mean_snr;
        worst = std::max(worst, std::fabs(mg.pdf(g) - ref_pdf(g)));
    }
    return worst;
}

inline mg_model mg_compound_tuned(double shape, double mix_shape, double rate_coeff,
                                  bool reciprocal_rate, std::size_t L,
                                  const channel_spec& ref_spec) {
    auto ref = [&](double g) { return analytic_pdf(ref_spec, g); };
    mg_model best;
    double best_err = std::numeric_limits<double>::infinity();
    for (double scale : {1.0, 0.7, 0.5, 0.4, 0.3, 0.2}) {
        mg_model cand = mg_compound(shape, mix_shape, rate_coeff, reciprocal_rate, L,
                                    scale);
        const double err = mg_grid_error(cand, ref, ref_spec.mean_snr);
        if (err < best_err) {
            best_err = err;
            best = std::move(cand);
        }
    }
    best.meta.fit_error = best_err;
    return best;
}

} // namespace detail

// Gamma-mixture representation of a catalog channel.  Exact (single term) for
// the pure-gamma families; an L-term Gauss-Laguerre discretization of the
// shadowing mixture for composite ones, with the node scale tuned against the
// family's closed-form pdf and the residual recorded in metadata.
inline mg_model mg_from_channel(const channel_spec& spec, std::size_t L = 20) {
    spec.validate();
    if (L == 0) throw invalid_argument_error("mg_from_channel: L must be >= 1", "L");
    const double gbar = spec.mean_snr;
    mg_model mg;
    switch (spec.family()) {
        case fading_family::rayleigh: {
            mg.components = {{1.0 / gbar, 1.0, 1.0 / gbar}};
            mg.meta.reference = "closed-form pdf (exact)";
            return mg;
        }
        case fading_family::nakagami_m: {
            const double m = std::get<nakagami_params>(spec.params).m;
            const double zeta = m / gbar;
            mg.components = {{std::exp(m * std::log(zeta) - std::lgamma(m)), m, zeta}};
            mg.meta.reference = "closed-form pdf (exact)";
            return mg;
        }
        case fading_family::maxwell: {
            const double zeta = 1.5 / gbar;
            mg.components = {
                {std::exp(1.5 * std::log(zeta) - std::lgamma(1.5)), 1.5, zeta}};
            mg.meta.reference = "closed-form pdf (exact)";
            return mg;
        }
        case fading_family::kg: {
            // snr | u ~ Gamma(m_l, rate m_l m_sl/(gbar u)),  u ~ Gamma(m_sl, 1)
            const auto& p = std::get<kg_params>(spec.params);
            mg_model best = detail::mg_compound_tuned(
                p.m_l, p.m_sl, p.m_l * p.m_sl / gbar, /*reciprocal_rate=*/true, L, spec);
            best.meta.reference = "closed-form Bessel pdf";
            return best;
        }
        case fading_family::fisher_f: {
            // snr | u ~ Gamma(m, rate m u/((m_s-1) gbar)),  u ~ Gamma(m_s, 1)
            const auto& p = std::get<fisher_f_params>(spec.params);
            mg_model best = detail::mg_compound_tuned(
                p.m, p.m_s, p.m / ((p.m_s - 1.0) * gbar), /*reciprocal_rate=*/false, L,
                spec);
            best.meta.accuracy_warning = true; // finite gamma mixtures cannot
                                               // reproduce the polynomial tail
            best.meta.reference = "closed-form pdf (approximation)";
            return best;
        }
        default:
            throw invalid_argument_error(
                std::string("mg_from_channel: no gamma-mixture recipe for ") +
                    family_name(spec.family()),
                "family");
    }
}

// ---------------------------------------------------------------------------
// Mixture of Gaussians over x = sqrt(snr / mean_snr):
//   pdf(snr) = sum_l w_l / (sqrt(8 pi mean_snr snr) eta_l)
//                  * exp(-(sqrt(snr/mean_snr) - mu_l)^2 / (2 eta_l^2))
// Kept literal (no truncation correction); the mass the Gaussians place on
// x < 0 is reported as normalization_defect.
// ---------------------------------------------------------------------------
struct mog_component {
    double weight = 0.0;
    double mean = 0.0;  // mu, in the sqrt-SNR domain
    double sigma = 1.0; // eta, in the sqrt-SNR domain
};

struct mog_model {
    std::vector<mog_component> components;
    double mean_snr = 1.0; // scale used for x = sqrt(snr/mean_snr)

    struct metadata_t {
        std::uint64_t seed = 0;
        std::size_t sample_count = 0;
        int iterations = 0;
        bool converged = false; // log-likelihood change reached rel_tol
        double final_log_likelihood = 0.0;
        int pruned_components = 0;
        double cdf_mse = 0.0;              // against the training empirical CDF
        double normalization_defect = 0.0; // mass at x < 0
        std::vector<double> log_likelihood_trace;
    } meta;

    // pdf/cdf below are truncation-corrected: the Gaussian mixture lives on the
    // sqrt-SNR axis, so whatever mass it places at x < 0 (reported by
    // normalization_defect()) is renormalized away.  This keeps the model a
    // proper distribution on snr > 0, which downstream identities
    // (e.g. integral of pdf = 1, cdf(0) = 0) rely on.
    double pdf(double snr) const {
        if (!(snr > 0.0))
            throw invalid_argument_error("mog_model::pdf: snr must be > 0", "snr");
        const double x = std::sqrt(snr / mean_snr);
        const double jac = 1.0 / (2.0 * std::sqrt(mean_snr * snr));
        double s = 0.0;
        for (const auto& c : components) {
            const double z = (x - c.mean) / c.sigma;
            s += c.weight / (std::sqrt(2.0 * std::numbers::pi) * c.sigma) *
                 std::exp(-0.5 * z * z);
        }
        return s * jac / (1.0 - normalization_defect());
    }

    double cdf(double snr) const {
        if (snr <= 0.0) return 0.0;
        const double x = std::sqrt(snr / mean_snr);
        double s = 0.0;
        for (const auto& c : components)
            s += c.weight * normal_cdf((x - c.mean) / c.sigma);
        const double defect = normalization_defect();
        return std::clamp((s - defect) / (1.0 - defect), 0.0, 1.0);
    }

    // Mass the literal Gaussian mixture places on negative sqrt-SNR.
    double normalization_defect() const {
        double s = 0.0;
        for (const auto& c : components)
            s += c.weight * normal_cdf(-c.mean / c.sigma);
        return s;
    }

    void validate() const {
        if (components.empty())
            throw invalid_argument_error("mog_model: no components", "components");
        if (!(mean_snr > 0.0) || !std::isfinite(mean_snr))
            throw invalid_argument_error("mog_model: mean_snr must be finite and > 0",
                                         "mean_snr");
        double wsum = 0.0;
        for (const auto& c : components) {
            if (!(c.weight > 0.0) || !std::isfinite(c.weight))
                throw invalid_argument_error("mog_model: weight must be finite and > 0",
                                             "weight");
            if (!(c.sigma > 0.0) || !std::isfinite(c.sigma))
                throw invalid_argument_error("mog_model: sigma must be finite and > 0",
                                             "sigma");
            if (!std::isfinite(c.mean))
                throw invalid_argument_error("mog_model: mean must be finite", "mean");
            wsum += c.weight;
        }
        if (std::fabs(wsum - 1.0) > 1.0e-9)
            throw invalid_argument_error(
                "mog_model: weights sum to " + std::to_string(wsum) + ", expected 1",
                "weight");
    }
};

struct mog_fit_options {
    int max_iterations = 500;
    double rel_tol = 1.0e-10;     // relative log-likelihood change to stop
    double weight_floor = 1.0e-10; // below this a component is pruned
    double sigma_floor = 1.0e-8;   // below this a component is pruned
};

namespace detail {

struct em_outcome {
    bool pruned = false; // a component collapsed; caller refits with one fewer
    bool converged = false;
    std::vector<mog_component> components;
    int iterations = 0;
    double final_ll = 0.0;
    std::vector<double> ll_trace;
};

// k-means++ seeding over x with a dedicated RNG sub-stream; ties and index
// selection are fully deterministic for a fixed (seed, data order).
inline std::vector<double> kmeanspp_centers(std::span<const double> x, std::size_t k,
                                            rng_stream& rng) {
    const std::size_t n = x.size();
    std::vector<double> centers;
    centers.reserve(k);
    {
        const double u = rng.uniform01();
        std::size_t idx = std::min(n - 1, static_cast<std::size_t>(u * n));
        centers.push_back(x[idx]);
    }
    std::vector<double> d2(n);
    while (centers.size() < k) {
        double total = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            double best = std::numeric_limits<double>::infinity();
            for (double c : centers) {
                const double d = x[i] - c;
                best = std::min(best, d * d);
            }
            d2[i] = best;
            total += best;
        }
        if (total <= 0.0) {
            // all points coincide with existing centers; duplicate the first
            centers.push_back(centers.front());
            continue;
        }
        const double r = rng.uniform01() * total;
        double acc = 0.0;
        std::size_t idx = n - 1;
        for (std::size_t i = 0; i < n; ++i) {
            acc += d2[i];
            if (acc >= r) {
                idx = i;
                break;
            }
        }
        centers.push_back(x[idx]);
    }
    return centers;
}

inline em_outcome run_em(std::span<const double> x, std::size_t k, rng_stream& rng,
                         const mog_fit_options& opts) {
    const std::size_t n = x.size();
    const double nd = static_cast<double>(n);

    // moments of the data for floors and degenerate-cluster fallbacks
    double xm = 0.0;
    for (double v : x) xm += v;
    xm /= nd;
    double xvar = 0.0;
    for (double v : x) xvar += (v - xm) * (v - xm);
    xvar /= nd;
    const double xstd = std::sqrt(std::max(xvar, 1.0e-30));

    std::vector<double> centers = kmeanspp_centers(x, k, rng);
    std::sort(centers.begin(), centers.end()); // canonical component order

    // hard assignment to nearest center for the initial moments
    std::vector<double> cnt(k, 0.0), s1(k, 0.0), s2(k, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t best = 0;
        double bestd = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < k; ++j) {
            const double d = std::fabs(x[i] - centers[j]);
            if (d < bestd) {
                bestd = d;
                best = j;
            }
        }
        cnt[best] += 1.0;
        s1[best] += x[i];
        s2[best] += x[i] * x[i];
    }
    std::vector<mog_component> comp(k);
    for (std::size_t j = 0; j < k; ++j) {
        if (cnt[j] < 2.0) {
            comp[j] = {1.0 / static_cast<double>(k), centers[j], xstd};
        } else {
            const double mu = s1[j] / cnt[j];
            const double var = std::max(s2[j] / cnt[j] - mu * mu, 0.0);
            comp[j] = {cnt[j] / nd, mu, std::max(std::sqrt(var), 1.0e-3 * xstd)};
        }
    }
    {
        double wsum = 0.0;
        for (const auto& c : comp) wsum += c.weight;
        for (auto& c : comp) c.weight /= wsum;
    }

    em_outcome out;
    constexpr double kLog2Pi = 1.8378770664093454836; // log(2*pi)
    std::vector<double> logc(k), lp(k);
    double prev_ll = -std::numeric_limits<double>::infinity();
    for (int it = 1; it <= opts.max_iterations; ++it) {
        for (std::size_t j = 0; j < k; ++j)
            logc[j] = std::log(comp[j].weight) - std::log(comp[j].sigma) -
                      0.5 * kLog2Pi;
        std::fill(cnt.begin(), cnt.end(), 0.0);
        std::fill(s1.begin(), s1.end(), 0.0);
        std::fill(s2.begin(), s2.end(), 0.0);
        double ll = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            double mx = -std::numeric_limits<double>::infinity();
            for (std::size_t j = 0; j < k; ++j) {
                const double z = (x[i] - comp[j].mean) / comp[j].sigma;
                lp[j] = logc[j] - 0.5 * z * z;
                mx = std::max(mx, lp[j]);
            }
            double sum = 0.0;
            for (std::size_t j = 0; j < k; ++j) {
                lp[j] = std::exp(lp[j] - mx);
                sum += lp[j];
            }
            ll += mx + std::log(sum);
            const double inv = 1.0 / sum;
            for (std::size_t j = 0; j < k; ++j) {
                const double r = lp[j] * inv;
                cnt[j] += r;
                s1[j] += r * x[i];
                s2[j] += r * x[i] * x[i];
            }
        }
        out.ll_trace.push_back(ll);
        out.iterations = it;
        out.final_ll = ll;
        if (ll + 1.0e-8 * (1.0 + std::fabs(ll)) < prev_ll)
            throw accuracy_error("fit_mog: EM log-likelihood decreased", ll,
                                 prev_ll - ll);
        const bool converged =
            std::fabs(ll - prev_ll) <= opts.rel_tol * (1.0 + std::fabs(ll));
        prev_ll = ll;

        for (std::size_t j = 0; j < k; ++j) {
            const double w = cnt[j] / nd;
            if (!(w > opts.weight_floor)) {
                out.pruned = true;
                out.components = comp;
                return out;
            }
            const double mu = s1[j] / cnt[j];
            const double var = std::max(s2[j] / cnt[j] - mu * mu, 0.0);
            const double sg = std::sqrt(var);
            if (!(sg > opts.sigma_floor)) {
                out.pruned = true;
                out.components = comp;
                return out;
            }
            comp[j] = {w, mu, sg};
        }
        if (converged) {
            out.converged = true;
            break;
        }
    }
    std::sort(comp.begin(), comp.end(),
              [](const mog_component& a, const mog_component& b) {
                  return a.mean < b.mean;
              });
    out.components = std::move(comp);
    return out;
}

} // namespace detail

// Fit a mixture of Gaussians in the sqrt-SNR domain to SNR samples.
// Deterministic for fixed (samples order, components, seed).  A component
// whose weight or spread collapses is pruned and the fit restarts with one
// fewer component (recorded in metadata).
inline mog_model fit_mog(std::span<const double> snr_samples, std::size_t components,
                         std::uint64_t seed, const mog_fit_options& opts = {}) {
    const std::size_t n = snr_samples.size();
    if (components == 0)
        throw invalid_argument_error("fit_mog: components must be >= 1", "components");
    if (n < 2 * components)
        throw invalid_argument_error("fit_mog: need at least 2*components samples",
                                     "snr_samples");
    double mean_snr = 0.0;
    for (double g : snr_samples) {
        if (!(g > 0.0) || !std::isfinite(g))
            throw invalid_argument_error("fit_mog: samples must be finite and > 0",
                                         "snr_samples");
        mean_snr += g;
    }
    mean_snr /= static_cast<double>(n);

    std::vector<double> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = std::sqrt(snr_samples[i] / mean_snr);

    mog_model model;
    model.mean_snr = mean_snr;
    model.meta.seed = seed;
    model.meta.sample_count = n;

    std::size_t k = components;
    for (;;) {
        rng_stream rng(seed, /*stream=*/0x6D6F672D666974ull); // tag: "mog-fit"
        detail::em_outcome res = detail::run_em(x, k, rng, opts);
        if (res.pruned && k > 1) {
            --k;
            ++model.meta.pruned_components;
            continue;
        }
        if (res.pruned)
            throw accuracy_error("fit_mog: every component collapsed", 0.0, 0.0);
        model.components = std::move(res.components);
        model.meta.iterations = res.iterations;
        model.meta.converged = res.converged;
        model.meta.final_log_likelihood = res.final_ll;
        model.meta.log_likelihood_trace = std::move(res.ll_trace);
        break;
    }

    // goodness-of-fit metadata against the training empirical CDF
    std::vector<double> sorted(snr_samples.begin(), snr_samples.end());
    std::sort(sorted.begin(), sorted.end());
    constexpr int kGrid = 200;
    double mse = 0.0;
    for (int j = 0; j < kGrid; ++j) {
        const double q = (j + 0.5) / kGrid;
        const std::size_t idx =
            std::min(n - 1, static_cast<std::size_t>(q * static_cast<double>(n)));
        const double diff = model.cdf(sorted[idx]) - q;
        mse += diff * diff;
    }
    model.meta.cdf_mse = mse / kGrid;
    model.meta.normalization_defect = model.normalization_defect();
    return model;
}

// ---------------------------------------------------------------------------
// channel_model adapters
// ---------------------------------------------------------------------------
namespace detail {

class mg_model_impl final : public channel_model::impl {
public:
    explicit mg_model_impl(mg_model mg) : mg_(std::move(mg)) {
        mg_.validate();
        mean_ = mg_.mean();
        weights_.reserve(mg_.components.size());
        double acc = 0.0;
        for (const auto& c : mg_.components) {
            acc += c.alpha * std::exp(std::lgamma(c.beta) - c.beta * std::log(c.zeta));
            weights_.push_back(acc);
        }
        weights_.back() = 1.0; // guard against roundoff in the last bin
    }
    double pdf(double snr) const override { return mg_.pdf(snr); }
    double cdf(double snr) const override { return mg_.cdf(snr); }
    double sample(rng_stream& rng) const override {
        const double u = rng.uniform01();
        std::size_t l = 0;
        while (l + 1 < weights_.size() && u > weights_[l]) ++l;
        const auto& c = mg_.components[l];
        return rng.gamma(c.beta) / c.zeta;
    }
    double mean_snr() const override { return mean_; }
    std::string description() const override {
        return "mixture-gamma(" + std::to_string(mg_.components.size()) +
               " components)";
    }
    const mg_model& model() const { return mg_; }

private:
    mg_model mg_;
    double mean_ = 1.0;
    std::vector<double> weights_; // cumulative component masses
};

class mog_model_impl final : public channel_model::impl {
public:
    explicit mog_model_impl(mog_model mog) : mog_(std::move(mog)) {
        mog_.validate();
        cum_.reserve(mog_.components.size());
        double acc = 0.0;
        for (const auto& c : mog_.components) {
            acc += c.weight;
            cum_.push_back(acc);
        }
        cum_.back() = 1.0;
    }
    double pdf(double snr) const override { return mog_.pdf(snr); }
    double cdf(double snr) const override { return mog_.cdf(snr); }
    // Rejection on the (tiny, reported) negative-x defect keeps samples in
    // the SNR domain.
    double sample(rng_stream& rng) const override {
        for (;;) {
            const double u = rng.uniform01();
            std::size_t l = 0;
            while (l + 1 < cum_.size() && u > cum_[l]) ++l;
            const auto& c = mog_.components[l];
            const double x = c.mean + c.sigma * rng.normal();
            if (x > 0.0) return mog_.mean_snr * x * x;
        }
    }
    double mean_snr() const override { return mog_.mean_snr; }
    std::string description() const override {
        return "mixture-of-gaussians(" + std::to_string(mog_.components.size()) +
               " components)";
    }
    const mog_model& model() const { return mog_; }

private:
    mog_model mog_;
    std::vector<double> cum_;
};

} // namespace detail

inline channel_model make_mg_model(mg_model mg) {
    return channel_model(std::make_shared<detail::mg_model_impl>(std::move(mg)));
}

inline channel_model make_mg_model(const channel_spec& spec, std::size_t L = 20) {
    return make_mg_model(mg_from_channel(spec, L));
}

inline channel_model make_mog_model(mog_model mog) {
    return channel_model(std::make_shared<detail::mog_model_impl>(std::move(mog)));
}

} // namespace plsec
