#pragma once

// Catalog of fading-channel SNR distributions: parameter sets, the common
// H-function representation of each pdf, closed forms where they exist, and
// exact samplers.  All distributions are normalized so E[snr] == mean_snr.

#include <cmath>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "plsec/errors.hpp"
#include "plsec/foxh.hpp"
#include "plsec/rng.hpp"
#include "plsec/specfun.hpp"

namespace plsec {

enum class fading_family {
    rayleigh,
    nakagami_m,
    weibull,
    alpha_mu,
    maxwell,
    cascaded_alpha_mu,
    fisher_f,
    kg,
    egk,
};

inline const char* family_name(fading_family f) {
    switch (f) {
        case fading_family::rayleigh: return "rayleigh";
        case fading_family::nakagami_m: return "nakagami_m";
        case fading_family::weibull: return "weibull";
        case fading_family::alpha_mu: return "alpha_mu";
        case fading_family::maxwell: return "maxwell";
        case fading_family::cascaded_alpha_mu: return "cascaded_alpha_mu";
        case fading_family::fisher_f: return "fisher_f";
        case fading_family::kg: return "kg";
        case fading_family::egk: return "egk";
    }
    return "unknown";
}

inline std::optional<fading_family> family_from_name(std::string_view name) {
    using ff = fading_family;
    for (ff f : {ff::rayleigh, ff::nakagami_m, ff::weibull, ff::alpha_mu, ff::maxwell,
                 ff::cascaded_alpha_mu, ff::fisher_f, ff::kg, ff::egk})
        if (name == family_name(f)) return f;
    return std::nullopt;
}

struct rayleigh_params {};
struct nakagami_params {
    double m = 1.0;
};
struct weibull_params {
    double alpha = 2.0;
};
struct alpha_mu_params {
    double alpha = 2.0;
    double mu = 1.0;
};
struct maxwell_params {};
// One hop of a cascaded (product) channel.
struct alpha_mu_stage {
    double alpha = 2.0;
    double mu = 1.0;
};
struct cascaded_alpha_mu_params {
    std::vector<alpha_mu_stage> stages;
};
struct fisher_f_params {
    double m = 1.0;   // multipath shape
    double m_s = 2.0; // shadowing shape; must exceed 1 for the mean to exist
};
struct kg_params {
    double m_l = 1.0;  // multipath shape
    double m_sl = 1.0; // shadowing shape
};
struct egk_params {
    double m = 1.0;
    double xi = 1.0;
    double m_s = 1.0;
    double xi_s = 1.0;
};

using family_params =
    std::variant<rayleigh_params, nakagami_params, weibull_params, alpha_mu_params,
                 maxwell_params, cascaded_alpha_mu_params, fisher_f_params, kg_params,
                 egk_params>;

struct channel_spec {
    family_params params;
    double mean_snr = 1.0; // linear scale

    fading_family family() const noexcept {
        return static_cast<fading_family>(params.index());
    }

    void validate() const {
        if (!(mean_snr > 0.0) || !std::isfinite(mean_snr))
            throw invalid_argument_error("channel_spec: mean_snr must be finite and > 0",
                                         "mean_snr");
        auto positive = [](double v, const char* field) {
            if (!(v > 0.0) || !std::isfinite(v))
                throw invalid_argument_error(
                    std::string("channel_spec: ") + field + " must be finite and > 0",
                    field);
        };
        std::visit(
            [&](const auto& p) {
                using T = std::decay_t<decltype(p)>;
                if constexpr (std::is_same_v<T, nakagami_params>) {
                    positive(p.m, "m");
                } else if constexpr (std::is_same_v<T, weibull_params>) {
                    positive(p.alpha, "alpha");
                } else if constexpr (std::is_same_v<T, alpha_mu_params>) {
                    positive(p.alpha, "alpha");
                    positive(p.mu, "mu");
                } else if constexpr (std::is_same_v<T, cascaded_alpha_mu_params>) {
                    if (p.stages.empty())
                        throw invalid_argument_error(
                            "channel_spec: cascaded_alpha_mu needs at least one stage",
                            "stages");
                    for (const auto& st : p.stages) {
                        positive(st.alpha, "alpha");
                        positive(st.mu, "mu");
                    }
                } else if constexpr (std::is_same_v<T, fisher_f_params>) {
                    positive(p.m, "m");
                    if (!(p.m_s > 1.0) || !std::isfinite(p.m_s))
                        throw invalid_argument_error(
                            "channel_spec: fisher_f m_s must be > 1 (finite mean)",
                            "m_s");
                } else if constexpr (std::is_same_v<T, kg_params>) {
                    positive(p.m_l, "m_l");
                    positive(p.m_sl, "m_sl");
                } else if constexpr (std::is_same_v<T, egk_params>) {
                    positive(p.m, "m");
                    positive(p.xi, "xi");
                    positive(p.m_s, "m_s");
                    positive(p.xi_s, "xi_s");
                }
            },
            params);
    }

    static channel_spec rayleigh(double mean_snr) {
        return {rayleigh_params{}, mean_snr};
    }
    static channel_spec nakagami(double m, double mean_snr) {
        return {nakagami_params{m}, mean_snr};
    }
    static channel_spec weibull(double alpha, double mean_snr) {
        return {weibull_params{alpha}, mean_snr};
    }
    static channel_spec alpha_mu(double alpha, double mu, double mean_snr) {
        return {alpha_mu_params{alpha, mu}, mean_snr};
    }
    static channel_spec maxwell(double mean_snr) {
        return {maxwell_params{}, mean_snr};
    }
    static channel_spec cascaded_alpha_mu(std::vector<alpha_mu_stage> stages,
                                          double mean_snr) {
        return {cascaded_alpha_mu_params{std::move(stages)}, mean_snr};
    }
    static channel_spec fisher_f(double m, double m_s, double mean_snr) {
        return {fisher_f_params{m, m_s}, mean_snr};
    }
    static channel_spec kg(double m_l, double m_sl, double mean_snr) {
        return {kg_params{m_l, m_sl}, mean_snr};
    }
    static channel_spec egk(double m, double xi, double m_s, double xi_s,
                            double mean_snr) {
        return {egk_params{m, xi, m_s, xi_s}, mean_snr};
    }
};

inline std::string describe(const channel_spec& spec) {
    std::string out = family_name(spec.family());
    out += "(";
    std::visit(
        [&](const auto& p) {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, nakagami_params>) {
                out += "m=" + std::to_string(p.m);
            } else if constexpr (std::is_same_v<T, weibull_params>) {
                out += "alpha=" + std::to_string(p.alpha);
            } else if constexpr (std::is_same_v<T, alpha_mu_params>) {
                out += "alpha=" + std::to_string(p.alpha) + ",mu=" + std::to_string(p.mu);
            } else if constexpr (std::is_same_v<T, cascaded_alpha_mu_params>) {
                for (std::size_t i = 0; i < p.stages.size(); ++i) {
                    if (i) out += ";";
                    out += "alpha=" + std::to_string(p.stages[i].alpha) +
                           ",mu=" + std::to_string(p.stages[i].mu);
                }
            } else if constexpr (std::is_same_v<T, fisher_f_params>) {
                out += "m=" + std::to_string(p.m) + ",m_s=" + std::to_string(p.m_s);
            } else if constexpr (std::is_same_v<T, kg_params>) {
                out += "m_l=" + std::to_string(p.m_l) + ",m_sl=" + std::to_string(p.m_sl);
            } else if constexpr (std::is_same_v<T, egk_params>) {
                out += "m=" + std::to_string(p.m) + ",xi=" + std::to_string(p.xi) +
                       ",m_s=" + std::to_string(p.m_s) +
                       ",xi_s=" + std::to_string(p.xi_s);
            }
        },
        spec.params);
    out += "), mean_snr=" + std::to_string(spec.mean_snr);
    return out;
}

// ---------------------------------------------------------------------------
// H-function representation of each family's SNR pdf:  f(x) = K * H[C x].
// Every mapping satisfies the normalization and mean contracts exactly
// (checked via the Mellin transform: integral = (K/C) Theta(1), mean = (K/C^2)
// Theta(2) with Theta the kernel's gamma product).
// ---------------------------------------------------------------------------
inline fox_h_dist to_fox_h(const channel_spec& spec) {
    spec.validate();
    const double gbar = spec.mean_snr;
    fox_h_dist d;
    std::visit(
        [&](const auto& p) {
            using T = std::decay_t<decltype(p)>;
            fox_h_kernel& k = d.kernel;
            if constexpr (std::is_same_v<T, rayleigh_params>) {
                k.m = 1;
                k.b = {0.0};
                k.B = {1.0};
                d.C = 1.0 / gbar;
                d.K = d.C;
            } else if constexpr (std::is_same_v<T, nakagami_params>) {
                k.m = 1;
                k.b = {p.m - 1.0};
                k.B = {1.0};
                d.C = p.m / gbar;
                d.K = d.C / std::tgamma(p.m);
            } else if constexpr (std::is_same_v<T, weibull_params>) {
                const double r = 2.0 / p.alpha;
                k.m = 1;
                k.b = {1.0 - r};
                k.B = {r};
                d.C = std::tgamma(1.0 + r) / gbar;
                d.K = d.C;
            } else if constexpr (std::is_same_v<T, alpha_mu_params>) {
                const double r = 2.0 / p.alpha;
                k.m = 1;
                k.b = {p.mu - r};
                k.B = {r};
                d.C = std::exp(std::lgamma(p.mu + r) - std::lgamma(p.mu)) / gbar;
                d.K = d.C / std::tgamma(p.mu);
            } else if constexpr (std::is_same_v<T, maxwell_params>) {
                k.m = 1;
                k.b = {0.5};
                k.B = {1.0};
                d.C = 1.5 / gbar;
                d.K = d.C / std::tgamma(1.5);
            } else if constexpr (std::is_same_v<T, cascaded_alpha_mu_params>) {
                const std::size_t N = p.stages.size();
                k.m = N;
                double logC = -std::log(gbar);
                double log_gamma_prod = 0.0;
                for (const auto& st : p.stages) {
                    const double r = 2.0 / st.alpha;
                    k.b.push_back(st.mu - r);
                    k.B.push_back(r);
                    logC += std::lgamma(st.mu + r) - std::lgamma(st.mu);
                    log_gamma_prod += std::lgamma(st.mu);
                }
                d.C = std::exp(logC);
                d.K = std::exp(logC - log_gamma_prod);
            } else if constexpr (std::is_same_v<T, fisher_f_params>) {
                k.m = 1;
                k.n = 1;
                k.a = {-p.m_s};
                k.A = {1.0};
                k.b = {p.m - 1.0};
                k.B = {1.0};
                d.C = p.m / ((p.m_s - 1.0) * gbar);
                d.K = std::exp(std::log(d.C) - std::lgamma(p.m) - std::lgamma(p.m_s));
            } else if constexpr (std::is_same_v<T, kg_params>) {
                k.m = 2;
                k.b = {p.m_l - 1.0, p.m_sl - 1.0};
                k.B = {1.0, 1.0};
                d.C = p.m_l * p.m_sl / gbar;
                d.K = std::exp(std::log(d.C) - std::lgamma(p.m_l) - std::lgamma(p.m_sl));
            } else if constexpr (std::is_same_v<T, egk_params>) {
                const double r = 1.0 / p.xi;
                const double rs = 1.0 / p.xi_s;
                k.m = 2;
                k.b = {p.m - r, p.m_s - rs};
                k.B = {r, rs};
                const double logC = std::lgamma(p.m + r) + std::lgamma(p.m_s + rs) -
                                    std::lgamma(p.m) - std::lgamma(p.m_s) -
                                    std::log(gbar);
                d.C = std::exp(logC);
                d.K = std::exp(logC - std::lgamma(p.m) - std::lgamma(p.m_s));
            }
        },
        spec.params);
    return d;
}

// Closed-form availability.  Families without a finite elementary/special-
// function form fall back to the H-function representation.
inline bool has_closed_form_pdf(const channel_spec& spec) {
    switch (spec.family()) {
        case fading_family::cascaded_alpha_mu:
        case fading_family::egk: return false;
        default: return true;
    }
}

inline bool has_closed_form_cdf(const channel_spec& spec) {
    switch (spec.family()) {
        case fading_family::cascaded_alpha_mu:
        case fading_family::egk:
        case fading_family::kg: return false;
        default: return true;
    }
}

inline double analytic_pdf(const channel_spec& spec, double snr) {
    spec.validate();
    if (!(snr > 0.0))
        throw invalid_argument_error("analytic_pdf: snr must be > 0", "snr");
    const double gbar = spec.mean_snr;
    switch (spec.family()) {
        case fading_family::rayleigh:
            return std::exp(-snr / gbar) / gbar;
        case fading_family::nakagami_m: {
            const double m = std::get<nakagami_params>(spec.params).m;
            return std::exp(m * std::log(m / gbar) + (m - 1.0) * std::log(snr) -
                            m * snr / gbar - std::lgamma(m));
        }
        case fading_family::weibull: {
            const double alpha = std::get<weibull_params>(spec.params).alpha;
            const double kk = 0.5 * alpha;
            const double C = std::tgamma(1.0 + 2.0 / alpha) / gbar;
            return kk * std::pow(C, kk) * std::pow(snr, kk - 1.0) *
                   std::exp(-std::pow(C * snr, kk));
        }
        case fading_family::alpha_mu: {
            const auto& p = std::get<alpha_mu_params>(spec.params);
            const double kk = 0.5 * p.alpha;
            const double C =
                std::exp(std::lgamma(p.mu + 2.0 / p.alpha) - std::lgamma(p.mu)) / gbar;
            return std::exp(std::log(kk) + kk * p.mu * std::log(C) +
                            (kk * p.mu - 1.0) * std::log(snr) -
                            std::pow(C * snr, kk) - std::lgamma(p.mu));
        }
        case fading_family::maxwell:
            return std::exp(1.5 * std::log(1.5 / gbar) + 0.5 * std::log(snr) -
                            1.5 * snr / gbar - std::lgamma(1.5));
        case fading_family::fisher_f: {
            const auto& p = std::get<fisher_f_params>(spec.params);
            const double C = p.m / ((p.m_s - 1.0) * gbar);
            return std::exp(std::lgamma(p.m + p.m_s) - std::lgamma(p.m) -
                            std::lgamma(p.m_s) + p.m * std::log(C) +
                            (p.m - 1.0) * std::log(snr) -
                            (p.m + p.m_s) * std::log1p(C * snr));
        }
        case fading_family::kg: {
            const auto& p = std::get<kg_params>(spec.params);
            const double C = p.m_l * p.m_sl / gbar;
            const double K =
                std::exp(std::log(C) - std::lgamma(p.m_l) - std::lgamma(p.m_sl));
            const double z = C * snr;
            const double order = std::fabs(p.m_l - p.m_sl);
            return 2.0 * K * std::pow(z, 0.5 * (p.m_l + p.m_sl) - 1.0) *
                   std::cyl_bessel_k(order, 2.0 * std::sqrt(z));
        }
        default:
            throw invalid_argument_error(
                std::string("analytic_pdf: no closed-form pdf for ") +
                    family_name(spec.family()) + "; use the H-function representation",
                "family");
    }
}

inline double analytic_cdf(const channel_spec& spec, double snr) {
    spec.validate();
    if (snr <= 0.0) return 0.0;
    const double gbar = spec.mean_snr;
    switch (spec.family()) {
        case fading_family::rayleigh:
            return -std::expm1(-snr / gbar);
        case fading_family::nakagami_m: {
            const double m = std::get<nakagami_params>(spec.params).m;
            return gamma_p(m, m * snr / gbar);
        }
        case fading_family::weibull: {
            const double alpha = std::get<weibull_params>(spec.params).alpha;
            const double kk = 0.5 * alpha;
            const double C = std::tgamma(1.0 + 2.0 / alpha) / gbar;
            return -std::expm1(-std::pow(C * snr, kk));
        }
        case fading_family::alpha_mu: {
            const auto& p = std::get<alpha_mu_params>(spec.params);
            const double kk = 0.5 * p.alpha;
            const double C =
                std::exp(std::lgamma(p.mu + 2.0 / p.alpha) - std::lgamma(p.mu)) / gbar;
            return gamma_p(p.mu, std::pow(C * snr, kk));
        }
        case fading_family::maxwell:
            return gamma_p(1.5, 1.5 * snr / gbar);
        case fading_family::fisher_f: {
            const auto& p = std::get<fisher_f_params>(spec.params);
            const double C = p.m / ((p.m_s - 1.0) * gbar);
            const double z = C * snr;
            return inc_beta_reg(p.m, p.m_s, z / (1.0 + z));
        }
        default:
            throw invalid_argument_error(
                std::string("analytic_cdf: no closed-form cdf for ") +
                    family_name(spec.family()) + "; use the H-function representation",
                "family");
    }
}

// ---------------------------------------------------------------------------
// Exact SNR samplers.  Each construction reproduces the family's distribution
// with E[snr] = mean_snr exactly (no acceptance approximations beyond the
// gamma sampler's internal rejection).
// ---------------------------------------------------------------------------
inline double sample(const channel_spec& spec, rng_stream& rng) {
    const double gbar = spec.mean_snr;
    switch (spec.family()) {
        case fading_family::rayleigh:
            return gbar * rng.exponential();
        case fading_family::nakagami_m: {
            const double m = std::get<nakagami_params>(spec.params).m;
            return gbar * rng.gamma(m) / m;
        }
        case fading_family::weibull: {
            const double alpha = std::get<weibull_params>(spec.params).alpha;
            const double r = 2.0 / alpha;
            return gbar * std::pow(rng.exponential(), r) / std::tgamma(1.0 + r);
        }
        case fading_family::alpha_mu: {
            const auto& p = std::get<alpha_mu_params>(spec.params);
            const double r = 2.0 / p.alpha;
            return gbar * std::pow(rng.gamma(p.mu), r) *
                   std::exp(std::lgamma(p.mu) - std::lgamma(p.mu + r));
        }
        case fading_family::maxwell:
            return gbar * rng.gamma(1.5) / 1.5;
        case fading_family::cascaded_alpha_mu: {
            const auto& p = std::get<cascaded_alpha_mu_params>(spec.params);
            double v = gbar;
            for (const auto& st : p.stages) {
                const double r = 2.0 / st.alpha;
                v *= std::pow(rng.gamma(st.mu), r) *
                     std::exp(std::lgamma(st.mu) - std::lgamma(st.mu + r));
            }
            return v;
        }
        case fading_family::fisher_f: {
            const auto& p = std::get<fisher_f_params>(spec.params);
            const double x = rng.gamma(p.m);
            const double y = rng.gamma(p.m_s);
            return gbar * (x / p.m) * ((p.m_s - 1.0) / y);
        }
        case fading_family::kg: {
            const auto& p = std::get<kg_params>(spec.params);
            return gbar * (rng.gamma(p.m_l) / p.m_l) * (rng.gamma(p.m_sl) / p.m_sl);
        }
        case fading_family::egk: {
            const auto& p = std::get<egk_params>(spec.params);
            const double r = 1.0 / p.xi;
            const double rs = 1.0 / p.xi_s;
            const double f1 = std::pow(rng.gamma(p.m), r) *
                              std::exp(std::lgamma(p.m) - std::lgamma(p.m + r));
            const double f2 = std::pow(rng.gamma(p.m_s), rs) *
                              std::exp(std::lgamma(p.m_s) - std::lgamma(p.m_s + rs));
            return gbar * f1 * f2;
        }
    }
    throw invalid_argument_error("sample: unknown family", "family");
}

// ---------------------------------------------------------------------------
// Interchangeable channel representation: pdf/cdf/sampler behind one handle.
// ---------------------------------------------------------------------------
class channel_model {
public:
    struct impl {
        virtual ~impl() = default;
        virtual double pdf(double snr) const = 0;
        virtual double cdf(double snr) const = 0;
        virtual double sample(rng_stream& rng) const = 0;
        virtual double mean_snr() const = 0;
        virtual std::string description() const = 0;
    };

    channel_model() = default;
    explicit channel_model(std::shared_ptr<const impl> im) : impl_(std::move(im)) {}

    bool valid() const noexcept { return impl_ != nullptr; }

    double pdf(double snr) const { return checked().pdf(snr); }
    double cdf(double snr) const { return checked().cdf(snr); }
    double sample(rng_stream& rng) const { return checked().sample(rng); }
    double mean_snr() const { return checked().mean_snr(); }
    std::string description() const { return checked().description(); }

private:
    const impl& checked() const {
        if (!impl_) throw invalid_argument_error("channel_model: empty handle");
        return *impl_;
    }
    std::shared_ptr<const impl> impl_;
};

namespace detail {

class analytic_model_impl final : public channel_model::impl {
public:
    explicit analytic_model_impl(channel_spec spec) : spec_(std::move(spec)) {}
    double pdf(double snr) const override { return analytic_pdf(spec_, snr); }
    double cdf(double snr) const override { return analytic_cdf(spec_, snr); }
    double sample(rng_stream& rng) const override { return plsec::sample(spec_, rng); }
    double mean_snr() const override { return spec_.mean_snr; }
    std::string description() const override {
        return describe(spec_) + " [closed-form]";
    }

private:
    channel_spec spec_;
};

class foxh_model_impl final : public channel_model::impl {
public:
    foxh_model_impl(channel_spec spec, contour_plan plan)
        : spec_(std::move(spec)),
          plan_(plan),
          pdf_form_(to_fox_h(spec_)),
          cdf_form_(plsec::cdf_form(pdf_form_)) {}
    double pdf(double snr) const override { return dist_pdf(pdf_form_, snr, plan_); }
    double cdf(double snr) const override {
        return dist_cdf_value(cdf_form_, snr, plan_);
    }
    double sample(rng_stream& rng) const override { return plsec::sample(spec_, rng); }
    double mean_snr() const override { return spec_.mean_snr; }
    std::string description() const override { return describe(spec_) + " [foxh]"; }

private:
    channel_spec spec_;
    contour_plan plan_;
    fox_h_dist pdf_form_;
    fox_h_dist cdf_form_;
};

} // namespace detail

// Closed-form-backed model; only for families where both pdf and cdf have
// closed forms (fails fast otherwise -- use make_foxh_model for the rest).
inline channel_model make_analytic_model(const channel_spec& spec) {
    spec.validate();
    if (!has_closed_form_pdf(spec) || !has_closed_form_cdf(spec))
        throw invalid_argument_error(
            std::string("make_analytic_model: ") + family_name(spec.family()) +
                " has no complete closed form; use make_foxh_model",
            "family");
    return channel_model(std::make_shared<detail::analytic_model_impl>(spec));
}

// H-function-backed model; works for every catalog family.
inline channel_model make_foxh_model(const channel_spec& spec,
                                     const contour_plan& plan = {}) {
    spec.validate();
    return channel_model(std::make_shared<detail::foxh_model_impl>(spec, plan));
}

} // namespace plsec
