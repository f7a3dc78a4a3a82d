#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <cstring>
#include <vector>

#include "helpers.hpp"
#include "plsec/channels.hpp"
#include "plsec/errors.hpp"
#include "plsec/mixtures.hpp"
#include "plsec/quadrature.hpp"
#include "plsec/rng.hpp"

using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

bool same_bits(const plsec::mog_model& a, const plsec::mog_model& b) {
    if (a.components.size() != b.components.size()) return false;
    for (std::size_t i = 0; i < a.components.size(); ++i) {
        if (std::memcmp(&a.components[i].weight, &b.components[i].weight,
                        sizeof(double)) != 0)
            return false;
        if (std::memcmp(&a.components[i].mean, &b.components[i].mean,
                        sizeof(double)) != 0)
            return false;
        if (std::memcmp(&a.components[i].sigma, &b.components[i].sigma,
                        sizeof(double)) != 0)
            return false;
    }
    return std::memcmp(&a.mean_snr, &b.mean_snr, sizeof(double)) == 0;
}

std::vector<double> draw_samples(const plsec::channel_spec& spec, std::size_t n,
                                 std::uint64_t seed, std::uint64_t stream) {
    plsec::rng_stream rng(seed, stream);
    std::vector<double> s(n);
    for (auto& v : s) v = plsec::sample(spec, rng);
    return s;
}

} // namespace

TEST_CASE("gamma mixtures of gamma-type families are exact") {
    struct case_t {
        plsec::channel_spec spec;
        std::size_t expected_terms;
    };
    const std::vector<case_t> cases = {
        {plsec::channel_spec::rayleigh(2.0), 1},
        {plsec::channel_spec::nakagami(3.0, 1.5), 1},
        {plsec::channel_spec::maxwell(0.8), 1},
    };
    for (const auto& [spec, terms] : cases) {
        const auto mg = plsec::mg_from_channel(spec);
        mg.validate();
        CHECK(mg.components.size() == terms);
        CHECK_THAT(mg.normalization(), WithinRel(1.0, 1e-14));
        CHECK_THAT(mg.mean(), WithinRel(spec.mean_snr, 1e-13));
        CHECK_FALSE(mg.meta.accuracy_warning);
        for (double g : testutil::log_grid(0.05, 10.0, 9)) {
            CHECK_THAT(mg.pdf(g), WithinRel(plsec::analytic_pdf(spec, g), 1e-12));
            CHECK_THAT(mg.cdf(g), WithinRel(plsec::analytic_cdf(spec, g), 1e-12));
        }
    }
    // frozen single-point anchor: gamma-shaped main link, cdf(1) = P(2, 2)
    const auto mg = plsec::mg_from_channel(plsec::channel_spec::nakagami(2.0, 1.0));
    CHECK_THAT(mg.cdf(1.0), WithinRel(1.0 - 3.0 * std::exp(-2.0), 1e-13));
}

TEST_CASE("gamma mixture of the composite shadowed family is accurate") {
    const auto spec = plsec::channel_spec::kg(2.0, 3.5, 1.0);
    const auto mg = plsec::mg_from_channel(spec, 20);
    mg.validate();
    CHECK_THAT(mg.normalization(), WithinRel(1.0, 1e-13));
    CHECK_THAT(mg.mean(), WithinRel(1.0, 1e-6));
    CHECK(mg.meta.fit_error < 5e-5);
    CHECK(mg.meta.laguerre_scale > 0.0);
    CHECK_FALSE(mg.meta.reference.empty());
    double worst = 0.0;
    for (double g : testutil::log_grid(0.05, 8.0, 40)) {
        const double exact = plsec::analytic_pdf(spec, g);
        worst = std::max(worst, std::fabs(mg.pdf(g) - exact) / exact);
    }
    CHECK(worst < 2e-4);
    // doubling the terms sharpens the fit by more than an order of magnitude
    const auto mg40 = plsec::mg_from_channel(spec, 40);
    CHECK(mg40.meta.fit_error < 2e-6);
    double worst40 = 0.0;
    for (double g : testutil::log_grid(0.05, 15.0, 40)) {
        const double exact = plsec::analytic_pdf(spec, g);
        worst40 = std::max(worst40, std::fabs(mg40.pdf(g) - exact) / exact);
    }
    CHECK(worst40 < 5e-6);
}

TEST_CASE("gamma mixture of the ratio-composite family carries a warning") {
    const auto spec = plsec::channel_spec::fisher_f(2.5, 3.5, 2.0);
    const auto mg = plsec::mg_from_channel(spec, 30);
    mg.validate();
    CHECK(mg.meta.accuracy_warning);
    CHECK_THAT(mg.normalization(), WithinRel(1.0, 1e-13));
    // body of the distribution is still well represented
    double worst = 0.0;
    for (double g : testutil::log_grid(0.1, 8.0, 25)) {
        const double exact = plsec::analytic_pdf(spec, g);
        worst = std::max(worst, std::fabs(mg.pdf(g) - exact) / exact);
    }
    CHECK(worst < 5e-2);
}

TEST_CASE("gamma mixture is refused for families without a gamma mixing form") {
    CHECK_THROWS_AS(plsec::mg_from_channel(plsec::channel_spec::weibull(3.0, 1.0)),
                    plsec::invalid_argument_error);
    CHECK_THROWS_AS(plsec::mg_from_channel(
                        plsec::channel_spec::egk(2.0, 0.9, 2.2, 1.1, 1.0)),
                    plsec::invalid_argument_error);
}

TEST_CASE("gamma-mixture channel model integrates to one and samples correctly") {
    const auto spec = plsec::channel_spec::kg(2.0, 3.5, 1.3);
    const auto model = plsec::make_mg_model(spec, 20);
    plsec::quadrature_config cfg;
    cfg.scale = 1.3;
    const auto norm = plsec::integrate_semi_infinite_checked(
        [&](double g) { return model.pdf(g); }, cfg);
    CHECK_THAT(norm, WithinAbs(1.0, 1e-8));
    plsec::rng_stream rng(99, 0);
    std::vector<double> samples(4000);
    for (auto& s : samples) s = model.sample(rng);
    const double ks =
        testutil::ks_statistic(samples, [&](double g) { return model.cdf(g); });
    CHECK(ks < testutil::ks_critical_1pct(samples.size()));
}

TEST_CASE("Gaussian-mixture fit is deterministic and reports its diagnostics") {
    const auto spec = plsec::channel_spec::rayleigh(2.0);
    const auto samples = draw_samples(spec, 50000, 31, 5);
    const auto fit1 = plsec::fit_mog(samples, 4, 1234);
    const auto fit2 = plsec::fit_mog(samples, 4, 1234);
    CHECK(same_bits(fit1, fit2));
    const auto fit3 = plsec::fit_mog(samples, 4, 999);
    CHECK_FALSE(same_bits(fit1, fit3)); // different seed, different start

    fit1.validate();
    CHECK(fit1.meta.seed == 1234);
    CHECK(fit1.meta.sample_count == samples.size());
    CHECK(fit1.meta.iterations > 0);
    CHECK(fit1.meta.final_log_likelihood ==
          fit1.meta.log_likelihood_trace.back());
    CHECK(fit1.meta.cdf_mse < 1e-4);
    CHECK(fit1.meta.normalization_defect < 1e-2);
    // log-likelihood never decreases during EM
    const auto& trace = fit1.meta.log_likelihood_trace;
    for (std::size_t i = 1; i < trace.size(); ++i)
        CHECK(trace[i] >= trace[i - 1] - 1e-9 * (1.0 + std::fabs(trace[i - 1])));
    // components come out sorted by location
    for (std::size_t i = 1; i < fit1.components.size(); ++i)
        CHECK(fit1.components[i - 1].mean <= fit1.components[i].mean);
}

TEST_CASE("Gaussian-mixture pdf approximates the true density") {
    const auto spec = plsec::channel_spec::nakagami(2.5, 1.5);
    const auto samples = draw_samples(spec, 200000, 7, 2);
    const auto fit = plsec::fit_mog(samples, 6, 42);
    // truncation-corrected pdf integrates to one
    plsec::quadrature_config cfg;
    cfg.scale = 1.5;
    const auto norm = plsec::integrate_semi_infinite_checked(
        [&](double g) { return fit.pdf(g); }, cfg);
    CHECK_THAT(norm, WithinAbs(1.0, 1e-7));
    CHECK(fit.cdf(0.0) == 0.0);
    CHECK_THAT(fit.cdf(1e9), WithinAbs(1.0, 1e-12));
    // pointwise agreement in the bulk
    for (double g : testutil::log_grid(0.3, 4.0, 9)) {
        const double exact = plsec::analytic_pdf(spec, g);
        CHECK_THAT(fit.pdf(g), WithinAbs(exact, 0.03 * (1.0 + exact)));
    }
    // cdf agreement everywhere
    for (double g : testutil::log_grid(0.05, 12.0, 12))
        CHECK_THAT(fit.cdf(g), WithinAbs(plsec::analytic_cdf(spec, g), 0.01));
}

TEST_CASE("Gaussian mixture handles a family outside the H-function table") {
    // two-path envelope with a deterministic component: the kind of law the
    // sample-driven representation exists for
    const double mean = 1.8;
    const double nu = 1.2, sigma = 0.45; // envelope parameters
    const double esq = nu * nu + 2.0 * sigma * sigma;
    plsec::rng_stream rng(2718, 3);
    std::vector<double> samples(200000);
    for (auto& s : samples) {
        const double x = nu + sigma * rng.normal();
        const double y = sigma * rng.normal();
        s = mean * (x * x + y * y) / esq;
    }
    const auto fit = plsec::fit_mog(samples, 6, 11);
    fit.validate();
    CHECK(fit.meta.cdf_mse < 1e-4);
    // oracle by direct Monte Carlo with a disjoint stream
    plsec::rng_stream oracle_rng(561, 9);
    const double q = 1.3;
    std::size_t below = 0;
    const std::size_t n = 1000000;
    for (std::size_t i = 0; i < n; ++i) {
        const double x = nu + sigma * oracle_rng.normal();
        const double y = sigma * oracle_rng.normal();
        if (mean * (x * x + y * y) / esq <= q) ++below;
    }
    const double mc = static_cast<double>(below) / static_cast<double>(n);
    const double se = std::sqrt(mc * (1.0 - mc) / static_cast<double>(n));
    CHECK_THAT(fit.cdf(q), WithinAbs(mc, 4.0 * se + 5e-3));
}

TEST_CASE("Gaussian-mixture model sampling matches its own cdf") {
    const auto spec = plsec::channel_spec::rayleigh(1.0);
    const auto samples = draw_samples(spec, 60000, 13, 1);
    const auto fit = plsec::fit_mog(samples, 5, 77);
    const auto model = plsec::make_mog_model(fit);
    CHECK(model.mean_snr() == fit.mean_snr);
    plsec::rng_stream rng(4, 4);
    std::vector<double> draws(8000);
    for (auto& d : draws) {
        d = model.sample(rng);
        REQUIRE(d > 0.0);
    }
    const double ks =
        testutil::ks_statistic(draws, [&](double g) { return model.cdf(g); });
    CHECK(ks < testutil::ks_critical_1pct(draws.size()));
}

TEST_CASE("degenerate fitting inputs are rejected") {
    std::vector<double> too_few = {1.0, 2.0, 3.0};
    CHECK_THROWS_AS(plsec::fit_mog(too_few, 2, 1), plsec::invalid_argument_error);
    std::vector<double> bad = {1.0, -2.0, 3.0, 4.0, 5.0, 6.0, 7.0, 8.0};
    CHECK_THROWS_AS(plsec::fit_mog(bad, 2, 1), plsec::invalid_argument_error);
    CHECK_THROWS_AS(plsec::fit_mog(too_few, 0, 1), plsec::invalid_argument_error);
}
