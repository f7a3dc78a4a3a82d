#pragma once

// Scalar special functions used by the distribution code: regularized
// incomplete gamma / beta, the standard normal CDF, and Gauss-Laguerre rules.

#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <vector>

#include "plsec/errors.hpp"

namespace plsec {

namespace detail {

inline constexpr int kSpecfunMaxIter = 500;
inline constexpr double kSpecfunEps = 1.0e-15;
inline constexpr double kSpecfunTiny = 1.0e-300;

// Series expansion of P(a,x), valid/efficient for x < a+1.
inline double gamma_p_series(double a, double x) {
    double ap = a;
    double sum = 1.0 / a;
    double term = sum;
    for (int n = 0; n < kSpecfunMaxIter; ++n) {
        ap += 1.0;
        term *= x / ap;
        sum += term;
        if (std::fabs(term) < std::fabs(sum) * kSpecfunEps)
            return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
    }
    throw accuracy_error("gamma_p series failed to converge", sum, std::fabs(term));
}

// Continued fraction for Q(a,x) (modified Lentz), valid/efficient for x >= a+1.
inline double gamma_q_cf(double a, double x) {
    double b = x + 1.0 - a;
    double c = 1.0 / kSpecfunTiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= kSpecfunMaxIter; ++i) {
        const double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < kSpecfunTiny) d = kSpecfunTiny;
        c = b + an / c;
        if (std::fabs(c) < kSpecfunTiny) c = kSpecfunTiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < kSpecfunEps)
            return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
    }
    throw accuracy_error("gamma_q continued fraction failed to converge", h, 1.0);
}

inline double beta_cf(double a, double b, double x) {
    const double qab = a + b;
    const double qap = a + 1.0;
    const double qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::fabs(d) < kSpecfunTiny) d = kSpecfunTiny;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= kSpecfunMaxIter; ++m) {
        const double m2 = 2.0 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < kSpecfunTiny) d = kSpecfunTiny;
        c = 1.0 + aa / c;
        if (std::fabs(c) < kSpecfunTiny) c = kSpecfunTiny;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < kSpecfunTiny) d = kSpecfunTiny;
        c = 1.0 + aa / c;
        if (std::fabs(c) < kSpecfunTiny) c = kSpecfunTiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < kSpecfunEps) return h;
    }
    throw accuracy_error("incomplete beta continued fraction failed to converge", h, 1.0);
}

} // namespace detail

// Regularized lower incomplete gamma P(a,x) = gamma(a,x)/Gamma(a).
inline double gamma_p(double a, double x) {
    if (!(a > 0.0)) throw invalid_argument_error("gamma_p: a must be > 0", "a");
    if (!(x >= 0.0)) throw invalid_argument_error("gamma_p: x must be >= 0", "x");
    if (x == 0.0) return 0.0;
    if (x < a + 1.0) return detail::gamma_p_series(a, x);
    return 1.0 - detail::gamma_q_cf(a, x);
}

// Regularized upper incomplete gamma Q(a,x) = 1 - P(a,x).
inline double gamma_q(double a, double x) {
    if (!(a > 0.0)) throw invalid_argument_error("gamma_q: a must be > 0", "a");
    if (!(x >= 0.0)) throw invalid_argument_error("gamma_q: x must be >= 0", "x");
    if (x == 0.0) return 1.0;
    if (x < a + 1.0) return 1.0 - detail::gamma_p_series(a, x);
    return detail::gamma_q_cf(a, x);
}

// Regularized incomplete beta I_x(a,b).
inline double inc_beta_reg(double a, double b, double x) {
    if (!(a > 0.0)) throw invalid_argument_error("inc_beta_reg: a must be > 0", "a");
    if (!(b > 0.0)) throw invalid_argument_error("inc_beta_reg: b must be > 0", "b");
    if (!(x >= 0.0 && x <= 1.0))
        throw invalid_argument_error("inc_beta_reg: x must be in [0,1]", "x");
    if (x == 0.0) return 0.0;
    if (x == 1.0) return 1.0;
    const double bt = std::exp(std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                               a * std::log(x) + b * std::log1p(-x));
    if (x < (a + 1.0) / (a + b + 2.0))
        return bt * detail::beta_cf(a, b, x) / a;
    return 1.0 - bt * detail::beta_cf(b, a, 1.0 - x) / b;
}

// Standard normal CDF.
inline double normal_cdf(double x) {
    return 0.5 * std::erfc(-x / std::sqrt(2.0));
}

// n-point Gauss-Laguerre rule for integrals of f(t) * t^alpha * exp(-t) on
// [0, inf).  Nodes ascending; Newton iteration on the Laguerre recurrence.
struct gauss_laguerre_rule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

inline gauss_laguerre_rule gauss_laguerre(std::size_t n, double alpha = 0.0) {
    if (n == 0) throw invalid_argument_error("gauss_laguerre: n must be >= 1", "n");
    if (!(alpha > -1.0))
        throw invalid_argument_error("gauss_laguerre: alpha must be > -1", "alpha");
    gauss_laguerre_rule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const double dn = static_cast<double>(n);
    double z = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        if (i == 0) {
            z = (1.0 + alpha) * (3.0 + 0.92 * alpha) / (1.0 + 2.4 * dn + 1.8 * alpha);
        } else if (i == 1) {
            z += (15.0 + 6.25 * alpha) / (1.0 + 0.9 * alpha + 2.5 * dn);
        } else {
            const double ai = static_cast<double>(i) - 1.0;
            z += ((1.0 + 2.55 * ai) / (1.9 * ai) +
                  1.26 * ai * alpha / (1.0 + 3.5 * ai)) *
                 (z - rule.nodes[i - 2]) / (1.0 + 0.3 * alpha);
        }
        double p1 = 0.0, p2 = 0.0, pp = 0.0;
        bool converged = false;
        for (int it = 0; it < 200; ++it) {
            p1 = 1.0;
            p2 = 0.0;
            for (std::size_t j = 1; j <= n; ++j) {
                const double dj = static_cast<double>(j);
                const double p3 = p2;
                p2 = p1;
                p1 = ((2.0 * dj - 1.0 + alpha - z) * p2 - (dj - 1.0 + alpha) * p3) / dj;
            }
            pp = (dn * p1 - (dn + alpha) * p2) / z;
            const double z1 = z;
            z = z1 - p1 / pp;
            if (std::fabs(z - z1) <= 1.0e-14 * std::max(1.0, std::fabs(z))) {
                converged = true;
                break;
            }
        }
        if (!converged)
            throw accuracy_error("gauss_laguerre: Newton iteration stalled", z, 1.0);
        rule.nodes[i] = z;
        rule.weights[i] = -std::exp(std::lgamma(alpha + dn) - std::lgamma(dn)) /
                          (pp * dn * p2);
    }
    return rule;
}

} // namespace plsec
