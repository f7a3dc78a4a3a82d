// Shared utilities for the test suites.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

namespace testutil {

// Kolmogorov–Smirnov statistic of a sample against a reference CDF.
inline double ks_statistic(std::vector<double> samples,
                           const std::function<double(double)>& cdf) {
    std::sort(samples.begin(), samples.end());
    const double n = static_cast<double>(samples.size());
    double d = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const double f = cdf(samples[i]);
        d = std::max(d, std::fabs(f - static_cast<double>(i) / n));
        d = std::max(d, std::fabs(static_cast<double>(i + 1) / n - f));
    }
    return d;
}

// alpha = 0.01 critical value for the one-sample KS test.
inline double ks_critical_1pct(std::size_t n) {
    return 1.6276 / std::sqrt(static_cast<double>(n));
}

// Closed-form Rayleigh/Rayleigh secrecy metrics used as anchors.
inline double rayleigh_sop(double gb, double ge, double rt) {
    const double r = std::exp2(rt);
    return 1.0 - gb / (gb + r * ge) * std::exp(-(r - 1.0) / gb);
}
inline double rayleigh_sop_lb(double gb, double ge, double rt) {
    const double r = std::exp2(rt);
    return r * ge / (gb + r * ge);
}
inline double rayleigh_pnz(double gb, double ge) { return gb / (gb + ge); }

// Log-spaced grid of n points covering [lo, hi].
inline std::vector<double> log_grid(double lo, double hi, std::size_t n) {
    std::vector<double> g(n);
    const double step = std::log(hi / lo) / static_cast<double>(n - 1);
    for (std::size_t i = 0; i < n; ++i)
        g[i] = lo * std::exp(step * static_cast<double>(i));
    return g;
}

struct cli_result {
    int exit_code = -1;
    std::string out;
    std::string err;
};

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Run a command line, capturing exit code, stdout, and stderr.
inline cli_result run_command(const std::string& cmd) {
    static int counter = 0;
    const std::string base = "/tmp/plsec_test_" + std::to_string(++counter);
    const std::string out_path = base + ".out";
    const std::string err_path = base + ".err";
    const int rc = std::system((cmd + " >" + out_path + " 2>" + err_path).c_str());
    cli_result r;
    r.exit_code = (rc == -1) ? -1 : WEXITSTATUS(rc);
    r.out = read_file(out_path);
    r.err = read_file(err_path);
    std::remove(out_path.c_str());
    std::remove(err_path.c_str());
    return r;
}

inline std::string write_temp_file(const std::string& name, const std::string& text) {
    const std::string path = "/tmp/" + name;
    std::ofstream out(path, std::ios::binary);
    out << text;
    return path;
}

} // namespace testutil
