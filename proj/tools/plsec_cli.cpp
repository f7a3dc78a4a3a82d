// Command-line front-end for the secrecy-metric library.
//
// Subcommands:
//   metric     compute one metric for a configured scenario -> JSON on stdout
//   sweep      sweep the main channel's mean SNR -> CSV curve data
//   mc         Monte Carlo estimate of a metric -> JSON with std_error
//   fit-mog    fit a Gaussian mixture to newline-delimited SNR samples
//   mg-build   build the gamma-mixture representation of a channel
//   foxh-eval  evaluate a raw H-function kernel (debugging escape hatch)
//
// Exit codes: 0 success, 2 configuration error, 3 numeric-accuracy error.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "plsec/plsec.hpp"
#include "plsec/serialize.hpp"

namespace {

using nlohmann::json;
using plsec::ordered_json;

struct cli_options {
    std::string config_path;
    std::string out_path;
    std::uint64_t seed = 12345;
    double tol = 1.0e-8;
    // subcommand-specific
    std::uint64_t draws = 1000000;
    std::string samples_path;
    std::size_t mog_components = 6;
    std::size_t mg_terms = 20;
    std::string verify;
};

plsec::quadrature_config quad_config(double tol) {
    plsec::quadrature_config cfg;
    cfg.rel_tol = tol;
    cfg.abs_tol = tol * 1.0e-2;
    return cfg;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw plsec::invalid_argument_error("cannot open config file: " + path,
                                            "config");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw plsec::invalid_argument_error(
            "config file " + path + " is not valid JSON: " + e.what(), "config");
    }
}

void write_output(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out)
        throw plsec::invalid_argument_error("cannot open output file: " + out_path,
                                            "out");
    out << text;
}

std::optional<plsec::secrecy_metric> metric_from_name(const std::string& name) {
    using sm = plsec::secrecy_metric;
    for (sm m : {sm::sop, sm::sop_lower_bound, sm::pnz, sm::asc, sm::esc})
        if (name == plsec::metric_name(m)) return m;
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Scenario configuration shared by metric / mc / sweep.
// ---------------------------------------------------------------------------
struct mog_settings {
    std::size_t components = 6;
    std::size_t samples = 100000;
};

struct sweep_settings {
    double lo_db = 0.0;
    double hi_db = 0.0;
    double step_db = 1.0;
};

struct scenario_config {
    plsec::channel_spec main;
    plsec::channel_spec wiretap;
    plsec::secrecy_metric metric = plsec::secrecy_metric::pnz;
    double rate_threshold = 0.0;
    std::string backend = "analytic";
    std::size_t mg_terms = 20;
    mog_settings mog;
    std::uint64_t draws = 1000000;
    std::optional<sweep_settings> sweep;
};

// Parse and validate the whole config, collecting every failing field so the
// diagnostic lists them all at once.
scenario_config parse_scenario(const json& j, bool want_sweep) {
    std::vector<std::string> errors;
    scenario_config cfg;
    try {
        plsec::detail::check_fields(j,
                                    {"main", "wiretap", "metric", "rate_threshold",
                                     "backend", "mg_terms", "mog", "draws", "sweep"},
                                    "config");
    } catch (const plsec::invalid_argument_error& e) {
        errors.push_back(e.what());
    }
    for (const char* side : {"main", "wiretap"}) {
        try {
            if (!j.contains(side))
                throw plsec::invalid_argument_error(
                    std::string("config: missing required channel \"") + side + "\"",
                    side);
            auto spec = plsec::spec_from_json(j.at(side), side);
            if (std::string(side) == "main")
                cfg.main = spec;
            else
                cfg.wiretap = spec;
        } catch (const plsec::invalid_argument_error& e) {
            errors.push_back(e.what());
        }
    }
    try {
        if (!j.contains("metric") || !j.at("metric").is_string())
            throw plsec::invalid_argument_error(
                "config: requires a string field \"metric\" "
                "(one of sop, sop_lb, pnz, asc, esc)",
                "metric");
        const std::string mname = j.at("metric").get<std::string>();
        auto m = metric_from_name(mname);
        if (!m)
            throw plsec::invalid_argument_error(
                "config: unknown metric \"" + mname +
                    "\" (expected sop, sop_lb, pnz, asc, or esc)",
                "metric");
        cfg.metric = *m;
    } catch (const plsec::invalid_argument_error& e) {
        errors.push_back(e.what());
    }
    try {
        if (j.contains("rate_threshold")) {
            cfg.rate_threshold =
                plsec::detail::require_number(j, "rate_threshold", "config");
            if (!(cfg.rate_threshold >= 0.0))
                throw plsec::invalid_argument_error(
                    "config: rate_threshold must be >= 0", "rate_threshold");
        }
    } catch (const plsec::invalid_argument_error& e) {
        errors.push_back(e.what());
    }
    try {
        if (j.contains("backend")) {
            if (!j.at("backend").is_string())
                throw plsec::invalid_argument_error(
                    "config: \"backend\" must be a string", "backend");
            cfg.backend = j.at("backend").get<std::string>();
            if (cfg.backend != "analytic" && cfg.backend != "foxh" &&
                cfg.backend != "mg" && cfg.backend != "mog" && cfg.backend != "mc")
                throw plsec::invalid_argument_error(
                    "config: unknown backend \"" + cfg.backend +
                        "\" (expected analytic, foxh, mg, mog, or mc)",
                    "backend");
        }
    } catch (const plsec::invalid_argument_error& e) {
        errors.push_back(e.what());
    }
    try {
        if (j.contains("mg_terms")) {
            const double v = plsec::detail::require_number(j, "mg_terms", "config");
            if (!(v >= 1.0) || v != std::floor(v))
                throw plsec::invalid_argument_error(
                    "config: mg_terms must be a positive integer", "mg_terms");
            cfg.mg_terms = static_cast<std::size_t>(v);
        }
    } catch (const plsec::invalid_argument_error& e) {
        errors.push_back(e.what());
    }
    try {
        if (j.contains("mog")) {
            plsec::detail::check_fields(j.at("mog"), {"components", "samples"},
                                        "config.mog");
            if (j.at("mog").contains("components"))
                cfg.mog.components = static_cast<std::size_t>(
                    plsec::detail::require_number(j.at("mog"), "components",
                                                  "config.mog"));
            if (j.at("mog").contains("samples"))
                cfg.mog.samples = static_cast<std::size_t>(
                    plsec::detail::require_number(j.at("mog"), "samples",
                                                  "config.mog"));
            if (cfg.mog.components == 0 || cfg.mog.samples < 2 * cfg.mog.components)
                throw plsec::invalid_argument_error(
                    "config.mog: needs components >= 1 and samples >= 2*components",
                    "mog");
        }
    } catch (const plsec::invalid_argument_error& e) {
        errors.push_back(e.what());
    }
    try {
        if (j.contains("draws")) {
            const double v = plsec::detail::require_number(j, "draws", "config");
            if (!(v >= 2.0) || v != std::floor(v))
                throw plsec::invalid_argument_error(
                    "config: draws must be an integer >= 2", "draws");
            cfg.draws = static_cast<std::uint64_t>(v);
        }
    } catch (const plsec::invalid_argument_error& e) {
        errors.push_back(e.what());
    }
    if (want_sweep) {
        try {
            if (!j.contains("sweep"))
                throw plsec::invalid_argument_error(
                    "config: sweep subcommand requires a \"sweep\" object", "sweep");
            plsec::detail::check_fields(j.at("sweep"), {"lo_db", "hi_db", "step_db"},
                                        "config.sweep");
            sweep_settings sw;
            sw.lo_db = plsec::detail::require_number(j.at("sweep"), "lo_db",
                                                     "config.sweep");
            sw.hi_db = plsec::detail::require_number(j.at("sweep"), "hi_db",
                                                     "config.sweep");
            sw.step_db = plsec::detail::require_number(j.at("sweep"), "step_db",
                                                       "config.sweep");
            if (!(sw.lo_db < sw.hi_db))
                throw plsec::invalid_argument_error("config.sweep: requires lo_db < hi_db",
                                                    "lo_db");
            if (!(sw.step_db > 0.0))
                throw plsec::invalid_argument_error("config.sweep: requires step_db > 0",
                                                    "step_db");
            cfg.sweep = sw;
        } catch (const plsec::invalid_argument_error& e) {
            errors.push_back(e.what());
        }
    }
    if (!errors.empty()) {
        std::string all = "configuration invalid (" + std::to_string(errors.size()) +
                          " problem(s)):";
        for (const auto& e : errors) all += "\n  - " + e;
        throw plsec::invalid_argument_error(all, "config");
    }
    return cfg;
}

// Build a channel representation for the chosen backend.  `stream_tag` keeps
// the main and wiretap MoG fitting samples on disjoint RNG streams.
plsec::channel_model build_model(const plsec::channel_spec& spec,
                                 const std::string& backend, const scenario_config& cfg,
                                 std::uint64_t seed, std::uint64_t stream_tag) {
    if (backend == "analytic") return plsec::make_analytic_model(spec);
    if (backend == "foxh") return plsec::make_foxh_model(spec);
    if (backend == "mg") return plsec::make_mg_model(spec, cfg.mg_terms);
    if (backend == "mog") {
        plsec::rng_stream rng(seed, stream_tag);
        std::vector<double> samples(cfg.mog.samples);
        for (auto& s : samples) s = plsec::sample(spec, rng);
        return plsec::make_mog_model(plsec::fit_mog(samples, cfg.mog.components, seed));
    }
    throw plsec::invalid_argument_error(
        "backend \"" + backend + "\" does not build a deterministic model", "backend");
}

double run_deterministic_metric(const plsec::secrecy_scenario& scn,
                                plsec::secrecy_metric metric,
                                const plsec::quadrature_config& qc) {
    switch (metric) {
        case plsec::secrecy_metric::sop: return plsec::sop(scn, qc);
        case plsec::secrecy_metric::sop_lower_bound:
            return plsec::sop_lower_bound(scn, qc);
        case plsec::secrecy_metric::pnz: return plsec::pnz(scn, qc);
        case plsec::secrecy_metric::asc: return plsec::asc(scn, qc);
        case plsec::secrecy_metric::esc: return plsec::esc(scn, qc);
    }
    throw plsec::invalid_argument_error("unknown metric", "metric");
}

std::string format_double(double v, const char* fmt = "%.12g") {
    char buf[64];
    std::snprintf(buf, sizeof(buf), fmt, v);
    return buf;
}

// ---------------------------------------------------------------------------
// Subcommand implementations.
// ---------------------------------------------------------------------------
int cmd_metric(const cli_options& opt) {
    const json j = load_json_file(opt.config_path);
    scenario_config cfg = parse_scenario(j, /*want_sweep=*/false);
    ordered_json out;
    out["metric"] = plsec::metric_name(cfg.metric);
    if (cfg.backend == "mc") {
        plsec::secrecy_scenario scn{plsec::make_foxh_model(cfg.main),
                                    plsec::make_foxh_model(cfg.wiretap),
                                    cfg.rate_threshold};
        // sampling only touches the exact per-family samplers
        const auto est = plsec::mc_metric(scn, cfg.metric, cfg.draws, opt.seed);
        out["value"] = est.value;
        out["std_error"] = est.std_error;
        out["samples"] = est.samples;
        out["seed"] = est.seed;
    } else {
        plsec::secrecy_scenario scn{
            build_model(cfg.main, cfg.backend, cfg, opt.seed, 1000),
            build_model(cfg.wiretap, cfg.backend, cfg, opt.seed, 1001),
            cfg.rate_threshold};
        out["value"] = run_deterministic_metric(scn, cfg.metric, quad_config(opt.tol));
    }
    out["backend"] = cfg.backend;
    out["rate_threshold"] = cfg.rate_threshold;
    write_output(opt.out_path, out.dump() + "\n");
    return 0;
}

int cmd_mc(const cli_options& opt) {
    const json j = load_json_file(opt.config_path);
    scenario_config cfg = parse_scenario(j, /*want_sweep=*/false);
    plsec::secrecy_scenario scn{plsec::make_foxh_model(cfg.main),
                                plsec::make_foxh_model(cfg.wiretap),
                                cfg.rate_threshold};
    const auto est = plsec::mc_metric(scn, cfg.metric, opt.draws, opt.seed);
    ordered_json out;
    out["metric"] = plsec::metric_name(cfg.metric);
    out["value"] = est.value;
    out["std_error"] = est.std_error;
    out["samples"] = est.samples;
    out["seed"] = est.seed;
    out["backend"] = "mc";
    out["rate_threshold"] = cfg.rate_threshold;
    write_output(opt.out_path, out.dump() + "\n");
    return 0;
}

struct verify_spec {
    std::uint64_t seed = 0;
    std::uint64_t draws = 0;
};

verify_spec parse_verify(const std::string& text) {
    // format: mc:SEED:N
    const auto bad = [&] {
        return plsec::invalid_argument_error(
            "--verify expects the form mc:SEED:N (got \"" + text + "\")", "verify");
    };
    if (text.rfind("mc:", 0) != 0) throw bad();
    const auto rest = text.substr(3);
    const auto colon = rest.find(':');
    if (colon == std::string::npos) throw bad();
    try {
        verify_spec v;
        v.seed = std::stoull(rest.substr(0, colon));
        v.draws = std::stoull(rest.substr(colon + 1));
        if (v.draws < 2) throw bad();
        return v;
    } catch (const std::exception&) {
        throw bad();
    }
}

struct sweep_row {
    double ratio_db = 0.0;
    std::optional<double> value;
    std::optional<double> std_error; // mc backend only
    std::optional<plsec::mc_estimate> verify;
    std::string error;
    bool config_error = false;
};

int cmd_sweep(const cli_options& opt) {
    const json j = load_json_file(opt.config_path);
    scenario_config cfg = parse_scenario(j, /*want_sweep=*/true);
    const sweep_settings sw = *cfg.sweep;
    const std::optional<verify_spec> verify =
        opt.verify.empty() ? std::nullopt
                           : std::make_optional(parse_verify(opt.verify));
    const std::size_t npts = static_cast<std::size_t>(
                                 std::floor((sw.hi_db - sw.lo_db) / sw.step_db + 1e-9)) +
                             1;
    const double wiretap_db = plsec::linear_to_db(cfg.wiretap.mean_snr);
    const plsec::quadrature_config qc = quad_config(opt.tol);

    auto eval_point = [&](std::size_t i) -> sweep_row {
        sweep_row row;
        const double main_db = sw.lo_db + static_cast<double>(i) * sw.step_db;
        row.ratio_db = main_db - wiretap_db;
        try {
            plsec::channel_spec main_spec = cfg.main;
            main_spec.mean_snr = plsec::db_to_linear(main_db);
            if (cfg.backend == "mc") {
                plsec::secrecy_scenario scn{plsec::make_foxh_model(main_spec),
                                            plsec::make_foxh_model(cfg.wiretap),
                                            cfg.rate_threshold};
                const auto est =
                    plsec::mc_metric(scn, cfg.metric, cfg.draws, opt.seed);
                row.value = est.value;
                row.std_error = est.std_error;
            } else {
                plsec::secrecy_scenario scn{
                    build_model(main_spec, cfg.backend, cfg, opt.seed, 1000),
                    build_model(cfg.wiretap, cfg.backend, cfg, opt.seed, 1001),
                    cfg.rate_threshold};
                row.value = run_deterministic_metric(scn, cfg.metric, qc);
            }
            if (verify) {
                plsec::secrecy_scenario oracle{plsec::make_foxh_model(main_spec),
                                               plsec::make_foxh_model(cfg.wiretap),
                                               cfg.rate_threshold};
                row.verify =
                    plsec::mc_metric(oracle, cfg.metric, verify->draws, verify->seed);
            }
        } catch (const plsec::invalid_argument_error& e) {
            row.error = e.what();
            row.config_error = true;
        } catch (const plsec::error& e) {
            row.error = e.what();
        }
        return row;
    };

    std::vector<std::future<sweep_row>> jobs;
    jobs.reserve(npts);
    for (std::size_t i = 0; i < npts; ++i)
        jobs.push_back(std::async(std::launch::async, eval_point, i));

    std::ostringstream csv;
    csv << "ratio_db,value";
    if (cfg.backend == "mc") csv << ",std_error";
    if (verify) csv << ",mc_value,mc_std_error,pass";
    csv << "\n";
    std::size_t numeric_failures = 0;
    std::size_t config_failures = 0;
    std::vector<std::string> messages;
    for (auto& job : jobs) {
        const sweep_row row = job.get();
        csv << format_double(row.ratio_db, "%.10g") << ",";
        if (row.value)
            csv << format_double(*row.value);
        else {
            (row.config_error ? config_failures : numeric_failures) += 1;
            messages.push_back("ratio_db=" + format_double(row.ratio_db, "%.10g") +
                               ": " + row.error);
        }
        if (cfg.backend == "mc") {
            csv << ",";
            if (row.std_error) csv << format_double(*row.std_error, "%.6g");
        }
        if (verify) {
            csv << ",";
            if (row.verify) {
                const bool pass = row.value &&
                                  std::fabs(*row.value - row.verify->value) <=
                                      3.0 * row.verify->std_error;
                csv << format_double(row.verify->value) << ","
                    << format_double(row.verify->std_error, "%.6g") << ","
                    << (pass ? 1 : 0);
            } else {
                csv << ",,0";
            }
        }
        csv << "\n";
    }
    write_output(opt.out_path, csv.str());
    if (config_failures) {
        std::cerr << "sweep: " << config_failures
                  << " point(s) failed with configuration errors:\n";
        for (const auto& m : messages) std::cerr << "  - " << m << "\n";
        return 2;
    }
    if (numeric_failures) {
        std::cerr << "sweep: " << numeric_failures
                  << " point(s) failed numerically (empty value cells):\n";
        for (const auto& m : messages) std::cerr << "  - " << m << "\n";
        return 3;
    }
    return 0;
}

int cmd_fit_mog(const cli_options& opt) {
    std::ifstream in(opt.samples_path);
    if (!in)
        throw plsec::invalid_argument_error(
            "cannot open samples file: " + opt.samples_path, "samples");
    std::vector<double> samples;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        try {
            std::size_t pos = 0;
            const double v = std::stod(line, &pos);
            while (pos < line.size() &&
                   (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r'))
                ++pos;
            if (pos != line.size()) throw std::invalid_argument("trailing characters");
            samples.push_back(v);
        } catch (const std::exception&) {
            throw plsec::invalid_argument_error(
                "samples file line " + std::to_string(lineno) +
                    " is not a number: \"" + line + "\"",
                "samples");
        }
    }
    const auto model = plsec::fit_mog(samples, opt.mog_components, opt.seed);
    write_output(opt.out_path, plsec::mog_to_json(model).dump(2) + "\n");
    return 0;
}

int cmd_mg_build(const cli_options& opt) {
    const json j = load_json_file(opt.config_path);
    const auto spec = plsec::spec_from_json(j, "channel");
    const auto mg = plsec::mg_from_channel(spec, opt.mg_terms);
    write_output(opt.out_path, plsec::mg_to_json(mg).dump(2) + "\n");
    return 0;
}

int cmd_foxh_eval(const cli_options& opt) {
    const json j = load_json_file(opt.config_path);
    plsec::detail::check_fields(j, {"m", "n", "a", "A", "b", "B", "x"}, "foxh");
    plsec::fox_h_kernel k;
    k.m = static_cast<std::size_t>(plsec::detail::require_number(j, "m", "foxh"));
    k.n = static_cast<std::size_t>(plsec::detail::require_number(j, "n", "foxh"));
    auto read_array = [&](const char* key) {
        std::vector<double> v;
        if (!j.contains(key)) return v;
        if (!j.at(key).is_array())
            throw plsec::invalid_argument_error(
                std::string("foxh: \"") + key + "\" must be an array of numbers", key);
        for (const auto& e : j.at(key)) {
            if (!e.is_number())
                throw plsec::invalid_argument_error(
                    std::string("foxh: \"") + key + "\" must contain only numbers",
                    key);
            v.push_back(e.get<double>());
        }
        return v;
    };
    k.a = read_array("a");
    k.A = read_array("A");
    k.b = read_array("b");
    k.B = read_array("B");
    const double x = plsec::detail::require_number(j, "x", "foxh");
    const auto r = plsec::fox_h(k, x);
    ordered_json out;
    out["value"] = r.value;
    out["error_bound"] = r.error_bound;
    write_output(opt.out_path, out.dump() + "\n");
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Physical-layer secrecy metrics over fading wiretap channels"};
    app.require_subcommand(1);
    cli_options opt;
    app.add_option("--config", opt.config_path, "JSON configuration file")
        ->group("Global");
    app.add_option("--out", opt.out_path,
                   "output file (default: standard output)")
        ->group("Global");
    app.add_option("--seed", opt.seed, "RNG seed for sampling-based paths")
        ->group("Global");
    app.add_option("--tol", opt.tol,
                   "quadrature tolerance: relative = tol, absolute = tol/100")
        ->group("Global");

    auto* metric = app.add_subcommand(
        "metric", "compute one secrecy metric; prints a JSON record");
    auto* sweep = app.add_subcommand(
        "sweep", "sweep main-channel mean SNR; writes ratio_db,value CSV");
    sweep->add_option("--verify", opt.verify,
                      "append Monte Carlo oracle columns: mc:SEED:N");
    auto* mc = app.add_subcommand(
        "mc", "Monte Carlo metric estimate; prints a JSON record with std_error");
    mc->add_option("--draws", opt.draws, "number of simulated channel pairs");
    auto* fit_mog = app.add_subcommand(
        "fit-mog", "fit a Gaussian mixture to newline-delimited SNR samples");
    fit_mog->add_option("--samples", opt.samples_path,
                        "text file with one SNR sample per line")
        ->required();
    fit_mog->add_option("--components", opt.mog_components,
                        "number of mixture components");
    auto* mg_build = app.add_subcommand(
        "mg-build", "build the gamma-mixture form of a channel config");
    mg_build->add_option("--terms", opt.mg_terms, "number of mixture terms");
    auto* foxh_eval = app.add_subcommand(
        "foxh-eval", "evaluate a raw H-function kernel from JSON parameters");

    // let the global flags (--config, --out, --seed, --tol) appear after the
    // subcommand name as well as before it
    for (CLI::App* sub : {metric, sweep, mc, fit_mog, mg_build, foxh_eval})
        sub->fallthrough(true);

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(metric)) return cmd_metric(opt);
        if (app.got_subcommand(sweep)) return cmd_sweep(opt);
        if (app.got_subcommand(mc)) return cmd_mc(opt);
        if (app.got_subcommand(fit_mog)) return cmd_fit_mog(opt);
        if (app.got_subcommand(mg_build)) return cmd_mg_build(opt);
        if (app.got_subcommand(foxh_eval)) return cmd_foxh_eval(opt);
        std::cerr << "no subcommand selected\n";
        return 2;
    } catch (const plsec::invalid_argument_error& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return 2;
    } catch (const plsec::accuracy_error& e) {
        std::cerr << "numeric error: " << e.what()
                  << " (estimate=" << format_double(e.estimate())
                  << ", error_bound=" << format_double(e.error_bound()) << ")\n";
        return 3;
    } catch (const plsec::error& e) {
        std::cerr << "numeric error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
