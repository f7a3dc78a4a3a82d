#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "json.hpp"

#ifndef PLSEC_CLI_PATH
#error "PLSEC_CLI_PATH must point at the built command-line binary"
#endif

namespace {

const std::string kCli = PLSEC_CLI_PATH;

using nlohmann::json;
using testutil::run_command;
using testutil::write_temp_file;

std::string rayleigh_pair_config(const std::string& metric,
                                 const std::string& backend,
                                 const std::string& extra = "") {
    return std::string("{\"main\":{\"family\":\"rayleigh\",\"mean_snr\":10.0},") +
           "\"wiretap\":{\"family\":\"rayleigh\",\"mean_snr\":1.0}," +
           "\"metric\":\"" + metric + "\",\"backend\":\"" + backend + "\"" + extra +
           "}";
}

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    return lines;
}

} // namespace

TEST_CASE("metric subcommand prints one JSON record") {
    const auto cfg = write_temp_file("cli_metric.json",
                                     rayleigh_pair_config("pnz", "analytic"));
    const auto r = run_command(kCli + " metric --config " + cfg);
    REQUIRE(r.exit_code == 0);
    const auto j = json::parse(r.out);
    CHECK(j.at("metric") == "pnz");
    CHECK_THAT(j.at("value").get<double>(),
               Catch::Matchers::WithinAbs(10.0 / 11.0, 1e-9));
    CHECK(j.at("backend") == "analytic");
    // exactly one line of output
    CHECK(split_lines(r.out).size() == 1);
}

TEST_CASE("metric supports a rate threshold and the H-function backend") {
    const auto cfg = write_temp_file(
        "cli_metric_rt.json",
        rayleigh_pair_config("sop", "foxh", ",\"rate_threshold\":1.0"));
    const auto r = run_command(kCli + " metric --config " + cfg);
    REQUIRE(r.exit_code == 0);
    const auto j = json::parse(r.out);
    CHECK_THAT(j.at("value").get<double>(),
               Catch::Matchers::WithinAbs(testutil::rayleigh_sop(10.0, 1.0, 1.0), 1e-8));
    CHECK(j.at("rate_threshold").get<double>() == 1.0);
}

TEST_CASE("configuration errors exit with code 2 and name every bad field") {
    const auto cfg = write_temp_file(
        "cli_bad.json",
        R"({"main":{"family":"nope","mean_snr":1},"wiretap":{"family":"rayleigh"},"metric":"pnx","bogus":1})");
    const auto r = run_command(kCli + " metric --config " + cfg);
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("nope") != std::string::npos);
    CHECK(r.err.find("pnx") != std::string::npos);
    CHECK(r.err.find("bogus") != std::string::npos);
    CHECK(r.err.find("mean_snr") != std::string::npos);
}

TEST_CASE("missing or unparsable config files exit with code 2") {
    const auto r1 = run_command(kCli + " metric --config /nonexistent/x.json");
    CHECK(r1.exit_code == 2);
    const auto cfg = write_temp_file("cli_notjson.json", "{not json");
    const auto r2 = run_command(kCli + " metric --config " + cfg);
    CHECK(r2.exit_code == 2);
}

TEST_CASE("numeric failures exit with code 3") {
    // H-function parameters with a negative convergence exponent
    const auto cfg = write_temp_file(
        "cli_foxh_div.json",
        R"({"m":1,"n":0,"a":[0.5],"A":[3.0],"b":[0.0,1.0],"B":[1.0,1.0],"x":1.0})");
    const auto r = run_command(kCli + " foxh-eval --config " + cfg);
    CHECK(r.exit_code == 3);
    CHECK_FALSE(r.err.empty());
}

TEST_CASE("foxh-eval prints the value and its error estimate") {
    const auto cfg = write_temp_file(
        "cli_foxh_exp.json", R"({"m":1,"n":0,"a":[],"A":[],"b":[0.0],"B":[1.0],"x":1.0})");
    const auto r = run_command(kCli + " foxh-eval --config " + cfg);
    REQUIRE(r.exit_code == 0);
    const auto j = json::parse(r.out);
    REQUIRE(j.size() == 2);
    CHECK(r.out.rfind(R"({"value":)", 0) == 0); // fixed field order
    CHECK_THAT(j.at("value").get<double>(),
               Catch::Matchers::WithinRel(std::exp(-1.0), 1e-10));
    CHECK(j.at("error_bound").get<double>() >= 0.0);
}

TEST_CASE("mc subcommand reports value, std_error, and provenance") {
    const auto cfg = write_temp_file("cli_mc.json", rayleigh_pair_config("pnz", "mc"));
    const auto r =
        run_command(kCli + " mc --config " + cfg + " --draws 200000 --seed 11");
    REQUIRE(r.exit_code == 0);
    const auto j = json::parse(r.out);
    CHECK(j.at("samples").get<long long>() == 200000);
    CHECK(j.at("seed").get<long long>() == 11);
    const double se = j.at("std_error").get<double>();
    CHECK(se > 0.0);
    CHECK(std::fabs(j.at("value").get<double>() - 10.0 / 11.0) < 4.0 * se);
    // bit-identical rerun
    const auto r2 =
        run_command(kCli + " mc --config " + cfg + " --draws 200000 --seed 11");
    CHECK(r.out == r2.out);
    // different seed changes the estimate
    const auto r3 =
        run_command(kCli + " mc --config " + cfg + " --draws 200000 --seed 12");
    CHECK(r.out != r3.out);
}

TEST_CASE("sweep emits an ascending deterministic CSV") {
    const auto cfg = write_temp_file(
        "cli_sweep.json",
        R"({"main":{"family":"rayleigh","mean_snr_db":0},"wiretap":{"family":"rayleigh","mean_snr_db":0},"metric":"pnz","backend":"foxh","sweep":{"lo_db":-2,"hi_db":2,"step_db":0.5}})");
    const auto out1 = "/tmp/plsec_sweep1.csv";
    const auto r1 = run_command(kCli + " sweep --config " + cfg + " --out " + out1);
    REQUIRE(r1.exit_code == 0);
    const auto text = testutil::read_file(out1);
    const auto lines = split_lines(text);
    REQUIRE(lines.size() == 10); // header + floor((2-(-2))/0.5)+1 rows
    CHECK(lines[0] == "ratio_db,value");
    double prev_ratio = -1e30, prev_value = -1e30;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto comma = lines[i].find(',');
        REQUIRE(comma != std::string::npos);
        const double ratio = std::stod(lines[i].substr(0, comma));
        const double value = std::stod(lines[i].substr(comma + 1));
        CHECK(ratio > prev_ratio);
        CHECK(value > prev_value); // this curve is strictly increasing
        prev_ratio = ratio;
        prev_value = value;
    }
    // byte-identical rerun
    const auto out2 = "/tmp/plsec_sweep2.csv";
    run_command(kCli + " sweep --config " + cfg + " --out " + out2);
    CHECK(text == testutil::read_file(out2));
}

TEST_CASE("sweep verification appends oracle columns with pass flags") {
    const auto cfg = write_temp_file(
        "cli_sweep_verify.json",
        R"({"main":{"family":"rayleigh","mean_snr_db":0},"wiretap":{"family":"rayleigh","mean_snr_db":0},"metric":"pnz","backend":"analytic","sweep":{"lo_db":-1,"hi_db":1,"step_db":1}})");
    const auto r = run_command(kCli + " sweep --config " + cfg +
                               " --verify mc:7:50000");
    REQUIRE(r.exit_code == 0);
    const auto lines = split_lines(r.out);
    REQUIRE(lines.size() == 4);
    CHECK(lines[0] == "ratio_db,value,mc_value,mc_std_error,pass");
    for (std::size_t i = 1; i < lines.size(); ++i)
        CHECK(lines[i].substr(lines[i].size() - 2) == ",1");
    // malformed verify spec is a configuration error
    const auto bad = run_command(kCli + " sweep --config " + cfg + " --verify mc7");
    CHECK(bad.exit_code == 2);
}

TEST_CASE("sweep with the sampling backend carries a std_error column") {
    const auto cfg = write_temp_file(
        "cli_sweep_mc.json",
        R"({"main":{"family":"rayleigh","mean_snr_db":0},"wiretap":{"family":"rayleigh","mean_snr_db":0},"metric":"pnz","backend":"mc","draws":50000,"sweep":{"lo_db":0,"hi_db":2,"step_db":1}})");
    const auto r = run_command(kCli + " sweep --config " + cfg + " --seed 3");
    REQUIRE(r.exit_code == 0);
    const auto lines = split_lines(r.out);
    REQUIRE(lines.size() == 4);
    CHECK(lines[0] == "ratio_db,value,std_error");
}

TEST_CASE("per-point numeric failures leave empty cells and exit nonzero") {
    // the gamma-mixture backend refuses this family, which surfaces as a
    // configuration error for every grid point
    const auto cfg = write_temp_file(
        "cli_sweep_badbackend.json",
        R"({"main":{"family":"weibull","mean_snr_db":0,"params":{"alpha":3.0}},"wiretap":{"family":"rayleigh","mean_snr_db":0},"metric":"pnz","backend":"mg","sweep":{"lo_db":0,"hi_db":1,"step_db":1}})");
    const auto r = run_command(kCli + " sweep --config " + cfg);
    CHECK(r.exit_code == 2);
    const auto lines = split_lines(r.out);
    REQUIRE(lines.size() == 3);
    CHECK(lines[1] == "0,");
    CHECK(lines[2] == "1,");
}

TEST_CASE("fit-mog fits newline-delimited samples deterministically") {
    // synthesize exponential-SNR samples
    std::ostringstream body;
    std::uint64_t state = 88172645463325252ull;
    for (int i = 0; i < 5000; ++i) {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        const double u =
            (static_cast<double>(state >> 11) + 1.0) * 0x1.0p-53;
        body << -2.0 * std::log(u) << "\n";
    }
    const auto samples = write_temp_file("cli_mog_samples.txt", body.str());
    const auto r1 = run_command(kCli + " fit-mog --samples " + samples +
                                " --components 4 --seed 5");
    REQUIRE(r1.exit_code == 0);
    const auto j = json::parse(r1.out);
    CHECK(j.at("type") == "mixture_gaussian");
    CHECK(j.at("components").size() <= 4);
    CHECK(j.at("metadata").at("seed").get<long long>() == 5);
    CHECK(j.at("metadata").at("sample_count").get<long long>() == 5000);
    const auto r2 = run_command(kCli + " fit-mog --samples " + samples +
                                " --components 4 --seed 5");
    CHECK(r1.out == r2.out); // byte-identical rerun
    // malformed sample lines are configuration errors
    const auto badfile = write_temp_file("cli_mog_bad.txt", "1.0\nzebra\n2.0\n");
    const auto rb = run_command(kCli + " fit-mog --samples " + badfile);
    CHECK(rb.exit_code == 2);
}

TEST_CASE("mg-build emits the gamma-mixture form of a channel") {
    const auto cfg = write_temp_file(
        "cli_mg.json", R"({"family":"nakagami_m","mean_snr":1.0,"params":{"m":2.0}})");
    const auto r = run_command(kCli + " mg-build --config " + cfg + " --terms 8");
    REQUIRE(r.exit_code == 0);
    const auto j = json::parse(r.out);
    CHECK(j.at("type") == "mixture_gamma");
    REQUIRE(j.at("components").size() == 1); // gamma-type family is exact
    const auto mg_unsupported = write_temp_file(
        "cli_mg_bad.json",
        R"({"family":"weibull","mean_snr":1.0,"params":{"alpha":3.0}})");
    const auto rb = run_command(kCli + " mg-build --config " + mg_unsupported);
    CHECK(rb.exit_code == 2);
}

TEST_CASE("results can be written to a file") {
    const auto cfg = write_temp_file("cli_out.json",
                                     rayleigh_pair_config("pnz", "analytic"));
    const auto out = "/tmp/plsec_metric_out.json";
    const auto r = run_command(kCli + " metric --config " + cfg + " --out " + out);
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.empty());
    const auto j = json::parse(testutil::read_file(out));
    CHECK_THAT(j.at("value").get<double>(),
               Catch::Matchers::WithinAbs(10.0 / 11.0, 1e-9));
}
