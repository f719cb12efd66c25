#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace {

using nlohmann::json;

struct CmdResult {
    int status = -1;
    std::string out;
};

std::string cli_bin() {
    const char* bin = std::getenv("NULLFLAT_CLI_BIN");
    REQUIRE_MESSAGE(bin != nullptr,
                    "NULLFLAT_CLI_BIN must point at the command line binary");
    return bin;
}

// Runs the binary through the shell; stderr is merged so error objects are
// captured too. `env_prefix` lets a test override the environment.
CmdResult run_cli(const std::string& args, const std::string& env_prefix = "") {
    const std::string cmd = env_prefix + cli_bin() + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CmdResult result;
    char buf[4096];
    std::size_t got = 0;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) result.out.append(buf, got);
    const int rc = pclose(pipe);
    result.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return result;
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::stringstream stream(text);
    std::string line;
    while (std::getline(stream, line))
        if (!line.empty()) lines.push_back(line);
    return lines;
}

std::string temp_path(const char* stem) {
    return "/tmp/nullflat_cli_" + std::to_string(::getpid()) + "_" + stem;
}

}  // namespace

TEST_CASE("generate emits csv rows with tiny residuals") {
    const CmdResult r =
        run_cli("generate --space r21 --f \"poly:0,0,0,1\" --grid 0,1,11 --format csv");
    REQUIRE(r.status == 0);
    const auto rows = lines_of(r.out);
    REQUIRE(rows.size() == 12);
    CHECK(rows[0] == "tau,x1,x2,x3,residual");
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const auto comma = rows[i].rfind(',');
        const double residual = std::stod(rows[i].substr(comma + 1));
        CHECK(std::abs(residual) < 1e-12);
    }
}

TEST_CASE("generate is byte-deterministic") {
    const std::string args = "generate --space r2n --f \"poly:0,0,0,1+sin:0.3,2\" "
                             "--extras \"poly:0,2\" --sigma \"poly:0,1.1\" --grid -1,1,101";
    const CmdResult a = run_cli(args);
    const CmdResult b = run_cli(args);
    REQUIRE(a.status == 0);
    CHECK(a.out == b.out);
    CHECK(json::parse(a.out)["samples"].size() == 101);
}

TEST_CASE("roundtrip reports sub-tolerance recovery") {
    const CmdResult r = run_cli("roundtrip --space r22 --f \"poly:0,0,1\" --g \"poly:0\"");
    REQUIRE(r.status == 0);
    const json report = json::parse(r.out);
    CHECK(report["space"] == "r22");
    CHECK(report["checked"].get<int>() == 201);
    CHECK(report["max_f_error"].get<double>() <= 1e-9);
    CHECK(report["max_tau_error"].get<double>() <= 1e-9);
    CHECK(report["passed"].get<bool>());
}

TEST_CASE("invert on a flat curve exits 2 with a located error object") {
    const std::string curve = temp_path("quad.json");
    const CmdResult gen = run_cli("generate --space r21 --f \"poly:0,0,1\" --grid 0,1,5 --out " + curve);
    REQUIRE(gen.status == 0);

    const CmdResult inv = run_cli("invert --curve " + curve);
    CHECK(inv.status == 2);
    const json error = json::parse(inv.out);
    CHECK(error["code"] == "DegenerateGerm");
    CHECK(error["tau"].is_number());
    CHECK(error["message"].is_string());
    std::remove(curve.c_str());
}

TEST_CASE("invert recovers flat data sample by sample") {
    const std::string curve = temp_path("cubic.json");
    REQUIRE(run_cli("generate --space r21 --f \"poly:0,0,0,1\" --grid 1,2,11 --out " + curve)
                .status == 0);
    const CmdResult inv = run_cli("invert --curve " + curve + " --index 5");
    REQUIRE(inv.status == 0);
    const json report = json::parse(inv.out);
    REQUIRE(report["results"].size() == 1);
    const json& entry = report["results"][0];
    const double tau = entry["tau"].get<double>();
    CHECK(tau == doctest::Approx(1.5));
    CHECK(entry["tau_hat"].get<double>() == doctest::Approx(tau).epsilon(1e-12));
    CHECK(entry["f_hat"].get<double>() ==
          doctest::Approx(tau * tau * tau).epsilon(1e-12));
    std::remove(curve.c_str());
}

TEST_CASE("plan reproduces the worked quintic") {
    const CmdResult r = run_cli(
        "plan --space r21 --from 0,0,0 --to -2,0,2 --interval 0,1 --samples 101");
    REQUIRE(r.status == 0);
    const json plan = json::parse(r.out);
    CHECK(plan["f"] == "poly:0,0,0,10,-15,6");
    CHECK(plan["endpoint_error_start"].get<double>() <= 1e-9);
    CHECK(plan["endpoint_error_end"].get<double>() <= 1e-9);
    CHECK(plan["curve"]["samples"].size() == 101);
    const auto& last = plan["curve"]["samples"][100]["x"];
    CHECK(last[0].get<double>() == doctest::Approx(-2.0).epsilon(1e-9));
    CHECK(last[2].get<double>() == doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("verify runs a single suite cleanly") {
    const CmdResult r = run_cli("verify --suite reference_constants");
    REQUIRE(r.status == 0);
    const json report = json::parse(r.out);
    REQUIRE(report.is_array());
    REQUIRE(report.size() == 1);
    CHECK(report[0]["suite"] == "reference_constants");
    CHECK(report[0]["failed"].get<int>() == 0);
    CHECK(report[0]["cases"].get<int>() > 0);
}

TEST_CASE("help exits 0, argument errors exit 1") {
    CHECK(run_cli("--help").status == 0);
    CHECK(run_cli("generate --help").status == 0);
    CHECK(run_cli("generate --space r21 --f \"poly:0,0,0,1\" --grid 0,1,11 --wat").status == 1);
    CHECK(run_cli("generate --space r23 --f \"poly:0\" --grid 0,1,3").status == 1);
    CHECK(run_cli("generate --space r21 --grid 0,1,3").status == 1);
    CHECK(run_cli("").status == 1);  // a subcommand is required
    CHECK(run_cli("verify --suite no_such_suite").status == 1);
}

TEST_CASE("flag cross-requirements are enforced") {
    CHECK(run_cli("generate --space r22 --f \"poly:0,0,1\" --grid 0,1,3").status == 1);
    CHECK(run_cli("generate --space r2n --f \"poly:0,0,0,1\" --grid 0,1,3").status == 1);
    CHECK(run_cli("generate --space r21 --f \"poly:0,0,0,1\" --g \"poly:0\" --grid 0,1,3")
              .status == 1);
    CHECK(run_cli("generate --space r21 --f \"poly:0,0,0,1\" --grid 0,1,1").status == 1);
}

TEST_CASE("environment overrides are validated by the commands that read them") {
    const std::string args = "generate --space r21 --f \"poly:0,0,0,1\" --grid 0,1,3";
    CHECK(run_cli(args, "NULLFLAT_JET_ORDER=abc ").status == 1);
    CHECK(run_cli(args, "NULLFLAT_JET_ORDER=0 ").status == 1);
    CHECK(run_cli(args, "NULLFLAT_JET_ORDER=3 ").status == 0);

    const std::string rt = "roundtrip --space r21 --f \"poly:0,0,0,1\"";
    CHECK(run_cli(rt, "NULLFLAT_EPS_DEN=-3 ").status == 1);
    CHECK(run_cli(rt, "NULLFLAT_EPS_DEN=nope ").status == 1);
    CHECK(run_cli(rt, "NULLFLAT_EPS_DEN=1e-10 ").status == 0);
}

TEST_CASE("eps override moves the degeneracy threshold") {
    const std::string curve = temp_path("steep.json");
    REQUIRE(run_cli("generate --space r21 --f \"poly:0,0,0,1\" --grid 1,2,5 --out " + curve)
                .status == 0);
    // With a huge eps_den every divisor counts as degenerate.
    const CmdResult inv = run_cli("invert --curve " + curve, "NULLFLAT_EPS_DEN=1e9 ");
    CHECK(inv.status == 2);
    CHECK(json::parse(inv.out)["code"] == "DegenerateGerm");
    std::remove(curve.c_str());
}
